/**
 * Cellular chain complexes with integer boundary matrices. This is the
 * brute-force homology oracle: everything here goes through Smith
 * reduction of explicit matrices, independent of the closed-form rules
 * in space_homology.hpp.
 */

#ifndef HOMCALC_CHAIN_COMPLEX_HPP
#define HOMCALC_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian_group.hpp"
#include "integer_matrix.hpp"
#include "smith.hpp"

namespace homcalc {

class InvalidModel : public std::runtime_error {
public:
    explicit InvalidModel(const std::string& what) : std::runtime_error(what) {}
};

/** Inputs to connected_sum_complex lack the single-top-cell shape. */
class ModelShape : public std::runtime_error {
public:
    explicit ModelShape(const std::string& what) : std::runtime_error(what) {}
};

class ChainComplex {
public:
    /**
     * dims[j] = number of j-cells; boundaries[j] maps degree-j chains to
     * degree-(j-1) chains, so it is dims[j-1] x dims[j]. boundaries[0]
     * is ignored (augmentation is not part of the complex).
     * Validates shapes and boundary-of-boundary = 0.
     */
    ChainComplex(std::vector<std::size_t> dims, std::vector<IntegerMatrix> boundaries)
        : dims_(std::move(dims)), boundaries_(std::move(boundaries))
    {
        if (dims_.empty())
            throw InvalidModel("ChainComplex: empty dimension list");
        if (boundaries_.size() != dims_.size())
            throw InvalidModel("ChainComplex: need one boundary slot per degree");
        boundaries_[0] = IntegerMatrix(0, dims_[0]);
        for (std::size_t j = 1; j < dims_.size(); ++j)
            if (boundaries_[j].rows() != dims_[j - 1] || boundaries_[j].cols() != dims_[j])
                throw InvalidModel("ChainComplex: boundary shape mismatch at degree " +
                                   std::to_string(j));
        for (std::size_t j = 2; j < dims_.size(); ++j)
            if (!(boundaries_[j - 1] * boundaries_[j]).isZero())
                throw InvalidModel("ChainComplex: d.d != 0 at degree " + std::to_string(j));
    }

    int topDegree() const { return static_cast<int>(dims_.size()) - 1; }

    std::size_t cells(int degree) const
    {
        if (degree < 0 || degree > topDegree())
            return 0;
        return dims_[static_cast<std::size_t>(degree)];
    }

    /** Boundary map out of degree j; zero-shaped outside the range. */
    const IntegerMatrix& boundary(int j) const
    {
        static const IntegerMatrix kEmpty;
        if (j < 1 || j > topDegree())
            return kEmpty;
        return boundaries_[static_cast<std::size_t>(j)];
    }

    long long eulerCharacteristic() const
    {
        long long chi = 0;
        for (std::size_t j = 0; j < dims_.size(); ++j)
            chi += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(dims_[j]);
        return chi;
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<IntegerMatrix> boundaries_;
};

/**
 * H_j = ker d_j / im d_{j+1}. Free rank from the two boundary ranks,
 * torsion from the invariant factors of the incoming boundary.
 */
inline GradedGroup homology(const ChainComplex& c)
{
    int top = c.topDegree();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<Int> > tors(static_cast<std::size_t>(top) + 2);
    for (int j = 1; j <= top; ++j) {
        SmithDecomposition s = smith_normal_form(c.boundary(j));
        ranks[static_cast<std::size_t>(j)] = s.rank();
        tors[static_cast<std::size_t>(j)] = s.diagonal();
    }
    std::vector<FGAbelianGroup> groups;
    for (int j = 0; j <= top; ++j) {
        std::size_t free_rank = c.cells(j) - ranks[static_cast<std::size_t>(j)] -
                                ranks[static_cast<std::size_t>(j) + 1];
        groups.emplace_back(free_rank, tors[static_cast<std::size_t>(j) + 1]);
    }
    return GradedGroup(std::move(groups));
}

/** Minimal cellular models of the basic building blocks. */
struct CellModel {
    enum class Kind { Point, Sphere, Disc, Lens };
    Kind kind = Kind::Point;
    int k = 0;  // sphere/disc dimension
    Int p = 0, q = 0;  // lens parameters

    static CellModel point() { return {Kind::Point, 0, 0, 0}; }
    static CellModel sphere(int k) { return {Kind::Sphere, k, 0, 0}; }
    static CellModel disc(int k) { return {Kind::Disc, k, 0, 0}; }
    static CellModel lens(const Int& p, const Int& q) { return {Kind::Lens, 3, p, q}; }
};

inline ChainComplex build(const CellModel& model)
{
    switch (model.kind) {
    case CellModel::Kind::Point:
        return ChainComplex({1}, {IntegerMatrix()});
    case CellModel::Kind::Disc:
        // Discs are contractible; collapse to the point model.
        if (model.k < 0)
            throw InvalidModel("disc: dimension must be nonnegative");
        return ChainComplex({1}, {IntegerMatrix()});
    case CellModel::Kind::Sphere: {
        if (model.k < 1)
            throw InvalidModel("sphere: dimension must be >= 1");
        std::size_t n = static_cast<std::size_t>(model.k);
        std::vector<std::size_t> dims(n + 1, 0);
        dims[0] = 1;
        dims[n] = 1;
        std::vector<IntegerMatrix> bnd(n + 1);
        for (std::size_t j = 1; j <= n; ++j)
            bnd[j] = IntegerMatrix(dims[j - 1], dims[j]);  // all zero
        return ChainComplex(std::move(dims), std::move(bnd));
    }
    case CellModel::Kind::Lens: {
        const Int& p = model.p;
        const Int& q = model.q;
        Int qmax = p > 2 ? p : Int(2);
        if (p < 1 || q < 1 || q >= qmax || gcd_int(p, q) != 1)
            throw InvalidModel("lens(p,q): need p >= 1, 1 <= q < max(p,2), gcd(p,q) = 1");
        // One cell per degree 0..3; degree-2 attaching map has degree p.
        IntegerMatrix d1(1, 1), d2(1, 1), d3(1, 1);
        d2(0, 0) = p;
        return ChainComplex({1, 1, 1, 1}, {IntegerMatrix(), d1, d2, d3});
    }
    }
    throw InvalidModel("unknown cell model");
}

/**
 * Chain complex of the product: degree-n cells are pairs of an i-cell
 * and an (n-i)-cell, boundary by the graded Leibniz rule with sign
 * (-1)^i on the second factor. Cell order: by first-factor degree, then
 * first-factor index, then second-factor index.
 */
inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b)
{
    int top = a.topDegree() + b.topDegree();
    std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
    // offset(n, i) = position of block (i, n-i) within degree n
    auto block_offset = [&](int n, int i) {
        std::size_t off = 0;
        for (int s = 0; s < i; ++s)
            off += a.cells(s) * b.cells(n - s);
        return off;
    };
    for (int n = 0; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            dims[static_cast<std::size_t>(n)] += a.cells(i) * b.cells(n - i);

    std::vector<IntegerMatrix> bnd(static_cast<std::size_t>(top) + 1);
    for (int n = 1; n <= top; ++n) {
        IntegerMatrix d(dims[static_cast<std::size_t>(n) - 1], dims[static_cast<std::size_t>(n)]);
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            std::size_t src_off = block_offset(n, i);
            for (std::size_t ca = 0; ca < a.cells(i); ++ca)
                for (std::size_t cb = 0; cb < b.cells(j); ++cb) {
                    std::size_t col = src_off + ca * b.cells(j) + cb;
                    // d(a) tensor b lands in block (i-1, j)
                    if (i >= 1) {
                        const IntegerMatrix& da = a.boundary(i);
                        std::size_t dst_off = block_offset(n - 1, i - 1);
                        for (std::size_t ra = 0; ra < a.cells(i - 1); ++ra) {
                            const Int& coef = da(ra, ca);
                            if (coef != 0)
                                d(dst_off + ra * b.cells(j) + cb, col) += coef;
                        }
                    }
                    // (-1)^i a tensor d(b) lands in block (i, j-1)
                    if (j >= 1) {
                        const IntegerMatrix& db = b.boundary(j);
                        std::size_t dst_off = block_offset(n - 1, i);
                        int sign = (i % 2 == 0) ? 1 : -1;
                        for (std::size_t rb = 0; rb < b.cells(j - 1); ++rb) {
                            const Int& coef = db(rb, cb);
                            if (coef != 0)
                                d(dst_off + ca * b.cells(j - 1) + rb, col) += sign * coef;
                        }
                    }
                }
        }
        bnd[static_cast<std::size_t>(n)] = std::move(d);
    }
    return ChainComplex(std::move(dims), std::move(bnd));
}

/**
 * Splice two d-dimensional closed models, each with exactly one 0-cell
 * and one top cell, into a connected-sum complex: drop both top cells,
 * identify the 0-cells, and attach one new top cell along the oriented
 * sum of the removed attaching maps.
 */
inline ChainComplex connected_sum_complex(const ChainComplex& y1, const ChainComplex& y2, int d)
{
    if (d < 2)
        throw ModelShape("connected_sum_complex: dimension must be >= 2");
    if (y1.topDegree() != d || y2.topDegree() != d)
        throw ModelShape("connected_sum_complex: inputs must be d-dimensional");
    if (y1.cells(0) != 1 || y2.cells(0) != 1 || y1.cells(d) != 1 || y2.cells(d) != 1)
        throw ModelShape("connected_sum_complex: inputs need one 0-cell and one top cell");

    std::vector<std::size_t> dims(static_cast<std::size_t>(d) + 1, 0);
    dims[0] = 1;
    for (int j = 1; j < d; ++j)
        dims[static_cast<std::size_t>(j)] = y1.cells(j) + y2.cells(j);
    dims[static_cast<std::size_t>(d)] = 1;

    std::vector<IntegerMatrix> bnd(static_cast<std::size_t>(d) + 1);
    for (int j = 1; j < d; ++j) {
        std::size_t r = dims[static_cast<std::size_t>(j) - 1];
        IntegerMatrix m(r, dims[static_cast<std::size_t>(j)]);
        const IntegerMatrix& b1 = y1.boundary(j);
        const IntegerMatrix& b2 = y2.boundary(j);
        std::size_t roff = (j == 1) ? 0 : y1.cells(j - 1);
        for (std::size_t ri = 0; ri < b1.rows(); ++ri)
            for (std::size_t ci = 0; ci < b1.cols(); ++ci)
                m(ri, ci) = b1(ri, ci);
        for (std::size_t ri = 0; ri < b2.rows(); ++ri)
            for (std::size_t ci = 0; ci < b2.cols(); ++ci)
                m((j == 1) ? 0 : roff + ri, y1.cells(j) + ci) += b2(ri, ci);
        bnd[static_cast<std::size_t>(j)] = std::move(m);
    }
    {
        IntegerMatrix m(dims[static_cast<std::size_t>(d) - 1], 1);
        const IntegerMatrix& b1 = y1.boundary(d);
        const IntegerMatrix& b2 = y2.boundary(d);
        for (std::size_t ri = 0; ri < b1.rows(); ++ri)
            m(ri, 0) = b1(ri, 0);
        std::size_t roff = (d == 1) ? 0 : y1.cells(d - 1);
        for (std::size_t ri = 0; ri < b2.rows(); ++ri)
            m(roff + ri, 0) += b2(ri, 0);
        bnd[static_cast<std::size_t>(d)] = std::move(m);
    }
    return ChainComplex(std::move(dims), std::move(bnd));
}

}  // namespace homcalc

#endif  // HOMCALC_CHAIN_COMPLEX_HPP
