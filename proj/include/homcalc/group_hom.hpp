/**
 * Homomorphisms between finitely generated abelian groups, presented by
 * integer matrices on ordered generator lists, with exact kernel /
 * image / cokernel computation by lifting to free presentations.
 */

#ifndef HOMCALC_GROUP_HOM_HPP
#define HOMCALC_GROUP_HOM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abelian_group.hpp"
#include "integer_matrix.hpp"
#include "smith.hpp"

namespace homcalc {

class MalformedHom : public std::runtime_error {
public:
    explicit MalformedHom(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A group given by one generator per entry of `orders`: order 0 means a
 * free generator. Canonical presentations list free generators first
 * and torsion generators in invariant-factor order; direct-sum
 * presentations produced by the solver may interleave.
 */
struct GroupPresentation {
    std::vector<Int> orders;

    static GroupPresentation of(const FGAbelianGroup& g)
    {
        GroupPresentation p;
        p.orders.assign(g.rank(), Int(0));
        for (const Int& d : g.invariantFactors())
            p.orders.push_back(d);
        return p;
    }

    std::size_t generators() const { return orders.size(); }

    /** Relation matrix: one column d_i * e_i per torsion generator. */
    IntegerMatrix relationMatrix() const
    {
        std::size_t ntors = 0;
        for (const Int& d : orders)
            if (d != 0)
                ++ntors;
        IntegerMatrix r(orders.size(), ntors);
        std::size_t col = 0;
        for (std::size_t i = 0; i < orders.size(); ++i)
            if (orders[i] != 0)
                r(i, col++) = orders[i];
        return r;
    }

    FGAbelianGroup group() const
    {
        std::size_t rank = 0;
        std::vector<Int> tors;
        for (const Int& d : orders) {
            if (d == 0)
                ++rank;
            else
                tors.push_back(d);
        }
        return FGAbelianGroup(rank, std::move(tors));
    }

    /** Concatenate presentations of direct summands. */
    static GroupPresentation concat(const std::vector<GroupPresentation>& parts)
    {
        GroupPresentation p;
        for (const GroupPresentation& q : parts)
            p.orders.insert(p.orders.end(), q.orders.begin(), q.orders.end());
        return p;
    }
};

class GroupHom {
public:
    GroupHom(GroupPresentation source, GroupPresentation target, IntegerMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
    {
        if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
            throw MalformedHom("GroupHom: matrix shape does not match generator counts");
        // Each source generator of order d must map to an element killed
        // by d, i.e. d * column must lie in the target relation lattice.
        for (std::size_t j = 0; j < source_.orders.size(); ++j) {
            const Int& d = source_.orders[j];
            if (d == 0)
                continue;
            for (std::size_t i = 0; i < target_.orders.size(); ++i) {
                Int v = d * matrix_(i, j);
                if (target_.orders[i] == 0 ? v != 0 : v % target_.orders[i] != 0)
                    throw MalformedHom("GroupHom: image of a torsion generator "
                                       "is not annihilated by its order");
            }
        }
    }

    static GroupHom fromGroups(const FGAbelianGroup& source, const FGAbelianGroup& target,
                               IntegerMatrix matrix)
    {
        return GroupHom(GroupPresentation::of(source), GroupPresentation::of(target),
                        std::move(matrix));
    }

    static GroupHom zero(GroupPresentation source, GroupPresentation target)
    {
        IntegerMatrix m(target.generators(), source.generators());
        return GroupHom(std::move(source), std::move(target), std::move(m));
    }

    const GroupPresentation& sourcePresentation() const { return source_; }
    const GroupPresentation& targetPresentation() const { return target_; }
    FGAbelianGroup source() const { return source_.group(); }
    FGAbelianGroup target() const { return target_.group(); }
    const IntegerMatrix& matrix() const { return matrix_; }

private:
    GroupPresentation source_;
    GroupPresentation target_;
    IntegerMatrix matrix_;
};

namespace detail {

/**
 * Isomorphism type of lattice(gens1) / lattice(gens2), for nested
 * lattices in the same ambient Z^n. Expresses every column of gens2 in
 * a basis of the larger lattice and takes the cokernel.
 */
inline FGAbelianGroup lattice_quotient(const IntegerMatrix& gens1, const IntegerMatrix& gens2)
{
    SmithDecomposition s = smith_normal_form(gens1);
    std::size_t r = s.rank();
    IntegerMatrix X(r, gens2.cols());
    for (std::size_t col = 0; col < gens2.cols(); ++col) {
        std::vector<Int> b = gens2.column(col);
        std::vector<Int> ub(gens1.rows(), Int(0));
        for (std::size_t i = 0; i < gens1.rows(); ++i)
            for (std::size_t j = 0; j < gens1.rows(); ++j)
                ub[i] += s.U(i, j) * b[j];
        for (std::size_t i = 0; i < gens1.rows(); ++i) {
            if (i < r) {
                if (ub[i] % s.D(i, i) != 0)
                    throw MalformedHom("lattice_quotient: lattices are not nested");
                X(i, col) = ub[i] / s.D(i, i);
            } else if (ub[i] != 0) {
                throw MalformedHom("lattice_quotient: lattices are not nested");
            }
        }
    }
    return cokernel(X);
}

/**
 * Generators (columns, in source coordinates) of the kernel subgroup:
 * projections of the integer kernel of [M | -R_target].
 */
inline IntegerMatrix kernel_generators(const GroupHom& f)
{
    IntegerMatrix rt = f.targetPresentation().relationMatrix();
    for (std::size_t i = 0; i < rt.rows(); ++i)
        for (std::size_t j = 0; j < rt.cols(); ++j)
            rt(i, j) = -rt(i, j);
    IntegerMatrix w = IntegerMatrix::hconcat(f.matrix(), rt);
    IntegerMatrix k = kernel_basis(w);
    std::size_t nsrc = f.sourcePresentation().generators();
    IntegerMatrix p(nsrc, k.cols());
    for (std::size_t i = 0; i < nsrc; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            p(i, j) = k(i, j);
    return p;
}

}  // namespace detail

inline FGAbelianGroup kernel(const GroupHom& f)
{
    IntegerMatrix p = detail::kernel_generators(f);
    IntegerMatrix rg = f.sourcePresentation().relationMatrix();
    return detail::lattice_quotient(IntegerMatrix::hconcat(p, rg), rg);
}

inline FGAbelianGroup image(const GroupHom& f)
{
    // im f = source / kernel: add the kernel generators to the source relations.
    IntegerMatrix p = detail::kernel_generators(f);
    IntegerMatrix rg = f.sourcePresentation().relationMatrix();
    return cokernel(IntegerMatrix::hconcat(rg, p));
}

inline FGAbelianGroup cokernel_of(const GroupHom& f)
{
    IntegerMatrix rt = f.targetPresentation().relationMatrix();
    return cokernel(IntegerMatrix::hconcat(f.matrix(), rt));
}

}  // namespace homcalc

#endif  // HOMCALC_GROUP_HOM_HPP
