/**
 * Smith normal form over the integers, with full transform tracking,
 * plus the lattice utilities built on it (integer kernels, membership
 * solves, quotients of nested lattices).
 */

#ifndef HOMCALC_SMITH_HPP
#define HOMCALC_SMITH_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "integer_matrix.hpp"

namespace homcalc {

/**
 * U * A * V = D with U, V unimodular and D diagonal, nonnegative,
 * d_1 | d_2 | ... with trailing zeros last. u_inv is maintained
 * alongside U so column-lattice bases of A can be read off without a
 * separate inversion.
 */
struct SmithDecomposition {
    IntegerMatrix U;      // rows x rows
    IntegerMatrix D;      // rows x cols
    IntegerMatrix V;      // cols x cols
    IntegerMatrix u_inv;  // inverse of U

    std::size_t rank() const
    {
        std::size_t n = std::min(D.rows(), D.cols());
        std::size_t r = 0;
        while (r < n && D(r, r) != 0)
            ++r;
        return r;
    }

    /** Nonzero diagonal entries, in divisibility order. */
    std::vector<Int> diagonal() const
    {
        std::vector<Int> d;
        std::size_t n = std::min(D.rows(), D.cols());
        for (std::size_t i = 0; i < n && D(i, i) != 0; ++i)
            d.push_back(D(i, i));
        return d;
    }
};

/**
 * Compute the Smith normal form of A.
 *
 * Pivot choice: minimal nonzero absolute value in the active submatrix,
 * ties broken by lowest (row, col). This fixes the sequence of
 * elementary operations, so U and V are reproducible across runs.
 */
inline SmithDecomposition smith_normal_form(const IntegerMatrix& A)
{
    std::size_t r = A.rows();
    std::size_t c = A.cols();
    SmithDecomposition s;
    s.U = IntegerMatrix::identity(r);
    s.u_inv = IntegerMatrix::identity(r);
    s.V = IntegerMatrix::identity(c);
    s.D = A;
    IntegerMatrix& D = s.D;

    // Row op on D mirrors onto U on the left and u_inv^T-style on the right.
    auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
        D.addRowMultiple(dst, src, q);
        s.U.addRowMultiple(dst, src, q);
        s.u_inv.addColMultiple(src, dst, -q);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        D.swapRows(i, j);
        s.U.swapRows(i, j);
        s.u_inv.swapCols(i, j);
    };
    auto row_negate = [&](std::size_t i) {
        D.negateRow(i);
        s.U.negateRow(i);
        s.u_inv.negateCol(i);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
        D.addColMultiple(dst, src, q);
        s.V.addColMultiple(dst, src, q);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        D.swapCols(i, j);
        s.V.swapCols(i, j);
    };

    // Extended gcd: returns g = gcd(a, b) > 0 with a x + b y = g.
    auto ext_gcd = [](Int a, Int b, Int& x, Int& y) {
        Int x0(1), y0(0), x1(0), y1(1);
        while (b != 0) {
            Int q = a / b;
            Int tmp = a - q * b;
            a = b;
            b = tmp;
            tmp = x0 - q * x1;
            x0 = x1;
            x1 = tmp;
            tmp = y0 - q * y1;
            y0 = y1;
            y1 = tmp;
        }
        if (a < 0) {
            a = -a;
            x0 = -x0;
            y0 = -y0;
        }
        x = x0;
        y = y0;
        return a;
    };
    // Unimodular 2x2 combination of rows t and i that puts
    // gcd(D(t,t), D(i,t)) at the pivot and zeroes D(i,t) in one step.
    // Mirrored on U; the inverse block is applied to columns of u_inv.
    auto row_bezout = [&](std::size_t t, std::size_t i) {
        Int a = D(t, t), b = D(i, t), x, y;
        Int g = ext_gcd(a, b, x, y);
        Int p = -(b / g), q = a / g;  // second row of the block, det = 1
        for (std::size_t j = 0; j < c; ++j) {
            Int dt = D(t, j), di = D(i, j);
            D(t, j) = x * dt + y * di;
            D(i, j) = p * dt + q * di;
        }
        for (std::size_t j = 0; j < r; ++j) {
            Int ut = s.U(t, j), ui = s.U(i, j);
            s.U(t, j) = x * ut + y * ui;
            s.U(i, j) = p * ut + q * ui;
            Int vt = s.u_inv(j, t), vi = s.u_inv(j, i);
            s.u_inv(j, t) = q * vt - p * vi;
            s.u_inv(j, i) = -y * vt + x * vi;
        }
    };
    // Same for columns t and j, mirrored on V only.
    auto col_bezout = [&](std::size_t t, std::size_t j) {
        Int a = D(t, t), b = D(t, j), x, y;
        Int g = ext_gcd(a, b, x, y);
        Int p = -(b / g), q = a / g;
        for (std::size_t i = 0; i < r; ++i) {
            Int dt = D(i, t), dj = D(i, j);
            D(i, t) = x * dt + y * dj;
            D(i, j) = p * dt + q * dj;
        }
        for (std::size_t i = 0; i < c; ++i) {
            Int vt = s.V(i, t), vj = s.V(i, j);
            s.V(i, t) = x * vt + y * vj;
            s.V(i, j) = p * vt + q * vj;
        }
    };

    std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Locate the pivot: minimal nonzero absolute value in the
            // active submatrix, re-selected every sweep so quotients
            // stay small.
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best(0);
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (D(i, j) == 0)
                        continue;
                    Int a = abs_int(D(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found)
                goto done;  // active submatrix is zero
            if (pi != t)
                row_swap(t, pi);
            if (pj != t)
                col_swap(t, pj);

            // Clear column t below the pivot, then row t right of it.
            // A Bezout column step can reintroduce entries below the
            // pivot, so sweep until both are clean.
            for (std::size_t i = t + 1; i < r; ++i) {
                if (D(i, t) == 0)
                    continue;
                if (D(i, t) % D(t, t) == 0)
                    row_add(i, t, -(D(i, t) / D(t, t)));
                else
                    row_bezout(t, i);
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (D(t, j) == 0)
                    continue;
                if (D(t, j) % D(t, t) == 0)
                    col_add(j, t, -(D(t, j) / D(t, t)));
                else
                    col_bezout(t, j);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < r && clean; ++i)
                clean = D(i, t) == 0;
            for (std::size_t j = t + 1; j < c && clean; ++j)
                clean = D(t, j) == 0;
            if (!clean)
                continue;
            // Divisibility repair: the pivot must divide every entry of
            // the remaining submatrix, otherwise fold the offending row
            // into row t and reduce again (the pivot drops to a gcd).
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        row_add(t, i, Int(1));
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (D(t, t) < 0)
            row_negate(t);
    }
done:
    return s;
}

inline std::size_t matrix_rank(const IntegerMatrix& A)
{
    return smith_normal_form(A).rank();
}

/**
 * Basis of the integer kernel lattice of A, as columns. The kernel of
 * an integer matrix is saturated, so these columns span every integer
 * solution of A x = 0.
 */
inline IntegerMatrix kernel_basis(const IntegerMatrix& A)
{
    SmithDecomposition s = smith_normal_form(A);
    std::size_t rk = s.rank();
    std::size_t dim = A.cols() - rk;
    IntegerMatrix K(A.cols(), dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < A.cols(); ++i)
            K(i, j) = s.V(i, rk + j);
    return K;
}

/**
 * Solve A x = b over the integers. Returns nullopt when b is not in the
 * column lattice of A.
 */
inline std::optional<std::vector<Int> > solve_in_lattice(const SmithDecomposition& s,
                                                         const std::vector<Int>& b)
{
    std::size_t r = s.D.rows();
    std::size_t c = s.D.cols();
    if (b.size() != r)
        throw std::invalid_argument("solve_in_lattice: size mismatch");
    std::vector<Int> ub(r, Int(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            ub[i] += s.U(i, j) * b[j];
    std::size_t rk = s.rank();
    std::vector<Int> y(c, Int(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (i < rk) {
            if (ub[i] % s.D(i, i) != 0)
                return std::nullopt;
            y[i] = ub[i] / s.D(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(c, Int(0));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            x[i] += s.V(i, j) * y[j];
    return x;
}

/**
 * Basis of the column lattice of A: the nonzero columns of U^{-1} D,
 * i.e. d_i times column i of u_inv.
 */
inline IntegerMatrix column_lattice_basis(const SmithDecomposition& s)
{
    std::size_t rk = s.rank();
    IntegerMatrix B(s.D.rows(), rk);
    for (std::size_t j = 0; j < rk; ++j)
        for (std::size_t i = 0; i < s.D.rows(); ++i)
            B(i, j) = s.D(j, j) * s.u_inv(i, j);
    return B;
}

}  // namespace homcalc

#endif  // HOMCALC_SMITH_HPP
