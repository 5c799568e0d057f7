/**
 * Dense integer matrices with arbitrary-precision entries.
 *
 * All homology computations in this library reduce to exact integer
 * linear algebra, so entries are boost::multiprecision::cpp_int and
 * every operation is exact.
 */

#ifndef HOMCALC_INTEGER_MATRIX_HPP
#define HOMCALC_INTEGER_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace homcalc {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b)
{
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/**
 * Row-major dense matrix over the integers. Zero rows and/or columns are
 * legal and represent zero maps between based free modules.
 */
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}

    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0))
    {
    }

    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("IntegerMatrix: entry count mismatch");
    }

    /** Convenience constructor from a nested initializer-style vector. */
    static IntegerMatrix fromRows(const std::vector<std::vector<Int> >& rows)
    {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        IntegerMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("IntegerMatrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntegerMatrix identity(std::size_t n)
    {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j)
    {
        return entries_[i * cols_ + j];
    }

    const Int& operator()(std::size_t i, std::size_t j) const
    {
        return entries_[i * cols_ + j];
    }

    bool operator==(const IntegerMatrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ &&
               entries_ == other.entries_;
    }

    bool isZero() const
    {
        for (const Int& e : entries_)
            if (e != 0)
                return false;
        return true;
    }

    IntegerMatrix operator*(const IntegerMatrix& other) const
    {
        if (cols_ != other.rows_)
            throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
        IntegerMatrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    out(i, j) += a * other(k, j);
            }
        return out;
    }

    /** Horizontal concatenation [A | B]; row counts must agree. */
    static IntegerMatrix hconcat(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        if (a.rows() != b.rows())
            throw std::invalid_argument("IntegerMatrix: hconcat row mismatch");
        IntegerMatrix out(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                out(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, a.cols() + j) = b(i, j);
        }
        return out;
    }

    std::vector<Int> column(std::size_t j) const
    {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    // Elementary operations used by the Smith reduction.
    void swapRows(std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    void swapCols(std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < rows_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }

    void addRowMultiple(std::size_t dst, std::size_t src, const Int& c)
    {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(dst, k) += c * (*this)(src, k);
    }

    void addColMultiple(std::size_t dst, std::size_t src, const Int& c)
    {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, dst) += c * (*this)(k, src);
    }

    void negateRow(std::size_t i)
    {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) = -(*this)(i, k);
    }

    void negateCol(std::size_t j)
    {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, j) = -(*this)(k, j);
    }

    /** Exact determinant by fraction-free (Bareiss) elimination. */
    Int det() const
    {
        if (rows_ != cols_)
            throw std::invalid_argument("IntegerMatrix: det of non-square matrix");
        std::size_t n = rows_;
        if (n == 0)
            return 1;
        IntegerMatrix a(*this);
        Int prev(1);
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0)
                    ++p;
                if (p == n)
                    return 0;
                a.swapRows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
    }

    std::string toString() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += (i == 0 ? "[" : " [");
            for (std::size_t j = 0; j < cols_; ++j) {
                s += (*this)(i, j).str();
                if (j + 1 < cols_)
                    s += ", ";
            }
            s += "]";
            if (i + 1 < rows_)
                s += "\n";
        }
        return s + "]";
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

}  // namespace homcalc

#endif  // HOMCALC_INTEGER_MATRIX_HPP
