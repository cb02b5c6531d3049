#pragma once

#include "siegel/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace siegel {

template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(size_t n)
    {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Mat& a, const Mat& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Mat operator*(const Mat& a, const Mat& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0))
                    continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!(bkj == T(0)))
                        r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Mat: dimension mismatch in sum");
        Mat r = a;
        for (size_t i = 0; i < r.data_.size(); ++i)
            r.data_[i] += b.data_[i];
        return r;
    }

    friend Mat operator*(const T& s, const Mat& a)
    {
        Mat r = a;
        for (auto& x : r.data_)
            x *= s;
        return r;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!(x == T(0)))
                return false;
        return true;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols_)
            throw std::invalid_argument("Mat: dimension mismatch in apply");
        std::vector<T> r(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == T(0)))
                    r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using QMat = Mat<Rational>;
using ZMat = Mat<BigInt>;

// Row-echelon rank over the rationals.
inline size_t rank(QMat m)
{
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        for (size_t j = c; j < m.cols(); ++j)
            std::swap(m(r, j), m(piv, j));
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero())
                continue;
            Rational f = m(i, c) / m(r, c);
            for (size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Basis of the right kernel over the rationals (columns of the result).
inline QMat kernel(QMat m)
{
    size_t n = m.cols();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        for (size_t j = 0; j < n; ++j)
            std::swap(m(r, j), m(piv, j));
        Rational inv = Rational(1) / m(r, c);
        for (size_t j = 0; j < n; ++j)
            m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Rational f = m(i, c);
            for (size_t j = 0; j < n; ++j)
                m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col)
        is_pivot[c] = true;
    QMat ker(n, n - r);
    size_t k = 0;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        ker(c, k) = Rational(1);
        for (size_t i = 0; i < r; ++i)
            ker(pivot_col[i], k) = -m(i, c);
        ++k;
    }
    return ker;
}

// Solve A x = b for A with full column rank; throws if inconsistent.
inline std::vector<Rational> solve_full_column_rank(QMat a, std::vector<Rational> b)
{
    size_t n = a.cols();
    std::vector<size_t> pivot_row(n);
    size_t r = 0;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero())
            ++piv;
        if (piv == a.rows())
            throw std::invalid_argument("solve: matrix does not have full column rank");
        for (size_t j = 0; j < n; ++j)
            std::swap(a(r, j), a(piv, j));
        std::swap(b[r], b[piv]);
        for (size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c).is_zero())
                continue;
            Rational f = a(i, c) / a(r, c);
            for (size_t j = c; j < n; ++j)
                a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (size_t i = r; i < a.rows(); ++i)
        if (!b[i].is_zero())
            throw std::invalid_argument("solve: inconsistent system");
    std::vector<Rational> x(n);
    for (size_t c = n; c-- > 0;) {
        Rational acc = b[pivot_row[c]];
        for (size_t j = c + 1; j < n; ++j)
            acc -= a(pivot_row[c], j) * x[j];
        x[c] = acc / a(pivot_row[c], c);
    }
    return x;
}

struct SmithResult {
    std::vector<BigInt> divisors; // nonzero diagonal entries, each dividing the next
    size_t rank = 0;
    ZMat right; // unimodular V with A*V in column echelon; kernel = columns [rank, cols)
};

// Smith normal form of an integer matrix. Tracks only the right transform,
// which is all the callers need (saturated integer kernels, elementary
// divisors of the column lattice).
inline SmithResult smith_normal_form(ZMat a, bool want_right = true)
{
    size_t rows = a.rows(), cols = a.cols();
    SmithResult res;
    res.right = want_right ? ZMat::identity(cols) : ZMat();

    auto col_swap = [&](size_t c1, size_t c2) {
        if (c1 == c2)
            return;
        for (size_t i = 0; i < rows; ++i)
            std::swap(a(i, c1), a(i, c2));
        if (want_right)
            for (size_t i = 0; i < cols; ++i)
                std::swap(res.right(i, c1), res.right(i, c2));
    };
    auto col_axpy = [&](size_t dst, size_t src, const BigInt& f) {
        // column dst += f * column src
        if (f.is_zero())
            return;
        for (size_t i = 0; i < rows; ++i)
            if (!a(i, src).is_zero())
                a(i, dst) += f * a(i, src);
        if (want_right)
            for (size_t i = 0; i < cols; ++i)
                if (!res.right(i, src).is_zero())
                    res.right(i, dst) += f * res.right(i, src);
    };
    auto col_negate = [&](size_t c) {
        for (size_t i = 0; i < rows; ++i)
            a(i, c) = -a(i, c);
        if (want_right)
            for (size_t i = 0; i < cols; ++i)
                res.right(i, c) = -res.right(i, c);
    };
    auto row_swap = [&](size_t r1, size_t r2) {
        if (r1 == r2)
            return;
        for (size_t j = 0; j < cols; ++j)
            std::swap(a(r1, j), a(r2, j));
    };
    auto row_axpy = [&](size_t dst, size_t src, const BigInt& f) {
        if (f.is_zero())
            return;
        for (size_t j = 0; j < cols; ++j)
            if (!a(src, j).is_zero())
                a(dst, j) += f * a(src, j);
    };

    size_t t = 0;
    size_t dim = rows < cols ? rows : cols;
    while (t < dim) {
        // pick the nonzero entry of smallest magnitude in the trailing block
        size_t pr = t, pc = t;
        bool found = false;
        BigInt best;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (a(i, j).is_zero())
                    continue;
                BigInt mag = a(i, j).abs();
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (!found)
            break;
        row_swap(t, pr);
        col_swap(t, pc);
        if (a(t, t).is_negative())
            col_negate(t);

        bool clean = true;
        for (size_t i = t + 1; i < rows && clean; ++i)
            if (!a(i, t).is_zero())
                clean = false;
        for (size_t j = t + 1; j < cols && clean; ++j)
            if (!a(t, j).is_zero())
                clean = false;
        if (!clean) {
            for (size_t i = t + 1; i < rows; ++i)
                if (!a(i, t).is_zero())
                    row_axpy(i, t, -(a(i, t) / a(t, t)));
            for (size_t j = t + 1; j < cols; ++j)
                if (!a(t, j).is_zero())
                    col_axpy(j, t, -(a(t, j) / a(t, t)));
            continue; // remainders may be nonzero; re-pick the pivot
        }
        ++t;
    }
    res.rank = t;

    // enforce the divisibility chain d_1 | d_2 | ... on the diagonal
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < res.rank; ++i) {
            if (a(i + 1, i + 1).divisible_by(a(i, i)))
                continue;
            changed = true;
            // fold entry (i+1,i+1) into column i, then re-clear the 2x2 block
            col_axpy(i, i + 1, BigInt(1));
            // now column i has entries a(i,i) at row i and a(i+1,i+1) at row i+1
            while (!a(i + 1, i).is_zero()) {
                BigInt q = a(i, i) / a(i + 1, i);
                row_axpy(i, i + 1, -q);
                row_swap(i, i + 1);
            }
            if (a(i, i).is_negative()) {
                for (size_t j = 0; j < cols; ++j)
                    a(i, j) = -a(i, j);
            }
            col_axpy(i + 1, i, -(a(i, i + 1) / a(i, i)));
            if (!a(i, i + 1).is_zero() || !a(i + 1, i).is_zero())
                throw std::logic_error("smith_normal_form: divisibility fix-up failed");
            if (a(i + 1, i + 1).is_negative())
                col_negate(i + 1);
        }
    }

    res.divisors.reserve(res.rank);
    for (size_t i = 0; i < res.rank; ++i)
        res.divisors.push_back(a(i, i));
    return res;
}

// Basis of the saturated integer kernel (columns). Since the right transform
// of the SNF is unimodular, its trailing columns span ker(A) primitively.
inline ZMat integer_kernel(const ZMat& a)
{
    SmithResult s = smith_normal_form(a);
    size_t k = a.cols() - s.rank;
    ZMat ker(a.cols(), k);
    for (size_t i = 0; i < a.cols(); ++i)
        for (size_t j = 0; j < k; ++j)
            ker(i, j) = s.right(i, s.rank + j);
    return ker;
}

inline QMat to_rational(const ZMat& a)
{
    QMat r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            r(i, j) = Rational(a(i, j));
    return r;
}

} // namespace siegel
