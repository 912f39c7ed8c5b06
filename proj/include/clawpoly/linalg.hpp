#pragma once

#include <cstddef>
#include <vector>

#include "clawpoly/rational.hpp"

namespace clawpoly::linalg {

/// Dense row-major rational matrix, just enough for elimination.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(std::span<const Rational> row)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = row.size();
        if (row.size() != cols_)
            throw Error(ErrorKind::Dimension, "row length " + std::to_string(row.size()) + " != " +
                                                  std::to_string(cols_));
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;                    // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Pivot columns are chosen lowest index first and
/// within a column the first row with a nonzero entry is used, so the result
/// depends only on the input.
inline Echelon rref(Matrix a)
{
    const std::size_t n = a.rows(), m = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && sgn(a(p, c)) == 0)
            ++p;
        if (p == n)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m; ++j)
                std::swap(a(p, j), a(r, j));
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < m; ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || sgn(a(i, c)) == 0)
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < m; ++j)
                if (sgn(a(r, j)) != 0)
                    a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, m);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j)
            reduced(i, j) = a(i, j);
    return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a)
{
    return rref(a).pivots.size();
}

/// Basis of the right null space {v : a v = 0}. One vector per free column,
/// in increasing column order; the free variable is set to 1 and every other
/// free variable to 0.
inline std::vector<Point> kernel(const Matrix& a)
{
    const Echelon e = rref(a);
    const std::size_t m = a.cols();
    std::vector<bool> is_pivot(m, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<Point> basis;
    for (std::size_t f = 0; f < m; ++f) {
        if (is_pivot[f])
            continue;
        Point v(m, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Dimension of the affine hull of a nonempty point set (-1 for no points).
inline long affine_dimension(std::span<const Point> points)
{
    if (points.empty())
        return -1;
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Point d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = points[i][j] - points[0][j];
        diffs.append_row(d);
    }
    return diffs.rows() == 0 ? 0 : static_cast<long>(rank(diffs));
}

} // namespace clawpoly::linalg
