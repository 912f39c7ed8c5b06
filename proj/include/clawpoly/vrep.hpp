#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clawpoly/group_model.hpp"
#include "clawpoly/rational.hpp"

namespace clawpoly {

/// rows x cols rational matrix, stored row-major. Flattening a matrix to a
/// point of R^{rows*cols} is exactly this storage order.
class LeafMatrix {
public:
    LeafMatrix() = default;
    LeafMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static LeafMatrix from_flat(std::size_t rows, std::size_t cols, Point flat)
    {
        if (flat.size() != rows * cols)
            throw Error(ErrorKind::Dimension, "flat point of length " + std::to_string(flat.size()) +
                                                  " cannot be a " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " matrix");
        LeafMatrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.data_ = std::move(flat);
        return m;
    }

    /// Builds a matrix from its rows; all rows must have equal length.
    static LeafMatrix from_rows(const std::vector<Point>& rows)
    {
        if (rows.empty())
            throw Error(ErrorKind::Dimension, "matrix needs at least one row");
        LeafMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw Error(ErrorKind::Dimension, "ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const Point& flat() const { return data_; }

    Point row(std::size_t i) const { return Point(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Point column(std::size_t j) const
    {
        Point c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    friend bool operator==(const LeafMatrix&, const LeafMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Point data_;
};

/// An m-tuple of group elements, one per leaf of the claw tree.
struct Labeling {
    GroupSpec spec;
    std::vector<GroupElement> elements;

    Labeling(GroupSpec s, std::vector<GroupElement> els) : spec(std::move(s)), elements(std::move(els))
    {
        if (elements.size() < 3)
            throw Error(ErrorKind::LeafCount, "claw trees need at least 3 leaves, got " +
                                                  std::to_string(elements.size()));
        for (const auto& g : elements)
            spec.check(g);
    }

    std::size_t leaves() const { return elements.size(); }

    GroupElement sum() const
    {
        GroupElement s = identity(spec);
        for (const auto& g : elements)
            s = add(spec, s, g);
        return s;
    }
};

/// Vertex list of a claw-tree polytope; points are flattened rows x cols matrices.
struct VertexSet {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Point> points;

    std::size_t dimension() const { return rows * cols; }
    std::size_t size() const { return points.size(); }
    LeafMatrix matrix(std::size_t i) const { return LeafMatrix::from_flat(rows, cols, points[i]); }
};

struct GenerationLimits {
    /// Largest vertex count produced without an explicit override (4^11).
    std::size_t max_vertices = std::size_t{1} << 22;
    bool allow_large = false;
};

inline void require_leaves(std::size_t m)
{
    if (m < 3)
        throw Error(ErrorKind::LeafCount, "claw trees need at least 3 leaves, got " + std::to_string(m));
}

inline LeafMatrix labeling_to_matrix(const Labeling& l)
{
    LeafMatrix out(l.spec.size() - 1, l.leaves());
    for (std::size_t j = 0; j < l.leaves(); ++j) {
        const long k = embedding_index(l.spec, l.elements[j]);
        if (k >= 0)
            out(static_cast<std::size_t>(k), j) = 1;
    }
    return out;
}

/// Recovers the labeling encoded by p, or nullopt if some column is not an
/// embedding image.
inline std::optional<std::vector<GroupElement>> matrix_to_elements(const GroupSpec& spec, const LeafMatrix& p)
{
    if (p.rows() != spec.size() - 1)
        throw Error(ErrorKind::Dimension, "matrix has " + std::to_string(p.rows()) + " rows, expected |G|-1 = " +
                                              std::to_string(spec.size() - 1));
    std::vector<GroupElement> out;
    out.reserve(p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j) {
        const Point col = p.column(j);
        auto g = decode(spec, col);
        if (!g)
            return std::nullopt;
        out.push_back(std::move(*g));
    }
    return out;
}

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / base)
            return cap + 1;
        r *= base;
    }
    return r;
}

inline void check_generation_cap(const GroupSpec& spec, std::size_t m, const GenerationLimits& limits)
{
    const std::size_t count = checked_power(spec.size(), m - 1, limits.max_vertices);
    if (count > limits.max_vertices && !limits.allow_large)
        throw Error(ErrorKind::ResourceCap, "|G|^(m-1) = " + std::to_string(spec.size()) + "^" +
                                                std::to_string(m - 1) + " vertices exceeds the cap of " +
                                                std::to_string(limits.max_vertices) +
                                                "; pass an explicit override to proceed");
}

} // namespace detail

/// Vertices of the claw-tree polytope: matrices of labelings whose group sum
/// is the identity. The first m-1 elements run over G^{m-1} in lexicographic
/// order and the last one is forced.
inline VertexSet generate_vertices(const GroupSpec& spec, std::size_t m, const GenerationLimits& limits = {})
{
    require_leaves(m);
    detail::check_generation_cap(spec, m, limits);
    const auto els = spec.elements();
    const std::size_t n = els.size();
    VertexSet out{spec.size() - 1, m, {}};
    out.points.reserve(detail::checked_power(n, m - 1, limits.max_vertices));

    std::vector<std::size_t> idx(m - 1, 0);
    while (true) {
        std::vector<GroupElement> lab;
        lab.reserve(m);
        GroupElement s = identity(spec);
        for (auto i : idx) {
            lab.push_back(els[i]);
            s = add(spec, s, els[i]);
        }
        std::vector<int> neg(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            neg[i] = -s[i];
        lab.push_back(spec.element(std::move(neg)));
        out.points.push_back(labeling_to_matrix(Labeling(spec, std::move(lab))).flat());

        std::size_t k = idx.size();
        while (k > 0 && ++idx[k - 1] == n)
            idx[--k] = 0;
        if (k == 0)
            break;
    }
    return out;
}

/// Same output as generate_vertices, obtained by scanning all |G|^m
/// labelings. Kept as a slow cross-check.
inline VertexSet generate_vertices_full_scan(const GroupSpec& spec, std::size_t m, const GenerationLimits& limits = {})
{
    require_leaves(m);
    detail::check_generation_cap(spec, m + 1, limits);
    const auto els = spec.elements();
    const std::size_t n = els.size();
    VertexSet out{spec.size() - 1, m, {}};
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        std::vector<GroupElement> lab;
        for (auto i : idx)
            lab.push_back(els[i]);
        Labeling l(spec, std::move(lab));
        if (is_identity(l.sum()))
            out.points.push_back(labeling_to_matrix(l).flat());
        std::size_t k = idx.size();
        while (k > 0 && ++idx[k - 1] == n)
            idx[--k] = 0;
        if (k == 0)
            break;
    }
    return out;
}

inline bool is_vertex(const GroupSpec& spec, std::size_t m, const LeafMatrix& p)
{
    if (p.rows() != spec.size() - 1 || p.cols() != m)
        throw Error(ErrorKind::Dimension, "expected a " + std::to_string(spec.size() - 1) + "x" + std::to_string(m) +
                                              " matrix, got " + std::to_string(p.rows()) + "x" +
                                              std::to_string(p.cols()));
    if (!is_integral(p.flat()))
        return false;
    auto els = matrix_to_elements(spec, p);
    if (!els)
        return false;
    GroupElement s = identity(spec);
    for (const auto& g : *els)
        s = add(spec, s, g);
    return is_identity(s);
}

} // namespace clawpoly
