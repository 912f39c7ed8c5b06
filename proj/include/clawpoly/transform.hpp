#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "clawpoly/engine.hpp"
#include "clawpoly/hrep.hpp"
#include "clawpoly/vrep.hpp"

namespace clawpoly {

namespace detail {

inline void require_three_rows(const LeafMatrix& p)
{
    if (p.rows() != 3)
        throw Error(ErrorKind::Dimension, "coordinate change needs a 3-row matrix, got " + std::to_string(p.rows()) +
                                              " rows");
}

} // namespace detail

/// Column map (x1, x2, x3) -> (x1+x2, x1+x3, x2+x3), applied to every column.
/// Defined on all matrices, not only members of the polytope.
inline LeafMatrix apply_f(const LeafMatrix& p)
{
    detail::require_three_rows(p);
    LeafMatrix q(3, p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j) {
        q(0, j) = p(0, j) + p(1, j);
        q(1, j) = p(0, j) + p(2, j);
        q(2, j) = p(1, j) + p(2, j);
    }
    return q;
}

/// Column map (x, y, z) -> ((x+y-z)/2, (x+z-y)/2, (y+z-x)/2).
inline LeafMatrix apply_f_inverse(const LeafMatrix& q)
{
    detail::require_three_rows(q);
    LeafMatrix p(3, q.cols());
    for (std::size_t j = 0; j < q.cols(); ++j) {
        const Rational& x = q(0, j);
        const Rational& y = q(1, j);
        const Rational& z = q(2, j);
        p(0, j) = (x + y - z) / 2;
        p(1, j) = (x + z - y) / 2;
        p(2, j) = (y + z - x) / 2;
    }
    return p;
}

inline std::array<Rational, 3> apply_f_column(const std::array<Rational, 3>& c)
{
    return {c[0] + c[1], c[0] + c[2], c[1] + c[2]};
}

/// Maps every point of a 3-row vertex set through f (or its inverse).
inline VertexSet transform_points(const VertexSet& vs, bool inverse = false)
{
    VertexSet out{vs.rows, vs.cols, {}};
    out.points.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const LeafMatrix m = vs.matrix(i);
        out.points.push_back((inverse ? apply_f_inverse(m) : apply_f(m)).flat());
    }
    return out;
}

struct SimplexImage {
    std::vector<Point> simplex;       // (0,0,0), e1, e2, e3
    std::vector<Point> images;        // f_j of each, same order
    std::vector<Point> dh3_vertices;  // engine-derived vertices of DH(3)
    bool bijective = false;           // images are exactly the DH(3) vertices
    bool inverse_ok = false;          // f_j^{-1} of each DH(3) vertex is a simplex vertex
    bool ok() const { return bijective && inverse_ok; }
};

/// Checks that the column map f_j sends the unit 3-simplex onto DH(3). f acts
/// columnwise, so one column settles it for every leaf count.
inline SimplexImage simplex_image_check()
{
    SimplexImage out;
    out.simplex = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& s : out.simplex) {
        auto img = apply_f_column({s[0], s[1], s[2]});
        out.images.push_back(Point(img.begin(), img.end()));
    }
    out.dh3_vertices = engine::vertices_from_inequalities(build_dh(3)).points;

    auto sorted = out.images;
    std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) { return lex_less(a, b); });
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    out.bijective = distinct && engine::compare_vertex_sets(sorted, out.dh3_vertices).equal;

    out.inverse_ok = std::all_of(out.dh3_vertices.begin(), out.dh3_vertices.end(), [&](const Point& v) {
        const LeafMatrix col = apply_f_inverse(LeafMatrix::from_flat(3, 1, v));
        return std::find(out.simplex.begin(), out.simplex.end(), col.flat()) != out.simplex.end();
    });
    return out;
}

} // namespace clawpoly
