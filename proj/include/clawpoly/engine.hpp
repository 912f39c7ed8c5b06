#pragma once

// Exact polyhedral oracle. V <-> H conversion runs the double description
// method on the homogenized cone with integer generators, so no tolerance is
// involved anywhere.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "clawpoly/hrep.hpp"
#include "clawpoly/linalg.hpp"
#include "clawpoly/rational.hpp"
#include "clawpoly/vrep.hpp"

namespace clawpoly::engine {

using Bits = boost::dynamic_bitset<>;
using IntVector = std::vector<Integer>;

/// coeffs . x <= rhs, or coeffs . x == rhs when `equation` is set.
struct Halfspace {
    Point coeffs;
    Rational rhs;
    bool equation = false;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

struct Progress {
    std::size_t row = 0;
    std::size_t total_rows = 0;
    std::size_t rays = 0;
    std::size_t lineality = 0;
};

struct Limits {
    /// Largest ambient dimension handled without `allow_large`.
    std::size_t max_dimension = 12;
    bool allow_large = false;
    /// Abort once the intermediate generator count exceeds this.
    std::size_t max_rays = 2'000'000;
    std::function<void(const Progress&)> progress;
    /// When nonempty, DD state is saved here after every row and resumed
    /// from on the next run with an identical system. Format is unstable.
    std::string checkpoint_path;

    /// Default limits with max_dimension taken from CLAWPOLY_MAX_DIM if set.
    static Limits from_environment()
    {
        Limits l;
        if (const char* env = std::getenv("CLAWPOLY_MAX_DIM")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || v <= 0)
                throw Error(ErrorKind::Parse, std::string("CLAWPOLY_MAX_DIM must be a positive integer, got '") + env +
                                                  "'");
            l.max_dimension = static_cast<std::size_t>(v);
        }
        return l;
    }
};

/// Double description of a bounded polyhedron: vertices, an inequality list,
/// and vertex x inequality tightness.
struct PolytopeDD {
    std::size_t dimension = 0;
    std::vector<Point> vertices;
    std::vector<Halfspace> inequalities;
    std::vector<Bits> incidence; // incidence[v][k]: inequality k tight at vertex v

    /// Vertices tight on inequality k.
    Bits tight_vertices(std::size_t k) const
    {
        Bits out(vertices.size());
        for (std::size_t v = 0; v < vertices.size(); ++v)
            out[v] = incidence[v][k];
        return out;
    }
};

namespace detail {

inline Integer dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += a[i] * b[i];
    return s;
}

/// s*x - t*y, made primitive.
inline IntVector combine(const Integer& s, const IntVector& x, const Integer& t, const IntVector& y)
{
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = s * x[i] - t * y[i];
    make_primitive(out);
    return out;
}

struct Ray {
    IntVector v;
    Bits zero; // processed rows on which the ray is tight
};

struct ConeDD {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

inline std::string fingerprint(const std::vector<IntVector>& rows, std::size_t n)
{
    std::ostringstream os;
    os << n << ':';
    for (const auto& r : rows) {
        for (const auto& z : r)
            os << z.get_str(16) << ',';
        os << ';';
    }
    return std::to_string(std::hash<std::string>{}(os.str()));
}

inline void write_checkpoint(const std::string& path, const std::string& fp, std::size_t next_row,
                             const std::vector<IntVector>& lineality, const std::vector<Ray>& rays)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << "clawpoly-dd-checkpoint 1\n" << fp << '\n' << next_row << '\n' << lineality.size() << '\n';
        for (const auto& l : lineality) {
            for (const auto& z : l)
                out << z.get_str() << ' ';
            out << '\n';
        }
        out << rays.size() << '\n';
        for (const auto& r : rays) {
            std::string bits;
            boost::to_string(r.zero, bits);
            out << bits << ' ';
            for (const auto& z : r.v)
                out << z.get_str() << ' ';
            out << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

inline bool read_checkpoint(const std::string& path, const std::string& fp, std::size_t n, std::size_t nrows,
                            std::size_t& next_row, std::vector<IntVector>& lineality, std::vector<Ray>& rays)
{
    std::ifstream in(path);
    if (!in)
        return false;
    std::string magic, version, stored_fp;
    in >> magic >> version >> stored_fp;
    if (magic != "clawpoly-dd-checkpoint" || version != "1" || stored_fp != fp)
        return false;
    std::size_t nl = 0, nr = 0;
    in >> next_row >> nl;
    lineality.assign(nl, IntVector(n));
    for (auto& l : lineality)
        for (auto& z : l) {
            std::string s;
            in >> s;
            z = Integer(s);
        }
    in >> nr;
    rays.assign(nr, Ray{IntVector(n), Bits(nrows)});
    for (auto& r : rays) {
        std::string bits;
        in >> bits;
        r.zero = Bits(bits);
        for (auto& z : r.v) {
            std::string s;
            in >> s;
            z = Integer(s);
        }
    }
    return static_cast<bool>(in);
}

/// Extreme rays and a lineality basis of {y in R^n : row . y >= 0 for all rows}.
/// Rows are inserted in the given order; adjacency of a (+,-) ray pair is
/// decided combinatorially (no third ray tight on all their common rows)
/// after a cardinality filter.
inline ConeDD double_description(const std::vector<IntVector>& rows, std::size_t n, const Limits& limits)
{
    const std::size_t nrows = rows.size();
    std::vector<IntVector> lineality;
    std::vector<Ray> rays;
    std::size_t start = 0;

    const std::string fp = limits.checkpoint_path.empty() ? std::string() : fingerprint(rows, n);
    if (limits.checkpoint_path.empty() ||
        !read_checkpoint(limits.checkpoint_path, fp, n, nrows, start, lineality, rays)) {
        start = 0;
        rays.clear();
        lineality.clear();
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n, Integer(0));
            e[i] = 1;
            lineality.push_back(std::move(e));
        }
    }

    for (std::size_t k = start; k < nrows; ++k) {
        const IntVector& a = rows[k];
        std::size_t hit = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (sgn(dot(a, lineality[i])) != 0) {
                hit = i;
                break;
            }

        if (hit < lineality.size()) {
            IntVector l0 = lineality[hit];
            Integer s0 = dot(a, l0);
            if (sgn(s0) < 0) {
                for (auto& z : l0)
                    z = -z;
                s0 = -s0;
            }
            lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(hit));
            for (auto& l : lineality) {
                const Integer t = dot(a, l);
                if (sgn(t) != 0)
                    l = combine(s0, l, t, l0);
            }
            for (auto& r : rays) {
                const Integer t = dot(a, r.v);
                if (sgn(t) != 0)
                    r.v = combine(s0, r.v, t, l0);
                r.zero.set(k);
            }
            Bits z(nrows);
            for (std::size_t i = 0; i < k; ++i)
                z.set(i);
            rays.push_back(Ray{std::move(l0), std::move(z)});
        } else {
            std::vector<Integer> val(rays.size());
            std::vector<std::size_t> pos, neg;
            for (std::size_t i = 0; i < rays.size(); ++i) {
                val[i] = dot(a, rays[i].v);
                const int s = sgn(val[i]);
                if (s > 0)
                    pos.push_back(i);
                else if (s < 0)
                    neg.push_back(i);
            }

            std::vector<Ray> next;
            next.reserve(rays.size());
            if (!neg.empty()) {
                const std::size_t pointed = n - lineality.size();
                const std::size_t need = pointed >= 2 ? pointed - 2 : 0;
                for (auto p : pos) {
                    for (auto q : neg) {
                        Bits common = rays[p].zero & rays[q].zero;
                        if (common.count() < need)
                            continue;
                        bool adjacent = true;
                        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                            if (r != p && r != q && common.is_subset_of(rays[r].zero))
                                adjacent = false;
                        if (!adjacent)
                            continue;
                        IntVector v = combine(val[p], rays[q].v, val[q], rays[p].v);
                        common.set(k);
                        next.push_back(Ray{std::move(v), std::move(common)});
                        if (next.size() + rays.size() > limits.max_rays)
                            throw Error(ErrorKind::ResourceCap, "double description exceeded " +
                                                                    std::to_string(limits.max_rays) +
                                                                    " intermediate generators");
                    }
                }
            }
            for (std::size_t i = 0; i < rays.size(); ++i) {
                const int s = sgn(val[i]);
                if (s < 0)
                    continue;
                if (s == 0)
                    rays[i].zero.set(k);
                next.push_back(std::move(rays[i]));
            }
            rays = std::move(next);
        }

        if (!limits.checkpoint_path.empty())
            write_checkpoint(limits.checkpoint_path, fp, k + 1, lineality, rays);
        if (limits.progress)
            limits.progress(Progress{k + 1, nrows, rays.size(), lineality.size()});
    }

    ConeDD out;
    out.lineality = std::move(lineality);
    for (auto& r : rays)
        out.rays.push_back(std::move(r.v));
    return out;
}

inline IntVector to_integer_row(const Rational& head, std::span<const Rational> tail)
{
    Point row;
    row.reserve(tail.size() + 1);
    row.push_back(head);
    row.insert(row.end(), tail.begin(), tail.end());
    return primitive_integer_vector(row);
}

inline void sort_points(std::vector<Point>& pts)
{
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return lex_less(a, b); });
}

inline void check_dimension_cap(std::size_t d, const Limits& limits)
{
    if (d > limits.max_dimension && !limits.allow_large)
        throw Error(ErrorKind::ResourceCap, "dimension " + std::to_string(d) + " exceeds the engine cap of " +
                                                std::to_string(limits.max_dimension) +
                                                " (raise CLAWPOLY_MAX_DIM or pass an override)");
}

inline std::vector<Bits> compute_incidence(const std::vector<Point>& vertices, const std::vector<Halfspace>& hs)
{
    std::vector<Bits> inc(vertices.size(), Bits(hs.size()));
    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (std::size_t k = 0; k < hs.size(); ++k)
            inc[v][k] = clawpoly::dot(hs[k].coeffs, vertices[v]) == hs[k].rhs;
    return inc;
}

} // namespace detail

/// Vertices of {x : a.x <= b} for a list of halfspaces, sorted
/// lexicographically. Throws Unbounded or Infeasible.
inline std::vector<Point> vertices_of(std::size_t d, const std::vector<Halfspace>& hs, const Limits& limits = {})
{
    detail::check_dimension_cap(d, limits);
    std::vector<IntVector> rows;
    rows.reserve(hs.size() * 2 + 1);
    {
        IntVector homog(d + 1, Integer(0));
        homog[0] = 1;
        rows.push_back(std::move(homog));
    }
    for (const auto& h : hs) {
        if (h.coeffs.size() != d)
            throw Error(ErrorKind::Dimension, "halfspace of dimension " + std::to_string(h.coeffs.size()) +
                                                  " in a system of dimension " + std::to_string(d));
        Point neg(d);
        for (std::size_t i = 0; i < d; ++i)
            neg[i] = -h.coeffs[i];
        rows.push_back(detail::to_integer_row(h.rhs, neg));
        if (h.equation) {
            IntVector flipped = rows.back();
            for (auto& z : flipped)
                z = -z;
            rows.push_back(std::move(flipped));
        }
    }

    const auto cone = detail::double_description(rows, d + 1, limits);
    std::vector<Point> verts;
    bool recession = !cone.lineality.empty();
    for (const auto& r : cone.rays) {
        if (sgn(r[0]) == 0) {
            recession = true;
            continue;
        }
        Point x(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = Rational(r[i + 1], r[0]);
            x[i].canonicalize();
        }
        verts.push_back(std::move(x));
    }
    if (verts.empty())
        throw Error(ErrorKind::Infeasible, "inequality system has no feasible point");
    if (recession)
        throw Error(ErrorKind::Unbounded, "inequality system is unbounded");
    detail::sort_points(verts);
    return verts;
}

inline std::vector<Halfspace> to_halfspaces(const InequalitySystem& sys)
{
    std::vector<Halfspace> hs;
    hs.reserve(sys.size());
    for (const auto& ineq : sys.inequalities)
        hs.push_back(Halfspace{ineq.coeffs, ineq.rhs, false});
    return hs;
}

inline VertexSet vertices_from_inequalities(const InequalitySystem& sys, const Limits& limits = {})
{
    return VertexSet{sys.rows, sys.leaves, vertices_of(sys.dimension(), to_halfspaces(sys), limits)};
}

/// Full double description of the polytope cut out by a system: its vertices,
/// the system's inequalities unchanged, and their incidences.
inline PolytopeDD polytope_from_inequalities(const InequalitySystem& sys, const Limits& limits = {})
{
    PolytopeDD p;
    p.dimension = sys.dimension();
    p.inequalities = to_halfspaces(sys);
    p.vertices = vertices_of(p.dimension, p.inequalities, limits);
    p.incidence = detail::compute_incidence(p.vertices, p.inequalities);
    return p;
}

/// Scales (coeffs, rhs) to coprime integers. Equations additionally get a
/// positive leading nonzero coefficient; inequalities keep their direction.
inline Halfspace normalized(const Halfspace& h)
{
    Point joined = h.coeffs;
    joined.push_back(h.rhs);
    auto ints = primitive_integer_vector(joined);
    if (h.equation) {
        auto lead = std::find_if(ints.begin(), ints.end(), [](const Integer& z) { return sgn(z) != 0; });
        if (lead != ints.end() && sgn(*lead) < 0)
            for (auto& z : ints)
                z = -z;
    }
    Halfspace out;
    out.equation = h.equation;
    out.coeffs.reserve(h.coeffs.size());
    for (std::size_t i = 0; i + 1 < ints.size(); ++i)
        out.coeffs.emplace_back(ints[i]);
    out.rhs = Rational(ints.back());
    return out;
}

inline bool halfspace_less(const Halfspace& a, const Halfspace& b)
{
    if (a.equation != b.equation)
        return a.equation;
    if (a.coeffs != b.coeffs)
        return lex_less(a.coeffs, b.coeffs);
    return a.rhs < b.rhs;
}

/// Convex hull of a finite point set: its facets (and affine-hull equations
/// when the set is not full-dimensional), normalized and sorted. Duplicate
/// points are merged.
inline PolytopeDD hull_from_vertices(std::vector<Point> points, const Limits& limits = {})
{
    if (points.empty())
        throw Error(ErrorKind::EmptyInput, "convex hull of an empty point set");
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d)
            throw Error(ErrorKind::Dimension, "hull input mixes dimensions " + std::to_string(d) + " and " +
                                                  std::to_string(p.size()));
    detail::check_dimension_cap(d, limits);
    detail::sort_points(points);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<IntVector> rows;
    rows.reserve(points.size());
    for (const auto& p : points)
        rows.push_back(detail::to_integer_row(Rational(1), p));
    const auto cone = detail::double_description(rows, d + 1, limits);

    // A ray c gives c0 + c'.x >= 0, i.e. -c'.x <= c0.
    auto as_halfspace = [&](const IntVector& c, bool equation) {
        Halfspace h;
        h.equation = equation;
        h.rhs = Rational(c[0]);
        h.coeffs.reserve(d);
        for (std::size_t i = 0; i < d; ++i)
            h.coeffs.emplace_back(-c[i + 1]);
        return normalized(h);
    };

    std::vector<Halfspace> hs;
    for (const auto& l : cone.lineality)
        hs.push_back(as_halfspace(l, true));
    for (const auto& r : cone.rays) {
        Halfspace h = as_halfspace(r, false);
        const bool touches = std::any_of(points.begin(), points.end(),
                                         [&](const Point& p) { return clawpoly::dot(h.coeffs, p) == h.rhs; });
        if (touches)
            hs.push_back(std::move(h));
    }
    std::sort(hs.begin(), hs.end(), halfspace_less);

    PolytopeDD out;
    out.dimension = d;
    out.vertices = std::move(points);
    out.inequalities = std::move(hs);
    out.incidence = detail::compute_incidence(out.vertices, out.inequalities);
    return out;
}

inline PolytopeDD hull_from_vertices(const VertexSet& vs, const Limits& limits = {})
{
    return hull_from_vertices(vs.points, limits);
}

/// Affine dimension of the polytope.
inline long polytope_dimension(const PolytopeDD& p)
{
    return linalg::affine_dimension(p.vertices);
}

/// Indices of facet-defining inequalities. Among inequalities defining the
/// same facet the lowest index is kept; inequalities tight on every vertex
/// (implicit equations) are not facets.
inline std::vector<std::size_t> facet_indices(const PolytopeDD& p)
{
    const long dim = polytope_dimension(p);
    std::vector<std::size_t> out;
    std::set<Bits> seen;
    for (std::size_t k = 0; k < p.inequalities.size(); ++k) {
        if (p.inequalities[k].equation)
            continue;
        Bits t = p.tight_vertices(k);
        if (t.none() || t.all() || seen.count(t))
            continue;
        std::vector<Point> face;
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (t[v])
                face.push_back(p.vertices[v]);
        if (linalg::affine_dimension(face) == dim - 1) {
            seen.insert(t);
            out.push_back(k);
        }
    }
    return out;
}

/// The same polytope described by its facets only (equations are kept).
inline PolytopeDD remove_redundant(const PolytopeDD& p)
{
    PolytopeDD out;
    out.dimension = p.dimension;
    out.vertices = p.vertices;
    for (const auto& h : p.inequalities)
        if (h.equation)
            out.inequalities.push_back(h);
    for (auto k : facet_indices(p))
        out.inequalities.push_back(p.inequalities[k]);
    out.incidence = detail::compute_incidence(out.vertices, out.inequalities);
    return out;
}

struct FVector {
    std::vector<std::size_t> counts; // f_0 .. f_{dim-1}
    bool partial = false;
};

/// Face counts by dimension from vertex-facet incidences: every proper face is
/// an intersection of facets, so the face lattice is the closure of the facet
/// vertex sets under intersection.
inline FVector f_vector(const PolytopeDD& p, std::size_t max_faces = 200'000)
{
    const long dim = polytope_dimension(p);
    FVector out;
    if (dim <= 0) {
        out.counts.clear();
        return out;
    }
    std::vector<Bits> facets;
    for (auto k : facet_indices(p))
        facets.push_back(p.tight_vertices(k));

    std::set<Bits> faces(facets.begin(), facets.end());
    std::vector<Bits> frontier(facets.begin(), facets.end());
    while (!frontier.empty() && !out.partial) {
        std::vector<Bits> next;
        for (const auto& f : frontier) {
            for (const auto& g : facets) {
                Bits h = f & g;
                if (h.none() || h == f)
                    continue;
                if (faces.insert(h).second) {
                    next.push_back(std::move(h));
                    if (faces.size() > max_faces) {
                        out.partial = true;
                        break;
                    }
                }
            }
            if (out.partial)
                break;
        }
        frontier = std::move(next);
    }

    out.counts.assign(static_cast<std::size_t>(dim), 0);
    for (const auto& f : faces) {
        std::vector<Point> pts;
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (f[v])
                pts.push_back(p.vertices[v]);
        const long fd = linalg::affine_dimension(pts);
        if (fd >= 0 && fd < dim)
            ++out.counts[static_cast<std::size_t>(fd)];
    }
    return out;
}

struct Comparison {
    bool equal = false;
    std::vector<Point> only_in_first;
    std::vector<Point> only_in_second;
};

inline Comparison compare_vertex_sets(std::vector<Point> a, std::vector<Point> b)
{
    detail::sort_points(a);
    detail::sort_points(b);
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    Comparison c;
    auto less = [](const Point& x, const Point& y) { return lex_less(x, y); };
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c.only_in_first), less);
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(c.only_in_second), less);
    c.equal = c.only_in_first.empty() && c.only_in_second.empty();
    return c;
}

/// Equal as point sets of vertices.
inline Comparison equal_polytopes(const PolytopeDD& a, const PolytopeDD& b)
{
    if (a.dimension != b.dimension)
        throw Error(ErrorKind::Dimension, "comparing polytopes of dimension " + std::to_string(a.dimension) + " and " +
                                              std::to_string(b.dimension));
    return compare_vertex_sets(a.vertices, b.vertices);
}

namespace detail {

struct IntRow {
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    std::int64_t rhs;
};

inline std::vector<IntRow> integer_rows(const InequalitySystem& sys)
{
    std::vector<IntRow> out;
    for (const auto& ineq : sys.inequalities) {
        Point joined = ineq.coeffs;
        joined.push_back(ineq.rhs);
        const auto ints = primitive_integer_vector(joined);
        IntRow row;
        for (std::size_t i = 0; i < ints.size(); ++i) {
            if (!ints[i].fits_slong_p())
                throw Error(ErrorKind::ResourceCap, "coefficient too large for the integral point scan");
            const std::int64_t z = ints[i].get_si();
            if (i + 1 == ints.size())
                row.rhs = z;
            else if (z != 0)
                row.terms.emplace_back(i, z);
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline Point bits_to_point(const std::vector<char>& x)
{
    Point p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        p[i] = x[i];
    return p;
}

} // namespace detail

/// Largest dimension scanned exhaustively; larger systems use a pruned
/// depth-first search.
inline constexpr std::size_t kExhaustiveScanDim = 21;

/// All 0/1 points satisfying the system, lexicographically sorted. Every
/// system built here confines coordinates to [0,1], so these are all the
/// integral points.
inline std::vector<Point> enumerate_integral_points(const InequalitySystem& sys, std::size_t max_dimension = 64)
{
    const std::size_t d = sys.dimension();
    if (d > max_dimension)
        throw Error(ErrorKind::ResourceCap, "integral point enumeration in dimension " + std::to_string(d) +
                                                " exceeds the cap of " + std::to_string(max_dimension));
    const auto rows = detail::integer_rows(sys);
    std::vector<Point> out;

    if (d <= kExhaustiveScanDim) {
        // Coordinate 0 is the most significant bit, so increasing masks are
        // lexicographically increasing points.
        std::vector<char> x(d);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
            for (std::size_t i = 0; i < d; ++i)
                x[i] = static_cast<char>(mask >> (d - 1 - i) & 1);
            bool ok = true;
            for (const auto& row : rows) {
                std::int64_t lhs = 0;
                for (const auto& [i, c] : row.terms)
                    if (x[i])
                        lhs += c;
                if (lhs > row.rhs) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                out.push_back(detail::bits_to_point(x));
        }
        return out;
    }

    // Pruned search: fix coordinates in order; a branch dies once some row's
    // fixed part plus the most negative completion already exceeds its rhs.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> by_coord(d);
    std::vector<std::int64_t> lhs(rows.size(), 0), rest_min(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [i, c] : rows[r].terms) {
            by_coord[i].emplace_back(r, c);
            if (c < 0)
                rest_min[r] += c;
        }
    std::vector<char> x(d, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
        if (i == d) {
            out.push_back(detail::bits_to_point(x));
            return;
        }
        for (char bit : {char(0), char(1)}) {
            x[i] = bit;
            bool ok = true;
            for (const auto& [r, c] : by_coord[i]) {
                if (c < 0)
                    rest_min[r] -= c;
                if (bit)
                    lhs[r] += c;
            }
            for (const auto& [r, c] : by_coord[i])
                if (lhs[r] + rest_min[r] > rows[r].rhs)
                    ok = false;
            if (ok)
                dfs(i + 1);
            for (const auto& [r, c] : by_coord[i]) {
                if (c < 0)
                    rest_min[r] += c;
                if (bit)
                    lhs[r] -= c;
            }
        }
        x[i] = 0;
    };
    // Rows without any variable still need checking once.
    for (const auto& row : rows)
        if (row.terms.empty() && row.rhs < 0)
            return out;
    dfs(0);
    return out;
}

} // namespace clawpoly::engine
