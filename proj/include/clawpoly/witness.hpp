#pragma once

// Constructive checks mirroring the integrality argument for the Kimura-3
// claw-tree polytope: containment of the vertex set, violated A-inequalities
// for non-identity labelings, pseudo-facet incidence accounting on rows and
// columns of Delta'(m), S/O facet classification, and explicit segment
// directions through non-integral points.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "clawpoly/hrep.hpp"
#include "clawpoly/linalg.hpp"
#include "clawpoly/transform.hpp"
#include "clawpoly/vrep.hpp"

namespace clawpoly::witness {

// ---------------------------------------------------------------------------
// Containment and violation witnesses (Delta coordinates)

struct ContainmentReport {
    std::size_t leaves = 0;
    std::size_t checked = 0;
    std::optional<std::size_t> first_violation; // index into the vertex list
    std::vector<std::size_t> violated_ids;      // of the first violating vertex
    bool pass() const { return !first_violation.has_value(); }
};

/// Checks every generated Kimura-3 vertex against Delta(m).
inline ContainmentReport check_containment(std::size_t m, const GenerationLimits& limits = {})
{
    const auto sys = build_delta(m);
    const auto verts = generate_vertices(GroupSpec::z2z2(), m, limits);
    ContainmentReport r;
    r.leaves = m;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        ++r.checked;
        auto mem = membership(sys, verts.points[i]);
        if (mem.status == Status::Outside) {
            r.first_violation = i;
            r.violated_ids = std::move(mem.violated);
            break;
        }
    }
    return r;
}

struct ViolationWitness {
    OddSubset subset;
    std::array<std::size_t, 2> pair{};
    std::size_t inequality_id = 0;
    Rational lhs; // sum over A of x_p + x_q
    Rational rhs; // |A| - 1 + sum over the complement
};

/// For a Z2 x Z2 labeling whose sum is not the identity, the A-inequality of
/// Delta(m) that its matrix violates; nullopt when the sum is the identity.
/// A collects the leaves whose element has a 1 in the residue coordinate
/// where the leftover sum is nonzero, paired with the rows counting exactly
/// those elements.
inline std::optional<ViolationWitness> violation_witness(const Labeling& l)
{
    if (!l.spec.is_z2z2())
        throw Error(ErrorKind::UnsupportedGroup, "violation witnesses are defined for z2z2 labelings");
    const GroupElement s = l.sum();
    if (is_identity(s))
        return std::nullopt;

    // residue (1,*) -> rows {1,3} count first coordinate; (0,1) -> rows {2,3}.
    const std::size_t coord = s[0] == 1 ? 0 : 1;
    ViolationWitness w;
    w.pair = coord == 0 ? std::array<std::size_t, 2>{1, 3} : std::array<std::size_t, 2>{2, 3};
    std::vector<std::size_t> a;
    for (std::size_t j = 0; j < l.leaves(); ++j)
        if (l.elements[j][coord] == 1)
            a.push_back(j + 1);
    w.subset = OddSubset(a, l.leaves());

    const auto sys = build_delta(l.leaves());
    const family::ARow target{{w.pair[0], w.pair[1]}, w.subset};
    for (const auto& ineq : sys.inequalities) {
        if (const auto* f = std::get_if<family::ARow>(&ineq.family); f && *f == target) {
            w.inequality_id = ineq.id;
            break;
        }
    }
    const LeafMatrix x = labeling_to_matrix(l);
    w.lhs = 0;
    w.rhs = static_cast<long>(w.subset.size()) - 1;
    for (std::size_t j = 1; j <= l.leaves(); ++j) {
        const Rational v = x(w.pair[0] - 1, j - 1) + x(w.pair[1] - 1, j - 1);
        (w.subset.contains(j) ? w.lhs : w.rhs) += v;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Pseudo-facets of a single line (a row of Delta'(m) or one of its columns)

/// Odd subsets A with sum_{A} p - sum_{not A} p == |A| - 1.
inline std::vector<OddSubset> tight_odd_subsets(std::span<const Rational> line)
{
    std::vector<OddSubset> out;
    for (auto& a : odd_subsets(line.size())) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < line.size(); ++i)
            lhs += a.contains(i + 1) ? line[i] : -line[i];
        if (lhs == static_cast<long>(a.size()) - 1)
            out.push_back(std::move(a));
    }
    return out;
}

inline std::vector<std::size_t> nonintegral_indices(std::span<const Rational> line)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < line.size(); ++i)
        if (!is_integral(line[i]))
            out.push_back(i + 1);
    return out;
}

enum class FacetClass { S, O };

inline std::string to_string(FacetClass c)
{
    return c == FacetClass::S ? "S" : "O";
}

/// S when both non-integral indices of the line fall on the same side of A,
/// O otherwise. The line must have exactly two non-integral coordinates and
/// lie on the pseudo-facet of A.
inline FacetClass classify_facet(std::span<const Rational> line, const OddSubset& a)
{
    if (!a.indices().empty() && a.indices().back() > line.size())
        throw Error(ErrorKind::Dimension, "subset " + a.to_string() + " exceeds line length " +
                                              std::to_string(line.size()));
    const auto ni = nonintegral_indices(line);
    if (ni.size() != 2)
        throw Error(ErrorKind::ClassificationUndefined, "S/O classification needs exactly two non-integral "
                                                        "coordinates, found " +
                                                            std::to_string(ni.size()));
    Rational lhs = 0;
    for (std::size_t i = 0; i < line.size(); ++i)
        lhs += a.contains(i + 1) ? line[i] : -line[i];
    if (lhs != static_cast<long>(a.size()) - 1)
        throw Error(ErrorKind::NotTight, "line does not lie on the pseudo-facet of " + a.to_string());
    return a.contains(ni[0]) == a.contains(ni[1]) ? FacetClass::S : FacetClass::O;
}

/// Number of coordinates equal to one has the parity forced by the facet
/// class: odd on S-facets, even on O-facets.
inline bool parity_check(std::span<const Rational> line, const OddSubset& a)
{
    const FacetClass c = classify_facet(line, a);
    const auto ones = std::count_if(line.begin(), line.end(), [](const Rational& q) { return q == 1; });
    return (c == FacetClass::S) == (ones % 2 == 1);
}

// ---------------------------------------------------------------------------
// Incidence accounting on Delta'(m)

enum class Configuration { None, P1, P2, Other };

inline std::string to_string(Configuration c)
{
    switch (c) {
    case Configuration::None: return "None";
    case Configuration::P1: return "P1";
    case Configuration::P2: return "P2";
    case Configuration::Other: return "Other";
    }
    return "?";
}

struct IncidenceReport {
    std::size_t k = 0;     // non-integral coordinates
    std::size_t omega = 0; // rows plus columns containing one
    std::vector<std::size_t> row_nonintegral, col_nonintegral;
    std::vector<std::size_t> row_tight, col_tight; // tight row / column facets per line
    Configuration configuration = Configuration::None;
};

namespace detail {

inline void require_member(const LeafMatrix& p, const InequalitySystem& sys)
{
    if (p.rows() != 3 || p.cols() != sys.leaves)
        throw Error(ErrorKind::Dimension, "expected a 3x" + std::to_string(sys.leaves) + " matrix");
    if (!satisfies(sys, p.flat()))
        throw Error(ErrorKind::NotAMember, "point is not in Delta'(" + std::to_string(sys.leaves) + ")");
}

/// Support pattern as a set of (row, col) cells, 0-based.
using Support = std::vector<std::pair<std::size_t, std::size_t>>;

inline Support nonintegral_support(const LeafMatrix& p)
{
    Support s;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (!is_integral(p(i, j)))
                s.emplace_back(i, j);
    return s;
}

/// True if `support` equals `pattern` (cells on a rows x cols grid) after
/// some bijection of its rows onto the pattern's rows and of its columns
/// onto the pattern's columns; all bijections are tried.
inline bool matches_up_to_permutation(const Support& support, const Support& pattern, std::size_t rows,
                                      std::size_t cols)
{
    std::vector<std::size_t> srows, scols;
    for (auto [i, j] : support) {
        srows.push_back(i);
        scols.push_back(j);
    }
    std::sort(srows.begin(), srows.end());
    srows.erase(std::unique(srows.begin(), srows.end()), srows.end());
    std::sort(scols.begin(), scols.end());
    scols.erase(std::unique(scols.begin(), scols.end()), scols.end());
    if (srows.size() != rows || scols.size() != cols || support.size() != pattern.size())
        return false;

    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    do {
        std::iota(cp.begin(), cp.end(), 0);
        do {
            bool all = true;
            for (auto [i, j] : support) {
                const auto ri = static_cast<std::size_t>(std::find(srows.begin(), srows.end(), i) - srows.begin());
                const auto cj = static_cast<std::size_t>(std::find(scols.begin(), scols.end(), j) - scols.begin());
                if (std::find(pattern.begin(), pattern.end(), std::make_pair(rp[ri], cp[cj])) == pattern.end()) {
                    all = false;
                    break;
                }
            }
            if (all)
                return true;
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return false;
}

inline Configuration classify_configuration(const Support& s)
{
    if (s.empty())
        return Configuration::None;
    static const Support p1 = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    static const Support p2 = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}};
    if (matches_up_to_permutation(s, p1, 2, 2))
        return Configuration::P1;
    if (matches_up_to_permutation(s, p2, 3, 3))
        return Configuration::P2;
    return Configuration::Other;
}

} // namespace detail

/// k, omega, per-line tight counts and the P1/P2 configuration tag of
/// a point of Delta'(m).
inline IncidenceReport incidence_report(const LeafMatrix& p)
{
    const auto sys = build_delta_prime(p.cols());
    detail::require_member(p, sys);
    IncidenceReport r;
    for (std::size_t i = 0; i < 3; ++i) {
        const Point row = p.row(i);
        r.row_nonintegral.push_back(nonintegral_indices(row).size());
        r.row_tight.push_back(tight_odd_subsets(row).size());
    }
    for (std::size_t j = 0; j < p.cols(); ++j) {
        const Point col = p.column(j);
        r.col_nonintegral.push_back(nonintegral_indices(col).size());
        r.col_tight.push_back(tight_odd_subsets(col).size());
    }
    for (auto n : r.row_nonintegral) {
        r.k += n;
        r.omega += n > 0;
    }
    for (auto n : r.col_nonintegral)
        r.omega += n > 0;
    r.configuration = detail::classify_configuration(detail::nonintegral_support(p));
    return r;
}

struct LineCheck {
    std::size_t index = 0; // 1-based row (or column) number
    std::size_t nonintegral = 0;
    std::size_t tight = 0;
    bool no_single_nonintegral = true;  // never exactly one non-integral coordinate
    bool two_facets_bound = true;       // >= 2 tight facets => <= 2 non-integral
    bool three_facets_integral = true;  // >= 3 tight facets => integral and on exactly `length` facets
    bool pass() const { return no_single_nonintegral && two_facets_bound && three_facets_integral; }
};

struct TheoremsReport {
    bool member = false;
    std::vector<LineCheck> rows;
    std::vector<LineCheck> columns;
    bool pass() const
    {
        auto ok = [](const LineCheck& c) { return c.pass(); };
        return member && std::all_of(rows.begin(), rows.end(), ok) && std::all_of(columns.begin(), columns.end(), ok);
    }
};

inline LineCheck check_line(std::span<const Rational> line, std::size_t index)
{
    LineCheck c;
    c.index = index;
    c.nonintegral = nonintegral_indices(line).size();
    c.tight = tight_odd_subsets(line).size();
    c.no_single_nonintegral = c.nonintegral != 1;
    c.two_facets_bound = c.tight < 2 || c.nonintegral <= 2;
    c.three_facets_integral = c.tight < 3 || (c.nonintegral == 0 && c.tight == line.size());
    return c;
}

/// Pseudo-facet incidence statements on every row (the pseudo-demihypercube
/// projections) and, by the same argument, every column of a point of
/// Delta'(m). Never throws on a non-member; `member` records it.
inline TheoremsReport pseudo_facet_theorems_check(const LeafMatrix& p)
{
    TheoremsReport r;
    if (p.rows() != 3)
        throw Error(ErrorKind::Dimension, "expected a 3-row matrix");
    r.member = satisfies(build_delta_prime(p.cols()), p.flat());
    for (std::size_t i = 0; i < 3; ++i)
        r.rows.push_back(check_line(p.row(i), i + 1));
    for (std::size_t j = 0; j < p.cols(); ++j)
        r.columns.push_back(check_line(p.column(j), j + 1));
    return r;
}

/// Result of classifying every tight facet on a line with two non-integral
/// coordinates.
struct LineClass {
    std::size_t s_facets = 0;
    std::size_t o_facets = 0;
    bool mixed() const { return s_facets > 0 && o_facets > 0; }
};

inline LineClass classify_line(std::span<const Rational> line)
{
    LineClass c;
    for (const auto& a : tight_odd_subsets(line))
        (classify_facet(line, a) == FacetClass::S ? c.s_facets : c.o_facets)++;
    return c;
}

// ---------------------------------------------------------------------------
// Segment-interior witnesses

/// p + t v stays in Delta'(m) for |t| <= epsilon. "Interior" here means
/// segment-interior: p is not an extreme point.
struct InteriorWitness {
    Point direction;
    Rational epsilon;
    enum class Method { Kernel, Cycle } method = Method::Kernel;
};

struct InteriorOutcome {
    std::optional<InteriorWitness> witness;
    std::string diagnostic; // set when no witness was produced
    bool interior() const { return witness.has_value(); }
};

namespace detail {

/// Cells of a P1/P2 support in cycle order, alternating row and column
/// steps, starting from the smallest cell. Each entry also names the line
/// (true = row) joining it to the next cell.
struct CycleStep {
    std::pair<std::size_t, std::size_t> cell;
    bool via_row = true;
};

inline std::vector<CycleStep> hamiltonian_cycle(Support s)
{
    std::sort(s.begin(), s.end());
    std::vector<CycleStep> out;
    auto cur = s.front();
    bool via_row = true;
    for (std::size_t step = 0; step < s.size(); ++step) {
        out.push_back({cur, via_row});
        auto next = std::find_if(s.begin(), s.end(), [&](const auto& c) {
            return c != cur && (via_row ? c.first == cur.first : c.second == cur.second);
        });
        cur = *next;
        via_row = !via_row;
    }
    return out;
}

/// Largest symmetric step along v, halved; nullopt when a tight inequality
/// has a nonzero rate or the step would leave the polytope.
inline std::optional<Rational> symmetric_step(const InequalitySystem& sys, const Point& p, const Point& v,
                                              std::string& why)
{
    std::optional<Rational> up, down;
    for (const auto& ineq : sys.inequalities) {
        const Rational rate = dot(ineq.coeffs, v);
        const int rs = sgn(rate);
        if (rs == 0)
            continue;
        const Rational s = slack(ineq, p);
        if (sgn(s) == 0) {
            why = "tight inequality " + std::to_string(ineq.id) + " has nonzero rate along the direction";
            return std::nullopt;
        }
        if (rs > 0) {
            const Rational t = s / rate;
            if (!up || t < *up)
                up = t;
        } else {
            const Rational t = s / -rate;
            if (!down || t < *down)
                down = t;
        }
    }
    if (!up && !down)
        return Rational(1);
    Rational eps = up && down ? std::min(*up, *down) : up ? *up : *down;
    return eps / 2;
}

inline bool endpoints_ok(const InequalitySystem& sys, const Point& p, const Point& v, const Rational& eps)
{
    Point plus(p.size()), minus(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        plus[i] = p[i] + eps * v[i];
        minus[i] = p[i] - eps * v[i];
    }
    return satisfies(sys, plus) && satisfies(sys, minus);
}

inline Point line_values(const LeafMatrix& p, bool row, std::size_t index)
{
    return row ? p.row(index) : p.column(index);
}

} // namespace detail

/// Builds a direction v (zero on integral coordinates) and epsilon > 0 with
/// p +- epsilon v in Delta'(m).
///
/// When k > omega the direction is a kernel vector of the homogeneous system
/// "every tight row/column facet stays tight", restricted to the non-integral
/// coordinates. When k == omega the support is a P1 or P2 pattern; v walks
/// its Hamiltonian cycle with v_next = v across O-facets and -v across
/// S-facets. Epsilon is half the largest feasible symmetric step.
inline InteriorOutcome interior_witness(const LeafMatrix& p)
{
    const auto sys = build_delta_prime(p.cols());
    detail::require_member(p, sys);
    if (is_integral(p.flat()))
        throw Error(ErrorKind::IntegralPoint, "point is integral; it has no segment-interior witness");

    const Point& x = p.flat();
    const std::size_t m = p.cols();
    const auto report = incidence_report(p);
    InteriorOutcome out;

    std::vector<std::size_t> free_coords;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_integral(x[i]))
            free_coords.push_back(i);

    if (report.k > report.omega) {
        linalg::Matrix a;
        for (auto id : tight_set(sys, x)) {
            Point row(free_coords.size());
            bool nonzero = false;
            for (std::size_t c = 0; c < free_coords.size(); ++c) {
                row[c] = sys[id].coeffs[free_coords[c]];
                nonzero = nonzero || sgn(row[c]) != 0;
            }
            if (nonzero)
                a.append_row(row);
        }
        std::vector<Point> basis;
        if (a.rows() == 0) {
            Point e(free_coords.size(), Rational(0));
            e[0] = 1;
            basis.push_back(std::move(e));
        } else {
            basis = linalg::kernel(a);
        }
        for (const auto& kv : basis) {
            Point v(x.size(), Rational(0));
            for (std::size_t c = 0; c < free_coords.size(); ++c)
                v[free_coords[c]] = kv[c];
            std::string why;
            auto eps = detail::symmetric_step(sys, x, v, why);
            if (eps && detail::endpoints_ok(sys, x, v, *eps)) {
                out.witness = InteriorWitness{std::move(v), *eps, InteriorWitness::Method::Kernel};
                return out;
            }
        }
        out.diagnostic = "kernel of the tight-facet system yields no feasible direction (k=" + std::to_string(report.k) +
                         ", omega=" + std::to_string(report.omega) + ")";
        return out;
    }

    if (report.configuration != Configuration::P1 && report.configuration != Configuration::P2) {
        out.diagnostic = "k == omega but the non-integral support is not a P1/P2 configuration; counterexample "
                         "candidate";
        return out;
    }

    auto cycle = detail::hamiltonian_cycle(detail::nonintegral_support(p));
    // Sign rule of each cycle edge: +1 (O-facets), -1 (S-facets), 0 (no tight facet).
    std::vector<int> rule(cycle.size());
    for (std::size_t e = 0; e < cycle.size(); ++e) {
        const auto [r, c] = cycle[e].cell;
        const Point line = detail::line_values(p, cycle[e].via_row, cycle[e].via_row ? r : c);
        const LineClass lc = classify_line(line);
        if (lc.mixed()) {
            out.diagnostic = std::string(cycle[e].via_row ? "row " : "column ") +
                             std::to_string((cycle[e].via_row ? r : c) + 1) + " lies on both S- and O-facets";
            return out;
        }
        rule[e] = lc.s_facets > 0 ? -1 : lc.o_facets > 0 ? 1 : 0;
    }
    // Close the cycle on an unconstrained edge when there is one.
    std::size_t shift = 0;
    for (std::size_t e = 0; e < rule.size(); ++e)
        if (rule[e] == 0)
            shift = e + 1;
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(shift % cycle.size()), cycle.end());
    std::rotate(rule.begin(), rule.begin() + static_cast<std::ptrdiff_t>(shift % rule.size()), rule.end());

    Point v(x.size(), Rational(0));
    int sign = 1;
    for (std::size_t e = 0; e < cycle.size(); ++e) {
        const auto [r, c] = cycle[e].cell;
        v[r * m + c] = sign;
        sign *= rule[e] == 0 ? 1 : rule[e];
    }
    if (rule.back() != 0 && sign != 1) {
        out.diagnostic = "odd number of S-facet edges along the cycle";
        return out;
    }
    std::string why;
    auto eps = detail::symmetric_step(sys, x, v, why);
    if (!eps || !detail::endpoints_ok(sys, x, v, *eps)) {
        out.diagnostic = "cycle direction infeasible: " + why;
        return out;
    }
    out.witness = InteriorWitness{std::move(v), *eps, InteriorWitness::Method::Cycle};
    return out;
}

struct SFacetCount {
    std::size_t s_lines = 0;  // cycle edges whose line carries S-facets
    std::size_t s_facets = 0; // tight S-facets summed over those lines
    bool even() const { return s_lines % 2 == 0; }
};

inline SFacetCount s_facet_count(const LeafMatrix& p)
{
    const auto report = incidence_report(p);
    if (report.configuration != Configuration::P1 && report.configuration != Configuration::P2)
        throw Error(ErrorKind::Configuration, "S-facet parity needs a P1/P2 configuration, got " +
                                                  to_string(report.configuration));
    SFacetCount out;
    for (const auto& step : detail::hamiltonian_cycle(detail::nonintegral_support(p))) {
        const auto [r, c] = step.cell;
        const LineClass lc = classify_line(detail::line_values(p, step.via_row, step.via_row ? r : c));
        if (lc.s_facets > 0) {
            ++out.s_lines;
            out.s_facets += lc.s_facets;
        }
    }
    return out;
}

/// Along the Hamiltonian cycle of a P1/P2 point, the S-type edges come in an
/// even number, which is what makes the cycle sign assignment consistent.
inline bool s_facet_count_even_check(const LeafMatrix& p)
{
    return s_facet_count(p).even();
}

} // namespace clawpoly::witness
