#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "clawpoly/rational.hpp"
#include "clawpoly/vrep.hpp"

namespace clawpoly {

/// Sorted 1-based indices of odd cardinality.
class OddSubset {
public:
    OddSubset() = default;

    /// Throws unless `indices` is a nonempty odd-size set within {1..n}.
    OddSubset(std::vector<std::size_t> indices, std::size_t n) : indices_(std::move(indices))
    {
        std::sort(indices_.begin(), indices_.end());
        if (indices_.size() % 2 == 0)
            throw Error(ErrorKind::Dimension, "odd subset has even cardinality " + std::to_string(indices_.size()));
        if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
            throw Error(ErrorKind::Dimension, "odd subset has repeated indices");
        if (indices_.front() < 1 || indices_.back() > n)
            throw Error(ErrorKind::Dimension, "odd subset index out of range 1.." + std::to_string(n));
    }

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

    friend bool operator==(const OddSubset&, const OddSubset&) = default;
    friend bool operator<(const OddSubset& a, const OddSubset& b) { return a.indices_ < b.indices_; }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t k = 0; k < indices_.size(); ++k)
            s += (k ? "," : "") + std::to_string(indices_[k]);
        return s + "}";
    }

private:
    std::vector<std::size_t> indices_;
};

/// All odd subsets of {1..n}, in lexicographic order of their sorted index lists.
inline std::vector<OddSubset> odd_subsets(std::size_t n)
{
    if (n > 24)
        throw Error(ErrorKind::ResourceCap, "odd subsets of a set with more than 24 elements");
    std::vector<OddSubset> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) % 2 == 0)
            continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                idx.push_back(i + 1);
        out.emplace_back(std::move(idx), n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace family {

/// x_{row,col} >= 0
struct NonNeg {
    std::size_t row, col;
    friend bool operator==(const NonNeg&, const NonNeg&) = default;
};
/// sum_i x_{i,col} <= 1
struct ColumnSimplex {
    std::size_t col;
    friend bool operator==(const ColumnSimplex&, const ColumnSimplex&) = default;
};
/// x_{row,col} <= 1
struct Box {
    std::size_t row, col;
    friend bool operator==(const Box&, const Box&) = default;
};
/// Odd-subset inequality over the sum of the listed rows (one row for the
/// demihypercube and row facets, a row pair for the A-inequalities).
struct ARow {
    std::vector<std::size_t> rows;
    OddSubset subset;
    friend bool operator==(const ARow&, const ARow&) = default;
};
/// Odd-subset inequality down one column.
struct BColumn {
    OddSubset subset;
    std::size_t col;
    friend bool operator==(const BColumn&, const BColumn&) = default;
};

} // namespace family

using Family = std::variant<family::NonNeg, family::ColumnSimplex, family::Box, family::ARow, family::BColumn>;

inline std::string to_string(const Family& f)
{
    struct Visitor {
        std::string operator()(const family::NonNeg& x) const
        {
            return "NonNeg(" + std::to_string(x.row) + "," + std::to_string(x.col) + ")";
        }
        std::string operator()(const family::ColumnSimplex& x) const
        {
            return "ColumnSimplex(" + std::to_string(x.col) + ")";
        }
        std::string operator()(const family::Box& x) const
        {
            return "Box(" + std::to_string(x.row) + "," + std::to_string(x.col) + ")";
        }
        std::string operator()(const family::ARow& x) const
        {
            std::string rows = "{";
            for (std::size_t k = 0; k < x.rows.size(); ++k)
                rows += (k ? "," : "") + std::to_string(x.rows[k]);
            return "ARow(" + rows + "}," + x.subset.to_string() + ")";
        }
        std::string operator()(const family::BColumn& x) const
        {
            return "BColumn(" + x.subset.to_string() + "," + std::to_string(x.col) + ")";
        }
    };
    return std::visit(Visitor{}, f);
}

/// coeffs . x <= rhs
struct LinearInequality {
    std::size_t id = 0;
    Point coeffs;
    Rational rhs;
    Family family;
};

enum class Model { DH, Delta, DeltaPrime };

inline std::string to_string(Model m)
{
    switch (m) {
    case Model::DH: return "DH";
    case Model::Delta: return "Delta";
    case Model::DeltaPrime: return "DeltaPrime";
    }
    return "?";
}

struct InequalitySystem {
    Model model = Model::Delta;
    std::size_t rows = 3;   // matrix rows of a point
    std::size_t leaves = 0; // matrix columns of a point
    std::vector<LinearInequality> inequalities;

    std::size_t dimension() const { return rows * leaves; }
    std::size_t size() const { return inequalities.size(); }
    const LinearInequality& operator[](std::size_t id) const { return inequalities.at(id); }
};

/// Coefficients and right-hand side of a family member on a rows x cols grid.
/// Coordinates are flattened row-major with 1-based (row, col) labels.
inline LinearInequality make_inequality(const Family& f, std::size_t rows, std::size_t cols)
{
    LinearInequality out;
    out.family = f;
    out.coeffs.assign(rows * cols, Rational(0));
    auto at = [&](std::size_t r, std::size_t c) -> Rational& {
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw Error(ErrorKind::Dimension, "family " + to_string(f) + " does not fit a " + std::to_string(rows) +
                                                  "x" + std::to_string(cols) + " grid");
        return out.coeffs[(r - 1) * cols + (c - 1)];
    };
    if (auto* x = std::get_if<family::NonNeg>(&f)) {
        at(x->row, x->col) = -1;
        out.rhs = 0;
    } else if (auto* x = std::get_if<family::ColumnSimplex>(&f)) {
        for (std::size_t r = 1; r <= rows; ++r)
            at(r, x->col) = 1;
        out.rhs = 1;
    } else if (auto* x = std::get_if<family::Box>(&f)) {
        at(x->row, x->col) = 1;
        out.rhs = 1;
    } else if (auto* x = std::get_if<family::ARow>(&f)) {
        for (std::size_t c = 1; c <= cols; ++c) {
            const int sign = x->subset.contains(c) ? 1 : -1;
            for (auto r : x->rows)
                at(r, c) = sign;
        }
        out.rhs = static_cast<long>(x->subset.size()) - 1;
    } else if (auto* x = std::get_if<family::BColumn>(&f)) {
        for (std::size_t r = 1; r <= rows; ++r)
            at(r, x->col) = x->subset.contains(r) ? 1 : -1;
        out.rhs = static_cast<long>(x->subset.size()) - 1;
    }
    return out;
}

namespace detail {

inline void push(InequalitySystem& sys, const Family& f)
{
    auto ineq = make_inequality(f, sys.rows, sys.leaves);
    ineq.id = sys.inequalities.size();
    sys.inequalities.push_back(std::move(ineq));
}

} // namespace detail

/// Demihypercube: 0 <= d_i <= 1 and one inequality per odd subset of {1..m}.
inline InequalitySystem build_dh(std::size_t m)
{
    if (m < 1)
        throw Error(ErrorKind::LeafCount, "DH(m) needs m >= 1");
    InequalitySystem sys{Model::DH, 1, m, {}};
    for (std::size_t j = 1; j <= m; ++j)
        detail::push(sys, family::NonNeg{1, j});
    for (std::size_t j = 1; j <= m; ++j)
        detail::push(sys, family::Box{1, j});
    for (const auto& a : odd_subsets(m))
        detail::push(sys, family::ARow{{1}, a});
    return sys;
}

/// Nonnegativity, column simplex, and A-inequalities for the row pairs
/// {1,2}, {1,3}, {2,3}.
inline InequalitySystem build_delta(std::size_t m)
{
    require_leaves(m);
    InequalitySystem sys{Model::Delta, 3, m, {}};
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            detail::push(sys, family::NonNeg{i, j});
    for (std::size_t j = 1; j <= m; ++j)
        detail::push(sys, family::ColumnSimplex{j});
    const auto subsets = odd_subsets(m);
    for (const auto& pair : {std::vector<std::size_t>{1, 2}, {1, 3}, {2, 3}})
        for (const auto& a : subsets)
            detail::push(sys, family::ARow{pair, a});
    return sys;
}

/// Row facets (one per row and odd subset of columns) followed by column
/// facets (per column, one per odd subset of {1,2,3}).
inline InequalitySystem build_delta_prime(std::size_t m)
{
    require_leaves(m);
    InequalitySystem sys{Model::DeltaPrime, 3, m, {}};
    const auto subsets = odd_subsets(m);
    for (std::size_t i = 1; i <= 3; ++i)
        for (const auto& a : subsets)
            detail::push(sys, family::ARow{{i}, a});
    const auto column_subsets = odd_subsets(3);
    for (std::size_t j = 1; j <= m; ++j)
        for (const auto& b : column_subsets)
            detail::push(sys, family::BColumn{b, j});
    return sys;
}

inline Rational slack(const LinearInequality& ineq, std::span<const Rational> p)
{
    return ineq.rhs - dot(ineq.coeffs, p);
}

enum class Status { Inside, Boundary, Outside };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::Inside: return "inside";
    case Status::Boundary: return "boundary";
    case Status::Outside: return "outside";
    }
    return "?";
}

struct Membership {
    Status status = Status::Inside;
    std::vector<std::size_t> violated;
    std::vector<std::size_t> tight;
};

inline void require_dimension(const InequalitySystem& sys, std::span<const Rational> p)
{
    if (p.size() != sys.dimension())
        throw Error(ErrorKind::Dimension, "point of dimension " + std::to_string(p.size()) + " vs system of dimension " +
                                              std::to_string(sys.dimension()));
}

/// Exact classification; boundary means feasible with at least one tight row.
inline Membership membership(const InequalitySystem& sys, std::span<const Rational> p)
{
    require_dimension(sys, p);
    Membership out;
    for (const auto& ineq : sys.inequalities) {
        const int s = sgn(slack(ineq, p));
        if (s < 0)
            out.violated.push_back(ineq.id);
        else if (s == 0)
            out.tight.push_back(ineq.id);
    }
    out.status = !out.violated.empty() ? Status::Outside : !out.tight.empty() ? Status::Boundary : Status::Inside;
    return out;
}

inline bool satisfies(const InequalitySystem& sys, std::span<const Rational> p)
{
    require_dimension(sys, p);
    for (const auto& ineq : sys.inequalities)
        if (sgn(slack(ineq, p)) < 0)
            return false;
    return true;
}

/// Ids of inequalities tight at a feasible p, in id (hence family) order.
inline std::vector<std::size_t> tight_set(const InequalitySystem& sys, std::span<const Rational> p)
{
    auto m = membership(sys, p);
    if (m.status == Status::Outside)
        throw Error(ErrorKind::NotAMember, "point violates " + std::to_string(m.violated.size()) +
                                               " inequalities (first id " + std::to_string(m.violated.front()) + ")");
    return m.tight;
}

/// Row r (1-based) of p.
inline Point row_projection(const LeafMatrix& p, std::size_t r)
{
    if (r < 1 || r > p.rows())
        throw Error(ErrorKind::Dimension, "row index " + std::to_string(r) + " outside 1.." + std::to_string(p.rows()));
    return p.row(r - 1);
}

} // namespace clawpoly
