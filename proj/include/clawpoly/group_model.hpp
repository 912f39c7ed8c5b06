#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "clawpoly/error.hpp"
#include "clawpoly/rational.hpp"

namespace clawpoly {

class GroupSpec;

/// Element of a product of cyclic groups, stored as reduced residues.
class GroupElement {
public:
    GroupElement() = default;

    const std::vector<int>& residues() const { return residues_; }
    std::size_t size() const { return residues_.size(); }
    int operator[](std::size_t i) const { return residues_[i]; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    std::string to_string() const
    {
        std::string s;
        for (int r : residues_)
            s += std::to_string(r);
        return s;
    }

private:
    friend class GroupSpec;
    explicit GroupElement(std::vector<int> residues) : residues_(std::move(residues)) {}
    std::vector<int> residues_;
};

/// Finite abelian group Z_{n1} x ... x Z_{nk}.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<int> orders) : orders_(std::move(orders))
    {
        if (orders_.empty())
            throw Error(ErrorKind::UnsupportedGroup, "group needs at least one cyclic factor");
        for (int n : orders_)
            if (n < 2)
                throw Error(ErrorKind::UnsupportedGroup, "cyclic factor order " + std::to_string(n) + " < 2");
        std::size_t size = 1;
        for (int n : orders_) {
            size *= static_cast<std::size_t>(n);
            if (size > (1u << 20))
                throw Error(ErrorKind::ResourceCap, "group order exceeds 2^20");
        }
        size_ = size;
    }

    static GroupSpec z2() { return GroupSpec({2}); }
    static GroupSpec z2z2() { return GroupSpec({2, 2}); }

    const std::vector<int>& orders() const { return orders_; }
    std::size_t size() const { return size_; }
    bool is_z2() const { return orders_ == std::vector<int>{2}; }
    bool is_z2z2() const { return orders_ == std::vector<int>{2, 2}; }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

    /// Builds an element, reducing each residue into [0, n_i).
    GroupElement element(std::vector<int> residues) const
    {
        if (residues.size() != orders_.size())
            throw Error(ErrorKind::Dimension, "element has " + std::to_string(residues.size()) +
                                                  " residues, group has " + std::to_string(orders_.size()) +
                                                  " factors");
        for (std::size_t i = 0; i < residues.size(); ++i)
            residues[i] = ((residues[i] % orders_[i]) + orders_[i]) % orders_[i];
        return GroupElement(std::move(residues));
    }

    void check(const GroupElement& g) const
    {
        if (g.size() != orders_.size())
            throw Error(ErrorKind::Dimension, "element " + g.to_string() + " does not belong to this group");
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] < 0 || g[i] >= orders_[i])
                throw Error(ErrorKind::Dimension, "element " + g.to_string() + " is not reduced");
    }

    /// All elements, residue tuples in lexicographic order.
    std::vector<GroupElement> elements() const
    {
        std::vector<GroupElement> out;
        out.reserve(size_);
        std::vector<int> r(orders_.size(), 0);
        for (std::size_t n = 0; n < size_; ++n) {
            out.push_back(GroupElement(r));
            for (std::size_t i = orders_.size(); i-- > 0;) {
                if (++r[i] < orders_[i])
                    break;
                r[i] = 0;
            }
        }
        return out;
    }

    /// Non-identity elements in embedding order: element k maps to e_{k+1}.
    /// Lexicographic, except for Z2 x Z2 which uses (1,0), (0,1), (1,1).
    std::vector<GroupElement> embedding_order() const
    {
        if (is_z2z2())
            return {GroupElement({1, 0}), GroupElement({0, 1}), GroupElement({1, 1})};
        auto all = elements();
        all.erase(all.begin());
        return all;
    }

    std::string to_string() const
    {
        if (is_z2())
            return "z2";
        if (is_z2z2())
            return "z2z2";
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            s += (i ? "xz" : "z") + std::to_string(orders_[i]);
        return s;
    }

private:
    std::vector<int> orders_;
    std::size_t size_ = 1;
};

/// Accepts "z2", "z2z2", "z3xz4", "z2xz2xz2".
inline GroupSpec parse_group_spec(std::string_view text)
{
    static const std::regex whole(R"(z\d+(x?z\d+)*)");
    const std::string s(text);
    if (!std::regex_match(s, whole))
        throw Error(ErrorKind::Parse, "bad group string '" + s + "' (expected e.g. z2, z2z2, z3xz4)");
    static const std::regex factor(R"(z(\d+))");
    std::vector<int> orders;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), factor); it != std::sregex_iterator(); ++it) {
        const auto digits = (*it)[1].str();
        if (digits.size() > 7)
            throw Error(ErrorKind::Parse, "cyclic order too large in '" + s + "'");
        orders.push_back(std::stoi(digits));
    }
    return GroupSpec(std::move(orders));
}

inline GroupElement identity(const GroupSpec& spec)
{
    return spec.element(std::vector<int>(spec.orders().size(), 0));
}

inline bool is_identity(const GroupElement& g)
{
    for (int r : g.residues())
        if (r != 0)
            return false;
    return true;
}

inline GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b)
{
    spec.check(a);
    spec.check(b);
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a[i] + b[i];
    return spec.element(std::move(r));
}

/// Index of g in embedding_order(), or -1 for the identity.
inline long embedding_index(const GroupSpec& spec, const GroupElement& g)
{
    spec.check(g);
    if (is_identity(g))
        return -1;
    const auto order = spec.embedding_order();
    for (std::size_t k = 0; k < order.size(); ++k)
        if (order[k] == g)
            return static_cast<long>(k);
    return -1;
}

/// Lattice embedding G -> R^{|G|-1}: identity to 0, others to basis vectors.
inline Point embed(const GroupSpec& spec, const GroupElement& g)
{
    Point v(spec.size() - 1, Rational(0));
    const long k = embedding_index(spec, g);
    if (k >= 0)
        v[static_cast<std::size_t>(k)] = 1;
    return v;
}

/// Inverse of embed; nullopt when the column is not an embedding image.
inline std::optional<GroupElement> decode(const GroupSpec& spec, std::span<const Rational> column)
{
    if (column.size() != spec.size() - 1)
        throw Error(ErrorKind::Dimension, "column length " + std::to_string(column.size()) + " != |G|-1 = " +
                                              std::to_string(spec.size() - 1));
    long hot = -1;
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (column[i] == 0)
            continue;
        if (column[i] != 1 || hot >= 0)
            return std::nullopt;
        hot = static_cast<long>(i);
    }
    if (hot < 0)
        return identity(spec);
    return spec.embedding_order()[static_cast<std::size_t>(hot)];
}

/// Images of g under (a,b)->a, (a,b)->b, (a,b)->a+b.
inline std::array<int, 3> z2_homomorphism_images(const GroupSpec& spec, const GroupElement& g)
{
    if (!spec.is_z2z2())
        throw Error(ErrorKind::UnsupportedGroup, "homomorphism images are defined for z2z2 only, got " +
                                                     spec.to_string());
    spec.check(g);
    return {g[0], g[1], (g[0] + g[1]) % 2};
}

} // namespace clawpoly
