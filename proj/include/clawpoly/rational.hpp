#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clawpoly/error.hpp"

namespace clawpoly {

/// Exact arbitrary-precision rational; every coordinate and coefficient in the
/// library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

/// A point (or coefficient vector) in R^d.
using Point = std::vector<Rational>;

inline bool is_integral(const Rational& q)
{
    return q.get_den() == 1;
}

inline bool is_integral(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw Error(ErrorKind::Parse, "empty rational");
    if (s.front() == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::Dimension, "dot product of vectors with lengths " + std::to_string(a.size()) +
                                              " and " + std::to_string(b.size()));
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            sum += a[i] * b[i];
    return sum;
}

inline Integer lcm_of_denominators(std::span<const Rational> v)
{
    Integer l = 1;
    for (const auto& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

/// Scales v by a positive factor so that all entries are coprime integers.
/// The zero vector is returned unchanged.
inline std::vector<Integer> primitive_integer_vector(std::span<const Rational> v)
{
    const Integer l = lcm_of_denominators(v);
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer z = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back(std::move(z));
    }
    if (g > 1)
        for (auto& z : out)
            mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

inline void make_primitive(std::vector<Integer>& v)
{
    Integer g = 0;
    for (const auto& z : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g > 1)
        for (auto& z : v)
            mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

inline bool lex_less(std::span<const Rational> a, std::span<const Rational> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string join(std::span<const Rational> v, std::string_view sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += v[i].get_str();
    }
    return out;
}

} // namespace clawpoly
