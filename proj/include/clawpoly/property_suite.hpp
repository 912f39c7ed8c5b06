#pragma once

#include <map>
#include <optional>
#include <string>

#include "clawpoly/sampling.hpp"
#include "clawpoly/witness.hpp"

namespace clawpoly::witness {

/// Outcome counts of the sampled pseudo-facet checks on Delta'(m).
struct PropertySuiteReport {
    std::size_t leaves = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// property name -> {checked, failed}
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    std::optional<LeafMatrix> counterexample;
    std::string failed_property;
    std::string diagnostic;

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& [name, c] : counts)
            n += c.second;
        return n;
    }
    bool pass() const { return failures() == 0; }
};

namespace detail {

inline void record(PropertySuiteReport& r, const std::string& name, bool ok, const LeafMatrix& p,
                   const std::string& diagnostic = {})
{
    auto& c = r.counts[name];
    ++c.first;
    if (ok)
        return;
    ++c.second;
    if (!r.counterexample) {
        r.counterexample = p;
        r.failed_property = name;
        r.diagnostic = diagnostic;
    }
}

} // namespace detail

/// Checks one member of Delta'(m) against every sampled property.
inline void check_point(PropertySuiteReport& r, const LeafMatrix& p)
{
    const bool member = satisfies(build_delta_prime(p.cols()), p.flat());
    detail::record(r, "membership", member, p);
    if (!member)
        return;

    const auto inc = incidence_report(p);
    detail::record(r, "k_ge_omega", inc.k >= inc.omega, p);

    const auto th = pseudo_facet_theorems_check(p);
    auto lines = th.rows;
    lines.insert(lines.end(), th.columns.begin(), th.columns.end());
    for (const auto& c : lines) {
        detail::record(r, "no_single_nonintegral", c.no_single_nonintegral, p);
        detail::record(r, "two_facets_bound", c.two_facets_bound, p);
        detail::record(r, "three_facets_integral", c.three_facets_integral, p);
    }

    auto classify = [&](const Point& line) {
        if (nonintegral_indices(line).size() != 2)
            return;
        for (const auto& a : tight_odd_subsets(line))
            detail::record(r, "parity", parity_check(line, a), p);
        detail::record(r, "no_mixed_class", !classify_line(line).mixed(), p);
    };
    for (std::size_t i = 0; i < 3; ++i)
        classify(p.row(i));
    for (std::size_t j = 0; j < p.cols(); ++j)
        classify(p.column(j));

    if (!is_integral(p.flat())) {
        const auto out = interior_witness(p);
        bool ok = out.interior();
        if (ok) {
            const auto& w = *out.witness;
            bool nonzero = false;
            for (std::size_t i = 0; i < w.direction.size(); ++i) {
                nonzero = nonzero || sgn(w.direction[i]) != 0;
                ok = ok && (sgn(w.direction[i]) == 0 || !is_integral(p.flat()[i]));
            }
            ok = ok && nonzero && sgn(w.epsilon) > 0 && detail::endpoints_ok(build_delta_prime(p.cols()), p.flat(),
                                                                              w.direction, w.epsilon);
        }
        detail::record(r, "interior_witness", ok, p, out.diagnostic);
    }
    if (inc.configuration == Configuration::P1 || inc.configuration == Configuration::P2)
        detail::record(r, "s_facet_parity", s_facet_count_even_check(p), p);
}

inline PropertySuiteReport run_property_suite(std::size_t m, std::size_t samples, std::uint64_t seed)
{
    require_leaves(m);
    PropertySuiteReport r;
    r.leaves = m;
    r.samples = samples;
    r.seed = seed;
    sampling::Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s)
        check_point(r, sampling::sample_delta_prime_point(m, rng));
    return r;
}

} // namespace clawpoly::witness
