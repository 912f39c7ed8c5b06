// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
// exact; tolerances and sample counts are fixed below.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clawpoly/commands.hpp"
#include "clawpoly/engine.hpp"
#include "clawpoly/io.hpp"
#include "clawpoly/property_suite.hpp"
#include "clawpoly/transform.hpp"
#include "oracles.hpp"

using namespace clawpoly;

namespace {

constexpr std::size_t kRoundTrips = 10'000;
constexpr std::size_t kMembershipSamples = 10'000;
constexpr std::size_t kPropertySamples[] = {4'000, 3'500, 2'500}; // m = 3, 4, 5
constexpr std::uint64_t kSeed = 20240501;

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(const std::string& id, bool ok, const std::string& what, const std::string& detail, double secs)
{
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << what << " | " << detail << " | "
              << t << std::endl;
    if (!ok)
        ++failures;
}

template <typename F>
void run(const std::string& id, const std::string& what, F&& body)
{
    Timer timer;
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail += std::string(" exception: ") + e.what();
    }
    report(id, ok, what, detail, timer.seconds());
}

std::set<Point> as_set(const VertexSet& vs)
{
    return {vs.points.begin(), vs.points.end()};
}

std::string k3_facet_report()
{
    const auto verts = generate_vertices(GroupSpec::z2z2(), 3);
    const auto hull = engine::hull_from_vertices(verts);
    std::vector<engine::Halfspace> facets;
    for (auto k : engine::facet_indices(hull))
        facets.push_back(hull.inequalities[k]);
    std::string out = "facets=" + std::to_string(facets.size()) + "\n";
    out += io::write_ine(facets, 3, 3);
    return out;
}

} // namespace

int main()
{
    engine::Limits limits = engine::Limits::from_environment();

    run("1", "K(m) vertices satisfy Delta(m), m=3..7 (exact, 0 violations allowed)", [&](std::string& d) {
        bool ok = true;
        std::size_t total = 0;
        for (std::size_t m = 3; m <= 7; ++m) {
            const auto r = witness::check_containment(m);
            const auto verts = generate_vertices(GroupSpec::z2z2(), m);
            std::size_t oracle_bad = 0;
            for (const auto& p : verts.points)
                oracle_bad += !oracle::in_delta(p, m);
            total += r.checked;
            ok = ok && r.pass() && oracle_bad == 0 && r.checked == verts.size();
            d += "m=" + std::to_string(m) + ":" + std::to_string(r.checked) + (r.pass() ? "ok " : "VIOLATION ");
        }
        d += "total=" + std::to_string(total);
        return ok;
    });

    run("2", "DD vertices of Delta(m) = K(m) vertices, m=3,4 (exact set equality)", [&](std::string& d) {
        bool ok = true;
        for (std::size_t m : {3, 4}) {
            const auto dd = engine::vertices_from_inequalities(build_delta(m), limits);
            const auto k = generate_vertices(GroupSpec::z2z2(), m);
            const bool eq = as_set(dd) == as_set(k) && dd.size() == k.size();
            ok = ok && eq;
            d += "m=" + std::to_string(m) + ": " + std::to_string(dd.size()) + " vs " + std::to_string(k.size()) +
                 (eq ? " equal; " : " DIFFER; ");
        }
        return ok;
    });

    run("3", "DD vertices of Delta'(m) integral, m=3,4 (exact, 0 non-integral allowed)", [&](std::string& d) {
        bool ok = true;
        for (std::size_t m : {3, 4}) {
            const auto dd = engine::vertices_from_inequalities(build_delta_prime(m), limits);
            std::size_t bad = 0;
            for (const auto& p : dd.points)
                bad += !is_integral(p);
            // the integral vertices are exactly f(K(m))
            const bool image = as_set(dd) == as_set(transform_points(generate_vertices(GroupSpec::z2z2(), m)));
            ok = ok && bad == 0 && image;
            d += "m=" + std::to_string(m) + ": " + std::to_string(dd.size()) + " vertices, " + std::to_string(bad) +
                 " non-integral" + (image ? ", = f(K(m)); " : ", != f(K(m)); ");
        }
        return ok;
    });

    run("4", "0/1 points of Delta(m) = K(m) vertices, m=3..7 (exhaustive scan, exact)", [&](std::string& d) {
        bool ok = true;
        for (std::size_t m = 3; m <= 7; ++m) {
            const auto pts = engine::enumerate_integral_points(build_delta(m));
            const bool eq = oracle::as_set(pts) == oracle::kimura_vertices({2, 2}, m);
            ok = ok && eq;
            d += "m=" + std::to_string(m) + ":" + std::to_string(pts.size()) + (eq ? " " : "!= ");
        }
        return ok;
    });

    run("5", "DD vertices of DH(m) = even-weight 0/1 vectors, m=3..6 (exact)", [&](std::string& d) {
        bool ok = true;
        for (std::size_t m = 3; m <= 6; ++m) {
            const auto dd = engine::vertices_from_inequalities(build_dh(m), limits);
            const bool eq = as_set(dd) == oracle::even_weight_vectors(m) && dd.size() == (std::size_t{1} << (m - 1));
            ok = ok && eq;
            d += "m=" + std::to_string(m) + ":" + std::to_string(dd.size()) + (eq ? " " : "!= ");
        }
        return ok;
    });

    run("6", "isomorphism f: 1e4 round trips, 1e4 membership invariance samples, simplex image", [&](std::string& d) {
        sampling::Rng rng(kSeed);
        std::size_t round_fail = 0;
        for (std::size_t t = 0; t < kRoundTrips; ++t) {
            const std::size_t m = 3 + t % 5;
            const auto x = sampling::random_matrix(3, m, rng, -30, 30, 1 + static_cast<long>(t % 11));
            round_fail += !(apply_f_inverse(apply_f(x)) == x && apply_f(apply_f_inverse(x)) == x);
        }
        std::size_t member_fail = 0, inside = 0;
        for (std::size_t t = 0; t < kMembershipSamples; ++t) {
            const std::size_t m = 3 + t % 3;
            // half from Delta(m) (f^-1 of sampled Delta'(m) points), half arbitrary
            const auto x = t % 2 == 0 ? apply_f_inverse(sampling::sample_delta_prime_point(m, rng))
                                      : sampling::random_matrix(3, m, rng, -1, 4, 4);
            const auto a = membership(build_delta(m), x.flat()).status;
            const auto b = membership(build_delta_prime(m), apply_f(x).flat()).status;
            member_fail += a != b;
            inside += a != Status::Outside;
        }
        const auto s = simplex_image_check();
        d = "round-trip failures " + std::to_string(round_fail) + "/" + std::to_string(kRoundTrips) +
            ", membership mismatches " + std::to_string(member_fail) + "/" + std::to_string(kMembershipSamples) +
            " (" + std::to_string(inside) + " members), simplex image " + (s.ok() ? "ok" : "FAILED");
        return round_fail == 0 && member_fail == 0 && s.ok() && inside > 0 && inside < kMembershipSamples;
    });

    std::vector<witness::PropertySuiteReport> suites;
    run("7", "pseudo-facet properties on >=1e4 samples of Delta'(m), m=3,4,5 (0 counterexamples)",
        [&](std::string& d) {
            std::size_t total = 0, failed = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                suites.push_back(witness::run_property_suite(3 + i, kPropertySamples[i], kSeed + i));
                total += kPropertySamples[i];
            }
            const char* props[] = {"k_ge_omega",           "no_single_nonintegral", "two_facets_bound",
                                   "three_facets_integral", "parity",                "no_mixed_class",
                                   "s_facet_parity"};
            for (const char* p : props) {
                std::size_t checked = 0, bad = 0;
                for (const auto& s : suites)
                    if (auto it = s.counts.find(p); it != s.counts.end()) {
                        checked += it->second.first;
                        bad += it->second.second;
                    }
                failed += bad;
                d += std::string(p) + "=" + std::to_string(bad) + "/" + std::to_string(checked) + " ";
            }
            std::size_t nonmember = 0;
            for (const auto& s : suites)
                nonmember += s.counts.at("membership").second;
            d += "samples=" + std::to_string(total) + " nonmembers=" + std::to_string(nonmember);
            return total >= 10'000 && failed == 0 && nonmember == 0;
        });

    run("8", "segment-interior witness for every non-integral sample (p +- eps v checked exactly)", [&](std::string& d) {
        std::size_t checked = 0, bad = 0;
        for (const auto& s : suites)
            if (auto it = s.counts.find("interior_witness"); it != s.counts.end()) {
                checked += it->second.first;
                bad += it->second.second;
            }
        d = "non-integral samples " + std::to_string(checked) + ", not-interior outcomes " + std::to_string(bad);
        for (const auto& s : suites)
            if (s.failed_property == "interior_witness")
                d += ", first: " + join(s.counterexample->flat(), ",") + " (" + s.diagnostic + ")";
        return checked > 0 && bad == 0;
    });

    run("9", "hull(K(3)) facets = irredundant subset of Delta(3) up to scaling; byte-identical reports",
        [&](std::string& d) {
            const std::string first = k3_facet_report();
            const std::string second = k3_facet_report();
            const auto hull = engine::hull_from_vertices(generate_vertices(GroupSpec::z2z2(), 3));
            const auto delta = engine::polytope_from_inequalities(build_delta(3));
            std::set<std::vector<Integer>> delta_facets, hull_facets;
            auto key = [](const engine::Halfspace& h) {
                Point full = h.coeffs;
                full.push_back(h.rhs);
                return primitive_integer_vector(full);
            };
            for (auto k : engine::facet_indices(delta))
                delta_facets.insert(key(delta.inequalities[k]));
            for (auto k : engine::facet_indices(hull))
                hull_facets.insert(key(hull.inequalities[k]));
            const bool subset = std::includes(delta_facets.begin(), delta_facets.end(), hull_facets.begin(),
                                              hull_facets.end());
            std::ofstream("k3_facets.ine") << first;
            d = "facets " + std::to_string(hull_facets.size()) + ", irredundant Delta(3) rows " +
                std::to_string(delta_facets.size()) + ", subset " + (subset ? "yes" : "NO") + ", reports " +
                (first == second ? "identical" : "DIFFER") + " (" + std::to_string(first.size()) +
                " bytes, written to k3_facets.ine)";
            return subset && !hull_facets.empty() && first == second;
        });

    run("f-vector", "f-vector of K(3) deterministic across runs (derived artifact, no reference value)",
        [&](std::string& d) {
            auto compute = [] {
                const auto fv = engine::f_vector(engine::hull_from_vertices(generate_vertices(GroupSpec::z2z2(), 3)));
                std::string s;
                for (std::size_t i = 0; i < fv.counts.size(); ++i)
                    s += (i ? "," : "") + std::to_string(fv.counts[i]);
                return std::pair{s, fv.partial};
            };
            const auto a = compute(), b = compute();
            d = "f=(" + a.first + ")" + (a.first == b.first ? " identical" : " DIFFER");
            return a == b && !a.second;
        });

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << failures << " failing)" << std::endl;
    return failures == 0 ? 0 : 1;
}
