#include <catch_amalgamated.hpp>

#include "clawpoly/hrep.hpp"
#include "clawpoly/sampling.hpp"
#include "oracles.hpp"

using namespace clawpoly;

TEST_CASE("inequality counts follow the family sizes", "[hrep]")
{
    for (std::size_t m = 3; m <= 8; ++m) {
        const std::size_t odd = std::size_t{1} << (m - 1);
        CHECK(build_dh(m).size() == 2 * m + odd);
        CHECK(build_delta(m).size() == 3 * m + m + 3 * odd);
        CHECK(build_delta_prime(m).size() == 3 * odd + 4 * m);
    }
    CHECK(build_delta(3).size() == 24);
    CHECK(build_dh(5).size() == 26);
    CHECK(build_delta_prime(3).size() == 24);
    CHECK(build_dh(1).size() == 3);
}

TEST_CASE("odd subsets are listed lexicographically", "[hrep]")
{
    const auto s = odd_subsets(4);
    REQUIRE(s.size() == 8);
    std::vector<std::string> names;
    for (const auto& a : s)
        names.push_back(a.to_string());
    CHECK(names == std::vector<std::string>{"{1}", "{1,2,3}", "{1,2,4}", "{1,3,4}", "{2}", "{2,3,4}", "{3}", "{4}"});
    CHECK_THROWS_AS(OddSubset({1, 2}, 4), Error);
    CHECK_THROWS_AS(OddSubset({5}, 4), Error);
}

TEST_CASE("inequality ids follow the family order", "[hrep]")
{
    const auto sys = build_delta(3);
    for (std::size_t k = 0; k < sys.size(); ++k)
        CHECK(sys[k].id == k);
    CHECK(std::holds_alternative<family::NonNeg>(sys[0].family));
    CHECK(std::holds_alternative<family::NonNeg>(sys[8].family));
    CHECK(std::holds_alternative<family::ColumnSimplex>(sys[9].family));
    CHECK(std::holds_alternative<family::ARow>(sys[12].family));
    CHECK(to_string(sys[12].family) == "ARow({1,2},{1})");
    CHECK(to_string(sys[16].family) == "ARow({1,3},{1})");
    CHECK(to_string(sys[23].family) == "ARow({2,3},{3})");

    const auto dp = build_delta_prime(3);
    CHECK(to_string(dp[0].family) == "ARow({1},{1})");
    CHECK(to_string(dp[12].family) == "BColumn({1},1)");
}

TEST_CASE("A-inequalities have the moved-to-one-side form", "[hrep]")
{
    const auto sys = build_delta(3);
    // pair {1,2}, A = {1,2,3}: x11+x12+x13+x21+x22+x23 <= 2
    const auto& a = sys[13];
    CHECK(to_string(a.family) == "ARow({1,2},{1,2,3})");
    CHECK(a.coeffs == Point{1, 1, 1, 1, 1, 1, 0, 0, 0});
    CHECK(a.rhs == 2);
    // pair {1,2}, A = {1}: x11 + x21 - x12 - x13 - x22 - x23 <= 0
    CHECK(sys[12].coeffs == Point{1, -1, -1, 1, -1, -1, 0, 0, 0});
    CHECK(sys[12].rhs == 0);
}

TEST_CASE("membership agrees with the definition oracle", "[hrep]")
{
    sampling::Rng rng(7);
    for (std::size_t m = 3; m <= 5; ++m) {
        const auto delta = build_delta(m), prime = build_delta_prime(m);
        for (int t = 0; t < 400; ++t) {
            const auto x = sampling::random_matrix(3, m, rng, -1, 4, 4).flat();
            INFO(join(x));
            CHECK(satisfies(delta, x) == oracle::in_delta(x, m));
            CHECK(satisfies(prime, x) == oracle::in_delta_prime(x, m));
        }
    }
}

TEST_CASE("membership status and tight sets on hand-checked points", "[hrep]")
{
    const auto sys = build_delta(3);
    const Point zero(9, Rational(0));
    const auto mem = membership(sys, zero);
    CHECK(mem.status == Status::Boundary);
    // all nine nonnegativity rows and the three A = {i} rows of each pair
    // with singleton A are tight at the origin
    CHECK(mem.tight.size() == 9 + 9);
    CHECK(tight_set(sys, zero) == mem.tight);

    Point centre(9, Rational(1, 8));
    CHECK(membership(sys, centre).status == Status::Inside);

    Point far(9, Rational(0));
    far[0] = 2;
    const auto out = membership(sys, far);
    CHECK(out.status == Status::Outside);
    CHECK_FALSE(out.violated.empty());
    try {
        tight_set(sys, far);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAMember);
    }
    CHECK_THROWS_AS(membership(sys, Point(8, Rational(0))), Error);
}

TEST_CASE("integral points of DH(m) are the even-weight vectors", "[hrep]")
{
    for (std::size_t m = 1; m <= 8; ++m) {
        const auto sys = build_dh(m);
        std::set<Point> found;
        for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
            Point p(m);
            for (std::size_t i = 0; i < m; ++i)
                p[i] = (mask >> i) & 1UL;
            if (satisfies(sys, p))
                found.insert(p);
        }
        CHECK(found == oracle::even_weight_vectors(m));
    }
}

TEST_CASE("row projection and slack", "[hrep]")
{
    const auto p = LeafMatrix::from_rows({{1, 0, 1}, {0, Rational(1, 2), 0}, {0, 0, 0}});
    CHECK(row_projection(p, 2) == Point{0, Rational(1, 2), 0});
    CHECK_THROWS_AS(row_projection(p, 4), Error);
    const auto sys = build_delta(3);
    CHECK(slack(sys[0], p.flat()) == 1);
}
