#include <catch_amalgamated.hpp>

#include "clawpoly/vrep.hpp"
#include "oracles.hpp"

using namespace clawpoly;

namespace {

std::set<Point> as_set(const VertexSet& vs)
{
    return {vs.points.begin(), vs.points.end()};
}

} // namespace

TEST_CASE("generated vertices match the brute-force labeling oracle", "[vrep]")
{
    struct Case {
        const char* group;
        std::vector<int> orders;
        std::size_t max_m;
    };
    for (const auto& c : {Case{"z2", {2}, 7}, Case{"z2z2", {2, 2}, 5}, Case{"z3", {3}, 5}, Case{"z2xz3", {2, 3}, 4}}) {
        for (std::size_t m = 3; m <= c.max_m; ++m) {
            INFO(c.group << " m=" << m);
            const auto vs = generate_vertices(parse_group_spec(c.group), m);
            const auto expected = oracle::kimura_vertices(c.orders, m);
            CHECK(vs.size() == expected.size());
            CHECK(as_set(vs) == expected);
        }
    }
}

TEST_CASE("vertex counts are |G|^(m-1)", "[vrep]")
{
    CHECK(generate_vertices(GroupSpec::z2z2(), 3).size() == 16);
    CHECK(generate_vertices(GroupSpec::z2z2(), 4).size() == 64);
    CHECK(generate_vertices(GroupSpec::z2z2(), 6).size() == 1024);
    CHECK(generate_vertices(GroupSpec::z2(), 4).size() == 8);
    CHECK(generate_vertices(parse_group_spec("z3xz4"), 3).size() == 144);
}

TEST_CASE("generation is deterministic and agrees with the full scan", "[vrep]")
{
    const auto a = generate_vertices(GroupSpec::z2z2(), 4);
    const auto b = generate_vertices(GroupSpec::z2z2(), 4);
    CHECK(a.points == b.points);
    CHECK(as_set(generate_vertices_full_scan(GroupSpec::z2z2(), 4)) == as_set(a));
    CHECK(a.points.front() == Point(12, Rational(0)));
}

TEST_CASE("fewer than three leaves is a leaf-count error", "[vrep]")
{
    for (std::size_t m : {0, 1, 2}) {
        try {
            generate_vertices(GroupSpec::z2z2(), m);
            FAIL("no error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::LeafCount);
        }
    }
    CHECK_THROWS_AS(Labeling(GroupSpec::z2z2(), {identity(GroupSpec::z2z2())}), Error);
}

TEST_CASE("the vertex cap is enforced unless overridden", "[vrep]")
{
    GenerationLimits small{100, false};
    try {
        generate_vertices(GroupSpec::z2z2(), 5, small);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceCap);
    }
    small.allow_large = true;
    CHECK(generate_vertices(GroupSpec::z2z2(), 5, small).size() == 256);
}

TEST_CASE("labeling matrices and their inverse", "[vrep]")
{
    const auto g = GroupSpec::z2z2();
    const Labeling l(g, {g.element({1, 0}), g.element({0, 1}), g.element({1, 1})});
    CHECK(is_identity(l.sum()));
    const auto x = labeling_to_matrix(l);
    CHECK(x.flat() == Point{1, 0, 0, 0, 1, 0, 0, 0, 1});
    const auto back = matrix_to_elements(g, x);
    REQUIRE(back);
    CHECK(*back == l.elements);
    CHECK(is_vertex(g, 3, x));
}

TEST_CASE("is_vertex rejects non-identity sums and non-indicator columns", "[vrep]")
{
    const auto g = GroupSpec::z2z2();
    const Labeling l(g, {g.element({1, 0}), g.element({1, 0}), g.element({1, 0})});
    CHECK_FALSE(is_vertex(g, 3, labeling_to_matrix(l)));
    LeafMatrix half(3, 3);
    half(0, 0) = Rational(1, 2);
    CHECK_FALSE(is_vertex(g, 3, half));
    CHECK_THROWS_AS(is_vertex(g, 4, half), Error);
}

TEST_CASE("leaf matrices flatten row-major", "[vrep]")
{
    const auto m = LeafMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.flat() == Point{1, 2, 3, 4, 5, 6});
    CHECK(m.column(1) == Point{2, 5});
    CHECK(m.row(1) == Point{4, 5, 6});
    CHECK(LeafMatrix::from_flat(2, 3, m.flat()) == m);
    CHECK_THROWS_AS(LeafMatrix::from_flat(2, 2, m.flat()), Error);
}
