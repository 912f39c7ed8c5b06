#include <catch_amalgamated.hpp>

#include "clawpoly/group_model.hpp"

using namespace clawpoly;

TEST_CASE("group specs parse and print", "[group]")
{
    CHECK(parse_group_spec("z2").is_z2());
    CHECK(parse_group_spec("z2z2").is_z2z2());
    CHECK(parse_group_spec("z2xz2").is_z2z2());
    const auto g = parse_group_spec("z3xz4");
    CHECK(g.size() == 12);
    CHECK(g.to_string() == "z3xz4");
    CHECK(GroupSpec::z2z2().to_string() == "z2z2");
}

TEST_CASE("malformed or unsupported group specs", "[group]")
{
    for (const char* bad : {"", "z", "z1", "zz2", "z2+z2", "Z2"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_group_spec(bad), Error);
    }
    CHECK_THROWS_AS(GroupSpec(std::vector<int>{}), Error);
    CHECK_THROWS_AS(GroupSpec(std::vector<int>{0}), Error);
}

TEST_CASE("elements are listed lexicographically and reduce modulo the orders", "[group]")
{
    const auto g = parse_group_spec("z2z3");
    const auto els = g.elements();
    REQUIRE(els.size() == 6);
    CHECK(els.front().to_string() == "00");
    CHECK(els.back().to_string() == "12");
    CHECK(std::is_sorted(els.begin(), els.end()));
    CHECK(g.element({3, 4}) == g.element({1, 1}));
}

TEST_CASE("addition is componentwise modular", "[group]")
{
    const auto g = GroupSpec::z2z2();
    const auto a = g.element({1, 0}), b = g.element({1, 1});
    CHECK(add(g, a, b) == g.element({0, 1}));
    CHECK(is_identity(add(g, b, b)));
    CHECK(is_identity(identity(g)));
}

TEST_CASE("Z2 x Z2 embedding order and images", "[group]")
{
    const auto g = GroupSpec::z2z2();
    CHECK(embedding_index(g, g.element({0, 0})) == -1);
    CHECK(embedding_index(g, g.element({1, 0})) == 0);
    CHECK(embedding_index(g, g.element({0, 1})) == 1);
    CHECK(embedding_index(g, g.element({1, 1})) == 2);
    CHECK(embed(g, g.element({0, 1})) == Point{0, 1, 0});
    CHECK(embed(g, identity(g)) == Point{0, 0, 0});
}

TEST_CASE("decode inverts embed for every element", "[group]")
{
    for (const char* s : {"z2", "z2z2", "z3", "z2xz3", "z4"}) {
        const auto g = parse_group_spec(s);
        for (const auto& e : g.elements()) {
            const Point col = embed(g, e);
            REQUIRE(col.size() == g.size() - 1);
            const auto back = decode(g, col);
            REQUIRE(back);
            CHECK(*back == e);
        }
    }
}

TEST_CASE("decode rejects columns that are not embedding images", "[group]")
{
    const auto g = GroupSpec::z2z2();
    CHECK_FALSE(decode(g, Point{1, 1, 0}));
    CHECK_FALSE(decode(g, Point{Rational(1, 2), 0, 0}));
    CHECK_FALSE(decode(g, Point{2, 0, 0}));
    CHECK_THROWS_AS(decode(g, Point{1, 0}), Error);
}

TEST_CASE("homomorphism images (a, b, a+b mod 2)", "[group]")
{
    const auto g = GroupSpec::z2z2();
    for (const auto& e : g.elements()) {
        const auto img = z2_homomorphism_images(g, e);
        CHECK(img[0] == e[0]);
        CHECK(img[1] == e[1]);
        CHECK(img[2] == (e[0] + e[1]) % 2);
    }
    try {
        z2_homomorphism_images(GroupSpec::z2(), GroupSpec::z2().element({1}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedGroup);
    }
}
