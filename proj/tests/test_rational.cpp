#include <catch_amalgamated.hpp>

#include "clawpoly/linalg.hpp"

using namespace clawpoly;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("parse_rational accepts integers and fractions", "[rational]")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("+2") == 2);
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("2/4").get_str() == "1/2");
    CHECK(parse_rational("-6/3") == -2);
}

TEST_CASE("parse_rational rejects malformed input", "[rational]")
{
    for (const char* bad : {"", "1.5", "abc", "1/", "1/0", "/2"}) {
        INFO(bad);
        try {
            parse_rational(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
        }
    }
}

TEST_CASE("integrality of scalars and vectors", "[rational]")
{
    CHECK(is_integral(Rational(4)));
    CHECK_FALSE(is_integral(Rational(1, 3)));
    const Point p{0, 1, Rational(1, 2)};
    CHECK_FALSE(is_integral(p));
    CHECK(is_integral(Point{0, -3, 5}));
    CHECK(is_integral(Point{}));
}

TEST_CASE("dot product and dimension errors", "[rational]")
{
    CHECK(dot(Point{1, 2, 3}, Point{Rational(1, 2), 0, -1}) == Rational(-5, 2));
    try {
        dot(Point{1, 2}, Point{1});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Dimension);
        CHECK_THAT(e.what(), ContainsSubstring("dimension error"));
    }
}

TEST_CASE("primitive integer vectors keep direction", "[rational]")
{
    const Point v{Rational(2, 3), Rational(-4, 9), 0};
    const auto p = primitive_integer_vector(v);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 3);
    CHECK(p[1] == -2);
    CHECK(p[2] == 0);
    CHECK(lcm_of_denominators(v) == 9);

    std::vector<Integer> w{4, -8, 12};
    make_primitive(w);
    CHECK(w == std::vector<Integer>{1, -2, 3});
}

TEST_CASE("rref of a hand-reduced matrix", "[linalg]")
{
    linalg::Matrix a;
    a.append_row(Point{1, 2, 3});
    a.append_row(Point{2, 4, 7});
    a.append_row(Point{1, 2, 4});
    const auto e = linalg::rref(a);
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
    CHECK(e.reduced(0, 0) == 1);
    CHECK(e.reduced(0, 1) == 2);
    CHECK(e.reduced(0, 2) == 0);
    CHECK(e.reduced(1, 2) == 1);
    CHECK(linalg::rank(a) == 2);
}

TEST_CASE("kernel vectors annihilate the matrix and follow rank-nullity", "[linalg]")
{
    linalg::Matrix a;
    a.append_row(Point{1, 1, 0, -1});
    a.append_row(Point{0, 1, 1, 1});
    const auto k = linalg::kernel(a);
    REQUIRE(k.size() == 4 - linalg::rank(a));
    for (const auto& v : k)
        for (std::size_t i = 0; i < a.rows(); ++i)
            CHECK(dot(a.row(i), v) == 0);
    // free columns get 1, in increasing order
    CHECK(k[0][2] == 1);
    CHECK(k[0][3] == 0);
    CHECK(k[1][3] == 1);
}

TEST_CASE("append_row checks the width", "[linalg]")
{
    linalg::Matrix a;
    a.append_row(Point{1, 2});
    CHECK_THROWS_AS(a.append_row(Point{1, 2, 3}), Error);
}

TEST_CASE("affine dimension", "[linalg]")
{
    CHECK(linalg::affine_dimension(std::vector<Point>{}) == -1);
    CHECK(linalg::affine_dimension(std::vector<Point>{{1, 1}}) == 0);
    CHECK(linalg::affine_dimension(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}) == 1);
    CHECK(linalg::affine_dimension(std::vector<Point>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
}
