#include <random>

#include "doctest.h"

#include "seshadri/rational.hpp"

using namespace seshadri;

TEST_CASE("rational literals round-trip through parse and to_string") {
    const char* cases[] = {"0",     "1",      "-1",
                           "7/24",  "-11/54", "4/21",
                           "2/93",  "360",    "123456789123456789/987654321987654323"};
    for (const char* s : cases) CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("parse_rational reduces to lowest terms") {
    CHECK(to_string(parse_rational("6/18")) == "1/3");
    CHECK(to_string(parse_rational("-24/96")) == "-1/4");
    CHECK(parse_rational("10/5") == Rational(2));
}

TEST_CASE("parse_rational rejects malformed literals") {
    const char* bad[] = {"",    " 1",  "1 ",  "1/",  "/2", "1/0",  "1//2",
                         "1.5", "+3",  "2/-3", "--1", "a",  "0x10", "1e3"};
    for (const char* s : bad) CHECK_THROWS_AS(parse_rational(s), Error);
}

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
    CHECK(make_rational(6, 18) == make_rational(1, 3));
    CHECK(make_rational(-6, -18) == make_rational(1, 3));
    CHECK(make_rational(6, -18) == make_rational(-1, 3));
    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("rational_sqrt on perfect squares only") {
    CHECK(*rational_sqrt(make_rational(49, 64)) == make_rational(7, 8));
    CHECK(*rational_sqrt(Rational(0)) == Rational(0));
    CHECK(*rational_sqrt(Rational(1)) == Rational(1));
    CHECK(!rational_sqrt(Rational(2)));
    CHECK(!rational_sqrt(Rational(-4)));
    CHECK(!rational_sqrt(make_rational(4, 3)));
}

TEST_CASE("square-class decomposition golden cases") {
    auto sc = square_class_decompose(Rational(8));
    REQUIRE(sc);
    CHECK(sc->sign == 1);
    CHECK(sc->e2 == 1);
    CHECK(sc->e3 == 0);
    CHECK(sc->root == Rational(2));

    sc = square_class_decompose(Rational(12));
    REQUIRE(sc);
    CHECK(sc->e2 == 0);
    CHECK(sc->e3 == 1);
    CHECK(sc->root == Rational(2));

    sc = square_class_decompose(Rational(-18));
    REQUIRE(sc);
    CHECK(sc->sign == -1);
    CHECK(sc->e2 == 1);
    CHECK(sc->e3 == 0);
    CHECK(sc->root == Rational(3));

    sc = square_class_decompose(make_rational(2, 3));
    REQUIRE(sc);
    CHECK(sc->sign == 1);
    CHECK(sc->e2 == 1);
    CHECK(sc->e3 == 1);
    CHECK(sc->root == make_rational(1, 3));

    CHECK(!square_class_decompose(Rational(5)));
    CHECK(!square_class_decompose(Rational(7)));
    CHECK(!square_class_decompose(Rational(0)));
}

TEST_CASE("square-class decomposition reconstructs randomized inputs") {
    std::mt19937 rng(20260814u);
    std::uniform_int_distribution<int> sign(0, 1), e(0, 1), num(1, 400), den(1, 30);
    for (int i = 0; i < 500; ++i) {
        Rational root = make_rational(num(rng), den(rng));
        Rational q = root * root * (sign(rng) ? 1 : -1) * (e(rng) ? 2 : 1) * (e(rng) ? 3 : 1);
        auto sc = square_class_decompose(q);
        REQUIRE(sc);
        Rational back = sc->root * sc->root * sc->sign * (sc->e2 ? 2 : 1) * (sc->e3 ? 3 : 1);
        CHECK(back == q);
        CHECK(sc->root > 0);
    }
}
