#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "fuzzhyper/rational.hpp"

using namespace fuzzhyper;

TEST_CASE("construction reduces and normalizes signs") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(pow(Rational(1, 2), 10) == Rational(1, 1024));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("comparisons cross-multiply") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(rat_min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(rat_max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(pos_part(Rational(-3, 4)) == Rational(0));
    CHECK(pos_part(Rational(3, 4)) == Rational(3, 4));
}

TEST_CASE("floor and reciprocal") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(1, 3).reciprocal() == Rational(3));
    CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
}

TEST_CASE("parse accepts p/q, integers and exact decimals") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK(Rational::parse(" 1/2 ") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("printing round-trips") {
    for (const char* text : {"0", "1", "-1", "1/2", "-7/3", "355/113"})
        CHECK(Rational::parse(Rational::parse(text).str()) == Rational::parse(text));
}

TEST_CASE("overflow throws instead of wrapping") {
    Rational huge(1LL << 62);
    CHECK_THROWS_AS(huge * huge, ArithmeticOverflow);
}

TEST_CASE("hashing agrees with equality") {
    std::unordered_set<Rational> seen;
    seen.insert(Rational(1, 2));
    seen.insert(Rational(2, 4));
    seen.insert(Rational(3, 4));
    CHECK(seen.size() == 2);
}
