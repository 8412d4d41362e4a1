#include <catch2/catch_amalgamated.hpp>

#include "ccx/oracle.hpp"
#include "ccx/rational.hpp"

using namespace ccx;

TEST_CASE("parsing accepts integers and fractions") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("2/3") == make_rational(2, 3));
    CHECK(parse_rational("-5/4") == make_rational(-5, 4));
    CHECK(parse_rational("4/6") == make_rational(2, 3));
}

TEST_CASE("parsing rejects malformed text") {
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("--2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
}

TEST_CASE("text form round-trips") {
    for (const char* s : {"0", "7", "-3", "2/3", "-5/4", "16/7"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
}

TEST_CASE("canonical form is closed under arithmetic") {
    SplitMix64 rng(Seed{20240811});
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(16);
        Rational b = rng.rational(16);
        for (const Rational& v : std::vector<Rational>{Rational(a + b), Rational(a - b), Rational(a * b)}) {
            CHECK(denominator(v) > 0);
            CHECK(gcd(BigInt(abs(numerator(v))), denominator(v)) == 1);
        }
        if (b != 0) {
            Rational q = a / b;
            CHECK(denominator(q) > 0);
            CHECK(gcd(BigInt(abs(numerator(q))), denominator(q)) == 1);
        }
        CHECK((a == 0 ? denominator(a) == 1 : true));
    }
}
