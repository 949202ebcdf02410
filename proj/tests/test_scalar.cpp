#include <doctest.h>

#include "pflab/rational.hpp"
#include "pflab/rng.hpp"
#include "pflab/scalar.hpp"

using pflab::Rational;

TEST_CASE("rational construction and printing") {
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational(0).is_zero());
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), pflab::DivideByZeroError);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("+2/3") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse(""), pflab::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), pflab::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), pflab::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), pflab::ParseError);
}

TEST_CASE("field axioms on random triples") {
    pflab::Rng rng(12345);
    for (int t = 0; t < 200; ++t) {
        Rational a = rng.nonzero_rational(), b = rng.nonzero_rational(), c = rng.nonzero_rational();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a + (-a) == Rational(0));
        CHECK(a * (Rational(1) / a) == Rational(1));
    }
}

TEST_CASE("division by zero is a structured error") {
    Rational a(5, 3);
    CHECK_THROWS_AS(a / Rational(0), pflab::DivideByZeroError);
    Rational b(1);
    CHECK_THROWS_AS(b /= Rational(0), pflab::DivideByZeroError);
}

TEST_CASE("scalar traits") {
    CHECK(pflab::ScalarTraits<Rational>::is_exact);
    CHECK_FALSE(pflab::ScalarTraits<double>::is_exact);
    CHECK(pflab::ScalarTraits<Rational>::str(Rational(22, 4)) == "11/2");
    CHECK(pflab::ScalarTraits<double>::pivot_better(-3.0, 2.0));
    CHECK_FALSE(pflab::ScalarTraits<double>::pivot_better(1.0, -2.0));
}
