#include <doctest.h>

#include "pflab/matrix.hpp"
#include "pflab/pfaffian.hpp"
#include "pflab/rng.hpp"

using pflab::Matrix;
using pflab::Rational;
using pflab::SkewMatrix;

namespace {

SkewMatrix<Rational> symbolic4x4(pflab::Rng& rng) {
    return pflab::random_integer_skew(rng, 4);
}

} // namespace

TEST_CASE("expansion base cases") {
    SkewMatrix<Rational> a2(2);
    a2.set(0, 1, Rational(7));
    CHECK(pflab::pfaffian_expansion(a2) == Rational(7));

    SkewMatrix<Rational> zero6(6);
    CHECK(pflab::pfaffian_expansion(zero6) == Rational(0));

    SkewMatrix<Rational> empty(0);
    CHECK(pflab::pfaffian_expansion(empty) == Rational(1));

    CHECK_THROWS_AS(SkewMatrix<Rational>(3), pflab::OddOrderError);
}

TEST_CASE("4x4 pfaffian equals the three-term expansion") {
    pflab::Rng rng(99);
    for (int t = 0; t < 20; ++t) {
        SkewMatrix<Rational> a = symbolic4x4(rng);
        Rational expect = a.a(0, 1) * a.a(2, 3) - a.a(0, 2) * a.a(1, 3) + a.a(0, 3) * a.a(1, 2);
        CHECK(pflab::pfaffian_expansion(a) == expect);
    }
}

TEST_CASE("pfaffian squared equals determinant") {
    pflab::Rng rng(7);
    for (std::size_t order = 2; order <= 10; order += 2) {
        for (int t = 0; t < 5; ++t) {
            SkewMatrix<Rational> a = pflab::random_integer_skew(rng, order);
            Rational pf = pflab::pfaffian_expansion(a);
            CHECK(pf * pf == pflab::determinant(a.to_full()));
        }
    }
}

TEST_CASE("elimination agrees with expansion") {
    pflab::Rng rng(8);
    for (std::size_t order = 2; order <= 12; order += 2) {
        for (int t = 0; t < 5; ++t) {
            SkewMatrix<Rational> a = pflab::random_integer_skew(rng, order);
            CHECK(pflab::pfaffian_elimination(a) == pflab::pfaffian_expansion(a));
        }
    }
}

TEST_CASE("elimination canonical block diagonal") {
    for (std::size_t n : {1u, 2u, 4u}) {
        SkewMatrix<Rational> j(2 * n);
        for (std::size_t b = 0; b < n; ++b) j.set(2 * b, 2 * b + 1, Rational(1));
        CHECK(pflab::pfaffian_elimination(j) == Rational(1));
    }
}

TEST_CASE("elimination returns zero for rank-deficient input") {
    SkewMatrix<Rational> a(6);
    // row 0 left entirely zero
    a.set(1, 2, Rational(3));
    a.set(1, 3, Rational(-2));
    a.set(2, 4, Rational(5));
    a.set(3, 5, Rational(1));
    CHECK(pflab::pfaffian_elimination(a) == Rational(0));
    CHECK(pflab::pfaffian_expansion(a) == Rational(0));
}

TEST_CASE("pfaffian scales as c^N") {
    pflab::Rng rng(21);
    for (std::size_t order = 2; order <= 8; order += 2) {
        SkewMatrix<Rational> a = pflab::random_integer_skew(rng, order);
        Rational c = rng.nonzero_rational();
        Rational cn(1);
        for (std::size_t i = 0; i < order / 2; ++i) cn = cn * c;
        CHECK(pflab::pfaffian_expansion(a.scaled(c)) == cn * pflab::pfaffian_expansion(a));
        CHECK(pflab::pfaffian_elimination(a.scaled(c)) == cn * pflab::pfaffian_elimination(a));
    }
}

TEST_CASE("float elimination pivots for stability") {
    pflab::Rng rng(31);
    SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 8);
    SkewMatrix<double> af = a.cast<double>();
    double pf = pflab::pfaffian_elimination(af);
    double expect = pflab::pfaffian_expansion(a).to_double();
    CHECK(pf == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("determinant basics") {
    Matrix<Rational> id3 = Matrix<Rational>::identity(3);
    CHECK(pflab::determinant(id3) == Rational(1));

    Matrix<Rational> m(2, 2);
    m(0, 0) = Rational(2); m(0, 1) = Rational(3);
    m(1, 0) = Rational(5); m(1, 1) = Rational(7);
    CHECK(pflab::determinant(m) == Rational(-1));

    Matrix<Rational> rect(2, 3);
    CHECK_THROWS_AS(pflab::determinant(rect), pflab::ShapeError);
}
