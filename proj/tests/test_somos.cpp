#include <doctest.h>

#include "pflab/rng.hpp"
#include "pflab/somos.hpp"

using pflab::Rational;

TEST_CASE("somos-4 from unit initial data") {
    auto seq = pflab::somos_generate(4, {Rational(1), Rational(1), Rational(1), Rational(1)}, 20);
    CHECK(seq.terms[4] == Rational(2));   // term 5
    CHECK(seq.terms[5] == Rational(3));
    CHECK(seq.terms[6] == Rational(7));   // term 7
    for (const auto& t : seq.terms) CHECK(t.is_integer());
    for (std::size_t l = 0; l + 4 < seq.terms.size(); ++l)
        CHECK(pflab::somos_residual(4, seq.terms, l).is_zero());
}

TEST_CASE("signed somos-6 and somos-7 from ones stay at one") {
    auto s6 = pflab::somos_generate(6, std::vector<Rational>(6, Rational(1)), 15);
    for (const auto& t : s6.terms) CHECK(t == Rational(1));
    auto s7 = pflab::somos_generate(7, std::vector<Rational>(7, Rational(1)), 15);
    for (const auto& t : s7.terms) CHECK(t == Rational(1));
}

TEST_CASE("somos input validation") {
    CHECK_THROWS_AS(pflab::somos_generate(5, {}, 3), pflab::ParameterError);
    CHECK_THROWS_AS(pflab::somos_generate(4, {Rational(1)}, 3), pflab::ShapeError);
    CHECK_THROWS_AS(
        pflab::somos_generate(4, {Rational(0), Rational(1), Rational(1), Rational(1)}, 9),
        pflab::ZeroDivisorError);
}

TEST_CASE("reduction residual equals the recurrence residual on arbitrary arrays") {
    pflab::Rng rng(501);
    std::vector<Rational> t;
    for (int i = 0; i < 64; ++i) t.push_back(rng.nonzero_rational(9));

    for (int variant : {4, 6, 7}) {
        for (int trial = 0; trial < 50; ++trial) {
            long n = rng.uniform_int(1, 5);
            long k = rng.uniform_int(0, 4);
            long l = rng.uniform_int(0, 4);
            std::size_t ell = pflab::somos_mapped_index(variant, n, k, l);
            if (variant == 7) ell += 1;  // residual window sits one past tau_n's image
            Rational lattice = pflab::somos_reduction_residual(variant, t, n, k, l);
            Rational direct = pflab::somos_residual(variant, t, ell);
            CHECK(lattice == direct);
        }
    }
}

TEST_CASE("genuine sequences give zero lattice residual at all cells") {
    auto s4 = pflab::somos_generate(4, {Rational(1), Rational(1), Rational(1), Rational(1)}, 40);
    for (long n = 1; n <= 4; ++n)
        for (long k = 0; k <= 3; ++k)
            for (long l = 0; l <= 3; ++l)
                CHECK(pflab::somos_reduction_residual(4, s4.terms, n, k, l).is_zero());

    std::vector<Rational> ones(40, Rational(1));
    for (long n = 1; n <= 3; ++n)
        for (long k = 0; k <= 2; ++k)
            for (long l = 0; l <= 2; ++l) {
                CHECK(pflab::somos_reduction_residual(6, ones, n, k, l).is_zero());
                CHECK(pflab::somos_reduction_residual(7, ones, n, k, l).is_zero());
            }

    // a non-trivial signed somos-6 orbit also reduces to zero residuals
    auto s6 = pflab::somos_generate(
        6,
        {Rational(1), Rational(2), Rational(1), Rational(3), Rational(1), Rational(2)}, 40);
    for (long n = 1; n <= 3; ++n)
        for (long k = 0; k <= 2; ++k)
            for (long l = 0; l <= 2; ++l)
                CHECK(pflab::somos_reduction_residual(6, s6.terms, n, k, l).is_zero());
}

TEST_CASE("out-of-range cells raise") {
    std::vector<Rational> t(8, Rational(1));
    CHECK_THROWS_AS(pflab::somos_reduction_residual(4, t, 5, 5, 5), pflab::RangeError);
    CHECK_THROWS_AS((void)pflab::somos_mapped_index(7, 0, 0, 0), pflab::RangeError);
}
