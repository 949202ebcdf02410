#include <doctest.h>

#include "pflab/lattice_lab.hpp"

using pflab::Rational;

TEST_CASE("glv solution: proposition holds on random seeds") {
    pflab::Rng rng(301);
    SUBCASE("n_max=1, 1x1 grid") {
        auto seed = pflab::random_glv_seed<Rational>(rng, pflab::glv_seed_requirement(1, 1, 1));
        CHECK(pflab::verify_glv_solution(seed, 1, 1, 1).all_pass());
    }
    SUBCASE("n_max=2, 2x2 grid") {
        for (int t = 0; t < 5; ++t) {
            auto seed =
                pflab::random_glv_seed<Rational>(rng, pflab::glv_seed_requirement(2, 2, 2));
            CHECK(pflab::verify_glv_solution(seed, 2, 2, 2).all_pass());
        }
    }
    SUBCASE("n_max=3, 3x3 grid") {
        auto seed = pflab::random_glv_seed<Rational>(rng, pflab::glv_seed_requirement(3, 3, 3));
        CHECK(pflab::verify_glv_solution(seed, 3, 3, 3).all_pass());
    }
    SUBCASE("zero d row makes odd taus vanish and residuals stay zero") {
        auto seed = pflab::random_glv_seed<Rational>(rng, pflab::glv_seed_requirement(2, 2, 2));
        for (auto& v : seed.d) v = Rational(0);
        CHECK(pflab::verify_glv_solution(seed, 2, 2, 2).all_pass());
    }
    SUBCASE("undersized seed is rejected with the required size") {
        auto seed = pflab::random_glv_seed<Rational>(rng, 3);
        try {
            pflab::verify_glv_solution(seed, 3, 3, 3);
            CHECK(false);
        } catch (const pflab::SeedSizeError& e) {
            CHECK(e.required() == pflab::glv_seed_requirement(3, 3, 3));
            CHECK(e.provided() == 3);
        }
    }
}

TEST_CASE("btoda solution: single k-step verification") {
    pflab::Rng rng(302);
    SUBCASE("n_max=1") {
        auto seed = pflab::random_btoda_seed<Rational>(rng, pflab::btoda_seed_requirement(1, 1));
        CHECK(pflab::verify_btoda_solution(seed, 1, 1).all_pass());
    }
    SUBCASE("n_max=2, L=2") {
        for (int t = 0; t < 5; ++t) {
            auto seed =
                pflab::random_btoda_seed<Rational>(rng, pflab::btoda_seed_requirement(2, 2));
            CHECK(pflab::verify_btoda_solution(seed, 2, 2).all_pass());
        }
    }
    SUBCASE("n_max=3, L=3") {
        auto seed = pflab::random_btoda_seed<Rational>(rng, pflab::btoda_seed_requirement(3, 3));
        CHECK(pflab::verify_btoda_solution(seed, 3, 3).all_pass());
    }
    SUBCASE("vanishing d rows collapse both sides consistently") {
        auto seed = pflab::random_btoda_seed<Rational>(rng, pflab::btoda_seed_requirement(2, 2));
        for (auto& v : seed.d0) v = Rational(0);
        for (auto& v : seed.d1) v = Rational(0);
        CHECK(pflab::verify_btoda_solution(seed, 2, 2).all_pass());
    }
}

TEST_CASE("dtoda solution: coupled equations hold") {
    pflab::Rng rng(303);
    SUBCASE("n_max=1, 2x2 grid") {
        auto seed =
            pflab::lab::random_skew_table<Rational>(rng, pflab::dtoda_seed_requirement(2, 2, 1));
        CHECK(pflab::verify_dtoda_solution(seed, 2, 2, 1).all_pass());
    }
    SUBCASE("n_max=2, 1x1 grid") {
        for (int t = 0; t < 5; ++t) {
            auto seed = pflab::lab::random_skew_table<Rational>(
                rng, pflab::dtoda_seed_requirement(1, 1, 2));
            CHECK(pflab::verify_dtoda_solution(seed, 1, 1, 2).all_pass());
        }
    }
    SUBCASE("n_max=3, 3x3 grid") {
        auto seed =
            pflab::lab::random_skew_table<Rational>(rng, pflab::dtoda_seed_requirement(3, 3, 3));
        CHECK(pflab::verify_dtoda_solution(seed, 3, 3, 3).all_pass());
    }
    SUBCASE("sigma_0 is the structural zero Pf(d0,d1)") {
        auto seed =
            pflab::lab::random_skew_table<Rational>(rng, pflab::dtoda_seed_requirement(1, 1, 1));
        // the 2-element Pfaffian of {d0,d1} is the stored entry, which is 0
        std::vector<Rational> d0{Rational(1), Rational(1)}, d1{Rational(3), Rational(4)};
        CHECK(pflab::lab::pf_border2(d0, d1, Rational(0), seed, 0) == Rational(0));
        CHECK(pflab::verify_dtoda_solution(seed, 1, 1, 1).all_pass());
    }
    SUBCASE("undersized seed rejected") {
        auto seed = pflab::lab::random_skew_table<Rational>(rng, 4);
        CHECK_THROWS_AS(pflab::verify_dtoda_solution(seed, 3, 3, 3), pflab::SeedSizeError);
    }
}
