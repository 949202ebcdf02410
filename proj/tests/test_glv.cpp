#include <doctest.h>

#include <vector>

#include "pflab/glv.hpp"
#include "pflab/pfaffian.hpp"
#include "pflab/rng.hpp"

using pflab::Rational;
using pflab::SkewMatrix;

namespace {

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

} // namespace

TEST_CASE("preparation matches the worked 4x4 example") {
    pflab::Rng rng(5);
    SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 4);
    auto prep = pflab::glv_prepare(a, ones(4), Rational(1), /*keep_full_tables=*/true);

    // psi_0^{k,l} = 2^l for alpha = ones, lambda = 1
    Rational two_l(1);
    for (long l = 0; l <= 3; ++l) {
        for (long k = 0; k + l <= 3; ++k) CHECK(prep.psi0.at(k, l) == two_l);
        two_l = two_l * Rational(2);
    }

    CHECK(prep.phi1.at(0, 0) == a.a(0, 1));
    CHECK(prep.phi1.at(1, 0) == a.a(1, 2));
    CHECK(prep.phi1.at(2, 0) == a.a(2, 3));
    CHECK(prep.phi1.at(0, 1) == a.a(1, 2) + a.a(0, 2) + a.a(0, 1));
    CHECK(prep.phi1.at(1, 1) == a.a(2, 3) + a.a(1, 3) + a.a(1, 2));
    CHECK(prep.phi1.at(0, 2) == a.a(2, 3) + Rational(2) * a.a(1, 3) + Rational(3) * a.a(1, 2) +
                                    Rational(2) * a.a(0, 2) + a.a(0, 3) + a.a(0, 1));

    // full-table spot checks: shift rule at l=0 and the four-term l-rule
    CHECK(prep.pf(0, 1, 2, 0) == a.a(2, 3));
    CHECK(prep.pf(0, 2, 1, 0) == a.a(1, 3));
    CHECK(prep.pf(0, 2, 0, 1) == prep.pf(0, 2, 0, 0) + prep.pf(1, 2, 0, 0) +
                                     prep.pf(0, 3, 0, 0) + prep.pf(1, 3, 0, 0));
    CHECK(prep.pf(0, 1, 1, 1) == prep.pf(0, 1, 1, 0) + prep.pf(0, 2, 1, 0) +
                                     prep.pf(1, 2, 1, 0));
    // d-table rule
    for (long l = 1; l <= 3; ++l)
        for (long k = 0; k + l <= 3; ++k)
            for (long i = 0; i <= 3 - k - l; ++i)
                CHECK(prep.d(i, k, l) == prep.d(i, k, l - 1) + prep.d(i + 1, k, l - 1));

    CHECK_THROWS_AS(pflab::glv_prepare(a, ones(4), Rational(0)), pflab::ParameterError);
    CHECK_THROWS_AS(pflab::glv_prepare(a, ones(3), Rational(1)), pflab::ShapeError);
}

TEST_CASE("psi step reproduces the worked example values") {
    pflab::Rng rng(6);
    SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 4);
    auto tables = pflab::GlvTables<Rational>::from_prepared(
        pflab::glv_prepare(a, ones(4), Rational(1)));
    pflab::glv_step_psi(tables, 1);

    CHECK(tables.psi[1].at(0, 0) == a.a(0, 1) - a.a(0, 2) + a.a(1, 2));
    CHECK(tables.psi[1].at(1, 0) == a.a(1, 2) - a.a(1, 3) + a.a(2, 3));
    CHECK(tables.psi[1].at(0, 1) ==
          Rational(2) * (a.a(2, 3) + a.a(1, 2) - a.a(0, 3) + a.a(0, 1)));

    pflab::glv_step_phi(tables, 1);
    CHECK(tables.phi[2].at(0, 0) ==
          a.a(0, 1) * a.a(2, 3) - a.a(0, 2) * a.a(1, 3) + a.a(0, 3) * a.a(1, 2));
}

TEST_CASE("2x2 condensation is the single entry") {
    SkewMatrix<Rational> a(2);
    a.set(0, 1, Rational(9, 4));
    auto r = pflab::glv_condense(a);
    CHECK(r.value == Rational(9, 4));
}

TEST_CASE("oracle equivalence on random matrices") {
    // psi-step divisors are phi values and do not depend on alpha, so the
    // retry policy must be allowed to resample lambda as well.
    pflab::RetryPolicy policy;
    policy.retries = 6;
    policy.resample_lambda = true;
    pflab::Rng rng(77);
    int completed = 0, skipped = 0;
    for (std::size_t order = 2; order <= 12; order += 2) {
        for (int t = 0; t < 4; ++t) {
            SkewMatrix<Rational> a = pflab::random_integer_skew(rng, order);
            try {
                auto r = pflab::glv_condense(a, ones(order), Rational(1), policy);
                CHECK(r.value == pflab::pfaffian_expansion(a));
                ++completed;
            } catch (const pflab::CondensationFailure&) {
                ++skipped;
            }
        }
    }
    CHECK(completed >= 20);  // skips are rare once lambda can move
}

TEST_CASE("oracle equivalence with random rational alpha") {
    pflab::RetryPolicy policy;
    policy.retries = 6;
    policy.resample_lambda = true;
    pflab::Rng rng(78);
    int completed = 0;
    for (int t = 0; t < 6; ++t) {
        SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 8);
        std::vector<Rational> alpha;
        for (int i = 0; i < 8; ++i) alpha.push_back(rng.nonzero_rational());
        try {
            auto r = pflab::glv_condense(a, alpha, Rational(1), policy);
            CHECK(r.value == pflab::pfaffian_expansion(a));
            ++completed;
        } catch (const pflab::CondensationFailure&) {
        }
    }
    CHECK(completed >= 4);
}

TEST_CASE("lambda invariance of the condensed value") {
    pflab::Rng rng(79);
    const Rational lambdas[] = {Rational(1), Rational(2), Rational(-3), Rational(1, 2)};
    pflab::RetryPolicy no_retry;
    no_retry.retries = 0;
    int compared = 0;
    for (int t = 0; t < 8; ++t) {
        SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 8);
        Rational expect = pflab::pfaffian_expansion(a);
        for (const Rational& lam : lambdas) {
            try {
                auto r = pflab::glv_condense(a, ones(8), lam, no_retry);
                CHECK(r.value == expect);
                ++compared;
            } catch (const pflab::CondensationFailure&) {
            }
        }
    }
    CHECK(compared >= 16);
}

TEST_CASE("alpha invariance of the condensed value") {
    pflab::Rng rng(80);
    SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 8);
    Rational expect = pflab::pfaffian_expansion(a);
    pflab::RetryPolicy no_retry;
    no_retry.retries = 0;
    int compared = 0;
    for (int t = 0; t < 8; ++t) {
        std::vector<Rational> alpha;
        for (int i = 0; i < 8; ++i) alpha.push_back(rng.nonzero_rational());
        try {
            auto r = pflab::glv_condense(a, alpha, Rational(1), no_retry);
            CHECK(r.value == expect);
            ++compared;
        } catch (const pflab::CondensationFailure&) {
        }
    }
    CHECK(compared >= 4);
}

TEST_CASE("interior cells satisfy the bilinear forms without division") {
    pflab::Rng rng(81);
    pflab::CondensationResult<Rational> r{Rational(0), {}, 0};
    for (int attempt = 0;; ++attempt) {
        REQUIRE(attempt < 20);
        SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 10);
        try {
            pflab::RetryPolicy no_retry;
            no_retry.retries = 0;
            r = pflab::glv_condense(a, ones(10), Rational(2), no_retry);
            break;
        } catch (const pflab::CondensationFailure&) {
        }
    }
    const auto& t = r.tables;
    const Rational w = Rational(1) / t.lambda;
    const long n2 = 10;
    for (std::size_t n = 1; n < t.psi.size(); ++n) {
        for (long s = 0; s <= n2 - 2 * static_cast<long>(n) - 1; ++s)
            for (long k = 0; k <= s; ++k) {
                const long l = s - k;
                Rational lhs = t.psi[n].at(k, l) * t.phi[n - 1].at(k + 1, l + 1);
                Rational rhs = t.psi[n - 1].at(k + 1, l + 1) * t.phi[n].at(k, l) +
                               w * t.psi[n - 1].at(k, l + 1) * t.phi[n].at(k + 1, l) -
                               w * t.psi[n - 1].at(k + 1, l) * t.phi[n].at(k, l + 1);
                CHECK(lhs == rhs);
            }
    }
    for (std::size_t n = 2; n < t.phi.size(); ++n) {
        for (long s = 0; s <= n2 - 2 * static_cast<long>(n); ++s)
            for (long k = 0; k <= s; ++k) {
                const long l = s - k;
                Rational lhs = t.phi[n].at(k, l) * t.psi[n - 2].at(k + 1, l + 1);
                Rational rhs = t.phi[n - 1].at(k + 1, l + 1) * t.psi[n - 1].at(k, l) +
                               w * t.phi[n - 1].at(k, l + 1) * t.psi[n - 1].at(k + 1, l) -
                               w * t.phi[n - 1].at(k + 1, l) * t.psi[n - 1].at(k, l + 1);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("degenerate input condenses to zero") {
    // rows 0 and 1 proportional => Pf = 0
    SkewMatrix<Rational> a(6);
    for (std::size_t j = 2; j < 6; ++j) {
        a.set(0, j, Rational(static_cast<long>(j)));
        a.set(1, j, Rational(2 * static_cast<long>(j)));
    }
    a.set(0, 1, Rational(0));
    a.set(2, 3, Rational(1));
    a.set(2, 4, Rational(4));
    a.set(3, 5, Rational(2));
    a.set(4, 5, Rational(7));
    CHECK(pflab::pfaffian_expansion(a) == Rational(0));
    pflab::RetryPolicy policy;
    policy.retries = 8;
    policy.resample_lambda = true;
    auto r = pflab::glv_condense(a, ones(6), Rational(1), policy);
    CHECK(r.value == Rational(0));
}

TEST_CASE("zero divisor carries the failing cell and retries resample alpha") {
    pflab::Rng rng(83);
    SkewMatrix<Rational> a = pflab::random_integer_skew(rng, 6);
    // alpha alternating +-1 makes psi_0^{k,1} = 0, a guaranteed zero divisor.
    std::vector<Rational> alpha;
    for (int i = 0; i < 6; ++i) alpha.push_back(i % 2 == 0 ? Rational(1) : Rational(-1));

    pflab::RetryPolicy no_retry;
    no_retry.retries = 0;
    bool threw = false;
    try {
        pflab::glv_condense(a, alpha, Rational(1), no_retry);
    } catch (const pflab::CondensationFailure& f) {
        threw = true;
        CHECK((f.stage() == "psi" || f.stage() == "phi"));
    }
    CHECK(threw);

    auto r = pflab::glv_condense(a, alpha, Rational(1), pflab::RetryPolicy{});
    CHECK(r.attempts > 1);
    CHECK(r.value == pflab::pfaffian_expansion(a));
}
