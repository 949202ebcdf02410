#ifndef PFLAB_SUITES_HPP
#define PFLAB_SUITES_HPP

#include <string>
#include <vector>

#include "pflab/identities.hpp"
#include "pflab/lattice_lab.hpp"
#include "pflab/somos.hpp"

namespace pflab {

// Seeded verification suites driven by `verify` on the CLI and by the
// acceptance run. Every suite is deterministic under (seed, trials, size).
struct SuiteConfig {
    std::uint64_t seed = 42;
    int trials = 100;
    int size = 3;  // n_max / N_max knob for the lattice suites
};

// Bilinear (even)/(odd), Gram, Wronski, and congruence checkers over
// seeded random instances; one aggregated case per checker.
inline VerificationReport run_identities_suite(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    VerificationReport rep;
    rep.suite = "identities";
    rep.seed = cfg.seed;

    ResidualTracker<Rational> even_tr, odd_tr, gram_tr, wronski_tr, cong_tr;
    for (int t = 0; t < cfg.trials; ++t) {
        const std::string tag = "trial=" + std::to_string(t);
        {
            const std::size_t nstar = (t % 2 == 0) ? 2 : 4;
            std::vector<Label> as, stars;
            for (int i = 0; i < 4; ++i) as.push_back(Label::base(100 + i));
            for (std::size_t i = 0; i < nstar; ++i) stars.push_back(Label::base(static_cast<int>(i)));
            ExtendedSkewArray<Rational> e(concat(as, stars));
            for (std::size_t i = 0; i < e.labels().size(); ++i)
                for (std::size_t j = i + 1; j < e.labels().size(); ++j)
                    e.set(e.labels()[i], e.labels()[j], rng.integer_scalar(9));
            auto r = check_bilinear_even(e, as, stars);
            even_tr.observe(Rational::parse(r.cases[0].residual_max), tag);
        }
        {
            const std::size_t nast = (t % 2 == 0) ? 1 : 3;
            std::vector<Label> as, ast;
            for (int i = 0; i < 3; ++i) as.push_back(Label::base(100 + i));
            for (std::size_t i = 0; i < nast; ++i) ast.push_back(Label::base(static_cast<int>(i)));
            Label last = Label::base(50);
            ExtendedSkewArray<Rational> e(concat(concat(as, ast), {last}));
            for (std::size_t i = 0; i < e.labels().size(); ++i)
                for (std::size_t j = i + 1; j < e.labels().size(); ++j)
                    e.set(e.labels()[i], e.labels()[j], rng.integer_scalar(9));
            auto r = check_bilinear_odd(e, as, ast, last);
            odd_tr.observe(Rational::parse(r.cases[0].residual_max), tag);
        }
        {
            const int n = 2;
            std::vector<Label> labels{Label::a(), Label::b()};
            for (int i = 0; i < 2 * n; ++i) labels.push_back(Label::base(i));
            ExtendedSkewArray<Rational> e(labels);
            for (std::size_t i = 0; i < labels.size(); ++i)
                for (std::size_t j = i + 1; j < labels.size(); ++j)
                    e.set(labels[i], labels[j], rng.integer_scalar(9));
            e.set(Label::a(), Label::b(), Rational(0));
            auto r = check_gram_identities(e, rng.nonzero_rational(7), n);
            for (const auto& c : r.cases)
                gram_tr.observe(Rational::parse(c.residual_max), tag + " " + c.params);
        }
        {
            const int n = 2;
            std::vector<Label> labels{Label::d()};
            for (int i = 0; i <= 2 * n; ++i) labels.push_back(Label::base(i));
            ExtendedSkewArray<Rational> e(labels);
            for (std::size_t i = 0; i < labels.size(); ++i)
                for (std::size_t j = i + 1; j < labels.size(); ++j)
                    e.set(labels[i], labels[j], rng.integer_scalar(9));
            auto r = check_wronski_identities(e, rng.nonzero_rational(7), n);
            for (const auto& c : r.cases)
                wronski_tr.observe(Rational::parse(c.residual_max), tag + " " + c.params);
        }
        {
            const std::size_t order = 2 * (1 + static_cast<std::size_t>(t % 4));  // 2..8
            SkewMatrix<Rational> a = random_integer_skew(rng, order);
            Matrix<Rational> b = random_integer_matrix(rng, order, order);
            auto r = check_congruence(a, b);
            cong_tr.observe(Rational::parse(r.cases[0].residual_max), tag);
        }
    }
    const std::string n = std::to_string(cfg.trials);
    rep.add(even_tr.as_case("bilinear even, m=4, |star| in {2,4}, " + n + " trials"));
    rep.add(odd_tr.as_case("bilinear odd, m=3, |ast| in {1,3}, " + n + " trials"));
    rep.add(gram_tr.as_case("gram1/gram2, n=2, random lambda, " + n + " trials"));
    rep.add(wronski_tr.as_case("wronski1/wronski2, n=2, random lambda, " + n + " trials"));
    rep.add(cong_tr.as_case("congruence, 2N in {2..8}, " + n + " trials"));
    return rep;
}

inline VerificationReport run_glv_suite(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    VerificationReport rep;
    rep.suite = "glv";
    rep.seed = cfg.seed;
    const int n_max = cfg.size, K = 3, L = 3;
    ResidualTracker<Rational> tr;
    for (int t = 0; t < cfg.trials; ++t) {
        auto seed = random_glv_seed<Rational>(rng, glv_seed_requirement(K, L, n_max));
        auto r = verify_glv_solution(seed, K, L, n_max);
        for (const auto& c : r.cases)
            tr.observe(Rational::parse(c.residual_max), "trial=" + std::to_string(t));
    }
    rep.add(tr.as_case("glv solution, n<=" + std::to_string(n_max) + ", 3x3 grid, " +
                       std::to_string(cfg.trials) + " seeds"));
    return rep;
}

inline VerificationReport run_btoda_suite(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    VerificationReport rep;
    rep.suite = "btoda";
    rep.seed = cfg.seed;
    const int n_max = cfg.size, L = 3;
    ResidualTracker<Rational> tr;
    for (int t = 0; t < cfg.trials; ++t) {
        auto seed = random_btoda_seed<Rational>(rng, btoda_seed_requirement(L, n_max));
        auto r = verify_btoda_solution(seed, L, n_max);
        for (const auto& c : r.cases)
            tr.observe(Rational::parse(c.residual_max), "trial=" + std::to_string(t));
    }
    rep.add(tr.as_case("btoda solution (one k-step), n<=" + std::to_string(n_max) + ", L=3, " +
                       std::to_string(cfg.trials) + " seeds"));
    return rep;
}

inline VerificationReport run_dtoda_suite(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    VerificationReport rep;
    rep.suite = "dtoda";
    rep.seed = cfg.seed;
    const int n_max = cfg.size, K = 3, L = 3;
    ResidualTracker<Rational> tr;
    for (int t = 0; t < cfg.trials; ++t) {
        auto seed = lab::random_skew_table<Rational>(rng, dtoda_seed_requirement(K, L, n_max));
        auto r = verify_dtoda_solution(seed, K, L, n_max);
        for (const auto& c : r.cases)
            tr.observe(Rational::parse(c.residual_max), "trial=" + std::to_string(t));
    }
    rep.add(tr.as_case("dtoda solution, n<=" + std::to_string(n_max) + ", 3x3 grid, " +
                       std::to_string(cfg.trials) + " seeds"));
    return rep;
}

inline VerificationReport run_dckp_suite(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    VerificationReport rep;
    rep.suite = "dckp";
    rep.seed = cfg.seed;
    const int n_max = cfg.size, Mext = 2, L = 2;
    ResidualTracker<Rational> commute, c1, c2, c3, c4, c5, eq;
    for (int t = 0; t < cfg.trials; ++t) {
        auto seed = random_gram_seed<Rational>(rng, dckp_seed_requirement(L, n_max));
        auto r = verify_dckp(seed, Mext, L, n_max);
        ResidualTracker<Rational>* trackers[] = {&commute, &c1, &c2, &c3, &c4, &c5, &eq};
        for (std::size_t i = 0; i < r.cases.size() && i < 7; ++i)
            trackers[i]->observe(Rational::parse(r.cases[i].residual_max),
                                 "trial=" + std::to_string(t));
    }
    const std::string suffix =
        ", N<=" + std::to_string(n_max) + ", " + std::to_string(cfg.trials) + " seeds";
    rep.add(commute.as_case("m/l commutation" + suffix));
    rep.add(c1.as_case("c1" + suffix));
    rep.add(c2.as_case("c2" + suffix));
    rep.add(c3.as_case("c3" + suffix));
    rep.add(c4.as_case("c4" + suffix));
    rep.add(c5.as_case("c5" + suffix));
    rep.add(eq.as_case("dckp equation" + suffix));
    return rep;
}

inline VerificationReport run_somos_suite(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    VerificationReport rep;
    rep.suite = "somos";
    rep.seed = cfg.seed;

    {
        ResidualTracker<Rational> tr;
        auto seq = somos_generate(4, std::vector<Rational>(4, Rational(1)), 20);
        for (std::size_t i = 0; i < seq.terms.size(); ++i)
            tr.observe(seq.terms[i].is_integer() ? Rational(0) : Rational(1),
                       "term " + std::to_string(i + 1));
        rep.add(tr.as_case("somos-4 integrality, 20 terms from unit data"));
    }
    {
        ResidualTracker<Rational> tr;
        std::vector<Rational> values;
        for (int i = 0; i < 64; ++i) values.push_back(rng.nonzero_rational(9));
        for (int variant : {4, 6, 7}) {
            for (int t = 0; t < 50; ++t) {
                long n = rng.uniform_int(1, 5), k = rng.uniform_int(0, 4), l = rng.uniform_int(0, 4);
                std::size_t ell = somos_mapped_index(variant, n, k, l) + (variant == 7 ? 1 : 0);
                Rational diff = somos_reduction_residual(variant, values, n, k, l) -
                                somos_residual(variant, values, ell);
                tr.observe(diff, "variant=" + std::to_string(variant) + " cell(" +
                                     std::to_string(n) + "," + std::to_string(k) + "," +
                                     std::to_string(l) + ")");
            }
        }
        rep.add(tr.as_case("reduction residual == recurrence residual, arbitrary arrays, 50 "
                           "cells per variant"));
    }
    {
        ResidualTracker<Rational> tr;
        auto s4 = somos_generate(4, std::vector<Rational>(4, Rational(1)), 40);
        std::vector<Rational> ones(40, Rational(1));
        for (long n = 1; n <= 3; ++n)
            for (long k = 0; k <= 2; ++k)
                for (long l = 0; l <= 2; ++l) {
                    tr.observe(somos_reduction_residual(4, s4.terms, n, k, l), "somos-4 orbit");
                    tr.observe(somos_reduction_residual(6, ones, n, k, l), "somos-6 ones");
                    tr.observe(somos_reduction_residual(7, ones, n, k, l), "somos-7 ones");
                }
        rep.add(tr.as_case("lattice residuals vanish on genuine sequences"));
    }
    return rep;
}

inline std::vector<VerificationReport> run_suite(const std::string& name,
                                                 const SuiteConfig& cfg) {
    if (name == "identities") return {run_identities_suite(cfg)};
    if (name == "glv") return {run_glv_suite(cfg)};
    if (name == "btoda") return {run_btoda_suite(cfg)};
    if (name == "dtoda") return {run_dtoda_suite(cfg)};
    if (name == "dckp") return {run_dckp_suite(cfg)};
    if (name == "somos") return {run_somos_suite(cfg)};
    if (name == "all")
        return {run_identities_suite(cfg), run_glv_suite(cfg),  run_btoda_suite(cfg),
                run_dtoda_suite(cfg),      run_dckp_suite(cfg), run_somos_suite(cfg)};
    throw ParameterError("unknown suite '" + name + "'");
}

} // namespace pflab

#endif
