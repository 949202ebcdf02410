#ifndef PFLAB_LATTICE_LAB_HPP
#define PFLAB_LATTICE_LAB_HPP

#include <string>
#include <vector>

#include "pflab/extended.hpp"
#include "pflab/matrix.hpp"
#include "pflab/pfaffian.hpp"
#include "pflab/report.hpp"
#include "pflab/rng.hpp"

namespace pflab {

namespace lab {

// Dense full skew table over base labels 0..size-1 (both triangles held).
template <Field S>
using SkewTable = std::vector<std::vector<S>>;

template <Field S>
SkewTable<S> random_skew_table(Rng& rng, std::size_t size, long bound = 9) {
    SkewTable<S> e(size, std::vector<S>(size, S(0)));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) {
            S v = scalar_from_rational<S>(rng.integer_scalar(bound));
            e[i][j] = v;
            e[j][i] = -v;
        }
    return e;
}

// Pf(i,j)^{k+1,l} = Pf(i+1,j+1)^{k,l}
template <Field S>
SkewTable<S> shift_step(const SkewTable<S>& e) {
    const std::size_t n = e.size() - 1;
    SkewTable<S> out(n, std::vector<S>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = e[i + 1][j + 1];
    return out;
}

// Pf(i,j)^{k,l+1} = Pf(i,j) + s (Pf(i+1,j) + Pf(i,j+1)) + Pf(i+1,j+1), s = +-1
template <Field S>
SkewTable<S> sum4_step(const SkewTable<S>& e, int s) {
    const std::size_t n = e.size() - 1;
    const S sg = S(s);
    SkewTable<S> out(n, std::vector<S>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = e[i][j] + sg * (e[i + 1][j] + e[i][j + 1]) + e[i + 1][j + 1];
    return out;
}

template <Field S>
std::vector<S> shift_step(const std::vector<S>& d) {
    return std::vector<S>(d.begin() + 1, d.end());
}

// Pf(d,i)^{k,l+1} = Pf(d,i) + Pf(d,i+1)
template <Field S>
std::vector<S> sum2_step(const std::vector<S>& d) {
    std::vector<S> out(d.size() - 1);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) out[i] = d[i] + d[i + 1];
    return out;
}

// Pf(0, ..., m-1) over a dense skew table.
template <Field S>
S pf_base(const SkewTable<S>& e, std::size_t m) {
    return pfaffian_by_expansion<S>(m, [&](std::size_t r, std::size_t c) { return e[r][c]; });
}

// Pf(x, 0, ..., m-1) with border row x.
template <Field S>
S pf_border(const std::vector<S>& row, const SkewTable<S>& e, std::size_t m) {
    return pfaffian_by_expansion<S>(m + 1, [&](std::size_t r, std::size_t c) {
        return r == 0 ? row[c - 1] : e[r - 1][c - 1];
    });
}

// Pf(x, y, 0, ..., m-1) with border rows x, y and entry Pf(x,y) = exy.
template <Field S>
S pf_border2(const std::vector<S>& rowx, const std::vector<S>& rowy, const S& exy,
             const SkewTable<S>& e, std::size_t m) {
    return pfaffian_by_expansion<S>(m + 2, [&](std::size_t r, std::size_t c) {
        if (r == 0) return c == 1 ? exy : rowx[c - 2];
        if (r == 1) return rowy[c - 2];
        return e[r - 2][c - 2];
    });
}

} // namespace lab

// ------------------------------------------------------------------
// Generalised Lotka-Volterra lattice: Proposition-level verification.
// Builds tau_{2n} = Pf(0..2n-1)^{k,l}, tau_{2n+1} = Pf(d,0..2n)^{k,l}
// from a random element table evolved by the stated rules and evaluates
// the GLV equation at every cell, division-free.
// ------------------------------------------------------------------

template <Field S>
struct GlvSeed {
    lab::SkewTable<S> base;  // Pf(i,j)^{0,0}
    std::vector<S> d;        // Pf(d,i)^{0,0}
};

template <Field S>
GlvSeed<S> random_glv_seed(Rng& rng, std::size_t base_count) {
    GlvSeed<S> s;
    s.base = lab::random_skew_table<S>(rng, base_count);
    for (std::size_t i = 0; i < base_count; ++i)
        s.d.push_back(scalar_from_rational<S>(rng.integer_scalar(9)));
    return s;
}

inline std::size_t glv_seed_requirement(int K, int L, int n_max) {
    return static_cast<std::size_t>(n_max + K + L);  // base labels 0 .. n_max+K+L-1
}

template <Field S>
VerificationReport verify_glv_solution(const GlvSeed<S>& seed, int K, int L, int n_max) {
    const std::size_t need = glv_seed_requirement(K, L, n_max);
    if (seed.base.size() < need || seed.d.size() < need)
        throw SeedSizeError(std::min(seed.base.size(), seed.d.size()), need);

    // element tables on [0..K] x [0..L]
    std::vector<std::vector<lab::SkewTable<S>>> E(K + 1, std::vector<lab::SkewTable<S>>(L + 1));
    std::vector<std::vector<std::vector<S>>> D(K + 1, std::vector<std::vector<S>>(L + 1));
    E[0][0] = seed.base;
    D[0][0] = seed.d;
    for (int k = 1; k <= K; ++k) {
        E[k][0] = lab::shift_step(E[k - 1][0]);
        D[k][0] = lab::shift_step(D[k - 1][0]);
    }
    for (int k = 0; k <= K; ++k)
        for (int l = 1; l <= L; ++l) {
            E[k][l] = lab::sum4_step(E[k][l - 1], +1);
            D[k][l] = lab::sum2_step(D[k][l - 1]);
        }

    // tau_m^{k,l} for m <= n_max + 2
    auto tau = [&](long m, int k, int l) -> S {
        if (m < 0) return S(0);
        if (m == 0) return S(1);
        const std::size_t mm = static_cast<std::size_t>(m);
        if (mm % 2 == 0) return lab::pf_base(E[k][l], mm);
        return lab::pf_border(D[k][l], E[k][l], mm);
    };

    VerificationReport rep;
    rep.suite = "glv-solution";
    ResidualTracker<S> tr;
    for (long n = 1; n <= n_max; ++n) {
        for (int k = 0; k < K; ++k)
            for (int l = 0; l < L; ++l) {
                S r = tau(n + 2, k, l) * tau(n - 1, k + 1, l + 1) -
                      tau(n, k, l + 1) * tau(n + 1, k + 1, l) -
                      tau(n, k + 1, l + 1) * tau(n + 1, k, l) +
                      tau(n, k + 1, l) * tau(n + 1, k, l + 1);
                tr.observe(r, "(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                  ",l=" + std::to_string(l) + ")");
            }
    }
    rep.add(tr.as_case("glv equation, n<=" + std::to_string(n_max) + ", grid " +
                       std::to_string(K) + "x" + std::to_string(L)));
    return rep;
}

// ------------------------------------------------------------------
// Miwa / discrete BKP equation. The k-evolution of Pf(d1,i) is not part
// of the stated scheme, so exactly one k-step is taken (at l = 0) and the
// equation is checked on cells (0, l) only.
// ------------------------------------------------------------------

template <Field S>
struct BtodaSeed {
    lab::SkewTable<S> base;
    std::vector<S> d0;
    std::vector<S> d1;  // Pf(d0,d1) = 0 is imposed by the scheme
};

template <Field S>
BtodaSeed<S> random_btoda_seed(Rng& rng, std::size_t base_count) {
    BtodaSeed<S> s;
    s.base = lab::random_skew_table<S>(rng, base_count);
    for (std::size_t i = 0; i < base_count; ++i) {
        s.d0.push_back(scalar_from_rational<S>(rng.integer_scalar(9)));
        s.d1.push_back(scalar_from_rational<S>(rng.integer_scalar(9)));
    }
    return s;
}

inline std::size_t btoda_seed_requirement(int L, int n_max) {
    return static_cast<std::size_t>(n_max + L + 1);  // labels 0 .. n_max+L
}

template <Field S>
VerificationReport verify_btoda_solution(const BtodaSeed<S>& seed, int L, int n_max) {
    const std::size_t need = btoda_seed_requirement(L, n_max);
    if (seed.base.size() < need || seed.d0.size() < need || seed.d1.size() < need)
        throw SeedSizeError(std::min(seed.base.size(), std::min(seed.d0.size(), seed.d1.size())),
                            need);

    const std::size_t sz = seed.base.size();

    // one k-step at (0,0): Pf(i,j)' = Pf(i,j) + Pf(d0,d1,i,j), Pf(d0,i)' = Pf(d1,i)
    lab::SkewTable<S> ek(sz, std::vector<S>(sz));
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j)
            ek[i][j] = seed.base[i][j] - seed.d0[i] * seed.d1[j] + seed.d0[j] * seed.d1[i];

    std::vector<lab::SkewTable<S>> E0(L + 2), E1(L + 2);
    std::vector<std::vector<S>> D0(L + 2), D1(L + 2);
    E0[0] = seed.base;
    D0[0] = seed.d0;
    E1[0] = ek;
    D1[0] = seed.d1;
    for (int l = 1; l <= L + 1; ++l) {
        E0[l] = lab::sum4_step(E0[l - 1], +1);
        D0[l] = lab::sum2_step(D0[l - 1]);
        E1[l] = lab::sum4_step(E1[l - 1], +1);
        D1[l] = lab::sum2_step(D1[l - 1]);
    }

    auto tau = [&](long m, int k, int l) -> S {
        if (m < 0) return S(0);
        if (m == 0) return S(1);
        const std::size_t mm = static_cast<std::size_t>(m);
        const auto& e = (k == 0) ? E0[l] : E1[l];
        const auto& d = (k == 0) ? D0[l] : D1[l];
        if (mm % 2 == 0) return lab::pf_base(e, mm);
        return lab::pf_border(d, e, mm);
    };

    VerificationReport rep;
    rep.suite = "btoda-solution";
    ResidualTracker<S> tr;
    for (long n = 1; n <= n_max; ++n) {
        for (int l = 0; l < L; ++l) {
            S r = tau(n, 1, l + 1) * tau(n, 0, l) - tau(n, 0, l + 1) * tau(n, 1, l) -
                  tau(n - 1, 1, l + 1) * tau(n + 1, 0, l) +
                  tau(n + 1, 1, l) * tau(n - 1, 0, l + 1);
            tr.observe(r, "(n=" + std::to_string(n) + ",l=" + std::to_string(l) + ")");
        }
    }
    rep.add(tr.as_case("btoda equation, n<=" + std::to_string(n_max) + ", k=0, l<" +
                       std::to_string(L)));
    return rep;
}

// ------------------------------------------------------------------
// Toda lattice of DKP type. d0 row is identically 1, the d1 row at level
// l >= 1 is the difference of the 0-row one level below, and sigma_n is
// the (d0,d1)-bordered Pfaffian. Both coupled equations are checked.
// ------------------------------------------------------------------

inline std::size_t dtoda_seed_requirement(int K, int L, int n_max) {
    return static_cast<std::size_t>(2 * n_max + K + L);  // labels 0 .. 2n_max+K+L-1
}

template <Field S>
VerificationReport verify_dtoda_solution(const lab::SkewTable<S>& seed_base, int K, int L,
                                         int n_max) {
    const std::size_t need = dtoda_seed_requirement(K, L, n_max);
    if (seed_base.size() < need) throw SeedSizeError(seed_base.size(), need);

    std::vector<std::vector<lab::SkewTable<S>>> E(K + 1,
                                                  std::vector<lab::SkewTable<S>>(L + 2));
    E[0][0] = seed_base;
    for (int k = 1; k <= K; ++k) E[k][0] = lab::shift_step(E[k - 1][0]);
    for (int k = 0; k <= K; ++k)
        for (int l = 1; l <= L + 1; ++l) E[k][l] = lab::sum4_step(E[k][l - 1], -1);

    auto tau = [&](long m, int k, int l) -> S {
        if (m == 0) return S(1);
        return lab::pf_base(E[k][l], static_cast<std::size_t>(2 * m));
    };
    // sigma_n^{k,l} = Pf(d0, d1, 0..2n-1)^{k,l}; defined for l >= 1
    auto sigma = [&](long m, int k, int l) -> S {
        if (m == 0) return S(0);
        const std::size_t mm = static_cast<std::size_t>(2 * m);
        const auto& below = E[k][l - 1];
        std::vector<S> d0(mm, S(1)), d1(mm);
        for (std::size_t i = 0; i < mm; ++i) d1[i] = below[0][i + 1] - below[0][i];
        return lab::pf_border2(d0, d1, S(0), E[k][l], mm);
    };

    VerificationReport rep;
    rep.suite = "dtoda-solution";
    ResidualTracker<S> tr1, tr2;
    for (long n = 1; n <= n_max; ++n) {
        for (int k = 0; k < K; ++k)
            for (int l = 0; l < L; ++l) {
                const std::string cell = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                         ",l=" + std::to_string(l) + ")";
                S r1 = sigma(n, k, l + 1) * tau(n - 1, k + 1, l + 1) -
                       tau(n - 1, k + 1, l + 1) * tau(n, k, l + 1) -
                       tau(n - 1, k + 1, l + 2) * tau(n, k, l) +
                       tau(n - 1, k, l + 2) * tau(n, k + 1, l) -
                       sigma(n - 1, k + 1, l + 1) * tau(n, k, l + 1);
                tr1.observe(r1, cell);
                S r2 = tau(n + 1, k, l) * tau(n - 1, k + 1, l + 2) -
                       sigma(n, k, l + 1) * tau(n, k + 1, l + 1) +
                       sigma(n, k + 1, l + 1) * tau(n, k, l + 1) +
                       tau(n, k + 1, l + 1) * tau(n, k, l + 1) -
                       tau(n, k, l + 2) * tau(n, k + 1, l);
                tr2.observe(r2, cell);
            }
    }
    const std::string params = "n<=" + std::to_string(n_max) + ", grid " + std::to_string(K) +
                               "x" + std::to_string(L);
    rep.add(tr1.as_case("dtoda sigma equation, " + params));
    rep.add(tr2.as_case("dtoda tau equation, " + params));
    return rep;
}

// ------------------------------------------------------------------
// Discrete C-Toda (dCKP) lattice, Gram-type solution. The seed is a
// symmetric array I and a vector alpha; evolutions are
//   l: I -> I_{ij} - I_{i+1,j} - I_{i,j+1} + I_{i+1,j+1},
//      alpha_i -> alpha_{i+1} - alpha_i
//   m: I -> I + alpha alpha^T, alpha constant.
// tau_N = det(I_N) (= the Gram Pfaffian), sigma_N = (-1)^N Pf(d0,0..N-1,N*..0*),
// xi_N = Pf(c0,d0*,0..N,N*..0*). The checks are the evolution commutation,
// the five intermediate identities, and the dCKP equation, all exact.
// ------------------------------------------------------------------

template <Field S>
struct GramSeed {
    std::vector<std::vector<S>> gram;  // symmetric I_{ij}^{0,0}
    std::vector<S> alpha;              // alpha_i^{0,0}
};

template <Field S>
GramSeed<S> random_gram_seed(Rng& rng, std::size_t size) {
    GramSeed<S> s;
    s.gram.assign(size, std::vector<S>(size, S(0)));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) {
            S v = scalar_from_rational<S>(rng.integer_scalar(9));
            s.gram[i][j] = v;
            s.gram[j][i] = v;
        }
    for (std::size_t i = 0; i < size; ++i)
        s.alpha.push_back(scalar_from_rational<S>(rng.integer_scalar(9)));
    return s;
}

inline std::size_t dckp_seed_requirement(int L, int n_max) {
    return static_cast<std::size_t>(n_max + L + 1);  // I indices 0 .. n_max+L
}

namespace lab {

template <Field S>
std::vector<std::vector<S>> gram_lstep(const std::vector<std::vector<S>>& I) {
    const std::size_t n = I.size() - 1;
    std::vector<std::vector<S>> out(n, std::vector<S>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = I[i][j] - I[i + 1][j] - I[i][j + 1] + I[i + 1][j + 1];
    return out;
}

template <Field S>
std::vector<S> alpha_lstep(const std::vector<S>& a) {
    std::vector<S> out(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) out[i] = a[i + 1] - a[i];
    return out;
}

template <Field S>
std::vector<std::vector<S>> gram_mstep(const std::vector<std::vector<S>>& I,
                                       const std::vector<S>& a) {
    std::vector<std::vector<S>> out = I;
    for (std::size_t i = 0; i < I.size(); ++i)
        for (std::size_t j = 0; j < I.size(); ++j) out[i][j] = out[i][j] + a[i] * a[j];
    return out;
}

// Extended array over {d0, c0, d0*, c0*, 0..B-1, 0*..B-1*} for one cell.
template <Field S>
ExtendedSkewArray<S> gram_cell_array(const std::vector<std::vector<S>>& I,
                                     const std::vector<S>& a) {
    const int b = static_cast<int>(I.size());
    std::vector<Label> labels{Label::d0(), Label::c(), Label::d0_star(), Label::c_star()};
    for (int i = 0; i < b; ++i) labels.push_back(Label::base(i));
    for (int i = 0; i < b; ++i) labels.push_back(Label::star(i));
    ExtendedSkewArray<S> e(labels);
    for (int i = 0; i < b; ++i) {
        e.set(Label::d0(), Label::star(i), a[static_cast<std::size_t>(i)]);
        e.set(Label::d0_star(), Label::base(i), a[static_cast<std::size_t>(i)]);
        e.set(Label::c(), Label::star(i), S(1));
        e.set(Label::c_star(), Label::base(i), S(1));
        for (int j = 0; j < b; ++j)
            e.set(Label::base(i), Label::star(j),
                  I[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return e;
}

} // namespace lab

template <Field S>
VerificationReport verify_dckp(const GramSeed<S>& seed, int Mext, int L, int n_max) {
    const std::size_t need = dckp_seed_requirement(L, n_max);
    if (seed.gram.size() < need || seed.alpha.size() < need)
        throw SeedSizeError(std::min(seed.gram.size(), seed.alpha.size()), need);
    for (std::size_t i = 0; i < seed.gram.size(); ++i)
        for (std::size_t j = i + 1; j < seed.gram.size(); ++j)
            if (!(ScalarTraits<S>::is_zero(S(seed.gram[i][j] - seed.gram[j][i]))))
                throw PreconditionError("dckp seed requires a symmetric Gram array");

    // evolve the grid
    std::vector<std::vector<std::vector<std::vector<S>>>> I(
        Mext + 2, std::vector<std::vector<std::vector<S>>>(L + 2));
    std::vector<std::vector<S>> alpha(L + 2);
    alpha[0] = seed.alpha;
    for (int l = 1; l <= L + 1; ++l) alpha[l] = lab::alpha_lstep(alpha[l - 1]);
    I[0][0] = seed.gram;
    for (int m = 1; m <= Mext + 1; ++m) I[m][0] = lab::gram_mstep(I[m - 1][0], alpha[0]);
    for (int m = 0; m <= Mext + 1; ++m)
        for (int l = 1; l <= L + 1; ++l) I[m][l] = lab::gram_lstep(I[m][l - 1]);

    // per-cell extended arrays, built once
    std::vector<std::vector<ExtendedSkewArray<S>>> cell;
    for (int m = 0; m <= Mext + 1; ++m) {
        std::vector<ExtendedSkewArray<S>> row;
        for (int l = 0; l <= L + 1; ++l) row.push_back(lab::gram_cell_array(I[m][l], alpha[l]));
        cell.push_back(std::move(row));
    }

    auto cache3 = [&](auto&& fill) {
        std::vector<std::vector<std::vector<S>>> c(
            static_cast<std::size_t>(n_max + 2),
            std::vector<std::vector<S>>(static_cast<std::size_t>(Mext + 2),
                                        std::vector<S>(static_cast<std::size_t>(L + 2), S(0))));
        fill(c);
        return c;
    };

    auto TAU = cache3([&](auto& c) {
        for (long N = 0; N <= n_max + 1; ++N)
            for (int m = 0; m <= Mext + 1; ++m)
                for (int l = 0; l <= L + 1; ++l) {
                    if (static_cast<std::size_t>(N) > I[m][l].size()) continue;
                    Matrix<S> mm(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
                    for (long i = 0; i < N; ++i)
                        for (long j = 0; j < N; ++j)
                            mm(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                                I[m][l][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    c[N][m][l] = determinant(mm);
                }
    });
    auto SIG = cache3([&](auto& c) {
        for (long N = 0; N <= n_max; ++N)
            for (int m = 0; m <= Mext + 1; ++m)
                for (int l = 0; l <= L + 1; ++l) {
                    if (static_cast<std::size_t>(N + 1) > I[m][l].size()) continue;
                    std::vector<Label> ls{Label::d0()};
                    for (long i = 0; i < N; ++i) ls.push_back(Label::base(static_cast<int>(i)));
                    for (long i = N; i >= 0; --i) ls.push_back(Label::star(static_cast<int>(i)));
                    S v = cell[m][l].pf(ls);
                    c[N][m][l] = (N % 2 == 0) ? v : -v;
                }
    });
    auto XI = cache3([&](auto& c) {
        for (long N = 0; N <= n_max; ++N)
            for (int m = 0; m <= Mext + 1; ++m)
                for (int l = 0; l <= L + 1; ++l) {
                    if (static_cast<std::size_t>(N + 1) > I[m][l].size()) continue;
                    std::vector<Label> ls{Label::c(), Label::d0_star()};
                    for (long i = 0; i <= N; ++i) ls.push_back(Label::base(static_cast<int>(i)));
                    for (long i = N; i >= 0; --i) ls.push_back(Label::star(static_cast<int>(i)));
                    c[N][m][l] = cell[m][l].pf(ls);
                }
    });

    auto tau = [&](long N, int m, int l) -> S { return TAU[N][m][l]; };
    auto sigma = [&](long N, int m, int l) -> S { return SIG[N][m][l]; };
    auto xi = [&](long N, int m, int l) -> S { return XI[N][m][l]; };

    VerificationReport rep;
    rep.suite = "dckp";

    // the two evolutions commute on I
    {
        ResidualTracker<S> tr;
        for (int m = 0; m <= Mext; ++m)
            for (int l = 0; l <= L; ++l) {
                auto route_a = lab::gram_lstep(lab::gram_mstep(I[m][l], alpha[l]));
                auto route_b = lab::gram_mstep(lab::gram_lstep(I[m][l]), alpha[l + 1]);
                for (std::size_t i = 0; i < route_a.size(); ++i)
                    for (std::size_t j = 0; j < route_a.size(); ++j)
                        tr.observe(S(route_a[i][j] - route_b[i][j]),
                                   "(m=" + std::to_string(m) + ",l=" + std::to_string(l) + ",i=" +
                                       std::to_string(i) + ",j=" + std::to_string(j) + ")");
            }
        rep.add(tr.as_case("m/l evolution commutation"));
    }

    ResidualTracker<S> c1, c2, c3, c4, c5, dckp;
    for (long N = 1; N <= n_max; ++N) {
        for (int m = 0; m < Mext; ++m)
            for (int l = 0; l < L; ++l) {
                const std::string cell = "(N=" + std::to_string(N) + ",m=" + std::to_string(m) +
                                         ",l=" + std::to_string(l) + ")";
                c1.observe(S(tau(N + 1, m + 1, l) * tau(N, m, l) -
                             tau(N, m + 1, l) * tau(N + 1, m, l) - sigma(N, m, l) * sigma(N, m, l)),
                           cell);
                c2.observe(S(tau(N, m + 1, l) * tau(N - 1, m, l + 1) -
                             tau(N, m, l) * tau(N - 1, m + 1, l + 1) -
                             xi(N - 1, m, l) * xi(N - 1, m, l)),
                           cell);
                c3.observe(S(tau(N, m + 1, l + 1) * tau(N, m, l) -
                             tau(N, m + 1, l) * tau(N, m, l + 1) -
                             sigma(N, m, l) * sigma(N - 1, m, l + 1) +
                             xi(N, m, l) * xi(N - 1, m, l)),
                           cell);
                c4.observe(S(tau(N + 1, m + 1, l) * tau(N - 1, m, l + 1) -
                             tau(N + 1, m, l) * tau(N - 1, m + 1, l + 1) -
                             sigma(N, m, l) * sigma(N - 1, m, l + 1) -
                             xi(N, m, l) * xi(N - 1, m, l)),
                           cell);
                c5.observe(S(tau(N + 1, m + 1, l) * tau(N - 1, m, l + 1) -
                             tau(N + 1, m, l) * tau(N - 1, m + 1, l + 1) -
                             tau(N, m + 1, l + 1) * tau(N, m, l) +
                             tau(N, m + 1, l) * tau(N, m, l + 1) -
                             S(2) * xi(N, m, l) * xi(N - 1, m, l)),
                           cell);
                S lhs = S(4) *
                        (tau(N + 1, m, l) * tau(N, m + 1, l + 1) -
                         tau(N + 1, m + 1, l) * tau(N, m, l + 1)) *
                        (tau(N, m, l) * tau(N - 1, m + 1, l + 1) -
                         tau(N, m + 1, l) * tau(N - 1, m, l + 1));
                S br = tau(N, m, l) * tau(N, m + 1, l + 1) +
                       tau(N + 1, m, l) * tau(N - 1, m + 1, l + 1) -
                       tau(N - 1, m, l + 1) * tau(N + 1, m + 1, l) -
                       tau(N, m + 1, l) * tau(N, m, l + 1);
                dckp.observe(S(lhs - br * br), cell);
            }
    }
    const std::string params = "N<=" + std::to_string(n_max) + ", grid " + std::to_string(Mext) +
                               "x" + std::to_string(L);
    rep.add(c1.as_case("c1, " + params));
    rep.add(c2.as_case("c2, " + params));
    rep.add(c3.as_case("c3, " + params));
    rep.add(c4.as_case("c4, " + params));
    rep.add(c5.as_case("c5, " + params));
    rep.add(dckp.as_case("dckp equation, " + params));
    return rep;
}

} // namespace pflab

#endif
