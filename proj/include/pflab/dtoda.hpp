#ifndef PFLAB_DTODA_HPP
#define PFLAB_DTODA_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/glv.hpp"
#include "pflab/grid.hpp"
#include "pflab/matrix.hpp"
#include "pflab/rng.hpp"

namespace pflab {

// Pfaffian condensation on the Toda lattice of DKP type: a coupled
// sigma/tau iteration. tau_n and sigma_n live on the triangle
// k + l <= 2(N - n); sigma is only ever produced (and consumed) at l >= 1,
// and sigma_0 == 0. tau_N^{0,0} is the Pfaffian of the input.

template <Field S>
class DtodaPrepared {
public:
    long half_order = 0;  // N
    S lambda = S(-1);
    TriGrid<S> tau1;      // pf(0,1,k,l) on k+l <= 2N-1

    bool has_full_tables() const { return !pf_slices_.empty(); }

    // pf(i,j,k,l) with 0 <= i < j <= 2N-1-k-l, k+l <= 2N-1.
    const S& pf(long i, long j, long k, long l) const {
        if (pf_slices_.empty()) throw RangeError("full pf table was not retained");
        const long n2 = 2 * half_order;
        if (l < 0 || k < 0 || k + l > n2 - 1 || i < 0 || i >= j || j > n2 - 1 - k - l)
            throw RangeError("pf(i,j,k,l) outside the prepared domain");
        std::size_t off = 0;
        for (long kk = 0; kk < k; ++kk) {
            const long size = n2 - kk - l;
            off += static_cast<std::size_t>(size * (size - 1) / 2);
        }
        return pf_slices_[l][off + static_cast<std::size_t>(i * (n2 - k - l) - i * (i + 1) / 2 +
                                                            (j - i - 1))];
    }

    template <Field T>
    friend DtodaPrepared<T> dtoda_prepare(const SkewMatrix<T>&, const T&, bool);

private:
    std::vector<std::vector<S>> pf_slices_;
};

// Quadruplet preparation:
//   pf(i,j,k,0) = a(i+k, j+k)
//   pf(i,j,k,l) = lambda^2 pf(i,j,k,l-1) + lambda pf(i+1,j,k,l-1)
//               + lambda pf(i,j+1,k,l-1) + pf(i+1,j+1,k,l-1)
// which at lambda = -1 is the alternating-sign rule of the unrelaxed
// scheme. Only tau_1^{k,l} = pf(0,1,k,l) is retained unless asked
// otherwise; slices are dropped as l advances.
template <Field S>
DtodaPrepared<S> dtoda_prepare(const SkewMatrix<S>& a, const S& lambda,
                               bool keep_full_tables = false) {
    if (ScalarTraits<S>::is_zero(lambda)) throw ParameterError("dtoda requires lambda != 0");
    const long n2 = static_cast<long>(a.order());

    DtodaPrepared<S> prep;
    prep.half_order = n2 / 2;
    prep.lambda = lambda;
    prep.tau1 = TriGrid<S>(n2 - 1);

    const S l2 = lambda * lambda;
    auto tri = [](long i, long j, long size) {
        return static_cast<std::size_t>(i * size - i * (i + 1) / 2 + (j - i - 1));
    };

    // Slice l holds pf(i,j,k,l) for k <= 2N-1-l, i < j <= 2N-1-k-l.
    std::vector<S> prev;
    for (long k = 0; k <= n2 - 1; ++k) {
        const long size = n2 - k;
        for (long i = 0; i < size; ++i)
            for (long j = i + 1; j < size; ++j)
                prev.push_back(a.a(static_cast<std::size_t>(i + k), static_cast<std::size_t>(j + k)));
    }
    for (long k = 0; k <= n2 - 1; ++k)
        if (k <= n2 - 2) prep.tau1.at(k, 0) = a.a(k, k + 1);
    if (keep_full_tables) prep.pf_slices_.push_back(prev);

    for (long l = 1; l <= n2 - 1; ++l) {
        std::vector<S> cur;
        std::size_t prev_off = 0;
        for (long k = 0; k + l <= n2 - 1; ++k) {
            const long size = n2 - k - l;
            const long psize = size + 1;
            for (long i = 0; i < size; ++i) {
                for (long j = i + 1; j < size; ++j) {
                    const S& p00 = prev[prev_off + tri(i, j, psize)];
                    const S& p11 = prev[prev_off + tri(i + 1, j + 1, psize)];
                    const S& p01 = prev[prev_off + tri(i, j + 1, psize)];
                    S p10 = (i + 1 == j) ? S(0) : prev[prev_off + tri(i + 1, j, psize)];
                    cur.push_back(l2 * p00 + lambda * p10 + lambda * p01 + p11);
                }
            }
            prev_off += static_cast<std::size_t>(psize * (psize - 1) / 2);
        }
        std::size_t off = 0;
        for (long k = 0; k + l <= n2 - 1; ++k) {
            const long size = n2 - k - l;
            if (size >= 2) prep.tau1.at(k, l) = cur[off + tri(0, 1, size)];
            off += static_cast<std::size_t>(size * (size - 1) / 2);
        }
        if (keep_full_tables) prep.pf_slices_.push_back(cur);
        prev = std::move(cur);
    }
    return prep;
}

// Iteration state. tau[n] on k+l <= 2(N-n); sigma[n] on the same triangle
// with l >= 1 (stored with the l = 0 column unused and zero).
template <Field S>
struct DtodaTables {
    long half_order = 0;
    S lambda = S(-1);
    std::vector<TriGrid<S>> tau;
    std::vector<TriGrid<S>> sigma;

    static DtodaTables from_prepared(const DtodaPrepared<S>& prep) {
        DtodaTables t;
        t.half_order = prep.half_order;
        t.lambda = prep.lambda;
        const long n2 = 2 * prep.half_order;
        t.tau.emplace_back(n2, S(1));   // tau_0 == 1
        // tau_1 domain is k+l <= 2(N-1); the prepared grid covers 2N-1 >= that.
        TriGrid<S> tau1(2 * (prep.half_order - 1));
        for (long s = 0; s <= tau1.extent(); ++s)
            for (long k = 0; k <= s; ++k) tau1.at(k, s - k) = prep.tau1.at(k, s - k);
        t.tau.push_back(std::move(tau1));
        t.sigma.emplace_back(n2, S(0)); // sigma_0 == 0
        return t;
    }
};

// sigma update, the first line of the relaxed coupled scheme:
//   sigma_n^{k,l+1} tau_{n-1}^{k+1,l+1} =
//       sigma_{n-1}^{k+1,l+1} tau_n^{k,l+1}
//     - (1/lambda) tau_{n-1}^{k+1,l+1} tau_n^{k,l+1}
//     + (1/lambda) tau_{n-1}^{k,l+2}   tau_n^{k+1,l}
//     -  lambda    tau_{n-1}^{k+1,l+2} tau_n^{k,l}
// At lambda = -1 this is the D-type Toda equation (sigma line) rearranged.
// (The relaxed weights follow from the Pfaffian solution of the
// lambda-prepared data; see the tau-update note below.)
template <Field S>
void dtoda_step_sigma(DtodaTables<S>& t, long n) {
    const S li = S(1) / t.lambda;
    const long extent = 2 * (t.half_order - n);
    TriGrid<S> out(extent);
    for (long s = 0; s <= extent; ++s) {
        for (long k = 0; k <= s; ++k) {
            const long lp = s - k;  // target l-index, >= 1 needed
            if (lp < 1) continue;
            const long l = lp - 1;
            const S& div = t.tau[n - 1].at(k + 1, l + 1);
            if (ScalarTraits<S>::is_zero(div)) throw ZeroDivisorError("sigma", n, k, lp);
            S num = t.sigma[n - 1].at(k + 1, l + 1) * t.tau[n].at(k, l + 1) -
                    li * t.tau[n - 1].at(k + 1, l + 1) * t.tau[n].at(k, l + 1) +
                    li * t.tau[n - 1].at(k, l + 2) * t.tau[n].at(k + 1, l) -
                    t.lambda * t.tau[n - 1].at(k + 1, l + 2) * t.tau[n].at(k, l);
            out.at(k, lp) = num / div;
        }
    }
    if (static_cast<long>(t.sigma.size()) != n)
        throw RangeError("dtoda_step_sigma expects sigma levels 0.." + std::to_string(n - 1));
    t.sigma.push_back(std::move(out));
}

// tau update, the second line:
//   tau_{n+1}^{k,l} tau_{n-1}^{k+1,l+2} =
//       (1/lambda)   sigma_n^{k+1,l+1} tau_n^{k,l+1}
//     - (1/lambda)   sigma_n^{k,l+1}   tau_n^{k+1,l+1}
//     + (1/lambda^2) tau_n^{k+1,l}     tau_n^{k,l+2}
//     - (1/lambda^2) tau_n^{k,l+1}     tau_n^{k+1,l+1}
// At lambda = -1 this is the D-type Toda equation (tau line) rearranged.
template <Field S>
void dtoda_step_tau(DtodaTables<S>& t, long n) {
    const S li = S(1) / t.lambda;
    const S li2 = li * li;
    const long extent = 2 * (t.half_order - n - 1);
    TriGrid<S> out(extent);
    for (long s = 0; s <= extent; ++s) {
        for (long k = 0; k <= s; ++k) {
            const long l = s - k;
            const S& div = t.tau[n - 1].at(k + 1, l + 2);
            if (ScalarTraits<S>::is_zero(div)) throw ZeroDivisorError("tau", n, k, l);
            S num = li * t.sigma[n].at(k + 1, l + 1) * t.tau[n].at(k, l + 1) -
                    li * t.sigma[n].at(k, l + 1) * t.tau[n].at(k + 1, l + 1) +
                    li2 * t.tau[n].at(k + 1, l) * t.tau[n].at(k, l + 2) -
                    li2 * t.tau[n].at(k, l + 1) * t.tau[n].at(k + 1, l + 1);
            out.at(k, l) = num / div;
        }
    }
    if (static_cast<long>(t.tau.size()) != n + 1)
        throw RangeError("dtoda_step_tau expects tau levels 0.." + std::to_string(n));
    t.tau.push_back(std::move(out));
}

template <Field S>
struct DtodaResult {
    S value;
    DtodaTables<S> tables;
    int attempts = 1;
};

// Prepare then iterate sigma/tau for n = 1..N-1; returns tau_N^{0,0}.
// A zero divisor surfaces with its cell; there is no free alpha to
// resample, so retries (if any) draw a fresh lambda.
template <Field S>
DtodaResult<S> dtoda_condense(const SkewMatrix<S>& a, const S& lambda) {
    if (a.order() == 0) return {S(1), DtodaTables<S>{}, 1};
    DtodaTables<S> t = DtodaTables<S>::from_prepared(dtoda_prepare(a, lambda));
    for (long n = 1; n <= t.half_order - 1; ++n) {
        dtoda_step_sigma(t, n);
        dtoda_step_tau(t, n);
    }
    S value = t.tau[static_cast<std::size_t>(t.half_order)].at(0, 0);
    return {std::move(value), std::move(t), 1};
}

template <Field S>
DtodaResult<S> dtoda_condense(const SkewMatrix<S>& a) {
    return dtoda_condense(a, S(-1));
}

struct DtodaRetryPolicy {
    int retries = 2;
    std::uint64_t seed = 20240819;
};

template <Field S>
DtodaResult<S> dtoda_condense_retry(const SkewMatrix<S>& a, S lambda,
                                    const DtodaRetryPolicy& policy = {}) {
    Rng rng(policy.seed);
    int attempt = 0;
    for (;;) {
        ++attempt;
        try {
            DtodaResult<S> r = dtoda_condense(a, lambda);
            r.attempts = attempt;
            return r;
        } catch (const ZeroDivisorError& zde) {
            if (attempt > policy.retries)
                throw CondensationFailure("dtoda_condense", zde, attempt);
            lambda = scalar_from_rational<S>(rng.nonzero_rational(5));
        }
    }
}

} // namespace pflab

#endif
