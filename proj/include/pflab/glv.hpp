#ifndef PFLAB_GLV_HPP
#define PFLAB_GLV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/grid.hpp"
#include "pflab/matrix.hpp"
#include "pflab/rng.hpp"

namespace pflab {

// Pfaffian condensation on the generalised Lotka-Volterra lattice, the
// Backlund transform of the discrete BKP equation. phi_n plays tau_{2n},
// psi_n plays tau_{2n+1}; phi_N^{0,0} is the Pfaffian of the input.
//
// tau_m is stored exactly on the triangle k + l <= 2N - m.

// Data-preparation output: the phi_1 / psi_0 seed grids, plus (optionally)
// the full quadruplet/triplet stores for per-cell spot checks. The full
// stores are skipped by default; preparation then keeps one l-slice at a
// time, which bounds memory while the O(N^4) work stays untouched.
template <Field S>
class GlvPrepared {
public:
    long half_order = 0;   // N
    S lambda = S(1);
    std::vector<S> alpha;  // 2N free parameters
    TriGrid<S> phi1;       // pf(0,1,k,l) on k+l <= 2N-2
    TriGrid<S> psi0;       // D(0,k,l)    on k+l <= 2N-1

    bool has_full_tables() const { return !pf_slices_.empty(); }

    // pf(i,j,k,l) with 0 <= i < j <= 2N-1-k-l, k+l <= 2N-2.
    const S& pf(long i, long j, long k, long l) const {
        if (pf_slices_.empty()) throw RangeError("full pf table was not retained");
        const long n2 = 2 * half_order;
        if (l < 0 || k < 0 || k + l > n2 - 2 || i < 0 || i >= j || j > n2 - 1 - k - l)
            throw RangeError("pf(i,j,k,l) outside the prepared domain");
        std::size_t off = 0;
        for (long kk = 0; kk < k; ++kk) {
            const long size = n2 - kk - l;
            off += static_cast<std::size_t>(size * (size - 1) / 2);
        }
        return pf_slices_[l][off + tri_index(i, j, n2 - k - l)];
    }

    // D(i,k,l) with 0 <= i <= 2N-1-k-l, k+l <= 2N-1.
    const S& d(long i, long k, long l) const {
        if (d_slices_.empty()) throw RangeError("full d table was not retained");
        const long n2 = 2 * half_order;
        if (l < 0 || k < 0 || k + l > n2 - 1 || i < 0 || i > n2 - 1 - k - l)
            throw RangeError("D(i,k,l) outside the prepared domain");
        std::size_t off = 0;
        for (long kk = 0; kk < k; ++kk) off += static_cast<std::size_t>(n2 - kk - l);
        return d_slices_[l][off + static_cast<std::size_t>(i)];
    }

    template <Field T>
    friend GlvPrepared<T> glv_prepare(const SkewMatrix<T>&, const std::vector<T>&, const T&,
                                      bool);

private:
    static std::size_t tri_index(long i, long j, long size) {
        return static_cast<std::size_t>(i * size - i * (i + 1) / 2 + (j - i - 1));
    }

    std::vector<std::vector<S>> pf_slices_;  // per l: packed pf(i,j,k,.)
    std::vector<std::vector<S>> d_slices_;   // per l: packed D(i,k,.)
};

// Step (1) of the algorithm. Fills
//   pf(i,j,k,0) = a(i+k, j+k)
//   pf(i,j,k,l) = lambda^2 pf(i,j,k,l-1) + lambda pf(i+1,j,k,l-1)
//               + lambda pf(i,j+1,k,l-1) + pf(i+1,j+1,k,l-1)
//   D(i,k,0)    = alpha[i+k]
//   D(i,k,l)    = lambda D(i,k,l-1) + D(i+1,k,l-1)
// and records phi_1^{k,l} = pf(0,1,k,l) and psi_0^{k,l} = D(0,k,l).
template <Field S>
GlvPrepared<S> glv_prepare(const SkewMatrix<S>& a, const std::vector<S>& alpha, const S& lambda,
                           bool keep_full_tables = false) {
    const long n2 = static_cast<long>(a.order());
    const long n = n2 / 2;
    if (ScalarTraits<S>::is_zero(lambda)) throw ParameterError("glv requires lambda != 0");
    if (static_cast<long>(alpha.size()) != n2)
        throw ShapeError("glv requires |alpha| == 2N == " + std::to_string(n2));

    GlvPrepared<S> prep;
    prep.half_order = n;
    prep.lambda = lambda;
    prep.alpha = alpha;
    prep.phi1 = TriGrid<S>(n2 - 2);
    prep.psi0 = TriGrid<S>(n2 - 1);

    const S l2 = lambda * lambda;

    // pf slices: slice l holds pf(i,j,k,l) for k <= 2N-2-l, i < j <= 2N-1-k-l.
    auto pf_slice_cells = [&](long l) {
        std::size_t total = 0;
        for (long k = 0; k + l <= n2 - 2; ++k) {
            const long size = n2 - k - l;
            total += static_cast<std::size_t>(size * (size - 1) / 2);
        }
        return total;
    };
    auto tri = [&](long i, long j, long size) {
        return static_cast<std::size_t>(i * size - i * (i + 1) / 2 + (j - i - 1));
    };

    std::vector<S> prev;
    if (n2 >= 2) {
        prev.reserve(pf_slice_cells(0));
        for (long k = 0; k <= n2 - 2; ++k) {
            const long size = n2 - k;
            for (long i = 0; i < size; ++i)
                for (long j = i + 1; j < size; ++j)
                    prev.push_back(a.a(static_cast<std::size_t>(i + k),
                                       static_cast<std::size_t>(j + k)));
        }
        for (long k = 0; k <= n2 - 2; ++k) prep.phi1.at(k, 0) = a.a(k, k + 1);
        if (keep_full_tables) prep.pf_slices_.push_back(prev);

        for (long l = 1; l <= n2 - 2; ++l) {
            std::vector<S> cur;
            cur.reserve(pf_slice_cells(l));
            std::size_t prev_off = 0;
            for (long k = 0; k + l <= n2 - 2; ++k) {
                const long size = n2 - k - l;       // current slice row count at this k
                const long psize = size + 1;        // previous slice had one more index
                for (long i = 0; i < size; ++i) {
                    for (long j = i + 1; j < size; ++j) {
                        const S& p00 = prev[prev_off + tri(i, j, psize)];
                        const S& p11 = prev[prev_off + tri(i + 1, j + 1, psize)];
                        const S& p01 = prev[prev_off + tri(i, j + 1, psize)];
                        // pf(i+1, j) is a diagonal zero when i+1 == j
                        S p10 = (i + 1 == j) ? S(0) : prev[prev_off + tri(i + 1, j, psize)];
                        cur.push_back(l2 * p00 + lambda * p10 + lambda * p01 + p11);
                    }
                }
                prev_off += static_cast<std::size_t>(psize * (psize - 1) / 2);
            }
            std::size_t off = 0;
            for (long k = 0; k + l <= n2 - 2; ++k) {
                const long size = n2 - k - l;
                prep.phi1.at(k, l) = cur[off + tri(0, 1, size)];
                off += static_cast<std::size_t>(size * (size - 1) / 2);
            }
            if (keep_full_tables) prep.pf_slices_.push_back(cur);
            prev = std::move(cur);
        }
    }

    // D slices: slice l holds D(i,k,l) for k <= 2N-1-l, i <= 2N-1-k-l
    // (block size 2N-k-l at each k).
    std::vector<S> dprev;
    for (long k = 0; k <= n2 - 1; ++k)
        for (long i = 0; i <= n2 - 1 - k; ++i) dprev.push_back(alpha[static_cast<std::size_t>(i + k)]);
    {
        std::size_t off = 0;
        for (long k = 0; k <= n2 - 1; ++k) {
            prep.psi0.at(k, 0) = dprev[off];
            off += static_cast<std::size_t>(n2 - k);
        }
    }
    if (keep_full_tables) prep.d_slices_.push_back(dprev);
    for (long l = 1; l <= n2 - 1; ++l) {
        std::vector<S> dcur;
        std::size_t prev_off = 0;
        for (long k = 0; k + l <= n2 - 1; ++k) {
            const long count = n2 - k - l;  // i = 0 .. 2N-1-k-l
            for (long i = 0; i < count; ++i)
                dcur.push_back(lambda * dprev[prev_off + static_cast<std::size_t>(i)] +
                               dprev[prev_off + static_cast<std::size_t>(i + 1)]);
            prev_off += static_cast<std::size_t>(count + 1);  // previous block is one longer
        }
        std::size_t off = 0;
        for (long k = 0; k + l <= n2 - 1; ++k) {
            prep.psi0.at(k, l) = dcur[off];
            off += static_cast<std::size_t>(n2 - k - l);
        }
        if (keep_full_tables) prep.d_slices_.push_back(dcur);
        dprev = std::move(dcur);
    }

    return prep;
}

// Iteration state: phi[n] = tau_{2n} on k+l <= 2N-2n, psi[n] = tau_{2n+1}
// on k+l <= 2N-2n-1.
template <Field S>
struct GlvTables {
    long half_order = 0;
    S lambda = S(1);
    std::vector<S> alpha;
    std::vector<TriGrid<S>> phi;
    std::vector<TriGrid<S>> psi;

    static GlvTables from_prepared(const GlvPrepared<S>& prep) {
        GlvTables t;
        t.half_order = prep.half_order;
        t.lambda = prep.lambda;
        t.alpha = prep.alpha;
        const long n2 = 2 * prep.half_order;
        t.phi.emplace_back(n2, S(1));  // phi_0 == 1 wherever referenced
        t.phi.push_back(prep.phi1);
        t.psi.push_back(prep.psi0);
        return t;
    }
};

// One psi level. The relaxed split iteration is
//   psi_n^{k,l} = ( psi_{n-1}^{k+1,l+1} phi_n^{k,l}
//                 + w psi_{n-1}^{k,l+1} phi_n^{k+1,l}
//                 - w psi_{n-1}^{k+1,l} phi_n^{k,l+1} ) / phi_{n-1}^{k+1,l+1}
// with w = 1/lambda. (With lambda-prepared data the Pfaffian solution
// satisfies the scheme with weight 1/lambda, not lambda; at lambda = 1 both
// agree and this is the plain split of the GLV equation.)
template <Field S>
void glv_step_psi(GlvTables<S>& t, long n) {
    const long n2 = 2 * t.half_order;
    const S w = S(1) / t.lambda;
    TriGrid<S> out(n2 - 2 * n - 1);
    for (long s = 0; s <= out.extent(); ++s) {
        for (long k = 0; k <= s; ++k) {
            const long l = s - k;
            const S& div = t.phi[n - 1].at(k + 1, l + 1);
            if (ScalarTraits<S>::is_zero(div)) throw ZeroDivisorError("psi", n, k, l);
            S num = t.psi[n - 1].at(k + 1, l + 1) * t.phi[n].at(k, l) +
                    w * t.psi[n - 1].at(k, l + 1) * t.phi[n].at(k + 1, l) -
                    w * t.psi[n - 1].at(k + 1, l) * t.phi[n].at(k, l + 1);
            out.at(k, l) = num / div;
        }
    }
    if (static_cast<long>(t.psi.size()) != n)
        throw RangeError("glv_step_psi expects psi levels 0.." + std::to_string(n - 1));
    t.psi.push_back(std::move(out));
}

// One phi level:
//   phi_{n+1}^{k,l} = ( phi_n^{k+1,l+1} psi_n^{k,l}
//                     + w phi_n^{k,l+1} psi_n^{k+1,l}
//                     - w phi_n^{k+1,l} psi_n^{k,l+1} ) / psi_{n-1}^{k+1,l+1}
template <Field S>
void glv_step_phi(GlvTables<S>& t, long n) {
    const long n2 = 2 * t.half_order;
    const S w = S(1) / t.lambda;
    TriGrid<S> out(n2 - 2 * n - 2);
    for (long s = 0; s <= out.extent(); ++s) {
        for (long k = 0; k <= s; ++k) {
            const long l = s - k;
            const S& div = t.psi[n - 1].at(k + 1, l + 1);
            if (ScalarTraits<S>::is_zero(div)) throw ZeroDivisorError("phi", n, k, l);
            S num = t.phi[n].at(k + 1, l + 1) * t.psi[n].at(k, l) +
                    w * t.phi[n].at(k, l + 1) * t.psi[n].at(k + 1, l) -
                    w * t.phi[n].at(k + 1, l) * t.psi[n].at(k, l + 1);
            out.at(k, l) = num / div;
        }
    }
    if (static_cast<long>(t.phi.size()) != n + 1)
        throw RangeError("glv_step_phi expects phi levels 0.." + std::to_string(n));
    t.phi.push_back(std::move(out));
}

template <Field S>
GlvTables<S> glv_iterate(const GlvPrepared<S>& prep) {
    GlvTables<S> t = GlvTables<S>::from_prepared(prep);
    for (long n = 1; n <= prep.half_order - 1; ++n) {
        glv_step_psi(t, n);
        glv_step_phi(t, n);
    }
    return t;
}

struct RetryPolicy {
    int retries = 3;               // resample attempts after the first failure
    std::uint64_t seed = 20240819; // rng seed for resampling
    bool resample_lambda = false;
};

template <Field S>
struct CondensationResult {
    S value;
    GlvTables<S> tables;
    int attempts = 1;
};

template <Field S>
std::vector<S> ones_alpha(std::size_t order) {
    return std::vector<S>(order, S(1));
}

// Full run: preparation then alternating psi/phi sweeps up to phi_N^{0,0}.
// On a zero divisor the policy resamples alpha (free parameters) from
// uniform nonzero rationals p/q, p,q in [1,9]; deterministic under the seed.
template <Field S>
CondensationResult<S> glv_condense(const SkewMatrix<S>& a, std::vector<S> alpha, S lambda,
                                   const RetryPolicy& policy = {}) {
    if (a.order() == 0) return {S(1), GlvTables<S>{}, 1};
    Rng rng(policy.seed);
    int attempt = 0;
    for (;;) {
        ++attempt;
        try {
            GlvTables<S> t = glv_iterate(glv_prepare(a, alpha, lambda));
            S value = t.phi[static_cast<std::size_t>(t.half_order)].at(0, 0);
            return {std::move(value), std::move(t), attempt};
        } catch (const ZeroDivisorError& zde) {
            if (attempt > policy.retries) throw CondensationFailure("glv_condense", zde, attempt);
            for (auto& v : alpha) v = scalar_from_rational<S>(rng.nonzero_rational(9));
            if (policy.resample_lambda)
                lambda = scalar_from_rational<S>(rng.nonzero_rational(9));
        }
    }
}

template <Field S>
CondensationResult<S> glv_condense(const SkewMatrix<S>& a, const RetryPolicy& policy = {}) {
    return glv_condense(a, ones_alpha<S>(a.order()), S(1), policy);
}

} // namespace pflab

#endif
