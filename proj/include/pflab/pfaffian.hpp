#ifndef PFLAB_PFAFFIAN_HPP
#define PFLAB_PFAFFIAN_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/matrix.hpp"

namespace pflab {

namespace detail {

// Recursive expansion along the first live position:
//   Pf = sum over partners p of (-1)^(rank of p) entry(i0, p) Pf(rest),
// memoized on the bitmask of live positions. entry(r, c) is only queried
// for r < c.
template <Field S, typename EntryFn>
S pfaffian_masked(std::uint64_t mask, EntryFn& entry,
                  std::unordered_map<std::uint64_t, S>& memo) {
    if (mask == 0) return S(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    const int first = __builtin_ctzll(mask);
    S acc(0);
    bool plus = true;
    std::uint64_t rest = mask & ~(1ull << first);
    for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
        const int p = __builtin_ctzll(bits);
        S e = entry(static_cast<std::size_t>(first), static_cast<std::size_t>(p));
        if (!ScalarTraits<S>::is_zero(e)) {
            S sub = pfaffian_masked(rest & ~(1ull << p), entry, memo);
            acc = plus ? acc + e * sub : acc - e * sub;
        }
        plus = !plus;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace detail

// Pfaffian of an abstract skew array given by entry(r, c) for positions
// r < c < m, by recursive first-row expansion with memoization on index
// subsets. Cost O(2^m), intended for m <= ~20.
template <Field S, typename EntryFn>
S pfaffian_by_expansion(std::size_t m, EntryFn entry) {
    if (m % 2 != 0) throw OddOrderError(m);
    if (m > 62) throw RangeError("expansion pfaffian limited to order 62");
    if (m == 0) return S(1);
    std::unordered_map<std::uint64_t, S> memo;
    std::uint64_t mask = (m == 64) ? ~0ull : ((1ull << m) - 1);
    return detail::pfaffian_masked(mask, entry, memo);
}

// Reference oracle: Pf(A) by the explicit first-row expansion.
template <Field S>
S pfaffian_expansion(const SkewMatrix<S>& a) {
    return pfaffian_by_expansion<S>(a.order(),
                                    [&](std::size_t i, std::size_t j) { return a.a(i, j); });
}

// Pf(A) in O(N^3) field operations by congruence reduction to the
// 2x2-block-diagonal canonical form, Pf(BAB^T) = det(B) Pf(A) with
// elementary B. Exact mode pivots on the first nonzero candidate, float
// mode on the max-magnitude one. A structurally dead pivot row means
// Pf(A) = 0.
template <Field S>
S pfaffian_elimination(const SkewMatrix<S>& a) {
    const std::size_t n = a.order();
    if (n == 0) return S(1);
    Matrix<S> w = a.to_full();
    S result(1);
    for (std::size_t c = 0; c + 1 < n; c += 2) {
        std::size_t pivot = c + 1;
        for (std::size_t j = c + 2; j < n; ++j)
            if (ScalarTraits<S>::pivot_better(w(c, j), w(c, pivot))) pivot = j;
        if (ScalarTraits<S>::is_zero(w(c, pivot))) return S(0);
        if (pivot != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(c + 1, j), w(pivot, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(w(i, c + 1), w(i, pivot));
            result = -result;
        }
        const S p = w(c, c + 1);
        result = result * p;
        // Clear row c beyond the pivot pair; expanding along row c then
        // decouples the (c, c+1) block.
        for (std::size_t j = c + 2; j < n; ++j) {
            if (ScalarTraits<S>::is_zero(w(c, j))) continue;
            S f = w(c, j) / p;
            for (std::size_t i = 0; i < n; ++i) w(i, j) = w(i, j) - f * w(i, c + 1);
            for (std::size_t i = 0; i < n; ++i) w(j, i) = w(j, i) - f * w(c + 1, i);
        }
    }
    return result;
}

} // namespace pflab

#endif
