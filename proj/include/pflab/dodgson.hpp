#ifndef PFLAB_DODGSON_HPP
#define PFLAB_DODGSON_HPP

#include <cstdlib>
#include <utility>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/grid.hpp"
#include "pflab/matrix.hpp"

namespace pflab {

// Determinant condensation on the discrete Toda lattice,
//   tau_{n+1}^{k,l} tau_{n-1}^{k+1,l+1} = tau_n^{k,l} tau_n^{k+1,l+1}
//                                       - tau_n^{k+1,l} tau_n^{k,l+1},
// iterated from tau_0 == 1, tau_1^{k,l} = M[k][l] up to tau_N^{0,0} = det M.
// Interior zero divisors surface as errors; no perturbation is applied.
template <Field S>
S dodgson_determinant(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw ShapeError("dodgson_determinant requires a square matrix");
    const long n = static_cast<long>(m.rows());
    if (n == 0) return S(1);

    RectGrid<S> prev(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), S(1));
    RectGrid<S> cur(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l)
            cur.at(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) =
                m(static_cast<std::size_t>(k), static_cast<std::size_t>(l));

    for (long lvl = 1; lvl < n; ++lvl) {
        const long size = n - lvl;  // next level lives on [0,size)^2
        RectGrid<S> next(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
        for (long k = 0; k < size; ++k) {
            for (long l = 0; l < size; ++l) {
                const S& div = prev.at(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(l + 1));
                if (ScalarTraits<S>::is_zero(div)) throw ZeroDivisorError("toda", lvl, k, l);
                S num = cur.at(k, l) * cur.at(k + 1, l + 1) - cur.at(k + 1, l) * cur.at(k, l + 1);
                next.at(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = num / div;
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur.at(0, 0);
}

// One-parameter Dodgson condensation on the rotated lattice,
//   T_{n+1}^{k,l} T_{n-1}^{k,l} = T_n^{k,l+1} T_n^{k,l-1} + lambda T_n^{k+1,l} T_n^{k-1,l},
// with initial data T_0 == 1 on the parity class i+j == n (mod 2) and
//   T_1^{i,j} = a_{(j-i+n+1)/2, (i+j+n+1)/2}   (1-based entry subscripts)
// on i+j == n+1 (mod 2), |i|+|j| <= n-1. Returns T_n^{0,0}, the
// lambda-determinant of the n x n input.
template <Field S>
S lambda_determinant(const Matrix<S>& m, const S& lambda) {
    if (m.rows() != m.cols()) throw ShapeError("lambda_determinant requires a square matrix");
    const long n = static_cast<long>(m.rows());
    if (n == 0) return S(1);

    const long w = 2 * n + 1;
    auto idx = [&](long i, long j) { return static_cast<std::size_t>((i + n) * w + (j + n)); };

    std::vector<S> prev(static_cast<std::size_t>(w * w), S(1));  // T_0 (parity cells only)
    std::vector<S> cur(static_cast<std::size_t>(w * w), S(0));   // T_1
    for (long i = -(n - 1); i <= n - 1; ++i) {
        for (long j = -(n - 1); j <= n - 1; ++j) {
            if (std::abs(i) + std::abs(j) > n - 1) continue;
            if (((i + j) % 2 + 2) % 2 != ((n + 1) % 2 + 2) % 2) continue;
            const long row = (j - i + n + 1) / 2;  // 1-based
            const long col = (i + j + n + 1) / 2;
            cur[idx(i, j)] = m(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
        }
    }

    for (long lvl = 1; lvl < n; ++lvl) {
        std::vector<S> next(static_cast<std::size_t>(w * w), S(0));
        const long extent = n - 1 - lvl;
        for (long i = -extent; i <= extent; ++i) {
            for (long j = -extent; j <= extent; ++j) {
                if (std::abs(i) + std::abs(j) > extent) continue;
                if (((i + j) % 2 + 2) % 2 != ((n + lvl + 1) % 2 + 2) % 2) continue;
                const S& div = prev[idx(i, j)];
                if (ScalarTraits<S>::is_zero(div)) throw ZeroDivisorError("lambda-det", lvl, i, j);
                S num = cur[idx(i, j + 1)] * cur[idx(i, j - 1)] +
                        lambda * cur[idx(i + 1, j)] * cur[idx(i - 1, j)];
                next[idx(i, j)] = num / div;
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur[idx(0, 0)];
}

} // namespace pflab

#endif
