#ifndef PFLAB_SOMOS_HPP
#define PFLAB_SOMOS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/rational.hpp"

namespace pflab {

// Somos recurrences arising as 1-D reductions of the lattice equations:
//   Somos-4: t_l t_{l+4} = t_{l+1} t_{l+3} + t_{l+2}^2            (dToda, t_n^{k,l} = t[n+2k+2l])
//   Somos-6: t_l t_{l+6} = t_{l+5} t_{l+1} + t_{l+4} t_{l+2} - t_{l+3}^2
//                                                               (dBKP,  t_n^{k,l} = t[n+2k+4l])
//   Somos-7: t_l t_{l+7} = t_{l+6} t_{l+1} + t_{l+5} t_{l+2} - t_{l+4} t_{l+3}
//                                                               (GLV,   t_n^{k,l} = t[n+3k+5l-1])
// The Somos-6 signs are the ones the stated index map actually produces
// from the dBKP equation; substituting the map turns each lattice residual
// into the recurrence residual verbatim, for arbitrary value arrays.
struct SomosSequence {
    int variant = 4;
    std::vector<Rational> terms;
};

inline int somos_order(int variant) {
    if (variant != 4 && variant != 6 && variant != 7)
        throw ParameterError("somos variant must be 4, 6 or 7");
    return variant;
}

// Recurrence residual t_l t_{l+k} - (rhs) for the variant's window starting at l.
inline Rational somos_residual(int variant, std::span<const Rational> t, std::size_t l) {
    const std::size_t k = static_cast<std::size_t>(somos_order(variant));
    if (l + k >= t.size()) throw RangeError("somos residual window out of range");
    auto v = [&](std::size_t off) { return t[l + off]; };
    switch (variant) {
        case 4: return v(0) * v(4) - v(1) * v(3) - v(2) * v(2);
        case 6: return v(0) * v(6) - v(5) * v(1) - v(4) * v(2) + v(3) * v(3);
        default: return v(0) * v(7) - v(6) * v(1) - v(5) * v(2) + v(4) * v(3);
    }
}

// Generates `count` terms (including the initial ones) in exact rationals.
inline SomosSequence somos_generate(int variant, std::vector<Rational> init, std::size_t count) {
    const std::size_t k = static_cast<std::size_t>(somos_order(variant));
    if (init.size() != k)
        throw ShapeError("somos-" + std::to_string(variant) + " needs exactly " +
                         std::to_string(k) + " initial terms");
    SomosSequence seq;
    seq.variant = variant;
    seq.terms = std::move(init);
    while (seq.terms.size() < count) {
        const std::size_t l = seq.terms.size() - k;
        const Rational& div = seq.terms[l];
        if (div.is_zero())
            throw ZeroDivisorError("somos-" + std::to_string(variant),
                                   static_cast<long>(seq.terms.size()), static_cast<long>(l), 0);
        auto v = [&](std::size_t off) { return seq.terms[l + off]; };
        Rational next;
        switch (variant) {
            case 4: next = (v(1) * v(3) + v(2) * v(2)) / div; break;
            case 6: next = (v(5) * v(1) + v(4) * v(2) - v(3) * v(3)) / div; break;
            default: next = (v(6) * v(1) + v(5) * v(2) - v(4) * v(3)) / div; break;
        }
        seq.terms.push_back(next);
    }
    return seq;
}

// Base index the lattice cell (n,k,l) maps to under the variant's reduction.
inline std::size_t somos_mapped_index(int variant, long n, long k, long l) {
    somos_order(variant);
    long s = 0;
    switch (variant) {
        case 4: s = n + 2 * k + 2 * l; break;
        case 6: s = n + 2 * k + 4 * l; break;
        default: s = n + 3 * k + 5 * l - 1; break;
    }
    if (s < 0) throw RangeError("somos reduction maps cell to a negative index");
    return static_cast<std::size_t>(s);
}

// Residual of the corresponding lattice equation at cell (n,k,l) after
// substituting the reduction map into an arbitrary value array `t`. The
// orientation is fixed so that for every variant this equals
// somos_residual at the window the cell lands on:
//   Somos-4 at s = n+2k+2l, Somos-6 at s = n+2k+4l, Somos-7 at s = n+3k+5l.
inline Rational somos_reduction_residual(int variant, std::span<const Rational> t, long n, long k,
                                         long l) {
    somos_order(variant);
    auto at = [&](long nn, long kk, long ll) -> Rational {
        const std::size_t s = somos_mapped_index(variant, nn, kk, ll);
        if (s >= t.size()) throw RangeError("somos reduction cell outside the value array");
        return t[s];
    };
    switch (variant) {
        case 4:
            // dToda, RHS - LHS: tau_n tau_n^{++} - tau_n^{+k} tau_n^{+l}
            //                   - tau_{n+1} tau_{n-1}^{++}
            return at(n, k, l) * at(n, k + 1, l + 1) - at(n, k + 1, l) * at(n, k, l + 1) -
                   at(n + 1, k, l) * at(n - 1, k + 1, l + 1);
        case 6:
            // dBKP, LHS - RHS
            return at(n, k + 1, l + 1) * at(n, k, l) - at(n, k, l + 1) * at(n, k + 1, l) -
                   at(n - 1, k + 1, l + 1) * at(n + 1, k, l) +
                   at(n + 1, k + 1, l) * at(n - 1, k, l + 1);
        default:
            // GLV, RHS - LHS
            return at(n, k + 1, l + 1) * at(n + 1, k, l) - at(n, k + 1, l) * at(n + 1, k, l + 1) -
                   at(n + 2, k, l) * at(n - 1, k + 1, l + 1) +
                   at(n, k, l + 1) * at(n + 1, k + 1, l);
    }
}

} // namespace pflab

#endif
