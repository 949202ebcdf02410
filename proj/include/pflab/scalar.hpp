#ifndef PFLAB_SCALAR_HPP
#define PFLAB_SCALAR_HPP

#include <cmath>
#include <concepts>
#include <cstdio>
#include <string>

#include "pflab/rational.hpp"

namespace pflab {

// Field scalar required by every algorithm in the library. Satisfied by
// Rational (exact mode) and double (float mode); everything downstream is
// generic over it.
template <typename S>
concept Field = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    S(0);
    S(1);
};

template <Field S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    // Pivot preference in exact mode: any nonzero candidate is as good as
    // another, so the first one wins.
    static bool pivot_better(const Rational& candidate, const Rational& incumbent) {
        return !is_zero(candidate) && is_zero(incumbent);
    }
    static std::string str(const Rational& v) { return v.str(); }
    static double to_double(const Rational& v) { return v.to_double(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static bool is_zero(double v) { return v == 0.0; }
    static bool pivot_better(double candidate, double incumbent) {
        return std::abs(candidate) > std::abs(incumbent);
    }
    static std::string str(double v) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }
    static double to_double(double v) { return v; }
};

template <Field S>
S scalar_from_rational(const Rational& q) {
    if constexpr (std::is_same_v<S, Rational>) {
        return q;
    } else {
        return q.to_double();
    }
}

} // namespace pflab

#endif
