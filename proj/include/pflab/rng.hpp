#ifndef PFLAB_RNG_HPP
#define PFLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "pflab/rational.hpp"

namespace pflab {

// All randomness in the library flows through this deterministic,
// 64-bit-seedable generator so every report can be reproduced from its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    long uniform_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen_);
    }

    // Uniform integer in [-bound, bound].
    long signed_int(long bound) { return uniform_int(-bound, bound); }

    // Uniform nonzero integer in [-bound, bound] \ {0}.
    long nonzero_int(long bound) {
        long v = uniform_int(1, bound);
        return uniform_int(0, 1) ? v : -v;
    }

    Rational integer_scalar(long bound) { return Rational(signed_int(bound)); }

    // Uniform positive rational p/q with p, q in [1, bound].
    Rational positive_rational(long bound = 9) {
        return Rational(uniform_int(1, bound), uniform_int(1, bound));
    }

    // Uniform nonzero rational +-p/q with p, q in [1, bound].
    Rational nonzero_rational(long bound = 9) {
        Rational r = positive_rational(bound);
        return uniform_int(0, 1) ? r : -r;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
};

} // namespace pflab

#endif
