#ifndef PFLAB_ERRORS_HPP
#define PFLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pflab {

// Base class for all structured errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Skew matrices and Pfaffian arguments must have even order.
class OddOrderError : public ShapeError {
public:
    explicit OddOrderError(std::size_t order)
        : ShapeError("pfaffian requires even order, got " + std::to_string(order)),
          order_(order) {}
    std::size_t order() const { return order_; }

private:
    std::size_t order_;
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

class LabelError : public Error {
public:
    explicit LabelError(const std::string& msg) : Error(msg) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class DivideByZeroError : public Error {
public:
    DivideByZeroError() : Error("exact division by zero") {}
    explicit DivideByZeroError(const std::string& msg) : Error(msg) {}
};

// A vanishing denominator cell inside a condensation recurrence.
// `stage` names the recurrence ("psi", "phi", "sigma", "tau", "toda", "lambda-det"),
// `level` is the lattice level n, (k, l) the cell coordinates.
class ZeroDivisorError : public Error {
public:
    ZeroDivisorError(std::string stage, long level, long k, long l)
        : Error("zero divisor in " + stage + " step at level " + std::to_string(level) +
                ", cell (" + std::to_string(k) + "," + std::to_string(l) + ")"),
          stage_(std::move(stage)), level_(level), k_(k), l_(l) {}

    const std::string& stage() const { return stage_; }
    long level() const { return level_; }
    long k() const { return k_; }
    long l() const { return l_; }

private:
    std::string stage_;
    long level_;
    long k_;
    long l_;
};

// Raised after the retry policy of a condensation run is exhausted.
class CondensationFailure : public Error {
public:
    CondensationFailure(const std::string& algo, const ZeroDivisorError& last, int attempts)
        : Error(algo + " failed after " + std::to_string(attempts) +
                " attempt(s); last: " + last.what()),
          stage_(last.stage()), level_(last.level()), k_(last.k()), l_(last.l()) {}

    const std::string& stage() const { return stage_; }
    long level() const { return level_; }
    long k() const { return k_; }
    long l() const { return l_; }

private:
    std::string stage_;
    long level_;
    long k_;
    long l_;
};

// Raised by the lattice verifiers when the seed does not provide enough
// base indices; carries the required extent.
class SeedSizeError : public Error {
public:
    SeedSizeError(std::size_t provided, std::size_t required)
        : Error("seed provides " + std::to_string(provided) + " base indices but " +
                std::to_string(required) + " are required"),
          provided_(provided), required_(required) {}
    std::size_t provided() const { return provided_; }
    std::size_t required() const { return required_; }

private:
    std::size_t provided_;
    std::size_t required_;
};

} // namespace pflab

#endif
