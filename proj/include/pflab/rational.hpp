#ifndef PFLAB_RATIONAL_HPP
#define PFLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pflab/errors.hpp"

namespace pflab {

// Arbitrary-precision rational number, the exact scalar of the library.
// Thin value wrapper around GMP's mpq_class with checked division and
// canonical p/q string I/O. Immutable-friendly: all operators return values.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(long long n) { v_ = from_ll(n); }             // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw DivideByZeroError("rational literal with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q", a decimal integer, or a decimal fraction such as "-1.25".
    static Rational parse(std::string_view text);

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return wrap(a.v_ + b.v_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return wrap(a.v_ - b.v_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return wrap(a.v_ * b.v_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivideByZeroError();
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivideByZeroError();
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return wrap(::abs(a.v_)); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        return r;
    }
    static mpq_class from_ll(long long n) {
        mpz_class z;
        if (n >= 0) {
            z = static_cast<unsigned long>(n);
        } else {
            z = static_cast<unsigned long>(-(n + 1));
            z = -z - 1;
        }
        return mpq_class(z);
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());

    auto all_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body(s);
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }

    auto slash = body.find('/');
    auto dot = body.find('.');
    try {
        if (slash != std::string_view::npos) {
            std::string_view num = body.substr(0, slash);
            std::string_view den = body.substr(slash + 1);
            if (!all_digits(num) || !all_digits(den))
                throw ParseError("bad rational literal: '" + s + "'");
            mpq_class q(std::string(num) + "/" + std::string(den));
            if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
            q.canonicalize();
            return Rational(neg ? mpq_class(-q) : q);
        }
        if (dot != std::string_view::npos) {
            std::string_view ip = body.substr(0, dot);
            std::string_view fp = body.substr(dot + 1);
            if (ip.empty()) ip = "0";
            if (!all_digits(ip) || !all_digits(fp))
                throw ParseError("bad decimal literal: '" + s + "'");
            mpz_class scale = 1;
            for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
            mpz_class n{std::string(ip)};
            n *= scale;
            if (!fp.empty()) n += mpz_class(std::string(fp));
            mpq_class q(n, scale);
            q.canonicalize();
            return Rational(neg ? mpq_class(-q) : q);
        }
        if (!all_digits(body)) throw ParseError("bad integer literal: '" + s + "'");
        mpq_class q{std::string(body)};
        return Rational(neg ? mpq_class(-q) : q);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

} // namespace pflab

#endif
