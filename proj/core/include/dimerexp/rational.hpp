#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace dimerexp {

using BigInt = mpz_class;

/// Exact rational scalar. Always held in lowest terms with a positive
/// denominator; zero is 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, scalar literals
    Rational(int n) : q_(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(const BigInt& n) : q_(n) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    /// Builds from decimal strings, e.g. ("-47644", "3").
    static Rational from_strings(const std::string& num, const std::string& den) {
        return Rational(BigInt(num), BigInt(den));
    }

    const mpq_class& raw() const { return q_; }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    std::string num_string() const { return q_.get_num().get_str(); }
    std::string den_string() const { return q_.get_den().get_str(); }
    std::string str() const { return q_.get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend Rational abs(const Rational& a) {
        Rational r;
        r.q_ = ::abs(a.q_);
        return r;
    }

    /// Exact non-negative integer power.
    friend Rational pow(const Rational& a, unsigned k) {
        Rational r(1);
        Rational base = a;
        for (unsigned e = k; e != 0; e >>= 1) {
            if (e & 1u) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace dimerexp
