#pragma once

#include <mpfr.h>

#include <string>

#include "dimerexp/rational.hpp"

namespace dimerexp {

/// Working precision in bits for a decimal-digit request, with guard bits
/// so series summation rounding stays below the requested digits.
mpfr_prec_t digits_to_bits(int digits);

/// Minimal RAII wrapper over an mpfr_t. Arithmetic results carry the wider
/// of the operand precisions; rounding is always to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat o) noexcept;
    ~BigFloat();

    static BigFloat from(const Rational& q, mpfr_prec_t bits);
    static BigFloat from(long n, mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend BigFloat ln(const BigFloat& a);
    friend BigFloat abs(const BigFloat& a);

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Scientific-notation decimal string with the given significant digits.
    std::string str(int digits) const;

private:
    mpfr_t x_;
};

} // namespace dimerexp
