#include "dimerexp/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dimerexp {

mpfr_prec_t digits_to_bits(int digits) {
    const double bits = static_cast<double>(std::max(1, digits)) * 3.3219280948873623;
    return static_cast<mpfr_prec_t>(bits) + 64;
}

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(x_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
    mpfr_set_zero(x_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(BigFloat o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

BigFloat BigFloat::from(const Rational& q, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(long n, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_si(r.x_, n, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigFloat ln(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.x_, a.x_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    const int d = std::max(1, digits);
    std::vector<char> buf(static_cast<std::size_t>(d) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", d - 1, x_);
    return std::string(buf.data());
}

} // namespace dimerexp
