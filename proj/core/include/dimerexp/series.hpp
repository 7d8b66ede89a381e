#pragma once

#include <initializer_list>
#include <vector>

#include "dimerexp/rational.hpp"

namespace dimerexp {

/// Formal power series over exact rationals, truncated at a fixed order N:
/// exactly the coefficients of x^0 .. x^N are stored. Binary operations
/// return the min of the operand orders so a result never claims more
/// correct coefficients than its inputs supply.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order);

    /// order + 1 coefficients, c[k] multiplying x^k.
    TruncatedSeries(int order, std::vector<Rational> coeffs);
    TruncatedSeries(int order, std::initializer_list<Rational> coeffs);

    /// c * x^k as a series of the given order.
    static TruncatedSeries monomial(int order, int k, const Rational& c);

    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k; k beyond the truncation order is an error.
    const Rational& operator[](int k) const;

    void set(int k, Rational c);

    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Cauchy product truncated at min(a.order, b.order).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> c_;
};

/// f(g(x)) truncated at min(f.order, g.order). g must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// ln(1 + f) for f with zero constant term, truncated at f.order.
TruncatedSeries log1p_series(const TruncatedSeries& f);

/// Drops coefficients above new_order. Raising the order is an error.
TruncatedSeries truncate(const TruncatedSeries& f, int new_order);

/// c * x^j * f, order raised to f.order + j. The only operation that grows
/// the order; valid because shifting does not mix truncated coefficients.
TruncatedSeries shift_scale(const TruncatedSeries& f, int j, const Rational& c);

/// Exact Horner evaluation at a rational point.
Rational evaluate_at(const TruncatedSeries& f, const Rational& x);

} // namespace dimerexp
