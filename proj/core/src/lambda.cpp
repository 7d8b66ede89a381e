#include "dimerexp/lambda.hpp"

#include <cmath>
#include <stdexcept>

namespace dimerexp {

TruncatedSeries density_series(const MayerTable& t) {
    TruncatedSeries p(t.order);
    for (int n = 1; n <= t.order; ++n) p.set(n, Rational(2 * n) * t.coeff(n));
    return p;
}

TruncatedSeries solve_activity(const MayerTable& t) {
    if (t.order < 1 || t.coeff(1).is_zero())
        throw std::invalid_argument("solve_activity: b_1 must be nonzero");
    const int n = t.order;
    const Rational inv_2b1 = Rational(1) / (Rational(2) * t.coeff(1));

    const TruncatedSeries p_mono = TruncatedSeries::monomial(n, 1, Rational(1));
    TruncatedSeries z(n);
    // Each pass gains at least one correct order; n passes pin all of them.
    for (int pass = 0; pass < n; ++pass) {
        TruncatedSeries next = inv_2b1 * p_mono;
        TruncatedSeries zpow = z;
        for (int k = 2; k <= n; ++k) {
            zpow = zpow * z;
            const Rational c = Rational(k) * t.coeff(k) / t.coeff(1);
            next -= c * zpow;
        }
        z = next;
    }
    if (!(compose(density_series(t), z) == p_mono))
        throw std::logic_error("solve_activity: inversion failed the round trip");
    return z;
}

TruncatedSeries pressure_series(const MayerTable& t, const TruncatedSeries& z_of_p) {
    TruncatedSeries in_z(t.order);
    for (int k = 1; k <= t.order; ++k) in_z.set(k, t.coeff(k));
    return compose(in_z, z_of_p);
}

namespace {

// F(p) with z(p) = p/(2d) (1 + F(p)); one order shorter than z.
TruncatedSeries activity_correction(const MayerTable& t, const TruncatedSeries& z_of_p) {
    const Rational two_d(2 * t.dim);
    TruncatedSeries f(t.order - 1);
    for (int k = 1; k < t.order; ++k) f.set(k, two_d * z_of_p[k + 1]);
    if (!(two_d * z_of_p[1] == Rational(1)))
        throw std::invalid_argument("lambda_expansion: table must have b_1 = d");
    return f;
}

} // namespace

LambdaExpansion lambda_expansion(const MayerTable& t) {
    if (t.order < 1) throw std::invalid_argument("lambda_expansion: empty table");
    const TruncatedSeries z = solve_activity(t);
    const TruncatedSeries pr = pressure_series(t, z);
    const TruncatedSeries f = activity_correction(t, z);

    LambdaExpansion e;
    e.dim = t.dim;
    e.order = t.order;
    // regular = P(p) - (p/2) ln(1 + F(p)); the shift keeps order N.
    e.regular = pr - shift_scale(log1p_series(f), 1, Rational(1, 2));
    if (!e.regular[0].is_zero())
        throw std::logic_error("lambda_expansion: regular part has a constant term");
    e.normal_form_tail = normal_form(e);
    return e;
}

TruncatedSeries normal_form(const LambdaExpansion& e) {
    const int n = e.order;
    // tail = regular + (1-p) ln(1-p) + p/2, all exact.
    const TruncatedSeries ln1mp = log1p_series(TruncatedSeries::monomial(n, 1, Rational(-1)));
    TruncatedSeries one_minus_p(n);
    one_minus_p.set(0, Rational(1));
    if (n >= 1) one_minus_p.set(1, Rational(-1));
    TruncatedSeries tail = e.regular + one_minus_p * ln1mp;
    if (n >= 1) tail.set(1, tail[1] + Rational(1, 2));
    if (!tail[0].is_zero() || (n >= 1 && !tail[1].is_zero()))
        throw std::logic_error("normal_form: prefactor mismatch below order 2");
    return tail;
}

namespace {

BigFloat horner(const TruncatedSeries& f, const BigFloat& x, mpfr_prec_t bits) {
    BigFloat acc(bits);
    for (int k = f.order(); k >= 0; --k) acc = acc * x + BigFloat::from(f[k], bits);
    return acc;
}

void check_eval_point(const Rational& p) {
    if (p <= Rational(0) || p > Rational(1))
        throw std::domain_error("evaluate: p must lie in (0, 1]");
}

} // namespace

Evaluation evaluate(const LambdaExpansion& e, const Rational& p, int digits) {
    check_eval_point(p);
    const mpfr_prec_t bits = digits_to_bits(digits);
    const BigFloat bp = BigFloat::from(p, bits);
    const BigFloat half_p = BigFloat::from(Rational(1, 2) * p, bits);
    const BigFloat ln_p = ln(bp);
    const BigFloat ln_2d = ln(BigFloat::from(2 * e.dim, bits));
    const BigFloat value = half_p * (ln_2d - ln_p) + horner(e.regular, bp, bits);

    Evaluation out;
    out.value = value.str(digits);
    out.approx = value.to_double();
    out.truncation_proxy =
        abs(BigFloat::from(e.regular[e.order] * pow(p, static_cast<unsigned>(e.order)), bits)).to_double();
    return out;
}

BigFloat lambda_via_activity(const MayerTable& t, const Rational& p, int digits) {
    check_eval_point(p);
    const mpfr_prec_t bits = digits_to_bits(digits);
    const TruncatedSeries z = solve_activity(t);
    const Rational z_val = evaluate_at(z, p);
    const Rational p_val = evaluate_at(pressure_series(t, z), p);
    return BigFloat::from(p_val, bits) -
           BigFloat::from(Rational(1, 2) * p, bits) * ln(BigFloat::from(z_val, bits));
}

BigFloat lambda_via_split(const MayerTable& t, const Rational& p, int digits) {
    check_eval_point(p);
    const mpfr_prec_t bits = digits_to_bits(digits);
    const TruncatedSeries z = solve_activity(t);
    const Rational p_val = evaluate_at(pressure_series(t, z), p);
    const Rational f_val = evaluate_at(activity_correction(t, z), p);
    const BigFloat half_p = BigFloat::from(Rational(1, 2) * p, bits);
    return half_p * (ln(BigFloat::from(2 * t.dim, bits)) - ln(BigFloat::from(p, bits))) +
           BigFloat::from(p_val, bits) - half_p * ln(BigFloat::from(Rational(1) + f_val, bits));
}

double d1_closed_form_oracle(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("d1_closed_form_oracle: p must lie in (0, 1)");
    // Coverage density of the 1-D gas: p(z) = 2 z x'(z)/x(z) with
    // x = (1 + sqrt(1+4z))/2 and x' = 1/sqrt(1+4z); monotone in z.
    auto density = [](double z) {
        const double s = std::sqrt(1.0 + 4.0 * z);
        const double x = 0.5 * (1.0 + s);
        return 2.0 * z / (x * s);
    };
    double lo = 0.0, hi = 1.0;
    while (density(hi) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (density(mid) < p ? lo : hi) = mid;
    }
    const double z = 0.5 * (lo + hi);
    const double pressure = std::log(0.5 * (1.0 + std::sqrt(1.0 + 4.0 * z)));
    return pressure - 0.5 * p * std::log(z);
}

} // namespace dimerexp
