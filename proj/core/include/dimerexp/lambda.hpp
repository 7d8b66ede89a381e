#pragma once

#include <string>

#include "dimerexp/bigfloat.hpp"
#include "dimerexp/mayer.hpp"
#include "dimerexp/rational.hpp"
#include "dimerexp/series.hpp"

namespace dimerexp {

/// Expansion of the monomer-dimer free energy lambda_d(p) around p = 0:
///
///   lambda_d(p) = -(p/2) ln p + (p/2) ln(2d) + regular(p)
///
/// with an exact regular series (zero constant term). normal_form_tail
/// holds the coefficients a_k left after also subtracting the entropy
/// prefactor (1/2)(p ln(2d) - p ln p - 2(1-p) ln(1-p) - p).
struct LambdaExpansion {
    int dim = 0;
    int order = 0;
    TruncatedSeries regular{0};
    Rational singular_ln_p{-1, 2}; // multiplies p ln p
    Rational singular_ln_2d{1, 2}; // multiplies p ln(2d)
    TruncatedSeries normal_form_tail{0};
};

/// p(z) = 2 sum_n n b_n z^n, the coverage density as a series in activity.
TruncatedSeries density_series(const MayerTable& t);

/// Inverts the density relation: the unique series z(p) with
/// density(z(p)) = p through order N, by N fixed-point iterations.
TruncatedSeries solve_activity(const MayerTable& t);

/// Pressure re-expanded in the density: P(p) = sum_n b_n z(p)^n.
TruncatedSeries pressure_series(const MayerTable& t, const TruncatedSeries& z_of_p);

/// Assembles the free-energy expansion from a Mayer table. Requires
/// b_1 = d, which holds for every dimer-gas table.
LambdaExpansion lambda_expansion(const MayerTable& t);

/// Tail after subtracting the entropy prefactor; a_0 = a_1 = 0.
TruncatedSeries normal_form(const LambdaExpansion& e);

struct Evaluation {
    std::string value;       // decimal, requested precision
    double approx = 0.0;     // the same value squeezed into a double
    double truncation_proxy; // |last retained regular term|, a crude error scale
};

/// Numeric value of the truncated expansion at p in (0, 1], carried out in
/// high-precision floating point; exact rationals everywhere before the
/// final logarithms.
Evaluation evaluate(const LambdaExpansion& e, const Rational& p, int digits);

/// lambda at p via P(p) - (p/2) ln z(p), with z(p) summed exactly first.
BigFloat lambda_via_activity(const MayerTable& t, const Rational& p, int digits);

/// Same quantity with the logarithm split as ln p - ln(2d) + ln(1 + F(p)).
/// Agrees with lambda_via_activity to rounding; the split is what the
/// series expansion is built from.
BigFloat lambda_via_split(const MayerTable& t, const Rational& p, int digits);

/// Exact d = 1 reference: solves the one-dimensional density relation
/// numerically and applies the pressure / activity link directly, using
/// the closed-form 1-D dimer-gas pressure ln((1 + sqrt(1+4z))/2).
double d1_closed_form_oracle(double p);

} // namespace dimerexp
