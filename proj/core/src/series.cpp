#include "dimerexp/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace dimerexp {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    if (coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("TruncatedSeries: coefficient count must be order + 1");
    c_ = std::move(coeffs);
}

TruncatedSeries::TruncatedSeries(int order, std::initializer_list<Rational> coeffs)
    : TruncatedSeries(order, std::vector<Rational>(coeffs)) {}

TruncatedSeries TruncatedSeries::monomial(int order, int k, const Rational& c) {
    TruncatedSeries s(order);
    if (k < 0 || k > order) throw std::out_of_range("monomial: exponent outside order");
    s.c_[static_cast<std::size_t>(k)] = c;
    return s;
}

const Rational& TruncatedSeries::operator[](int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("TruncatedSeries: coefficient index beyond order");
    return c_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set(int k, Rational c) {
    if (k < 0 || k > order()) throw std::out_of_range("TruncatedSeries: coefficient index beyond order");
    c_[static_cast<std::size_t>(k)] = std::move(c);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    *this = *this + o;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    *this = *this - o;
    return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) {
    TruncatedSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r.c_[k] = c * f.c_[k];
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!g[0].is_zero())
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const int n = std::min(f.order(), g.order());
    // Horner in g, every product truncated at n.
    const TruncatedSeries gn = truncate(g, n);
    TruncatedSeries r(n);
    for (int k = n; k >= 0; --k) {
        r = r * gn;
        r.set(0, r[0] + f[k]);
    }
    return r;
}

TruncatedSeries log1p_series(const TruncatedSeries& f) {
    if (!f[0].is_zero())
        throw std::invalid_argument("log1p_series: argument must have zero constant term");
    const int n = f.order();
    TruncatedSeries acc(n);
    TruncatedSeries fpow = f;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) fpow = fpow * f; // starts at order k, so the loop is exact
        const Rational c(k % 2 == 1 ? 1 : -1, k);
        acc += c * fpow;
    }
    return acc;
}

TruncatedSeries truncate(const TruncatedSeries& f, int new_order) {
    if (new_order < 0 || new_order > f.order())
        throw std::invalid_argument("truncate: can only lower the order");
    std::vector<Rational> c(f.coefficients().begin(),
                            f.coefficients().begin() + new_order + 1);
    return TruncatedSeries(new_order, std::move(c));
}

TruncatedSeries shift_scale(const TruncatedSeries& f, int j, const Rational& c) {
    if (j < 0) throw std::invalid_argument("shift_scale: negative shift");
    TruncatedSeries r(f.order() + j);
    for (int k = 0; k <= f.order(); ++k) r.set(k + j, c * f[k]);
    return r;
}

Rational evaluate_at(const TruncatedSeries& f, const Rational& x) {
    Rational r(0);
    for (int k = f.order(); k >= 0; --k) r = r * x + f[k];
    return r;
}

} // namespace dimerexp
