#include "moonj/series.hpp"

#include <algorithm>

namespace moonj {

// ---- Polynomial -----------------------------------------------------------

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> r(p.coeffs_.size());
    for (size_t k = 0; k < r.size(); ++k) r[k] = s * p.coeffs_[k];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(const Polynomial& p, unsigned e) {
    Polynomial acc({Rational(1)});
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

// ---- TruncatedSeries ------------------------------------------------------

void TruncatedSeries::check_order(int order) {
    if (order < 0) fail(errc::invalid_parameters, "series order must be >= 0");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order) {
    check_order(order);
    coeffs.resize(static_cast<size_t>(order) + 1);
    coeffs_ = std::move(coeffs);
}

TruncatedSeries::TruncatedSeries(const Polynomial& p, int order) {
    check_order(order);
    coeffs_.resize(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) coeffs_[static_cast<size_t>(k)] = p.coeff(static_cast<size_t>(k));
}

const Rational& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order()) fail(errc::invalid_parameters, "series coefficient index out of range");
    return coeffs_[static_cast<size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, const Rational& value) {
    if (n < 0 || n > order()) fail(errc::invalid_parameters, "series coefficient index out of range");
    coeffs_[static_cast<size_t>(n)] = value;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order()) fail(errc::invalid_parameters, "cannot extend a truncation");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

TruncatedSeries series_scale(const Rational& s, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, s * a.coeff(k));
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeff(0).is_zero()) fail(errc::zero_constant_term, "series division needs a unit denominator");
    int n = std::min(a.order(), b.order());
    TruncatedSeries q(n);
    // Long division: q[k] = (a[k] - sum_{j<k} q[j] b[k-j]) / b[0].
    for (int k = 0; k <= n; ++k) {
        Rational acc = a.coeff(k);
        for (int j = 0; j < k; ++j) {
            if (q.coeff(j).is_zero() || b.coeff(k - j).is_zero()) continue;
            acc -= q.coeff(j) * b.coeff(k - j);
        }
        q.set_coeff(k, acc / b.coeff(0));
    }
    return q;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!inner.coeff(0).is_zero())
        fail(errc::nonzero_constant_term, "composition inner series must vanish at 0");
    int n = std::min(outer.order(), inner.order());
    TruncatedSeries in = inner.truncated(n);
    // Horner: result = (...(o_n * in + o_{n-1}) * in + ...) + o_0.
    TruncatedSeries acc(n);
    acc.set_coeff(0, outer.coeff(n));
    for (int k = n - 1; k >= 0; --k) {
        acc = series_mul(acc, in);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
    }
    return acc;
}

TruncatedSeries series_reversion(const TruncatedSeries& s) {
    if (!s.coeff(0).is_zero())
        fail(errc::nonzero_constant_term, "reversion input must vanish at 0");
    if (s.order() < 1 || s.coeff(1).is_zero())
        fail(errc::not_reversible, "reversion needs a nonzero linear term");
    int n = s.order();

    // Newton iteration r <- r - (s(r) - t) / s'(r), doubling the certified
    // order each round.  s'(r) has unit constant term, so the division is
    // well-posed throughout.
    std::vector<Rational> sd(static_cast<size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) sd[static_cast<size_t>(k - 1)] = Rational(k) * s.coeff(k);
    TruncatedSeries sprime(std::move(sd), n);

    TruncatedSeries r(n);
    r.set_coeff(1, Rational(1) / s.coeff(1));
    int good = 1;
    while (good < n) {
        good = std::min(2 * good, n);
        TruncatedSeries num = series_compose(s.truncated(good), r.truncated(good));
        num.set_coeff(1, num.coeff(1) - Rational(1));
        TruncatedSeries den = series_compose(sprime.truncated(good), r.truncated(good));
        TruncatedSeries delta = series_div(num, den);
        for (int k = 0; k <= good; ++k) r.set_coeff(k, r.coeff(k) - delta.coeff(k));
    }
    return r;
}

TruncatedSeries rational_function_expand(const Polynomial& P, const Polynomial& Q, int order) {
    if (Q.coeff(0).is_zero()) fail(errc::pole_at_origin, "expansion of P/Q with Q(0) == 0");
    return series_div(TruncatedSeries(P, order), TruncatedSeries(Q, order));
}

Rational multifactorial(int M, int n, int r) {
    if (M < 1 || n < 0 || r < 0 || r >= M)
        fail(errc::invalid_parameters, "multifactorial needs M >= 1, n >= 0, 0 <= r < M");
    Rational acc(1);
    for (long m = 1; m <= n; ++m) acc *= Rational(static_cast<long>(M) * m - r);
    return acc;
}

std::vector<Polynomial> p_polynomials(int n_max) {
    if (n_max < 0) fail(errc::invalid_parameters, "p_polynomials needs n_max >= 0");
    std::vector<Polynomial> p;
    p.reserve(static_cast<size_t>(n_max) + 1);
    p.push_back(Polynomial::monomial(Rational(1), 3));
    if (n_max == 0) return p;
    p.push_back(Polynomial::monomial(Rational(-1), 2));

    const Polynomial cubic_shift{Rational(-1, 3), Rational(0), Rational(0), Rational(1, 3)};  // (t^3-1)/3
    for (int n = 2; n <= n_max; ++n) {
        Polynomial term = cubic_shift * p[static_cast<size_t>(n - 1)].derivative();
        term -= Polynomial::monomial(Rational(n + 5, 6), 2) * p[static_cast<size_t>(n - 1)];
        term -= Polynomial::monomial(Rational(static_cast<long>(n - 1) * (n - 2), 144), 1) * p[static_cast<size_t>(n - 2)];
        p.push_back(std::move(term));
    }
    return p;
}

}  // namespace moonj
