#pragma once

#include <initializer_list>
#include <vector>

#include "moonj/rational.hpp"

namespace moonj {

// Dense polynomial with exact rational coefficients.  coeffs_[k] is the
// coefficient of t^k; trailing zeros are stripped, the zero polynomial has an
// empty coefficient vector.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial monomial(const Rational& c, size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    static Polynomial pow(const Polynomial& p, unsigned e);

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Power series truncation with exact coefficients c(0..order).  The tail
// beyond `order` is unknown, not zero; every operation reports results only
// to the order it can certify, which for binary operations is the smaller of
// the two input orders.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) { check_order(order); }
    TruncatedSeries(std::vector<Rational> coeffs, int order);
    TruncatedSeries(const Polynomial& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const;
    void set_coeff(int n, const Rational& value);

    TruncatedSeries truncated(int new_order) const;
    bool is_zero() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    static void check_order(int order);
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const Rational& s, const TruncatedSeries& a);

// Requires b.coeff(0) != 0; throws zero_constant_term otherwise.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

// outer(inner(t)) to order min(outer.order, inner.order).  Requires
// inner.coeff(0) == 0; throws nonzero_constant_term otherwise.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Compositional inverse r with s(r(t)) = t.  Requires s(0) == 0 and
// s'(0) != 0; throws nonzero_constant_term / not_reversible.
TruncatedSeries series_reversion(const TruncatedSeries& s);

// Maclaurin expansion of P/Q to the given order.  Requires Q(0) != 0; throws
// pole_at_origin otherwise.
TruncatedSeries rational_function_expand(const Polynomial& P, const Polynomial& Q, int order);

// prod_{m=1..n} (M*m - r); the step-M falling product that generalizes the
// double factorial.  Requires M >= 1, n >= 0, 0 <= r < M.
Rational multifactorial(int M, int n, int r);

// p_0..p_nmax of the Taylor-coefficient recursion at the hexagonal point:
//   p_0 = t^3,  p_1 = -t^2,
//   p_n = (t^3-1)/3 p_{n-1}' - (n+5)/6 t^2 p_{n-1} - (n-1)(n-2)/144 t p_{n-2}.
std::vector<Polynomial> p_polynomials(int n_max);

}  // namespace moonj
