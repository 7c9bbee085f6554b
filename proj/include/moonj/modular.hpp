#pragma once

#include "moonj/precision.hpp"
#include "moonj/rational.hpp"
#include "moonj/series.hpp"

namespace moonj {

enum class CMPoint { rho, i };

// One of the two quadratic fixed points on the unit circle together with the
// combinatorial data of its elliptic expansion: the index gap of the
// nonvanishing coefficients and the radius of validity in t.
struct CMCase {
    CMPoint point;
    int coefficient_gap;
    Rational convergence_radius;

    static const CMCase& rho_case();
    static const CMCase& i_case();
    static const CMCase& by_name(const std::string& name);  // "rho" or "i"
    const char* name() const { return point == CMPoint::rho ? "rho" : "i"; }

    // The fixed point itself: e^{i pi/3} or i.
    Complex tau_star(mpfr_prec_t bits) const;
};

// Fourier expansion of j: a simple pole coefficient 1 at q^{-1} plus the
// integer tail starting 744, 196884, ...  tail.coeff(n) is the coefficient
// of q^n.
struct JQSeries {
    TruncatedSeries tail;
    // Coefficient of q^power, power >= -1.
    Rational coefficient(long power) const;
};

// Exact integer expansion of j through q^order.
JQSeries j_q_expansion(int order);

// Truncation order that leaves the q-tail below 10^-digits at height
// im_tau; accounts for the e^{4 pi sqrt(n)} coefficient growth.
int q_series_order_for(double im_tau, int working_digits);

// j at a point of the upper half-plane: reduces to the fundamental domain
// by the translation and inversion generators, then sums the q-series.
Complex j_eval(const Complex& tau, const PrecisionPolicy& policy);
Complex j_eval(const Complex& tau, const PrecisionPolicy& policy, const JQSeries& series);

// Positive real period attached to the fixed point:
//   rho: (1/sqrt(6 pi)) (Gamma(1/3)/Gamma(2/3))^{3/2}
//   i:   (1/sqrt(8 pi))  Gamma(1/4)/Gamma(3/4)
// Cached per bit count.
Real omega_period(const CMCase& c, const PrecisionPolicy& policy);

// The disk uniformization w = (tau - tau*)/(tau - conj tau*), its inverse,
// and the inverse of its period-normalized rescaling
// s(tau) = 2 pi Omega^2 (tau - tau*)/(tau - conj tau*).
Complex map_S(const CMCase& c, const Complex& tau);
Complex map_S_inv(const CMCase& c, const Complex& w);
Complex map_s_inv(const CMCase& c, const Complex& w, const PrecisionPolicy& policy);

// Exact Taylor coefficients of j pulled back through the normalized disk
// coordinate at the fixed point.  At rho they come from the polynomial
// recursion (coefficient n is -1728 * 6^n p_n(0)/n!); at i they are obtained
// by composing the exact algebraic side of the identity with the reversion
// of the exact flat-coordinate ratio, and are cross-checked against the
// numeric contour oracle so the construction is not self-certifying.
TruncatedSeries elliptic_expansion_rho(int order);
TruncatedSeries elliptic_expansion_i(int order);

// Independent numeric oracle for the same coefficients: trapezoidal contour
// integral of j(s^{-1}(w)) w^{-n-1} on a small circle, with the sample count
// doubled until two estimates agree.
Complex elliptic_expansion_numeric(const CMCase& c, int n, const PrecisionPolicy& policy);

}  // namespace moonj
