#include "moonj/modular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "moonj/errors.hpp"
#include "moonj/gammafn.hpp"

namespace moonj {

const CMCase& CMCase::rho_case() {
    static const CMCase c{CMPoint::rho, 3, Rational(1)};
    return c;
}

const CMCase& CMCase::i_case() {
    static const CMCase c{CMPoint::i, 2, Rational(1, 2)};
    return c;
}

const CMCase& CMCase::by_name(const std::string& name) {
    if (name == "rho") return rho_case();
    if (name == "i") return i_case();
    fail(errc::invalid_parameters, "unknown fixed point: " + name);
}

Complex CMCase::tau_star(mpfr_prec_t bits) const {
    if (point == CMPoint::i) return Complex::i_unit(bits);
    Real half = Real::of(Rational(1, 2), bits);
    return {half, sqrt(Real::of(3L, bits)) / Real::of(2L, bits)};
}

Rational JQSeries::coefficient(long power) const {
    if (power == -1) return Rational(1);
    if (power < -1 || power > tail.order())
        fail(errc::invalid_parameters, "coefficient outside computed range");
    return tail.coeff(static_cast<int>(power));
}

namespace {

// prod_{m>=1} (1 - q^m) truncated at q^order; only the generalized pentagonal
// exponents k(3k-1)/2 carry a coefficient.
TruncatedSeries euler_product(int order) {
    TruncatedSeries e(order);
    e.set_coeff(0, Rational(1));
    Rational sign(-1);
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > order) break;
        e.set_coeff(static_cast<int>(g1), sign);
        if (g2 <= order) e.set_coeff(static_cast<int>(g2), sign);
        sign = -sign;
    }
    return e;
}

TruncatedSeries eisenstein4(int order) {
    std::vector<Rational> sigma3(static_cast<size_t>(order) + 1, Rational(0));
    for (long d = 1; d <= order; ++d) {
        Rational cube = Rational(d) * Rational(d) * Rational(d);
        for (long m = d; m <= order; m += d) sigma3[static_cast<size_t>(m)] += cube;
    }
    TruncatedSeries e4(order);
    e4.set_coeff(0, Rational(1));
    for (int m = 1; m <= order; ++m) e4.set_coeff(m, Rational(240) * sigma3[static_cast<size_t>(m)]);
    return e4;
}

}  // namespace

JQSeries j_q_expansion(int order) {
    if (order < 0) fail(errc::invalid_parameters, "expansion order must be nonnegative");
    // j = E4^3 / (q prod(1-q^m)^24); one extra term of the q-shifted quotient
    // supplies the coefficient of q^order.
    int n = order + 1;
    TruncatedSeries e = euler_product(n);
    TruncatedSeries e2 = series_mul(e, e);
    TruncatedSeries e4 = series_mul(e2, e2);
    TruncatedSeries e8 = series_mul(e4, e4);
    TruncatedSeries e16 = series_mul(e8, e8);
    TruncatedSeries eta24 = series_mul(e16, e8);
    TruncatedSeries g = eisenstein4(n);
    TruncatedSeries g3 = series_mul(series_mul(g, g), g);
    TruncatedSeries shifted = series_div(g3, eta24);
    TruncatedSeries tail(order);
    for (int m = 0; m <= order; ++m) tail.set_coeff(m, shifted.coeff(m + 1));
    return JQSeries{std::move(tail)};
}

namespace {

// Translate Re into [-1/2, 1/2] and invert while strictly inside the unit
// circle.  The interior test carries a relative margin so boundary points,
// where inversion permutes boundary with boundary, cannot oscillate.
Complex reduce_to_fundamental(Complex tau) {
    if (!(tau.im().sign() > 0)) fail(errc::not_upper_half_plane, "Im tau must be positive");
    mpfr_prec_t bits = tau.prec();
    Real margin = Real::zero(bits);
    mpfr_set_ui_2exp(margin.raw(), 1, -static_cast<mpfr_exp_t>(bits / 2), MPFR_RNDN);
    Real interior_bound = Real::of(1L, bits) - margin;
    for (int iter = 0; iter < 1000; ++iter) {
        Real shift = round_nearest(tau.re());
        tau = Complex(tau.re() - shift, tau.im());
        Real norm = abs2(tau);
        if (norm >= interior_bound) return tau;
        tau = Complex(-tau.re() / norm, tau.im() / norm);
    }
    fail(errc::no_convergence, "fundamental domain reduction did not terminate");
}

Complex j_eval_reduced(const Complex& tau, const PrecisionPolicy& policy, const JQSeries& series) {
    mpfr_prec_t wb = std::max(policy.working_bits(), tau.prec());
    Real two_pi = Real::of(2L, wb) * Real::pi(wb);
    Complex q = exp(Complex(-two_pi * tau.im(), two_pi * tau.re()));
    Complex sum = horner_eval(series.tail, q, wb);
    Complex one = Complex(Real::of(1L, wb));
    return sum + one / q;
}

}  // namespace

int q_series_order_for(double im_tau, int working_digits) {
    double a = 2.0 * 3.141592653589793 * im_tau * 0.4342944819032518;
    double b = 4.0 * 3.141592653589793 * 0.4342944819032518;
    double x = (b + std::sqrt(b * b + 4.0 * a * working_digits)) / (2.0 * a);
    double ord = x * x;
    if (ord > 100000.0) fail(errc::invalid_parameters, "tau too close to the real axis");
    return std::max(8, static_cast<int>(std::ceil(ord)) + 4);
}

Complex j_eval(const Complex& tau, const PrecisionPolicy& policy, const JQSeries& series) {
    Complex reduced = reduce_to_fundamental(tau);
    int needed = q_series_order_for(reduced.im().to_double(), policy.working_digits());
    if (series.tail.order() < needed)
        fail(errc::invalid_parameters, "supplied q-series is too short for the requested accuracy");
    return j_eval_reduced(reduced, policy, series);
}

Complex j_eval(const Complex& tau, const PrecisionPolicy& policy) {
    Complex reduced = reduce_to_fundamental(tau);
    int needed = q_series_order_for(reduced.im().to_double(), policy.working_digits());
    return j_eval_reduced(reduced, policy, j_q_expansion(needed));
}

Real omega_period(const CMCase& c, const PrecisionPolicy& policy) {
    mpfr_prec_t wb = policy.working_bits() + 16;
    static std::map<std::pair<int, mpfr_prec_t>, Real> cache;
    static std::mutex lock;
    std::pair<int, mpfr_prec_t> key{static_cast<int>(c.point), wb};
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Real pi = Real::pi(wb);
    Real value = Real::zero(wb);
    if (c.point == CMPoint::rho) {
        Real ratio = gamma_rational(Rational(1, 3), wb) / gamma_rational(Rational(2, 3), wb);
        value = pow(ratio, Real::of(Rational(3, 2), wb)) / sqrt(Real::of(6L, wb) * pi);
    } else {
        Real ratio = gamma_rational(Rational(1, 4), wb) / gamma_rational(Rational(3, 4), wb);
        value = ratio / sqrt(Real::of(8L, wb) * pi);
    }
    std::lock_guard<std::mutex> guard(lock);
    cache.emplace(key, value);
    return value;
}

Complex map_S(const CMCase& c, const Complex& tau) {
    Complex ts = c.tau_star(tau.prec());
    Complex den = tau - conj(ts);
    if (den.is_zero()) fail(errc::pole_input, "tau at the reflection of the fixed point");
    return (tau - ts) / den;
}

Complex map_S_inv(const CMCase& c, const Complex& w) {
    Complex ts = c.tau_star(w.prec());
    Complex one = Complex(Real::of(1L, w.prec()));
    Complex den = one - w;
    if (den.is_zero()) fail(errc::pole_input, "w = 1 is the pole of the inverse map");
    return (ts - conj(ts) * w) / den;
}

Complex map_s_inv(const CMCase& c, const Complex& w, const PrecisionPolicy& policy) {
    mpfr_prec_t wb = std::max(policy.working_bits(), w.prec());
    Real omega = omega_period(c, policy);
    Real scale = Real::of(2L, wb) * Real::pi(wb) * omega * omega;
    Complex rescaled = Complex(w.re() / scale, w.im() / scale);
    Complex ts = c.tau_star(wb);
    Complex one = Complex(Real::of(1L, wb));
    Complex den = one - rescaled;
    if (den.is_zero()) fail(errc::pole_input, "w/(2 pi Omega^2) = 1 is the pole of the inverse map");
    return (ts - conj(ts) * rescaled) / den;
}

TruncatedSeries elliptic_expansion_rho(int order) {
    if (order < 0) fail(errc::invalid_parameters, "expansion order must be nonnegative");
    std::vector<Polynomial> ps = p_polynomials(order);
    TruncatedSeries b(order);
    Rational six_pow(1);
    Rational fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            six_pow *= Rational(6);
            fact *= Rational(n);
        }
        b.set_coeff(n, Rational(-1728) * six_pow * ps[static_cast<size_t>(n)].coeff(0) / fact);
    }
    return b;
}

namespace {

// Flat-coordinate ratio at the square point: odd and even interpolating
// series built from squared quadruple factorials.
TruncatedSeries square_point_flat_ratio(int order) {
    TruncatedSeries g(order);
    TruncatedSeries h(order);
    for (int n = 0; 2 * n <= order; ++n) {
        Rational mf = multifactorial(4, n, 3);
        g.set_coeff(2 * n, mf * mf / Rational::factorial(static_cast<unsigned long>(2 * n)));
    }
    for (int n = 0; 2 * n + 1 <= order; ++n) {
        Rational mf = multifactorial(4, n, 1);
        h.set_coeff(2 * n + 1, mf * mf / Rational::factorial(static_cast<unsigned long>(2 * n + 1)));
    }
    return series_div(h, g);
}

}  // namespace

TruncatedSeries elliptic_expansion_i(int order) {
    if (order < 0) fail(errc::invalid_parameters, "expansion order must be nonnegative");
    TruncatedSeries c = square_point_flat_ratio(order);
    TruncatedSeries c_inverse = series_reversion(c);
    Polynomial num = Rational(64) * Polynomial::pow(Polynomial{Rational(3), Rational(0), Rational(4)}, 3);
    Polynomial den = Polynomial::pow(Polynomial{Rational(1), Rational(0), Rational(-4)}, 2);
    TruncatedSeries rhs = rational_function_expand(num, den, order);
    return series_compose(rhs, c_inverse);
}

Complex elliptic_expansion_numeric(const CMCase& c, int n, const PrecisionPolicy& policy) {
    if (n < 0) fail(errc::invalid_parameters, "coefficient index must be nonnegative");
    mpfr_prec_t wb = policy.working_bits();
    Real omega = omega_period(c, policy);
    Real scale = Real::of(2L, wb) * Real::pi(wb) * omega * omega;
    Real radius = scale / Real::of(20L, wb);
    // Reduction puts every sample image in the fundamental domain, so
    // Im tau >= 0.84 bounds the q-series order needed.
    JQSeries series = j_q_expansion(q_series_order_for(0.84, policy.working_digits()) + 4);
    int agree_digits = std::max(4, policy.target_digits - 2 * policy.guard_digits);
    Real tol = Real::pow10(-agree_digits, wb);
    Real one = Real::of(1L, wb);
    Real third = Real::of(Rational(1, 3), wb);
    Real two_pi = Real::of(2L, wb) * Real::pi(wb);
    Real r_pow_n = pow(radius, Real::of(static_cast<long>(n), wb));
    Complex prev(wb);
    bool have_prev = false;
    for (long samples = std::max<long>(8, 4L * (n + 1)); samples <= (1L << 16); samples *= 2) {
        Complex acc(wb);
        for (long m = 0; m < samples; ++m) {
            Real theta = two_pi * Real::of(Rational(m, samples), wb);
            Complex w(radius * cos(theta), radius * sin(theta));
            Complex tau = map_s_inv(c, w, policy);
            if (!(tau.im().sign() > 0))
                fail(errc::contour_too_large, "contour image left the upper half-plane");
            // The hexagonal coefficients are taken at the normalized argument
            // (tau+1)/3; without it the disk coordinate is rotated by a sixth
            // root of unity and alternate coefficients change sign.
            if (c.point == CMPoint::rho)
                tau = Complex(third * (tau.re() + one), third * tau.im());
            Complex fv = j_eval(tau, policy, series);
            Real phase = Real::of(static_cast<long>(n), wb) * theta;
            acc += fv * Complex(cos(phase), -sin(phase));
        }
        Complex est = Complex(acc.re() / r_pow_n, acc.im() / r_pow_n);
        Real inv_m = one / Real::of(samples, wb);
        est = Complex(est.re() * inv_m, est.im() * inv_m);
        if (have_prev && abs(est - prev) <= tol * (one + abs(est))) return est;
        prev = est;
        have_prev = true;
    }
    fail(errc::no_convergence, "contour estimates did not stabilize");
}

}  // namespace moonj
