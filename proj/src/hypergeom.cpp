#include "moonj/hypergeom.hpp"

#include <cmath>
#include <vector>

#include "moonj/errors.hpp"
#include "moonj/gammafn.hpp"

namespace moonj {

namespace {

constexpr int kMaxDepth = 8;

bool nonpositive_integer(const Rational& q) { return q.is_integer() && q.sign() <= 0; }

double mag(const Complex& z) { return abs(z).to_double(); }

Real widen(const Real& x, mpfr_prec_t bits) {
    if (x.prec() >= bits) return x;
    Real r(bits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Complex widen(const Complex& z, mpfr_prec_t bits) { return {widen(z.re(), bits), widen(z.im(), bits)}; }

Complex f21_route(const F21Params& p, const Complex& z, const PrecisionPolicy& policy, Side side,
                  int depth);

// prod Gamma(num) / prod Gamma(den); any argument at a nonpositive integer
// is reported as a pole rather than silently zeroing a term.
Real gamma_ratio(const std::vector<Rational>& num, const std::vector<Rational>& den, mpfr_prec_t wb) {
    for (const Rational& q : num)
        if (nonpositive_integer(q)) fail(errc::gamma_pole, "gamma prefactor pole at " + q.str());
    for (const Rational& q : den)
        if (nonpositive_integer(q)) fail(errc::gamma_pole, "gamma prefactor pole at " + q.str());
    Real r = Real::of(1L, wb);
    for (const Rational& q : num) r *= gamma_rational(q, wb);
    for (const Rational& q : den) r /= gamma_rational(q, wb);
    return r;
}

// Variant for connection coefficients whose solution basis stays independent:
// a denominator pole means the coefficient honestly vanishes (reciprocal
// Gamma at a nonpositive integer), while a numerator pole is still an error.
Real gamma_ratio_or_zero(const std::vector<Rational>& num, const std::vector<Rational>& den,
                         mpfr_prec_t wb) {
    for (const Rational& q : num)
        if (nonpositive_integer(q)) fail(errc::gamma_pole, "gamma prefactor pole at " + q.str());
    for (const Rational& q : den)
        if (nonpositive_integer(q)) return Real::zero(wb);
    return gamma_ratio(num, den, wb);
}

// Maclaurin summation with the exact term-ratio recursion
//   term_{n+1}/term_n = (a+n)(b+n) / ((c+n)(n+1)) * z.
// Caller guarantees |z| < 1; the stall detector catches misuse.
Complex direct_sum(const F21Params& p, const Complex& z0, const PrecisionPolicy& policy) {
    double az = mag(z0);
    int est = 0;
    if (az > 1e-30 && az < 0.9951) {
        double perterm = -std::log10(az);
        est = static_cast<int>(policy.working_digits() / perterm) + 8;
    }
    PrecisionPolicy wide = policy.with_series_terms(est);
    mpfr_prec_t wb = wide.working_bits();
    Complex z = widen(z0, wb);

    Complex term(Real::of(1L, wb));
    Complex sum = term;
    Real eps = Real::pow10(-policy.working_digits(), wb);
    Real prev_mag = abs(term);
    int small_streak = 0;
    bool decayed = false;
    long stall_budget = 10L * policy.target_digits;
    for (long n = 0; n < 400000; ++n) {
        Rational ratio =
            (p.a + Rational(n)) * (p.b + Rational(n)) / ((p.c + Rational(n)) * Rational(n + 1));
        term = Real::of(ratio, wb) * (term * z);
        sum += term;
        Real tm = abs(term);
        if (tm < prev_mag) decayed = true;
        prev_mag = tm;
        if (tm <= eps * (Real::of(1L, wb) + abs(sum))) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
        if (!decayed && n > stall_budget)
            fail(errc::no_convergence, "series terms not decreasing; |z| too large");
    }
    fail(errc::no_convergence, "series did not meet tolerance within the term cap");
}

// z -> 1-z connection for noninteger parameter excess s = c-a-b:
//   F(a,b;c;z) = A F(a,b;a+b-c+1;w) + B w^s F(c-a,c-b;s+1;w),  w = 1-z.
Complex near_one_generic(const F21Params& p, const Complex& w, Side sw, const PrecisionPolicy& policy,
                         int depth) {
    Rational s = p.c - p.a - p.b;
    mpfr_prec_t wb = policy.working_bits() + 16;
    // Noninteger s keeps the basis {1, w^s} independent, so a vanishing
    // coefficient is honest and the dead term is skipped entirely.
    Real A = gamma_ratio_or_zero({p.c, s}, {p.c - p.a, p.c - p.b}, wb);
    Real B = gamma_ratio_or_zero({p.c, -s}, {p.a, p.b}, wb);
    Complex total(wb);
    if (!A.is_zero()) {
        F21Params p1{p.a, p.b, p.a + p.b - p.c + Rational(1)};
        total = total + A * f21_route(p1, w, policy, sw, depth + 1);
    }
    if (!B.is_zero()) {
        F21Params p2{p.c - p.a, p.c - p.b, s + Rational(1)};
        Complex F2 = f21_route(p2, w, policy, sw, depth + 1);
        total = total + B * (complex_pow_principal(w, s, sw) * F2);
    }
    return total;
}

// z -> 1-z connection in the logarithmic case c = a+b:
//   F = G sum_n r_n [2 psi(n+1) - psi(a+n) - psi(b+n) - Log w] w^n
// with r_n = (a)_n (b)_n / (n!)^2 and G = Gamma(c)/(Gamma(a)Gamma(b)).
Complex near_one_log(const F21Params& p, const Complex& w0, Side sw, const PrecisionPolicy& policy) {
    mpfr_prec_t wb = policy.working_bits() * 2 + 32;  // log weights cancel; keep slack
    Complex w = widen(w0, wb);
    Real G = gamma_ratio({p.c}, {p.a, p.b}, wb);
    Complex logw = log(w, sw);

    Real psi_a = digamma_rational(p.a, wb);
    Real psi_b = digamma_rational(p.b, wb);
    Real psi_n = -Real::euler(wb);  // psi(1)
    Real one = Real::of(1L, wb);

    Complex sum(wb);
    Complex wn(one);
    Rational rn(1);
    Real eps = Real::pow10(-policy.working_digits(), wb);
    int small_streak = 0;
    for (long n = 0; n < 200000; ++n) {
        if (n > 0) {
            Rational nn(n);
            rn *= (p.a + nn - Rational(1)) * (p.b + nn - Rational(1)) / (nn * nn);
            wn *= w;
            psi_a += one / Real::of(p.a + nn - Rational(1), wb);
            psi_b += one / Real::of(p.b + nn - Rational(1), wb);
            psi_n += one / Real::of(nn, wb);
        }
        Complex bracket = Complex(psi_n + psi_n - psi_a - psi_b) - logw;
        Complex term = Real::of(rn, wb) * (wn * bracket);
        sum += term;
        if (abs(term) <= eps * (one + abs(sum))) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
    }
    return G * sum;
}

Complex near_one(const F21Params& p, const Complex& w, Side sw, const PrecisionPolicy& policy,
                 int depth) {
    if (w.is_zero()) fail(errc::out_of_domain, "evaluation at the unit point");
    Rational s = p.c - p.a - p.b;
    if (s.is_zero()) return near_one_log(p, w, sw, policy);
    if (!s.is_integer()) return near_one_generic(p, w, sw, policy, depth);
    fail(errc::out_of_domain, "integer parameter excess near the unit point");
}

// F(a,b;c;z) = (1-z)^{-a} F(a,c-b;c;z') with z' = z/(z-1).
Complex pfaff(const F21Params& p, const Complex& z, const PrecisionPolicy& policy, Side side,
              int depth) {
    Complex one(Real::of(1L, z.prec()));
    Complex w = one - z;
    Side sflip = flip(side);
    Complex zp = z / (z - one);
    Complex pref = complex_pow_principal(w, -p.a, sflip);
    F21Params q{p.a, p.c - p.b, p.c};
    return pref * f21_route(q, zp, policy, sflip, depth + 1);
}

Complex connect_impl(const F21Params& p, const Complex& z, const PrecisionPolicy& policy, Side side,
                     int depth) {
    mpfr_prec_t wb = policy.working_bits() + 16;
    Complex zw = widen(z, wb);
    Complex one(Real::of(1L, wb));
    Complex u = one / zw;
    Side su = flip(side);
    Complex v = one - u;
    Side sv = flip(su);
    Complex mu = -u;
    Side smu = flip(su);

    Rational s = p.c - p.a - p.b;
    Real G1 = gamma_ratio({Rational(1) - p.b, p.c}, {p.a - p.b + Rational(1), p.c - p.a}, wb);
    Real G2 = gamma_ratio({Rational(1) - p.b, p.c}, {p.a, s + Rational(1)}, wb);

    F21Params p1{p.a - p.c + Rational(1), p.a, p.a - p.b + Rational(1)};
    F21Params p2{p.c - p.a, Rational(1) - p.a, s + Rational(1)};
    Complex F1 = f21_route(p1, u, policy, su, depth + 1);
    Complex F2 = f21_route(p2, v, policy, sv, depth + 1);

    Complex pu = complex_pow_principal(u, p.a, su);
    Complex pv = complex_pow_principal(v, s, sv);
    Complex pmu = complex_pow_principal(mu, p.b, smu);
    return G1 * (pu * F1) + G2 * (pv * (pmu * F2));
}

// Route selection.  Ordering matters: direct and near-unit regions are
// terminal, the Pfaff map feeds them, the 1/z connection handles the far
// field, and a slow direct sum mops up the remaining sub-unit annulus.
Complex f21_route(const F21Params& p, const Complex& z0, const PrecisionPolicy& policy, Side side,
                  int depth) {
    p.validate();
    if (depth > kMaxDepth) fail(errc::no_convergence, "transformation recursion too deep");
    mpfr_prec_t wb = policy.working_bits();
    Complex z = widen(z0, wb);
    double az = mag(z);
    if (az <= 0.9) return direct_sum(p, z, policy);

    Complex one(Real::of(1L, z.prec()));
    double aw = mag(one - z);
    if (aw <= 0.25) return near_one(p, one - z, flip(side), policy, depth);

    double azp = aw > 0 ? az / aw : 1e30;
    if (azp <= 0.9) return pfaff(p, z, policy, side, depth);
    if (aw >= 4.0) return pfaff(p, z, policy, side, depth);  // lands near-unit

    if (az >= 1.2) {
        double au = 1.0 / az;
        double av = mag(one - one / z);
        if (av <= 0.9 || au <= 0.25) return connect_impl(p, z, policy, side, depth);
    }
    if (azp >= 1.2) {
        Complex zp = z / (z - one);
        double aup = 1.0 / azp;
        double avp = mag(one - one / zp);
        if (avp <= 0.9 || aup <= 0.25) return pfaff(p, z, policy, side, depth);
    }
    if (az <= 0.995) return direct_sum(p, z, policy);
    fail(errc::out_of_domain, "no evaluation route reaches z = " + z.str(8));
}

}  // namespace

void F21Params::validate() const {
    if (nonpositive_integer(c))
        fail(errc::invalid_parameters, "third parameter is a nonpositive integer: " + c.str());
}

Rational f21_series_coefficient(const F21Params& p, int n) {
    p.validate();
    if (n < 0) fail(errc::invalid_parameters, "coefficient index must be nonnegative");
    Rational r(1);
    for (int k = 0; k < n; ++k) {
        Rational kk(k);
        r *= (p.a + kk) * (p.b + kk) / ((p.c + kk) * Rational(k + 1));
    }
    return r;
}

Complex f21_eval(const F21Params& p, const Complex& z, const PrecisionPolicy& policy, Side side) {
    return f21_route(p, z, policy, side, 0);
}

Complex transform_15_10_33(const F21Params& p, const Complex& z, const PrecisionPolicy& policy,
                           Side side) {
    p.validate();
    if (z.is_zero()) fail(errc::out_of_domain, "connection formula undefined at z = 0");
    return connect_impl(p, z, policy, side, 0);
}

Complex transform_quadratic_plus(const F21Params& p, const Complex& z, const PrecisionPolicy& policy,
                                 Side side) {
    Rational h(1, 2);
    if (!(p.c == h)) fail(errc::invalid_parameters, "plus variant requires c = 1/2");
    mpfr_prec_t wb = policy.working_bits() + 16;
    Complex zw = widen(z, wb);
    Real halfr = Real::of(h, wb);
    Complex rootz = complex_pow_principal(zw, h, side);
    Complex wm = halfr * (Complex(Real::of(1L, wb)) - rootz);
    Complex wp = halfr * (Complex(Real::of(1L, wb)) + rootz);
    F21Params q{p.a + p.a, p.b + p.b, p.a + p.b + h};
    Real C = gamma_ratio({p.a + h, p.b + h}, {h, p.a + p.b + h}, wb) / Real::of(2L, wb);
    return C * (f21_route(q, wm, policy, Side::none, 0) + f21_route(q, wp, policy, Side::none, 0));
}

Complex transform_quadratic_minus(const F21Params& p, const Complex& z, const PrecisionPolicy& policy,
                                  Side side) {
    Rational h(1, 2);
    Rational th(3, 2);
    if (!(p.c == th)) fail(errc::invalid_parameters, "minus variant requires c = 3/2");
    mpfr_prec_t wb = policy.working_bits() + 16;
    if (z.is_zero()) return Complex(Real::of(1L, wb));  // removable 0/0 at the origin
    Complex zw = widen(z, wb);
    Real halfr = Real::of(h, wb);
    Complex rootz = complex_pow_principal(zw, h, side);
    Complex wm = halfr * (Complex(Real::of(1L, wb)) - rootz);
    Complex wp = halfr * (Complex(Real::of(1L, wb)) + rootz);
    F21Params q{p.a + p.a - Rational(1), p.b + p.b - Rational(1), p.a + p.b - h};
    Real C = gamma_ratio({p.a - h, p.b - h}, {Rational(-1, 2), p.a + p.b - h}, wb) / Real::of(2L, wb);
    Complex diff = f21_route(q, wm, policy, Side::none, 0) - f21_route(q, wp, policy, Side::none, 0);
    return C * (diff / rootz);
}

namespace {

Complex tau_from_ratio(const F21Params& p, const Complex& x, const PrecisionPolicy& policy,
                       const Real& scale) {
    mpfr_prec_t wb = policy.working_bits();
    Complex one(Real::of(1L, wb));
    Complex num = f21_eval(p, one - widen(x, wb), policy);
    Complex den = f21_eval(p, widen(x, wb), policy);
    Complex r = num / den;
    // tau = i * r / scale
    Complex tau(-r.im() / scale, r.re() / scale);
    if (!(tau.im().sign() > 0)) fail(errc::not_upper_half_plane, "period ratio left the upper half-plane");
    return tau;
}

}  // namespace

Complex tau_from_gamma(const Complex& g, const PrecisionPolicy& policy) {
    F21Params p{Rational(1, 3), Rational(2, 3), Rational(1)};
    return tau_from_ratio(p, g, policy, sqrt(Real::of(3L, policy.working_bits())));
}

Complex tau_from_lambda(const Complex& l, const PrecisionPolicy& policy) {
    F21Params p{Rational(1, 2), Rational(1, 2), Rational(1)};
    return tau_from_ratio(p, l, policy, Real::of(1L, policy.working_bits()));
}

Rational j_from_gamma(const Rational& g) {
    if (g.is_zero() || g == Rational(1)) fail(errc::pole_input, "pole of the j parameterization");
    Rational num = Rational(27) * Rational::pow(Rational(1) + Rational(8) * g, 3);
    return num / (g * Rational::pow(Rational(1) - g, 3));
}

Rational j_from_lambda(const Rational& l) {
    if (l.is_zero() || l == Rational(1)) fail(errc::pole_input, "pole of the j parameterization");
    Rational num = Rational(256) * Rational::pow(Rational(1) - l + l * l, 3);
    return num / (l * l * Rational::pow(Rational(1) - l, 2));
}

Complex j_from_gamma(const Complex& g) {
    mpfr_prec_t wb = g.prec();
    Complex one(Real::of(1L, wb));
    if (g.is_zero() || (g - one).is_zero()) fail(errc::pole_input, "pole of the j parameterization");
    Complex e = one + Real::of(8L, wb) * g;
    Complex num = Real::of(27L, wb) * (e * e * e);
    Complex d = one - g;
    return num / (g * (d * d * d));
}

Complex j_from_lambda(const Complex& l) {
    mpfr_prec_t wb = l.prec();
    Complex one(Real::of(1L, wb));
    if (l.is_zero() || (l - one).is_zero()) fail(errc::pole_input, "pole of the j parameterization");
    Complex e = one - l + l * l;
    Complex num = Real::of(256L, wb) * (e * e * e);
    Complex d = one - l;
    return num / ((l * l) * (d * d));
}

}  // namespace moonj
