#include "moonj/engine.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "moonj/errors.hpp"
#include "moonj/gammafn.hpp"
#include "moonj/hypergeom.hpp"

namespace moonj {

const std::array<SectorSpec, 6>& sector_table() {
    static const std::array<SectorSpec, 6> rows = {{
        {0, 0, 1, 0, 2, 3, -1, 0, 1},
        {1, 2, 1, 4, 2, 0, -1, 3, 1},
        {2, 2, 3, 4, 0, 0, -1, 3, -2},
        {3, 4, 3, 2, 0, 3, 1, 3, 2},
        {4, 4, 5, 2, 4, 3, -2, 3, -1},
        {5, 0, 5, 0, 4, 3, 2, 0, 1},
    }};
    return rows;
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// arg(t) folded into [0, 2pi), plus its distance to the nearest multiple of
// pi/3, both as doubles; the 1e-6 boundary band makes higher precision moot.
std::pair<double, double> sector_angle(const Complex& t) {
    double th = std::atan2(t.im().to_double(), t.re().to_double());
    if (th < 0) th += 2.0 * kPi;
    double step = kPi / 3.0;
    double nearest = std::round(th / step) * step;
    double dist = std::abs(th - nearest);
    if (th > 2.0 * kPi - 1e-9) th = 0.0;
    return {th, dist};
}

}  // namespace

const SectorSpec& sector_for(const Complex& t) {
    if (t.is_zero() || !(abs(t) < Real::of(1L, t.prec())))
        fail(errc::out_of_domain, "t must lie in the punctured unit disk");
    auto [th, dist] = sector_angle(t);
    if (dist < 1e-6) fail(errc::sector_boundary, "arg(t) within 1e-6 of a multiple of pi/3");
    int idx = std::min(5, static_cast<int>(th / (kPi / 3.0)));
    return sector_table()[static_cast<size_t>(idx)];
}

FlatCoordinateSeries flat_series(const CMCase& c, int order) {
    if (order < 1) fail(errc::invalid_parameters, "order must be at least 1");
    TruncatedSeries h(order);
    TruncatedSeries g(order);
    if (c.point == CMPoint::rho) {
        Rational sign(1);
        for (int n = 0; 3 * n <= order; ++n) {
            Rational mf = multifactorial(3, n, 2);
            g.set_coeff(3 * n, sign * mf * mf * mf /
                                   Rational::factorial(static_cast<unsigned long>(3 * n)));
            if (3 * n + 1 <= order) {
                Rational mh = multifactorial(3, n, 1);
                h.set_coeff(3 * n + 1, sign * mh * mh * mh /
                                           Rational::factorial(static_cast<unsigned long>(3 * n + 1)));
            }
            sign = -sign;
        }
    } else {
        for (int n = 0; 2 * n <= order; ++n) {
            Rational mf = multifactorial(4, n, 3);
            g.set_coeff(2 * n,
                        mf * mf / Rational::factorial(static_cast<unsigned long>(2 * n)));
            if (2 * n + 1 <= order) {
                Rational mh = multifactorial(4, n, 1);
                h.set_coeff(2 * n + 1,
                            mh * mh / Rational::factorial(static_cast<unsigned long>(2 * n + 1)));
            }
        }
    }
    TruncatedSeries ratio = series_div(h, g);
    return FlatCoordinateSeries{c, std::move(h), std::move(g), std::move(ratio)};
}

namespace {

// Term-recursive summation of the first `terms` terms of h and g.  The
// term-to-term ratios are exact rationals, so each term is one rounding away
// from exact.
FlatPair sum_pair(const CMCase& c, const Complex& t, long terms, mpfr_prec_t wb) {
    Complex tg = c.point == CMPoint::rho ? t * t * t : t * t;
    Complex h_term = t;
    Complex g_term = Complex(Real::of(1L, wb));
    Complex h_acc = h_term;
    Complex g_acc = g_term;
    for (long n = 1; n < terms; ++n) {
        Rational rh, rg;
        if (c.point == CMPoint::rho) {
            rh = Rational(-(3 * n - 1) * (3 * n - 1), 3 * n * (3 * n + 1));
            rg = Rational(-(3 * n - 2) * (3 * n - 2), 3 * n * (3 * n - 1));
        } else {
            rh = Rational((4 * n - 1) * (4 * n - 1), 2 * n * (2 * n + 1));
            rg = Rational((4 * n - 3) * (4 * n - 3), (2 * n - 1) * 2 * n);
        }
        h_term = Real::of(rh, wb) * (h_term * tg);
        g_term = Real::of(rg, wb) * (g_term * tg);
        h_acc += h_term;
        g_acc += g_term;
    }
    return FlatPair{h_acc, g_acc};
}

void check_radius(const CMCase& c, const Complex& t, mpfr_prec_t wb) {
    if (!(abs(t) < Real::of(c.convergence_radius, wb)))
        fail(errc::out_of_domain, "t outside the convergence disk");
}

Real two_pi_omega_sq(const CMCase& c, const PrecisionPolicy& policy) {
    Real omega = omega_period(c, policy);
    return Real::of(2L, omega.prec()) * Real::pi(omega.prec()) * omega * omega;
}

int matched_digits(const Real& residual, const Real& scale, int cap) {
    mpfr_prec_t wb = residual.prec();
    if (residual.is_zero()) return cap;
    Real rel = residual / (Real::of(1L, wb) + scale);
    if (rel >= Real::of(1L, wb)) return 0;
    double d = -log10(rel).to_double();
    if (d >= static_cast<double>(cap)) return cap;
    return d < 0 ? 0 : static_cast<int>(d);
}

}  // namespace

FlatPair flat_eval_components(const CMCase& c, const Complex& t, long terms,
                              const PrecisionPolicy& policy) {
    if (terms < 1) fail(errc::invalid_parameters, "terms must be positive");
    PrecisionPolicy wp = policy.with_series_terms(static_cast<int>(std::min(terms, 100000L)));
    mpfr_prec_t wb = std::max(wp.working_bits(), t.prec());
    check_radius(c, t, wb);
    return sum_pair(c, t, terms, wb);
}

Complex flat_eval_series(const CMCase& c, const Complex& t, long terms,
                         const PrecisionPolicy& policy) {
    FlatPair p = flat_eval_components(c, t, terms, policy);
    if (p.g.is_zero()) fail(errc::division_by_zero, "g vanished at the sample point");
    return p.h / p.g;
}

Complex flat_eval_hypergeometric(const CMCase& c, const Complex& t, const PrecisionPolicy& policy) {
    mpfr_prec_t wb = std::max(policy.working_bits(), t.prec());
    if (c.point == CMPoint::rho) {
        Complex z = -(t * t * t);
        Complex g = f21_eval(F21Params{Rational(1, 3), Rational(1, 3), Rational(2, 3)}, z, policy);
        Complex h = f21_eval(F21Params{Rational(2, 3), Rational(2, 3), Rational(4, 3)}, z, policy);
        return t * h / g;
    }
    Complex z = Real::of(4L, wb) * (t * t);
    Complex g = f21_eval(F21Params{Rational(1, 4), Rational(1, 4), Rational(1, 2)}, z, policy);
    Complex h = f21_eval(F21Params{Rational(3, 4), Rational(3, 4), Rational(3, 2)}, z, policy);
    return t * h / g;
}

Rational conj_rhs(const CMCase& c, const Rational& t) {
    if (c.point == CMPoint::rho) {
        Rational t3 = t * t * t;
        Rational den = Rational(1) + t3;
        if (den.is_zero()) fail(errc::pole_input, "1 + t^3 vanishes");
        return Rational(27) * t3 * Rational::pow((Rational(8) - t3) / den, 3);
    }
    Rational t2 = Rational(4) * t * t;
    Rational den = Rational(1) - t2;
    if (den.is_zero()) fail(errc::pole_input, "1 - 4t^2 vanishes");
    return Rational(64) * Rational::pow(Rational(3) + t2, 3) / (den * den);
}

Complex conj_rhs(const CMCase& c, const Complex& t) {
    mpfr_prec_t wb = t.prec();
    Complex one(Real::of(1L, wb));
    if (c.point == CMPoint::rho) {
        Complex t3 = t * t * t;
        Complex den = one + t3;
        if (den.is_zero()) fail(errc::pole_input, "1 + t^3 vanishes");
        Complex r = (Complex(Real::of(8L, wb)) - t3) / den;
        return Real::of(27L, wb) * (t3 * r * r * r);
    }
    Complex t2 = Real::of(4L, wb) * (t * t);
    Complex den = one - t2;
    if (den.is_zero()) fail(errc::pole_input, "1 - 4t^2 vanishes");
    Complex s = Complex(Real::of(3L, wb)) + t2;
    return Real::of(64L, wb) * (s * s * s) / (den * den);
}

VerificationReport verify_exact(const CMCase& c, int order) {
    if (order < 2 * c.coefficient_gap)
        fail(errc::invalid_parameters, "order must cover at least two expansion steps");
    TruncatedSeries b = c.point == CMPoint::rho ? elliptic_expansion_rho(order)
                                                : elliptic_expansion_i(order);
    FlatCoordinateSeries fs = flat_series(c, order);
    TruncatedSeries composed = series_compose(b, fs.c);
    Polynomial num, den;
    if (c.point == CMPoint::rho) {
        num = Polynomial{Rational(0), Rational(0), Rational(0), Rational(27)} *
              Polynomial::pow(Polynomial{Rational(8), Rational(0), Rational(0), Rational(-1)}, 3);
        den = Polynomial::pow(Polynomial{Rational(1), Rational(0), Rational(0), Rational(1)}, 3);
    } else {
        num = Rational(64) * Polynomial::pow(Polynomial{Rational(3), Rational(0), Rational(4)}, 3);
        den = Polynomial::pow(Polynomial{Rational(1), Rational(0), Rational(-4)}, 2);
    }
    TruncatedSeries rhs = rational_function_expand(num, den, order);
    TruncatedSeries diff = series_sub(composed, rhs);
    VerificationReport rep(64);
    rep.check = "exact-series identity";
    rep.case_name = c.name();
    rep.t_text = "formal";
    rep.series_terms_used = order;
    rep.pass = diff.is_zero();
    if (rep.pass) {
        rep.digits_matched = order;
        rep.notes = "all coefficients through the requested order match exactly";
    } else {
        int first = 0;
        while (diff.coeff(first).is_zero()) ++first;
        rep.notes = "first mismatch at order " + std::to_string(first) + ": composed " +
                    composed.coeff(first).str() + " vs algebraic " + rhs.coeff(first).str();
        rep.abs_residual = abs(Real::of(diff.coeff(first), 64));
    }
    return rep;
}

VerificationReport verify_numeric(const CMCase& c, const Complex& t, long terms,
                                  const PrecisionPolicy& policy, int pass_digits) {
    mpfr_prec_t wb = std::max(policy.working_bits(), t.prec());
    int threshold = pass_digits >= 0 ? pass_digits : policy.target_digits / 2;
    VerificationReport rep(wb);
    rep.check = "numeric identity";
    rep.case_name = c.name();
    rep.t_text = t.str(20);
    rep.series_terms_used = terms;
    if (t.is_zero()) {
        long direct = c.point == CMPoint::rho ? 0 : 1728;
        rep.lhs = Complex(Real::of(direct, wb));
        rep.rhs = rep.lhs;
        rep.exact_rhs = Rational(direct).str();
        rep.digits_matched = policy.working_digits();
        rep.pass = true;
        rep.notes = "direct value at t = 0";
        return rep;
    }
    Complex cval = flat_eval_series(c, t, terms, policy);
    Complex argument = map_s_inv(c, cval, policy);
    if (c.point == CMPoint::rho) {
        Real third = Real::of(Rational(1, 3), wb);
        argument = Complex(third * (argument.re() + Real::of(1L, wb)), third * argument.im());
    }
    rep.lhs = j_eval(argument, policy);
    rep.rhs = conj_rhs(c, t);
    rep.abs_residual = abs(rep.lhs - rep.rhs);
    rep.digits_matched = matched_digits(rep.abs_residual, abs(rep.rhs), policy.working_digits());
    rep.pass = rep.abs_residual < Real::pow10(-threshold, wb);
    return rep;
}

VerificationReport verify_numeric(const CMCase& c, const Rational& t, long terms,
                                  const PrecisionPolicy& policy, int pass_digits) {
    mpfr_prec_t wb = policy.working_bits();
    Rational exact = conj_rhs(c, t);
    VerificationReport rep = verify_numeric(c, Complex::of(t, wb), terms, policy, pass_digits);
    rep.t_text = t.str();
    rep.exact_rhs = exact.str();
    return rep;
}

Complex chat_rho(const Complex& t, const PrecisionPolicy& policy) {
    mpfr_prec_t wb = std::max(policy.working_bits(), t.prec());
    if (!(abs(t) < Real::of(1L, wb))) fail(errc::out_of_domain, "t outside the unit disk");
    if (t.is_zero()) return Complex(wb);
    Complex cval = flat_eval_series(CMCase::rho_case(), t, 1000, policy);
    Real scale = two_pi_omega_sq(CMCase::rho_case(), policy);
    return Complex(cval.re() / scale, cval.im() / scale);
}

namespace {

Complex sixth_root_power(int k, mpfr_prec_t wb) {
    Real theta = Real::of(static_cast<long>(k), wb) * Real::pi(wb) / Real::of(3L, wb);
    return {cos(theta), sin(theta)};
}

struct SectorSample {
    Complex v1;
    Complex v2;
    FlatPair gh;
};

SectorSample sector_sample(const Complex& s, long terms, const PrecisionPolicy& policy) {
    mpfr_prec_t wb = std::max(policy.working_bits(), s.prec());
    Complex one(Real::of(1L, wb));
    Complex inv3 = one / (s * s * s);
    F21Params p{Rational(1, 3), Rational(2, 3), Rational(1)};
    Complex fu = f21_eval(p, one + inv3, policy);
    Complex fv = f21_eval(p, -inv3, policy);
    return SectorSample{fu / s, fv / s,
                        flat_eval_components(CMCase::rho_case(), s, terms, policy)};
}

struct Prefactors {
    Complex alpha;
    Complex beta;
};

Prefactors solve_prefactors(const SectorSample& x, const SectorSample& y, bool for_h) {
    const Complex& f1 = for_h ? x.gh.h : x.gh.g;
    const Complex& f2 = for_h ? y.gh.h : y.gh.g;
    Complex det = x.v1 * y.v2 - y.v1 * x.v2;
    if (det.is_zero()) fail(errc::no_convergence, "degenerate prefactor system");
    return Prefactors{(f1 * y.v2 - f2 * x.v2) / det, (x.v1 * f2 - y.v1 * f1) / det};
}

}  // namespace

VerificationReport sector_check(const SectorSpec& spec, const Complex& t, long terms,
                                const PrecisionPolicy& policy) {
    mpfr_prec_t wb = std::max(policy.working_bits(), t.prec());
    if (t.is_zero() || !(abs(t) < Real::of(1L, wb)))
        fail(errc::out_of_domain, "t must lie in the punctured unit disk");
    auto [th, dist] = sector_angle(t);
    if (dist < 1e-6) fail(errc::sector_boundary, "arg(t) within 1e-6 of a multiple of pi/3");
    double lo = spec.index * kPi / 3.0;
    double hi = (spec.index + 1) * kPi / 3.0;
    if (!(th > lo && th < hi)) fail(errc::out_of_domain, "arg(t) outside the requested sector");

    VerificationReport rep(wb);
    rep.check = "sector row " + std::to_string(spec.index);
    rep.case_name = "rho";
    rep.t_text = t.str(20);
    rep.series_terms_used = terms;

    SectorSample s1 = sector_sample(t, terms, policy);
    SectorSample s2 = sector_sample(Real::of(0.85, wb) * t, terms, policy);
    SectorSample s3 = sector_sample(Real::of(0.7, wb) * t, terms, policy);
    Prefactors pg = solve_prefactors(s1, s2, false);
    Prefactors ph = solve_prefactors(s1, s2, true);

    Real one = Real::of(1L, wb);
    Real tol = Real::pow10(-std::max(4, policy.target_digits / 2), wb);
    Real worst = Real::zero(wb);
    std::string failed;
    auto record = [&](const char* name, const Real& residual, const Real& scale) {
        Real rel = residual / (one + scale);
        if (rel > worst) worst = rel;
        if (!(rel <= tol)) {
            if (!failed.empty()) failed += ", ";
            failed += name;
        }
    };

    record("constancy-g", abs(pg.alpha * s3.v1 + pg.beta * s3.v2 - s3.gh.g), abs(s3.gh.g));
    record("constancy-h", abs(ph.alpha * s3.v1 + ph.beta * s3.v2 - s3.gh.h), abs(s3.gh.h));

    Real g13 = gamma_rational(Rational(1, 3), wb);
    Real g23 = gamma_rational(Rational(2, 3), wb);
    Real cg = g23 * g23 / g13;
    Real ch = g13 * g13 / (Real::of(3L, wb) * g23);
    record("exponent-a-g", abs(pg.alpha - cg * sixth_root_power(spec.a_g, wb)), cg);
    record("exponent-b-g", abs(pg.beta - cg * sixth_root_power(spec.b_g, wb)), cg);
    record("exponent-a-h", abs(ph.alpha - ch * sixth_root_power(spec.a_h, wb)), ch);
    record("exponent-b-h", abs(ph.beta - ch * sixth_root_power(spec.b_h, wb)), ch);

    Complex chat_direct(wb);
    {
        Complex cval = s1.gh.h / s1.gh.g;
        Real scale = two_pi_omega_sq(CMCase::rho_case(), policy);
        chat_direct = Complex(cval.re() / scale, cval.im() / scale);
    }
    Complex ratio = s1.v1 / s1.v2;
    Real inv_sqrt3 = Real::of(1L, wb) / sqrt(Real::of(3L, wb));
    Complex tau = Complex::i_unit(wb) * Complex(ratio.re() * inv_sqrt3, ratio.im() * inv_sqrt3);
    if (!(tau.im().sign() > 0)) {
        rep.pass = false;
        rep.notes = "failed: period ratio left the upper half-plane";
        rep.abs_residual = one;
        return rep;
    }
    Complex num = Real::of(spec.mp, wb) * tau + Complex(Real::of(spec.mq, wb));
    Complex den = Real::of(spec.mr, wb) * tau + Complex(Real::of(spec.ms, wb));
    if (den.is_zero()) fail(errc::pole_input, "Moebius denominator vanished");
    Complex x_row = num / den;
    Complex chat_row = map_S(CMCase::rho_case(), x_row);
    record("moebius-chat", abs(chat_row - chat_direct), abs(chat_direct));

    Complex arg_j = map_s_inv(CMCase::rho_case(), s1.gh.h / s1.gh.g, policy);
    Real third = Real::of(Rational(1, 3), wb);
    arg_j = Complex(third * (arg_j.re() + one), third * arg_j.im());
    Complex j_lhs = j_eval(arg_j, policy);
    Complex rhs = conj_rhs(CMCase::rho_case(), t);
    record("j-equivalence", abs(j_lhs - rhs), abs(rhs));

    rep.lhs = chat_direct;
    rep.rhs = chat_row;
    rep.abs_residual = worst;
    rep.digits_matched = matched_digits(worst, Real::zero(wb), policy.working_digits());
    rep.pass = failed.empty();
    rep.notes = rep.pass ? "prefactor constancy, sixth-root exponents, Moebius row, and j-equivalence confirmed"
                         : "failed: " + failed;
    return rep;
}

}  // namespace moonj
