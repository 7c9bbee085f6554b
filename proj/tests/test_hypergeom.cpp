#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moonj/errors.hpp"
#include "moonj/gammafn.hpp"
#include "moonj/hypergeom.hpp"
#include "moonj/series.hpp"

using namespace moonj;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

const PrecisionPolicy kPolicy(50, 15);

bool close(const Real& a, const Real& b, int digits) {
    mpfr_prec_t wb = std::max(a.prec(), b.prec()) + 32;
    Real tol = Real::pow10(-digits, wb);
    return abs(a - b) <= tol * (Real::of(1L, wb) + abs(b));
}

bool close(const Complex& a, const Complex& b, int digits) {
    return close(a.re(), b.re(), digits) && close(a.im(), b.im(), digits);
}

Complex C(const Rational& re, mpfr_prec_t bits) { return Complex::of(re, bits); }

Complex C2(double re, double im, mpfr_prec_t bits) {
    return {Real::of(re, bits), Real::of(im, bits)};
}

// Arithmetic-geometric mean with the standard sqrt selection: pick the root
// keeping |a' - b'| <= |a' + b'|.  Gives 2F1(1/2,1/2;1;m) = 1/agm(1, sqrt(1-m)),
// an oracle fully independent of the summation and connection machinery.
Complex agm_oracle_f(const Complex& m, mpfr_prec_t bits) {
    Complex one(Real::of(1L, bits));
    Complex a = one;
    Complex b = complex_pow_principal(one - m, Q("1/2"));
    Real eps = Real::pow10(-60, bits);
    for (int it = 0; it < 200; ++it) {
        Complex an = Real::of(Q("1/2"), bits) * (a + b);
        Complex bn = complex_pow_principal(a * b, Q("1/2"));
        if (abs(an - bn) > abs(an + bn)) bn = -bn;
        a = an;
        b = bn;
        if (abs(a - b) <= eps * abs(a)) break;
    }
    return one / a;
}

// Exact truncation of sum_n ((4n-3)!!!!)^2 t^{2n} / (2n)!.
TruncatedSeries quartic_flat_series(int order) {
    TruncatedSeries s(order);
    for (int n = 0; 2 * n <= order; ++n) {
        Rational mf = multifactorial(4, n, 3);
        s.set_coeff(2 * n, mf * mf / Rational::factorial(2 * static_cast<unsigned long>(n)));
    }
    return s;
}

}  // namespace

TEST_CASE("direct summation basics") {
    mpfr_prec_t wb = kPolicy.working_bits();
    F21Params any{Q("1/3"), Q("5/7"), Q("9/11")};
    CHECK(close(f21_eval(any, Complex(wb), kPolicy), Complex(Real::of(1L, wb)), 60));

    // (1,1;2;z) = -ln(1-z)/z, so z = 1/2 gives 2 ln 2.
    F21Params log_params{Q("1"), Q("1"), Q("2")};
    Complex got = f21_eval(log_params, C(Q("1/2"), wb), kPolicy);
    Real want = Real::of(2L, wb) * log(Real::of(2L, wb));
    CHECK(close(got, Complex(want), 60));
}

TEST_CASE("exact coefficient recursion") {
    F21Params p{Q("1/3"), Q("2/3"), Q("5/7")};
    CHECK(f21_series_coefficient(p, 0) == Q("1"));
    for (int n = 0; n < 30; ++n) {
        Rational lhs = f21_series_coefficient(p, n + 1);
        Rational ratio = (p.a + Rational(n)) * (p.b + Rational(n)) /
                         ((p.c + Rational(n)) * Rational(n + 1));
        CHECK(lhs == f21_series_coefficient(p, n) * ratio);
    }
    CHECK_THROWS_AS(f21_series_coefficient(F21Params{Q("1"), Q("1"), Q("-2")}, 1), Error);
}

TEST_CASE("quartic summation matches the falling-product series") {
    // F(1/4,1/4;1/2;4t^2) at t = 1/3 against the exact coefficient sum.
    mpfr_prec_t wb = kPolicy.working_bits();
    F21Params p{Q("1/4"), Q("1/4"), Q("1/2")};
    Complex lhs = f21_eval(p, C(Q("4/9"), wb), kPolicy);
    TruncatedSeries s = quartic_flat_series(200);
    Real rhs = horner_eval(s, Real::of(Q("1/3"), wb), wb);
    CHECK(close(lhs, Complex(rhs), 35));
}

TEST_CASE("connection formula at the closed-form points") {
    mpfr_prec_t wb = kPolicy.working_bits();
    // z = -1/8 is inside the disc, so direct summation is the oracle.
    Complex z = C(Q("-1/8"), wb);
    for (auto params : {F21Params{Q("1/3"), Q("1/3"), Q("2/3")},
                        F21Params{Q("2/3"), Q("2/3"), Q("4/3")}}) {
        Complex direct = f21_eval(params, z, kPolicy);
        CHECK(abs(direct.im()) <= Real::pow10(-40, wb));
        Complex via = transform_15_10_33(params, z, kPolicy, Side::below);
        CHECK(close(via, direct, 35));
        // The opposite approach conjugates the pieces; the total is still real.
        Complex via_above = transform_15_10_33(params, z, kPolicy, Side::above);
        CHECK(close(via_above, direct, 35));
    }
}

TEST_CASE("connection formula outside the disc against the Pfaff route") {
    mpfr_prec_t wb = kPolicy.working_bits();
    F21Params p{Q("1/5"), Q("2/7"), Q("5/9")};
    Complex z = C2(-2.0, 0.5, wb);
    // f21_eval maps this z through z/(z-1) into the disc; the connection
    // formula goes through 1/z instead.  Agreement is a two-route check.
    Complex via_router = f21_eval(p, z, kPolicy);
    Complex via_connect = transform_15_10_33(p, z, kPolicy);
    CHECK(close(via_connect, via_router, 35));
}

TEST_CASE("two-route agreement on sampled interior points") {
    mpfr_prec_t wb = kPolicy.working_bits();
    std::mt19937_64 rng(0xF21F21);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_real_distribution<double> re_d(0.45, 0.72), im_d(-0.25, 0.25);
    int done = 0;
    while (done < 20) {
        int na = num(rng), nb = num(rng), nc = num(rng);
        if (na == 0 || na % 5 == 0 || nb == 0 || nb % 7 == 0 || nc == 0 || nc % 3 == 0) continue;
        F21Params p{Rational(na, 5), Rational(nb, 7), Rational(nc, 9)};
        double zr = re_d(rng), zi = im_d(rng);
        double azq = zr * zr + zi * zi;
        double awq = (1 - zr) * (1 - zr) + zi * zi;
        // Keep both the point and its images comfortably inside the
        // terminal regions of each route.
        if (azq > 0.75 * 0.75 || awq > 0.63 * 0.63) continue;
        Complex z = C2(zr, zi, wb);
        Complex a = f21_eval(p, z, kPolicy);
        Complex b = transform_15_10_33(p, z, kPolicy);
        CHECK(close(a, b, 35));
        ++done;
    }
}

TEST_CASE("near-unit evaluation against the agm oracle") {
    mpfr_prec_t wb = kPolicy.working_bits();
    F21Params p{Q("1/2"), Q("1/2"), Q("1")};
    // Real points pushing into the logarithmic window.
    for (const char* zs : {"24/25", "199/200", "9/10"}) {
        Complex z = C(Q(zs), wb);
        CHECK(close(f21_eval(p, z, kPolicy), agm_oracle_f(z, wb), 35));
    }
    // A point in the sub-unit annulus near the hexagonal vertex rides the
    // slow direct fallback; same oracle.
    Complex z = C2(0.95 * 0.5, 0.95 * 0.8660254037844386, wb);
    CHECK(close(f21_eval(p, z, kPolicy), agm_oracle_f(z, wb), 30));
}

TEST_CASE("near-unit generic route agrees with the connection route") {
    mpfr_prec_t wb = kPolicy.working_bits();
    F21Params p{Q("1/5"), Q("2/7"), Q("5/9")};
    Complex z = C(Q("97/100"), wb);
    Complex via_near = f21_eval(p, z, kPolicy, Side::above);
    Complex via_connect = transform_15_10_33(p, z, kPolicy, Side::above);
    CHECK(close(via_near, via_connect, 35));
    // Real function value on (0,1): imaginary parts cancel in both routes.
    CHECK(abs(via_near.im()) <= Real::pow10(-35, wb));
    CHECK(abs(via_connect.im()) <= Real::pow10(-35, wb));
}

TEST_CASE("near-unit connection with a vanishing coefficient") {
    mpfr_prec_t wb = kPolicy.working_bits();
    // c = a collapses F to the binomial (1-z)^{-b}; the first connection
    // term's coefficient vanishes through a reciprocal Gamma pole and the
    // surviving term must carry the whole value.
    F21Params p{Q("2/5"), Q("1/3"), Q("2/5")};
    Complex z = C(Q("93/100"), wb);
    Complex via_near = f21_eval(p, z, kPolicy, Side::above);
    Real binom = pow(Real::of(Q("7/100"), wb), Real::of(Q("-1/3"), wb));
    CHECK(close(via_near, Complex(binom), 40));

    // b - c a positive integer lands one denominator Gamma on a nonpositive
    // integer with the basis still independent; term-recursive summation is
    // the reference for the surviving-term value.
    F21Params q{Q("1/4"), Q("11/4"), Q("7/4")};
    Complex z2 = C(Q("23/25"), wb);
    Real ref = Real::of(1L, wb);
    Real term = Real::of(1L, wb);
    Real zr = Real::of(Q("23/25"), wb);
    for (long n = 0; n < 6000; ++n) {
        Rational ratio = (q.a + Rational(n)) * (q.b + Rational(n)) /
                         ((q.c + Rational(n)) * Rational(n + 1));
        term = Real::of(ratio, wb) * term * zr;
        ref += term;
    }
    CHECK(close(f21_eval(q, z2, kPolicy, Side::above), Complex(ref), 35));
}

TEST_CASE("quadratic transformations at the quarter parameters") {
    mpfr_prec_t wb = kPolicy.working_bits();
    Complex z = C(Q("4/9"), wb);

    F21Params gp{Q("1/4"), Q("1/4"), Q("1/2")};
    Complex plus = transform_quadratic_plus(gp, z, kPolicy);
    CHECK(close(plus, f21_eval(gp, z, kPolicy), 35));

    F21Params hp{Q("3/4"), Q("3/4"), Q("3/2")};
    Complex minus = transform_quadratic_minus(hp, z, kPolicy);
    CHECK(close(minus, f21_eval(hp, z, kPolicy), 35));

    // Small-z limit consistency: both normalized variants tend to 1.
    Complex tiny = C(Q("1/10000000000"), wb);
    CHECK(close(transform_quadratic_plus(gp, tiny, kPolicy), Complex(Real::of(1L, wb)), 8));
    CHECK(close(transform_quadratic_minus(hp, tiny, kPolicy), Complex(Real::of(1L, wb)), 8));
    CHECK(close(transform_quadratic_minus(hp, Complex(wb), kPolicy), Complex(Real::of(1L, wb)), 45));

    CHECK_THROWS_AS(transform_quadratic_plus(hp, z, kPolicy), Error);
    CHECK_THROWS_AS(transform_quadratic_minus(gp, z, kPolicy), Error);
}

TEST_CASE("quadratic identities across random parameters") {
    mpfr_prec_t wb = kPolicy.working_bits();
    std::mt19937_64 rng(0x2F12F1);
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_real_distribution<double> zd(0.05, 0.8);
    for (int k = 0; k < 10; ++k) {
        int na = num(rng), nb = num(rng);
        if (na % 5 == 0 || nb % 7 == 0) continue;
        Rational a(na, 5), b(nb, 7);
        Complex z = C2(zd(rng), 0.0, wb);
        F21Params pp{a, b, Q("1/2")};
        CHECK(close(transform_quadratic_plus(pp, z, kPolicy), f21_eval(pp, z, kPolicy), 35));
        F21Params pm{a, b, Q("3/2")};
        CHECK(close(transform_quadratic_minus(pm, z, kPolicy), f21_eval(pm, z, kPolicy), 35));
    }
}

TEST_CASE("half-period ratios") {
    mpfr_prec_t wb = kPolicy.working_bits();
    Complex half = C(Q("1/2"), wb);

    Complex tg = tau_from_gamma(half, kPolicy);
    CHECK(abs(tg.re()) <= Real::pow10(-40, wb));
    CHECK(close(tg.im(), Real::of(1L, wb) / sqrt(Real::of(3L, wb)), 40));

    Complex tl = tau_from_lambda(half, kPolicy);
    CHECK(abs(tl.re()) <= Real::pow10(-40, wb));
    CHECK(close(tl.im(), Real::of(1L, wb), 40));

    // Shrinking the argument pushes the ratio toward the cusp.
    Real im_small = tau_from_gamma(C(Q("1/100"), wb), kPolicy).im();
    Real im_mid = tau_from_gamma(C(Q("3/10"), wb), kPolicy).im();
    CHECK(im_small > im_mid);

    // Purely imaginary with positive part across (0,1).
    for (const char* ls : {"1/10", "2/5", "9/10"}) {
        Complex t = tau_from_lambda(C(Q(ls), wb), kPolicy);
        CHECK(abs(t.re()) <= Real::pow10(-40, wb));
        CHECK(t.im().sign() > 0);
    }
}

TEST_CASE("rational j parameterizations") {
    CHECK(j_from_lambda(Q("1/2")) == Q("1728"));
    CHECK(j_from_gamma(Q("1/2")) == Q("54000"));

    // Symmetry under reflection of the argument.
    for (const char* ls : {"3/7", "1/5", "-2/3"}) {
        CHECK(j_from_lambda(Q(ls)) == j_from_lambda(Rational(1) - Q(ls)));
    }

    CHECK_THROWS_AS(j_from_lambda(Q("0")), Error);
    CHECK_THROWS_AS(j_from_lambda(Q("1")), Error);
    CHECK_THROWS_AS(j_from_gamma(Q("0")), Error);
    CHECK_THROWS_AS(j_from_gamma(Q("1")), Error);

    // Numeric overloads agree with the exact ones.
    mpfr_prec_t wb = kPolicy.working_bits();
    CHECK(close(j_from_lambda(C(Q("1/2"), wb)), C(Q("1728"), wb), 40));
    CHECK(close(j_from_gamma(C(Q("2/7"), wb)), C(j_from_gamma(Q("2/7")), wb), 40));
}

TEST_CASE("domain errors") {
    mpfr_prec_t wb = kPolicy.working_bits();
    F21Params p{Q("1/2"), Q("1/2"), Q("1")};
    CHECK_THROWS_AS(f21_eval(F21Params{Q("1"), Q("1"), Q("0")}, Complex(wb), kPolicy), Error);

    // The hexagonal unit point is outside every implemented route.
    Complex hex = C2(0.5, 0.8660254037844386, wb);
    CHECK_THROWS_AS(f21_eval(p, hex, kPolicy), Error);

    CHECK_THROWS_AS(transform_15_10_33(p, Complex(wb), kPolicy), Error);
}
