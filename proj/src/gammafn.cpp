#include "moonj/gammafn.hpp"

#include <cmath>

#include "moonj/errors.hpp"

namespace moonj {

namespace {

// Spouge's approximation on the core interval [1, 2].  With parameter a the
// relative error is below a^{-1/2} (2 pi)^{-(a + 1/2)}, so a is sized from
// the requested bit count and the sum is carried with extra bits to absorb
// the alternating-coefficient cancellation.
Real spouge_core(const Rational& x, mpfr_prec_t bits) {
    double digits = static_cast<double>(bits) / 3.3219280948873623;
    long a = static_cast<long>(std::ceil((digits + 10.0) * 1.2533141373155003)) + 3;
    mpfr_prec_t wb = bits + static_cast<mpfr_prec_t>(a) + 32;

    Rational z = x - Rational(1);  // z in [0, 1]
    Real zr = Real::of(z, wb);
    Real ar = Real::of(a, wb);
    Real half = Real::of(Rational(1, 2), wb);

    // c0 = sqrt(2 pi); ck = (-1)^{k-1}/(k-1)! (a-k)^{k-1/2} e^{a-k}
    Real sum = sqrt((Real::of(2L, wb) * Real::pi(wb)));
    Real fact = Real::of(1L, wb);
    for (long k = 1; k < a; ++k) {
        if (k > 1) fact *= Real::of(k - 1, wb);
        Real ak = Real::of(a - k, wb);
        Real ck = pow(ak, Real::of(k, wb) - half) * exp(ak) / fact;
        Real term = ck / (zr + Real::of(k, wb));
        sum = (k % 2 == 1) ? sum + term : sum - term;
    }

    // Gamma(x) = Gamma(z+1) = (z+a)^{z+1/2} e^{-(z+a)} * sum.
    Real za = zr + ar;
    Real g = pow(za, zr + half) * exp(-za) * sum;
    Real out(bits);
    mpfr_set(out.raw(), g.raw(), MPFR_RNDN);
    return out;
}

}  // namespace

Real gamma_rational(const Rational& x, mpfr_prec_t bits) {
    if (x.is_integer()) {
        long n = x.to_long();
        if (n <= 0) fail(errc::gamma_pole, "gamma pole at " + x.str());
        return Real::of(Rational::factorial(static_cast<unsigned long>(n - 1)), bits);
    }
    // Shift into (1, 2] with the functional equation, tracking the exact
    // rational prefactor.
    Rational y = x;
    Rational pre(1);
    while (y > Rational(2)) {
        y -= Rational(1);
        pre *= y;
    }
    while (y <= Rational(1)) {
        pre /= y;
        y += Rational(1);
    }
    mpfr_prec_t wb = bits + 16;
    return Real::of(pre, wb) * spouge_core(y, wb);
}

Real gamma_eval(const Rational& x, const PrecisionPolicy& policy) {
    if (x.sign() <= 0) fail(errc::non_positive_argument, "gamma argument must be positive, got " + x.str());
    if (x > Rational(2)) fail(errc::out_of_domain, "gamma argument above 2: " + x.str());
    return gamma_rational(x, policy.working_bits());
}

Real digamma_rational(const Rational& x, mpfr_prec_t bits) {
    if (x.is_integer() && x.sign() <= 0) fail(errc::gamma_pole, "digamma pole at " + x.str());
    return digamma(Real::of(x, bits + 16));
}

Complex sixth_root_point(mpfr_prec_t bits) {
    Real half = Real::of(Rational(1, 2), bits);
    return {half, sqrt(Real::of(3L, bits)) * half};
}

}  // namespace moonj
