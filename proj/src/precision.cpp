#include "moonj/precision.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "moonj/errors.hpp"

namespace moonj {

PrecisionPolicy::PrecisionPolicy(int digits, int guard) : target_digits(digits), guard_digits(guard) {
    if (digits < 1) fail(errc::invalid_parameters, "target_digits must be positive");
    if (guard < 10) guard_digits = 10;
}

mpfr_prec_t PrecisionPolicy::bits_for_digits(int digits) {
    // log2(10) = 3.3219..., rounded up, plus a fixed slack byte.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

mpfr_prec_t PrecisionPolicy::working_bits() const { return bits_for_digits(working_digits()); }

PrecisionPolicy PrecisionPolicy::with_series_terms(int terms) const {
    PrecisionPolicy p = *this;
    p.guard_digits += terms / 10;
    return p;
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real Real::of(long n, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
}

Real Real::of(double d, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

Real Real::of(const Rational& q, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
    return r;
}

Real Real::bin(mpfr_bin f, const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::un(mpfr_un f, const Real& a) {
    Real r(a.prec());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real round_nearest(const Real& a) {
    Real r(a.prec());
    mpfr_round(r.v_, a.v_);
    return r;
}

Real Real::pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::euler(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow10(long e, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    if (digits < 2) digits = 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = abs2(b);
    if (d.is_zero()) fail(errc::division_by_zero, "complex division by zero");
    Complex n = a * conj(b);
    return {n.re() / d, n.im() / d};
}

Complex exp(const Complex& a) {
    Real m = exp(a.re());
    return {m * cos(a.im()), m * sin(a.im())};
}

Real arg(const Complex& a, Side side) {
    if (a.is_zero()) fail(errc::zero_base, "argument of zero");
    // On the negative real axis the side flag is the sole authority; a signed
    // zero in the imaginary part must not leak through atan2's convention.
    if (a.im().is_zero() && a.re().sign() < 0) {
        Real pi = Real::pi(a.prec());
        return side == Side::below ? -pi : pi;
    }
    return atan2(a.im(), a.re());
}

Complex log(const Complex& a, Side side) {
    Real r = abs(a);
    if (r.is_zero()) fail(errc::zero_base, "log of zero");
    return {log(r), arg(a, side)};
}

Complex complex_pow_principal(const Complex& z, const Rational& a, Side side) {
    mpfr_prec_t bits = z.prec();
    if (z.is_zero()) {
        if (a.sign() > 0) return Complex(bits);
        fail(errc::zero_base, "0 raised to a non-positive power");
    }
    if (a.is_zero()) return Complex(Real::of(1L, bits));
    if (a.is_integer() && z.is_real()) {
        // Exact sign handling; no branch decision involved.
        Real m = pow(abs(z.re()), Real::of(a, bits));
        bool neg = z.re().sign() < 0 && a.numerator().to_long() % 2 != 0;
        return Complex(neg ? -m : m);
    }
    Real e = Real::of(a, bits);
    Complex lz = log(z, side);
    return exp(Complex(e * lz.re(), e * lz.im()));
}

Complex horner_eval(const TruncatedSeries& s, const Complex& t, mpfr_prec_t bits) {
    Complex acc(bits);
    for (int k = s.order(); k >= 0; --k) {
        acc = acc * t;
        if (!s.coeff(k).is_zero()) acc += Complex::of(s.coeff(k), bits);
    }
    return acc;
}

Real horner_eval(const TruncatedSeries& s, const Real& t, mpfr_prec_t bits) {
    Real acc = Real::zero(bits);
    for (int k = s.order(); k >= 0; --k) {
        acc = acc * t;
        if (!s.coeff(k).is_zero()) acc += Real::of(s.coeff(k), bits);
    }
    return acc;
}

std::string Complex::str(int digits) const {
    std::string out = re_.str(digits);
    out += im_.sign() < 0 ? " - " : " + ";
    out += abs(im_).str(digits);
    out += "*i";
    return out;
}

}  // namespace moonj
