#pragma once

#include <string>
#include <utility>

#include <mpfr.h>

#include "moonj/rational.hpp"
#include "moonj/series.hpp"

namespace moonj {

// Requested accuracy for numeric work.  target_digits is what the caller
// wants to trust; guard_digits absorb roundoff and are never reported.
// Internal routines may widen the guard further (one digit per ten series
// terms summed) via with_series_terms.
struct PrecisionPolicy {
    int target_digits;
    int guard_digits;

    explicit PrecisionPolicy(int digits = 50, int guard = 15);

    int working_digits() const { return target_digits + guard_digits; }
    mpfr_prec_t working_bits() const;
    PrecisionPolicy with_series_terms(int terms) const;

    static mpfr_prec_t bits_for_digits(int digits);
};

// Arbitrary-precision real, RAII over mpfr_t.  Every value carries its own
// precision; binary operations round to the wider operand's precision.  No
// global or thread precision state is consulted.
class Real {
  public:
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, clamp(bits)); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long n, mpfr_prec_t bits);
    static Real of(double d, mpfr_prec_t bits);
    static Real of(const Rational& q, mpfr_prec_t bits);
    static Real zero(mpfr_prec_t bits) { return of(0L, bits); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Round-to-nearest scientific form with the given significant digits.
    std::string str(int digits) const;

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
    friend Real operator-(const Real& a);
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend Real abs(const Real& a) { return un(mpfr_abs, a); }
    friend Real sqrt(const Real& a) { return un(mpfr_sqrt, a); }
    friend Real exp(const Real& a) { return un(mpfr_exp, a); }
    friend Real log(const Real& a) { return un(mpfr_log, a); }
    friend Real log10(const Real& a) { return un(mpfr_log10, a); }
    friend Real sin(const Real& a) { return un(mpfr_sin, a); }
    friend Real cos(const Real& a) { return un(mpfr_cos, a); }
    friend Real digamma(const Real& a) { return un(mpfr_digamma, a); }
    friend Real atan2(const Real& y, const Real& x) { return bin(mpfr_atan2, y, x); }
    friend Real hypot(const Real& x, const Real& y) { return bin(mpfr_hypot, x, y); }
    friend Real pow(const Real& a, const Real& b) { return bin(mpfr_pow, a, b); }
    friend Real round_nearest(const Real& a);

    static Real pi(mpfr_prec_t bits);
    static Real euler(mpfr_prec_t bits);
    static Real pow10(long e, mpfr_prec_t bits);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    static mpfr_prec_t clamp(mpfr_prec_t bits) { return bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits; }
    using mpfr_bin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using mpfr_un = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(mpfr_bin f, const Real& a, const Real& b);
    static Real un(mpfr_un f, const Real& a);
    mpfr_t v_;
};

// Which side of the real axis a cut-adjacent real value is approached from.
// Only consulted by branch-sensitive operations (powers, logs) at real
// negative bases; complex values away from the axis ignore it.
enum class Side { none, above, below };

inline Side flip(Side s) {
    if (s == Side::above) return Side::below;
    if (s == Side::below) return Side::above;
    return Side::none;
}

// Complex number over two Reals.  Principal-branch conventions throughout:
// arg in (-pi, pi], cut on the negative real axis.
class Complex {
  public:
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(re), im_(Real::zero(re.prec())) {}
    explicit Complex(mpfr_prec_t bits) : re_(Real::zero(bits)), im_(Real::zero(bits)) {}

    static Complex of(const Rational& re, mpfr_prec_t bits) { return Complex(Real::of(re, bits)); }
    static Complex i_unit(mpfr_prec_t bits) { return Complex(Real::zero(bits), Real::of(1L, bits)); }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re_, s * a.im_}; }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    friend Complex conj(const Complex& a) { return {a.re_, -a.im_}; }
    friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }
    friend Complex exp(const Complex& a);
    friend Real abs2(const Complex& a) { return a.re_ * a.re_ + a.im_ * a.im_; }

    // Principal argument; at a real negative value the side flag selects the
    // +pi (above / none) or -pi (below) boundary value.
    friend Real arg(const Complex& a, Side side);
    friend Complex log(const Complex& a, Side side);

    std::string str(int digits) const;

  private:
    Real re_, im_;
};

// z^a on the principal branch, side-resolved on the negative real axis.
// Throws zero_base at z == 0 unless a > 0 (where the limit 0 is returned).
Complex complex_pow_principal(const Complex& z, const Rational& a, Side side = Side::none);

// Numeric Horner evaluation of an exact series at a complex point.
Complex horner_eval(const TruncatedSeries& s, const Complex& t, mpfr_prec_t bits);

Real horner_eval(const TruncatedSeries& s, const Real& t, mpfr_prec_t bits);

}  // namespace moonj
