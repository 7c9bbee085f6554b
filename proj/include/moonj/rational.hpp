#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

#include "moonj/errors.hpp"

namespace moonj {

// Exact rational number, thin RAII wrapper around GMP's mpq_t.  Values are
// kept in canonical form at all times: gcd(num, den) == 1 and den > 0.
class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long num, long den);
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    // Accepts "p", "-p/q", and decimal literals like "318822.4"; decimals are
    // read as the exact fraction they print.
    static Rational parse(const std::string& text);

    static Rational from_mpq(const __mpq_struct* q) {
        Rational r;
        mpq_set(r.v_, q);
        mpq_canonicalize(r.v_);
        return r;
    }

    static Rational pow(const Rational& base, long exp);
    static Rational factorial(unsigned long n);
    static Rational binomial(unsigned long n, unsigned long k);

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }
    Rational abs() const;
    Rational numerator() const;
    Rational denominator() const;
    // Denominator as a machine integer; throws out_of_domain if it does not fit.
    long denominator_long() const;
    long to_long() const;  // requires is_integer() and fits
    double to_double() const { return mpq_get_d(v_); }

    std::string str() const;  // "p" or "p/q"

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        mpq_neg(r.v_, a.v_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_, b.v_);
        return c <=> 0;
    }

    // Raw handle for interop with MPFR (mpfr_set_q and friends).
    const __mpq_struct* raw() const { return v_; }

  private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace moonj
