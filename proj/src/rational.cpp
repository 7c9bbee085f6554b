#include "moonj/rational.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace moonj {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::zero_constant_term: return "zero_constant_term";
        case errc::nonzero_constant_term: return "nonzero_constant_term";
        case errc::not_reversible: return "not_reversible";
        case errc::invalid_parameters: return "invalid_parameters";
        case errc::pole_at_origin: return "pole_at_origin";
        case errc::division_by_zero: return "division_by_zero";
        case errc::non_positive_argument: return "non_positive_argument";
        case errc::zero_base: return "zero_base";
        case errc::out_of_domain: return "out_of_domain";
        case errc::no_convergence: return "no_convergence";
        case errc::gamma_pole: return "gamma_pole";
        case errc::pole_input: return "pole_input";
        case errc::not_upper_half_plane: return "not_upper_half_plane";
        case errc::contour_too_large: return "contour_too_large";
        case errc::sector_boundary: return "sector_boundary";
    }
    return "unknown";
}

Rational::Rational(long num, long den) {
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail(errc::invalid_parameters, "empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // Exact decimal: digits before and after the point over a power of ten.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            fail(errc::invalid_parameters, "bad decimal literal '" + text + "'");
        Rational r;
        if (mpz_set_str(mpq_numref(r.v_), digits.c_str(), 10) != 0)
            fail(errc::invalid_parameters, "bad decimal literal '" + text + "'");
        mpz_ui_pow_ui(mpq_denref(r.v_), 10, frac_len);
        mpq_canonicalize(r.v_);
        return r;
    }

    Rational r;
    if (mpq_set_str(r.v_, s.c_str(), 10) != 0)
        fail(errc::invalid_parameters, "bad rational literal '" + text + "'");
    if (mpz_sgn(mpq_denref(r.v_)) == 0)
        fail(errc::division_by_zero, "rational with zero denominator");
    mpq_canonicalize(r.v_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(errc::division_by_zero, "rational division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

Rational Rational::pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base.is_zero() && exp < 0) fail(errc::division_by_zero, "0 to a negative power");
    Rational r;
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), e);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), e);
    if (exp < 0) mpq_inv(r.v_, r.v_);
    return r;
}

Rational Rational::factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.v_), n);
    return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    Rational r;
    mpz_bin_uiui(mpq_numref(r.v_), n, k);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
}

Rational Rational::numerator() const {
    Rational r;
    mpq_set_num(r.v_, mpq_numref(v_));
    return r;
}

Rational Rational::denominator() const {
    Rational r;
    mpq_set_num(r.v_, mpq_denref(v_));
    return r;
}

long Rational::denominator_long() const {
    if (!mpz_fits_slong_p(mpq_denref(v_)))
        fail(errc::out_of_domain, "denominator exceeds machine range");
    return mpz_get_si(mpq_denref(v_));
}

long Rational::to_long() const {
    if (!is_integer() || !mpz_fits_slong_p(mpq_numref(v_)))
        fail(errc::out_of_domain, "rational is not a machine integer");
    return mpz_get_si(mpq_numref(v_));
}

std::string Rational::str() const {
    std::vector<char> buf(mpz_sizeinbase(mpq_numref(v_), 10) + mpz_sizeinbase(mpq_denref(v_), 10) + 4);
    mpq_get_str(buf.data(), 10, v_);
    return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace moonj
