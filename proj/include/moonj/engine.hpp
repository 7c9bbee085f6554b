#pragma once

#include <array>
#include <string>

#include "moonj/modular.hpp"
#include "moonj/precision.hpp"
#include "moonj/rational.hpp"
#include "moonj/series.hpp"

namespace moonj {

// Exact flat-coordinate data at one fixed point: the odd/even interpolating
// pair and their ratio c = h/g.
struct FlatCoordinateSeries {
    CMCase cm;
    TruncatedSeries h;
    TruncatedSeries g;
    TruncatedSeries c;
};

// One row of the six-sector table: the sixth-root exponents carried by the
// two hypergeometric basis terms of g and h on arg(t) in
// [index*pi/3, (index+1)*pi/3), and the integer Moebius word
// x = (mp*tau + mq)/(mr*tau + ms) whose disk image gives the normalized flat
// coordinate there.
struct SectorSpec {
    int index;
    int a_g, b_g;
    int a_h, b_h;
    long mp, mq, mr, ms;
};

const std::array<SectorSpec, 6>& sector_table();

// Row owning arg(t); throws sector_boundary within 1e-6 of a multiple of
// pi/3, out_of_domain off the punctured unit disk.
const SectorSpec& sector_for(const Complex& t);

// Outcome of one verification run, serializable by the CLI.
struct VerificationReport {
    std::string check;
    std::string case_name;
    std::string t_text;
    Complex lhs;
    Complex rhs;
    std::string exact_rhs;
    Real abs_residual;
    int digits_matched = 0;
    long series_terms_used = 0;
    bool pass = false;
    std::string notes;

    explicit VerificationReport(mpfr_prec_t bits)
        : lhs(bits), rhs(bits), abs_residual(Real::zero(bits)) {}
};

// Exact series to the given order, c = h/g.
FlatCoordinateSeries flat_series(const CMCase& c, int order);

// c(t) by summing the first `terms` terms of h and g at working precision.
Complex flat_eval_series(const CMCase& c, const Complex& t, long terms,
                         const PrecisionPolicy& policy);

// The summed h and g values themselves; the sector machinery consumes them.
struct FlatPair {
    Complex h;
    Complex g;
};
FlatPair flat_eval_components(const CMCase& c, const Complex& t, long terms,
                              const PrecisionPolicy& policy);

// c(t) through the closed hypergeometric forms; agrees with flat_eval_series
// on the shared domain.
Complex flat_eval_hypergeometric(const CMCase& c, const Complex& t, const PrecisionPolicy& policy);

// The algebraic side of the identity: 27t^3((8-t^3)/(1+t^3))^3 at the
// hexagonal point, 64(3+4t^2)^3/(1-4t^2)^2 at the square point.
Rational conj_rhs(const CMCase& c, const Rational& t);
Complex conj_rhs(const CMCase& c, const Complex& t);

// Coefficientwise comparison of the composed expansion with the algebraic
// side, both as exact series to the given order.
VerificationReport verify_exact(const CMCase& c, int order);

// Numeric check of the identity at one point: evaluate the flat coordinate,
// pull it through the inverse disk map (with the affine normalization in the
// hexagonal case), evaluate j, and compare with the algebraic side.
// pass_digits < 0 selects the default threshold of target_digits/2.
VerificationReport verify_numeric(const CMCase& c, const Complex& t, long terms,
                                  const PrecisionPolicy& policy, int pass_digits = -1);
VerificationReport verify_numeric(const CMCase& c, const Rational& t, long terms,
                                  const PrecisionPolicy& policy, int pass_digits = -1);

// Checks one sector row at a point strictly inside it: solves for the two
// prefactors from two radial samples and tests constancy at a third, tests
// the row's sixth-root exponents against the gamma-ratio prefactors, tests
// the row's Moebius expression against the directly summed normalized flat
// coordinate, and tests j-equivalence against the algebraic side.
VerificationReport sector_check(const SectorSpec& spec, const Complex& t, long terms,
                                const PrecisionPolicy& policy);

// Normalized flat coordinate c_rho(t)/(2 pi Omega^2), a unit-disk value.
Complex chat_rho(const Complex& t, const PrecisionPolicy& policy);

}  // namespace moonj
