#pragma once

#include "moonj/precision.hpp"
#include "moonj/rational.hpp"

namespace moonj {

// Gamma at a rational point on (0, 2], the range every closed-form prefactor
// reduces into.  Throws non_positive_argument / out_of_domain off the range.
Real gamma_eval(const Rational& x, const PrecisionPolicy& policy);

// Gamma at any non-pole rational, reduced to the core interval by the
// functional equation.  Throws gamma_pole at 0, -1, -2, ...
Real gamma_rational(const Rational& x, mpfr_prec_t bits);

// digamma at a rational non-pole point.
Real digamma_rational(const Rational& x, mpfr_prec_t bits);

// e^{i pi/3}, the hexagonal fixed point on the unit circle.
Complex sixth_root_point(mpfr_prec_t bits);

}  // namespace moonj
