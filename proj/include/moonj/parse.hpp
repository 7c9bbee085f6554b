#pragma once

#include <string>

#include "moonj/precision.hpp"
#include "moonj/rational.hpp"

namespace moonj {

// Number grammar shared by the CLI and the python module: exact rational
// "p/q", integer, or plain decimal taken as the exact rational of its
// printed digits. Mixed forms are rejected.
Rational parse_number(std::string text);

// Point on the real t-axis; sqrt3-1 is the one irrational input form.
struct TValue {
    bool symbolic = false;
    Rational exact;
};

TValue parse_t(const std::string& text);

// The parsed point at working precision.
Complex t_complex(const TValue& t, mpfr_prec_t bits);

// Complex literal grammar: "a+bi", "bi", "i", "a", with decimal or rational
// components. Spaces are ignored.
Complex parse_tau(const std::string& text, mpfr_prec_t bits);

}  // namespace moonj
