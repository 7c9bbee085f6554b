#pragma once

#include "moonj/precision.hpp"
#include "moonj/rational.hpp"

namespace moonj {

enum class reconstruct_status { found, none_found, ambiguous };

struct ReconstructResult {
    reconstruct_status status;
    Rational value;  // meaningful only when status == found
};

// Nearest rational with denominator <= den_bound, accepted when it lies
// within eps of x.  Reports ambiguous when eps is too wide to pin a unique
// candidate at that denominator bound.
ReconstructResult rational_reconstruct(const Real& x, long den_bound, const Real& eps);

}  // namespace moonj
