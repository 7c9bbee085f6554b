#pragma once

#include <stdexcept>
#include <string>

namespace moonj {

// Failure modes that callers are expected to distinguish.  Everything here is
// a precondition or domain violation, not an internal bug; internal bugs
// assert.
enum class errc {
    zero_constant_term,      // series division by a series with c0 == 0
    nonzero_constant_term,   // composition/reversion inner series with c0 != 0
    not_reversible,          // reversion input with c1 == 0
    invalid_parameters,
    pole_at_origin,          // rational function expansion with Q(0) == 0
    division_by_zero,
    non_positive_argument,
    zero_base,               // 0^a for non-integer a
    out_of_domain,
    no_convergence,
    gamma_pole,              // Gamma evaluated at a non-positive integer
    pole_input,              // Moebius map evaluated at its pole
    not_upper_half_plane,
    contour_too_large,
    sector_boundary,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace moonj
