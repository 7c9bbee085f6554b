#pragma once

#include "moonj/precision.hpp"
#include "moonj/rational.hpp"

namespace moonj {

// Parameter triple of the Gauss series sum_n (a)_n (b)_n / (c)_n z^n / n!.
// c must not be a nonpositive integer or the series is undefined.
struct F21Params {
    Rational a, b, c;
    void validate() const;
};

// Exact Taylor coefficient (a)_n (b)_n / ((c)_n n!).
Rational f21_series_coefficient(const F21Params& p, int n);

// Evaluation by direct summation for small |z| and by the implemented
// connection and Pfaff transformations elsewhere.  The side flag resolves
// branch choices when z sits on a cut (real z > 1 or real z < 0 after a
// transformation); it is inert off the real axis.  Throws out_of_domain for
// points no route reaches and no_convergence if summation stalls.
Complex f21_eval(const F21Params& p, const Complex& z, const PrecisionPolicy& policy,
                 Side side = Side::none);

// Connection formula sending z to 1/z and 1 - 1/z, valid for |arg z| < pi:
//   F(a,b;c;z) = G1 (1/z)^a F(a-c+1,a;a-b+1;1/z)
//              + G2 (1-1/z)^{c-a-b} (-1/z)^b F(c-a,1-a;c-a-b+1;1-1/z)
// with G1 = Gamma(1-b)Gamma(c)/(Gamma(a-b+1)Gamma(c-a)) and
//      G2 = Gamma(1-b)Gamma(c)/(Gamma(a)Gamma(c-a-b+1)).
// Agrees with f21_eval wherever both are defined.
Complex transform_15_10_33(const F21Params& p, const Complex& z, const PrecisionPolicy& policy,
                           Side side = Side::none);

// Quadratic transformations at the half-integer third parameters; each is
// normalized by its Gamma prefactor so the contract is simply
//   transform_quadratic_plus(a,b,1/2; z)  = F(a,b;1/2;z)
//   transform_quadratic_minus(a,b,3/2; z) = F(a,b;3/2;z)
// computed through the pair of arguments (1 -/+ sqrt(z))/2.
Complex transform_quadratic_plus(const F21Params& p, const Complex& z,
                                 const PrecisionPolicy& policy, Side side = Side::none);
Complex transform_quadratic_minus(const F21Params& p, const Complex& z,
                                  const PrecisionPolicy& policy, Side side = Side::none);

// Half-period ratios from the hypergeometric ansatz; both land in the upper
// half-plane for arguments in (0, 1).
Complex tau_from_gamma(const Complex& g, const PrecisionPolicy& policy);
Complex tau_from_lambda(const Complex& l, const PrecisionPolicy& policy);

// Rational parameterizations of j pulled back through the two ansatzes.
// Exact overloads for rational inputs, numeric for complex; poles at {0, 1}.
Rational j_from_gamma(const Rational& g);
Rational j_from_lambda(const Rational& l);
Complex j_from_gamma(const Complex& g);
Complex j_from_lambda(const Complex& l);

}  // namespace moonj
