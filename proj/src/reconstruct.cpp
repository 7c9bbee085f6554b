#include "moonj/reconstruct.hpp"

#include <vector>

#include <gmp.h>

#include "moonj/errors.hpp"

namespace moonj {

ReconstructResult rational_reconstruct(const Real& x, long den_bound, const Real& eps) {
    if (den_bound < 1) fail(errc::invalid_parameters, "den_bound must be >= 1");
    if (x.is_nan()) fail(errc::invalid_parameters, "cannot reconstruct from NaN");

    // The float is a dyadic rational; run the continued fraction on it
    // exactly and keep every convergent whose denominator fits the bound.
    // A true value p/q within eps < 1/(2 q^2) of x is guaranteed to appear
    // among the convergents.
    mpq_t val;
    mpq_init(val);
    mpfr_get_q(val, x.raw());

    mpz_t num, den, q0, r0, a;
    mpz_inits(num, den, q0, r0, a, nullptr);
    mpz_set(num, mpq_numref(val));
    mpz_set(den, mpq_denref(val));

    mpz_t p_prev, p_cur, q_prev, q_cur, p_next, q_next, bound;
    mpz_inits(p_prev, p_cur, q_prev, q_cur, p_next, q_next, bound, nullptr);
    // Seed (h_{-2}/k_{-2}, h_{-1}/k_{-1}) = (0/1, 1/0) so the first pass
    // produces a_0/1.
    mpz_set_ui(p_prev, 0);
    mpz_set_ui(q_prev, 1);
    mpz_set_ui(p_cur, 1);
    mpz_set_ui(q_cur, 0);
    mpz_set_si(bound, den_bound);

    std::vector<Rational> candidates;
    // p_cur/q_cur starts as 0/1 which is itself a denominator-1 candidate
    // (covers x near zero); the loop refines it with each partial quotient.
    bool first = true;
    while (mpz_sgn(den) != 0) {
        mpz_fdiv_qr(a, r0, num, den);
        mpz_swap(num, den);
        mpz_swap(den, r0);

        mpz_mul(p_next, a, p_cur);
        mpz_add(p_next, p_next, p_prev);
        mpz_mul(q_next, a, q_cur);
        mpz_add(q_next, q_next, q_prev);
        mpz_swap(p_prev, p_cur);
        mpz_swap(q_prev, q_cur);
        mpz_swap(p_cur, p_next);
        mpz_swap(q_cur, q_next);

        if (mpz_cmp(q_cur, bound) > 0) break;
        mpq_t conv;
        mpq_init(conv);
        mpz_set(mpq_numref(conv), p_cur);
        mpz_set(mpq_denref(conv), q_cur);
        mpq_canonicalize(conv);
        candidates.push_back(Rational::from_mpq(conv));
        mpq_clear(conv);
        first = false;
    }
    if (first) candidates.push_back(Rational(0));

    mpz_clears(num, den, q0, r0, a, nullptr);
    mpz_clears(p_prev, p_cur, q_prev, q_cur, p_next, q_next, bound, nullptr);
    mpq_clear(val);

    // Later convergents are strictly better approximations, so the last
    // in-bound one is the nearest admissible rational.
    const Rational& best = candidates.back();
    mpfr_prec_t wb = x.prec() + 32;
    Real err = abs(x - Real::of(best, wb));
    ReconstructResult res{reconstruct_status::none_found, Rational(0)};
    if (!(err <= eps)) return res;

    // Distinct rationals with denominators <= B are at least 1/(q B) apart;
    // a ball of radius eps reaching past half that gap cannot single one out.
    Real gap = Real::of(1L, wb) / (Real::of(best.denominator(), wb) * Real::of(Rational(den_bound), wb));
    if (eps + eps >= gap) {
        res.status = reconstruct_status::ambiguous;
        return res;
    }
    res.status = reconstruct_status::found;
    res.value = best;
    return res;
}

}  // namespace moonj
