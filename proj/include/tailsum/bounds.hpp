#ifndef TAILSUM_BOUNDS_HPP
#define TAILSUM_BOUNDS_HPP

#include "tailsum/sequence.hpp"

namespace tailsum {

struct KNBoundInput {
    double p_u = 0.0;  // Pr(U > t)
    double p_m = 0.0;  // Pr(M > t)
    unsigned k = 1;
};

// Right-hand side of the Klass-Nowicki inequality
//   Pr(U > (3K-1) t) <= (1/K!) (Pr(U>t) / (1 - Pr(U>t)))^K + Pr(M > t).
// Evaluated through lgamma in log space; +inf when Pr(U>t) = 1.
double kn_rhs(const KNBoundInput& input);

// Right-hand side of the decreasing-rearrangement corollary
//   U*(t) <= c1 * log(1/t) / max{log(1/s), log log(4/t)} * (U*(s) + M*(t/2))
// for 0 < t <= s <= 1/2. c1 is caller-supplied (the paper only proves one
// exists); the default used by the verification suite is 12, an empirical
// value. Throws domain_error when t > s or s > 1/2.
double kn_decr_bound(double u_star_s, double m_star_half_t, double t, double s, double c1);

inline constexpr double kKnDecrDefaultC1 = 12.0;

// V_k*(t) <= k * ell(t (k-1)! / r^(k-1)); the rescaled argument is clamped by
// ell's own definition (zero beyond 1). Factorials go through lgamma.
double vk_tail_bound(const IndependentSequence& seq, double r, unsigned k, double t);

// ||U^(>ell(r))||_p <= 2 e^(2^p r / p) ||ell||_p. The exponent is formed in
// log space and overflows gracefully to +inf.
double large_part_lp_bound(const IndependentSequence& seq, double r, double p);

}  // namespace tailsum

#endif
