#ifndef TAILSUM_ORLICZ_HPP
#define TAILSUM_ORLICZ_HPP

#include "tailsum/atomic_distribution.hpp"

namespace tailsum {

/// Orlicz norm ||X||_Phi for Phi_t(x) = (t^-x - 1) / (t^-1 - 1), t in (0, 1/4].
///
/// Computed as inf{ lambda > 0 : E Phi_t(|X|/lambda) <= 1 } by bisection on
/// lambda; the expectation condition reduces to ln E exp(|X| ln(1/t) / lambda)
/// <= ln(1/t), evaluated in log space. Relative tolerance 1e-9. Returns 0 for
/// X identically 0. Throws non_convergence_error past 200 iterations and
/// domain_error for t outside (0, 1/4].
double phi_norm(const ComponentDistribution& d, double t);

/// sup over x in [0,1] of [log(1/t) / (log(1/x) + log(1/t))] * X*(x).
///
/// X* is a right-continuous step function and the weight is continuous and
/// increasing, so the sup is attained at a tail breakpoint or at x = 1 and is
/// evaluated exactly over breakpoints. Equivalent to the Orlicz norm with
/// constants of approximation bounded by 2.
double phi_norm_sup_formula(const ComponentDistribution& d, double t);

}  // namespace tailsum

#endif
