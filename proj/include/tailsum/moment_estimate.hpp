#ifndef TAILSUM_MOMENT_ESTIMATE_HPP
#define TAILSUM_MOMENT_ESTIMATE_HPP

#include <optional>

#include "tailsum/monte_carlo.hpp"
#include "tailsum/sequence.hpp"

namespace tailsum {

enum class QuantileSource { MC, Enum, F2Proxy };

struct MomentEstimate {
    double p = 0.0;
    double estimate = 0.0;          // u_quantile_term + ell_norm_term
    double u_quantile_term = 0.0;   // U*(e^-p / 4) from the chosen oracle
    double ell_norm_term = 0.0;     // ||ell||_p
    QuantileSource source = QuantileSource::Enum;
};

inline constexpr double kDefaultP0 = 0.5;

/// Approximation of ||U||_p by U*(e^-p/4) + ||ell||_p.
///
/// The quantile term comes from exact enumeration (Enum), a Monte Carlo run
/// (MC, rejected with quantile_unavailable_error when e^-p/4 is below the
/// resolution 10/n), or the F2 tail estimate at t = e^-p/4 with the MaxStar
/// truncation (F2Proxy, a proxy justified for real-valued Levy sequences).
/// p below p0 = 0.5 is rejected with domain_error: the approximation
/// constants degrade as p -> 0.
MomentEstimate u_lp_estimate(const IndependentSequence& seq, double p, QuantileSource source,
                             std::optional<SimConfig> mc_config = {});

enum class GrowthBoundForm { First, Second };

// Functional forms of the moment-comparison bound for q >= p >= p0:
//   First:  c1 * q/max{p, log(e+q)} * (U_p + M_star_val) + c1 * M_q
//   Second: c1 * q/max{p, log(e+q)} * (U_p + M_q)
// Pure arithmetic on caller-supplied quantities (M_star_val is M* evaluated
// wherever the caller chooses, e.g. at c2^-1 e^-q). Throws domain_error when
// q < p.
double moment_growth_bound(double q, double p, double u_p, double m_star_val, double m_q,
                           double c1, GrowthBoundForm form);

}  // namespace tailsum

#endif
