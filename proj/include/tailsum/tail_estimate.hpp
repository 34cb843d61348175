#ifndef TAILSUM_TAIL_ESTIMATE_HPP
#define TAILSUM_TAIL_ESTIMATE_HPP

#include <utility>

#include "tailsum/sequence.hpp"

namespace tailsum {

enum class TruncationMode { Ell, MaxStar };

struct TailEstimate {
    double t = 0.0;
    TruncationMode mode = TruncationMode::Ell;
    double truncation_level = 0.0;
    double lambda = 0.0;               // the infimum
    std::pair<double, double> bracket{0.0, 0.0};
    unsigned iterations = 0;
};

// max over sign in {+1,-1} of sum_n ln E exp(sign * a * Y_n), where
// a = ln(1/t)/lambda and Y_n is X_n truncated at `trunc` (weak inequality).
// The lambda -> inf{...} problem is feasible at lambda iff this is <= ln(1/t).
double log_G(const IndependentSequence& seq, double t, double trunc, double lambda);

// Same quantity for a pre-truncated sequence (avoids re-truncating inside
// bisection loops).
double log_G_truncated(const IndependentSequence& truncated_seq, double t, double lambda);

/// F1 (mode Ell) or F2 (mode MaxStar) of the tail formula:
///   inf{ lambda > 0 : prod_n E(t^(+-Y_n/lambda)) <= 1/t for both signs },
/// with Y_n the components truncated at ell(t) resp. M*(t). Returns lambda = 0
/// for t >= 1 and when the truncated sequence is almost surely zero; at t = 0
/// returns the deterministic worst-case |sum| bound (the limit of the
/// conditions). Monotone bisection with relative tolerance 1e-9, iteration
/// cap 300 (non_convergence_error beyond).
TailEstimate tail_estimate(const IndependentSequence& seq, double t, TruncationMode mode);

}  // namespace tailsum

#endif
