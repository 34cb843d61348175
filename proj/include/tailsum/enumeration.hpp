#ifndef TAILSUM_ENUMERATION_HPP
#define TAILSUM_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "tailsum/sequence.hpp"
#include "tailsum/step_curve.hpp"

namespace tailsum {

/// Exact joint law of (|S|, U, M) from full outcome enumeration, where
/// S_k are the partial sums, U = sup_k |S_k| and M = sup_n |X_n|.
struct ExactJoint {
    StepCurve s_tail;                     // tail of |S|
    StepCurve u_tail;                     // tail of U
    StepCurve m_tail;                     // tail of M
    std::vector<StepCurve> partial_tails; // tail of |S_k| for each k
    std::uint64_t outcome_count = 0;
};

inline constexpr std::uint64_t kMaxEnumerationOutcomes = 2'000'000;

// Iterates the full product space of atoms. Throws enum_too_large_error when
// the product of atom counts exceeds kMaxEnumerationOutcomes. Probabilities
// along every curve sum to 1 within 1e-12 (asserted internally).
ExactJoint enumerate_exact(const IndependentSequence& seq);

// Right inverse of the selected tail curve at t (the decreasing
// rearrangement evaluated at t).
enum class JointCurve { S, U, M };
double exact_quantile(const ExactJoint& joint, JointCurve which, double t);

}  // namespace tailsum

#endif
