#ifndef TAILSUM_ATOMIC_DISTRIBUTION_HPP
#define TAILSUM_ATOMIC_DISTRIBUTION_HPP

#include <utility>
#include <vector>

#include "tailsum/numeric.hpp"
#include "tailsum/step_curve.hpp"

namespace tailsum {

struct Atom {
    double value = 0.0;
    double prob = 0.0;

    bool operator==(const Atom&) const = default;
};

enum class TruncationSide { LeqMagnitude, GtMagnitude };

/// One independent summand: a finite signed atomic distribution.
///
/// Atoms are sorted by value with at most one atom per value and total mass
/// exactly 1 after construction (any deficit is padded at value 0, matching
/// the convention that truncation parks removed mass at 0). Values are merged
/// only when bit-identical; there is no fuzzy merging.
class ComponentDistribution {
public:
    // Merges equal values, sorts, pads any mass deficit with an atom at 0.
    // Throws negative_prob_error / total_mass_exceeds_one_error.
    static ComponentDistribution make_atomic(std::vector<std::pair<double, double>> atoms);

    static ComponentDistribution point_mass(double value) { return make_atomic({{value, 1.0}}); }

    const std::vector<Atom>& atoms() const { return atoms_; }

    // Pr(|X| > x) for x >= 0; right-continuous and nonincreasing in x.
    double tail_at(double x) const;

    // X*(u) = sup{ y : tail_at(y) > u } with sup of the empty set = 0.
    double quantile_at(double u) const;

    // Tail of |X| as a step curve (breakpoints at 0 and atom magnitudes).
    StepCurve tail_curve() const;

    // ln E exp(a X), evaluated in log space so |a * value| up to ~700 and far
    // beyond cannot overflow.
    double log_exp_moment(double a) const;

    // Keeps atoms with |value| <= s (LeqMagnitude) or |value| > s
    // (GtMagnitude); the removed mass moves to value 0.
    ComponentDistribution truncate(double s, TruncationSide side) const;

    // Inverse-CDF draw from a single uniform; advances the caller's stream.
    double sample(CounterRng& rng) const;

    ComponentDistribution scaled(double c) const;

    double max_magnitude() const;
    bool almost_surely_zero() const;
    bool is_symmetric() const;
    bool is_positive() const;

    bool operator==(const ComponentDistribution&) const = default;

private:
    ComponentDistribution() = default;

    std::vector<Atom> atoms_;
    std::vector<double> cumulative_;  // inclusive prefix sums for sampling
};

}  // namespace tailsum

#endif
