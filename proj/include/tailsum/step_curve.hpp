#ifndef TAILSUM_STEP_CURVE_HPP
#define TAILSUM_STEP_CURVE_HPP

#include <cstddef>
#include <vector>

namespace tailsum {

enum class InverseSide { Left, Right };

/// Nonincreasing right-continuous step function on [0, inf).
///
/// curve(y) = values[i] for xs[i] <= y < xs[i+1], and values.back() for
/// y >= xs.back(). The first breakpoint is always at x = 0, so the curve is
/// defined on the whole half line. Tail curves, rearrangements and the
/// disjoint-sum rearrangement all share this representation.
class StepCurve {
public:
    StepCurve() : xs_{0.0}, values_{0.0} {}

    // Breakpoints must start at x = 0, be strictly increasing in x and have
    // nonincreasing nonnegative values. Throws domain_error otherwise.
    static StepCurve from_breakpoints(std::vector<double> xs, std::vector<double> values);

    // Constant curve.
    static StepCurve constant(double value);

    double operator()(double y) const { return values_[index_at(y)]; }

    // sup{ y : curve(y) > level } (Right) or sup{ y : curve(y) >= level } (Left),
    // with sup of the empty set defined as 0. Returns +inf when the set is
    // unbounded (final value above the level).
    double inverse(double level, InverseSide side) const;

    std::size_t size() const { return xs_.size(); }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& values() const { return values_; }

    double max_x() const { return xs_.back(); }
    double initial_value() const { return values_.front(); }
    double final_value() const { return values_.back(); }

    bool operator==(const StepCurve& other) const = default;

private:
    std::size_t index_at(double y) const;

    std::vector<double> xs_;
    std::vector<double> values_;
};

// Largest |a(x) - b(x)| over the merged breakpoint set (the sup distance of
// two step curves is attained at a breakpoint).
double sup_distance(const StepCurve& a, const StepCurve& b);

// (integral_0^1 Q(t)^p dt)^(1/p) where Q is the right inverse of `tail`;
// computed exactly as a finite sum over the step cells. `tail` must have
// values in [0, 1].
double lp_norm_from_tail(const StepCurve& tail, double p);

// Builds the tail curve x -> sum of masses at values > x from (value, mass)
// pairs of a nonnegative variable. Pairs need not be sorted or distinct.
StepCurve tail_curve_from_masses(std::vector<std::pair<double, double>> pairs);

// Empirical tail from raw nonnegative samples (each carries mass 1/n).
StepCurve tail_curve_from_samples(std::vector<double> samples);

}  // namespace tailsum

#endif
