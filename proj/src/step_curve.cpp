#include "tailsum/step_curve.hpp"

#include <algorithm>
#include <cmath>

#include "tailsum/errors.hpp"
#include "tailsum/numeric.hpp"

namespace tailsum {

StepCurve StepCurve::from_breakpoints(std::vector<double> xs, std::vector<double> values) {
    if (xs.empty() || xs.size() != values.size())
        throw domain_error("StepCurve: breakpoint and value lists must be nonempty and equal-sized");
    if (xs.front() != 0.0) throw domain_error("StepCurve: first breakpoint must be at x = 0");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || xs[i] < 0.0)
            throw domain_error("StepCurve: breakpoints must be finite and nonnegative");
        if (std::isnan(values[i]) || values[i] < 0.0)
            throw domain_error("StepCurve: values must be nonnegative");
        if (i > 0) {
            if (xs[i] <= xs[i - 1]) throw domain_error("StepCurve: breakpoints must be strictly increasing");
            if (values[i] > values[i - 1]) throw domain_error("StepCurve: values must be nonincreasing");
        }
    }
    StepCurve c;
    c.xs_ = std::move(xs);
    c.values_ = std::move(values);
    return c;
}

StepCurve StepCurve::constant(double value) {
    return from_breakpoints({0.0}, {value});
}

std::size_t StepCurve::index_at(double y) const {
    // last i with xs_[i] <= y; y < 0 is treated as y = 0
    auto it = std::upper_bound(xs_.begin(), xs_.end(), y);
    if (it == xs_.begin()) return 0;
    return static_cast<std::size_t>(it - xs_.begin()) - 1;
}

double StepCurve::inverse(double level, InverseSide side) const {
    // Values are nonincreasing, so {i : pred(values_[i])} is a prefix.
    auto pred = [&](double v) {
        return side == InverseSide::Right ? v > level : v >= level;
    };
    if (pred(values_.back())) return kInf;  // set unbounded
    // first index where pred fails
    auto it = std::partition_point(values_.begin(), values_.end(), pred);
    if (it == values_.begin()) return 0.0;  // empty set, sup convention
    return xs_[static_cast<std::size_t>(it - values_.begin())];
}

double sup_distance(const StepCurve& a, const StepCurve& b) {
    double worst = 0.0;
    for (double x : a.xs()) worst = std::max(worst, std::fabs(a(x) - b(x)));
    for (double x : b.xs()) worst = std::max(worst, std::fabs(a(x) - b(x)));
    return worst;
}

double lp_norm_from_tail(const StepCurve& tail, double p) {
    if (p <= 0.0) throw domain_error("lp_norm_from_tail: p must be positive");
    // integral_0^1 Q(t)^p dt = sum_j x_j^p (T_{j-1} - T_j) over breakpoints
    const auto& xs = tail.xs();
    const auto& vs = tail.values();
    double acc = 0.0;
    for (std::size_t j = 1; j < xs.size(); ++j) {
        const double width = vs[j - 1] - vs[j];
        if (width > 0.0 && xs[j] > 0.0) acc += std::pow(xs[j], p) * width;
    }
    return std::pow(acc, 1.0 / p);
}

StepCurve tail_curve_from_masses(std::vector<std::pair<double, double>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::pair<double, double>> merged;  // (value, mass), distinct values
    for (const auto& [v, m] : pairs) {
        if (v < 0.0) throw domain_error("tail_curve_from_masses: values must be nonnegative");
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += m;
        else
            merged.emplace_back(v, m);
    }
    // Suffix sums accumulated downward: the tail at v is exactly the sum of
    // the masses strictly above v, so the curve ends at exactly 0 and carries
    // no cancellation error.
    double suffix = 0.0;
    std::vector<double> xs_desc, vs_desc;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
        if (it->first <= 0.0) break;  // an atom at 0 never creates a breakpoint
        xs_desc.push_back(it->first);
        vs_desc.push_back(suffix);
        suffix += it->second;
    }
    std::vector<double> xs{0.0};
    std::vector<double> vs{suffix};  // mass strictly above 0
    xs.insert(xs.end(), xs_desc.rbegin(), xs_desc.rend());
    vs.insert(vs.end(), vs_desc.rbegin(), vs_desc.rend());
    return StepCurve::from_breakpoints(std::move(xs), std::move(vs));
}

StepCurve tail_curve_from_samples(std::vector<double> samples) {
    if (samples.empty()) throw domain_error("tail_curve_from_samples: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        pairs.emplace_back(samples[i], static_cast<double>(j - i) / n);
        i = j;
    }
    return tail_curve_from_masses(std::move(pairs));
}

}  // namespace tailsum
