#include "tailsum/atomic_distribution.hpp"

#include <algorithm>
#include <cmath>

#include "tailsum/errors.hpp"

namespace tailsum {

namespace {
constexpr double kMassTolerance = 1e-12;
}

ComponentDistribution ComponentDistribution::make_atomic(
    std::vector<std::pair<double, double>> atoms) {
    for (const auto& [v, p] : atoms) {
        if (!std::isfinite(v)) throw invalid_parameters_error("make_atomic: atom values must be finite");
        if (!(p > 0.0)) throw negative_prob_error("make_atomic: atom probabilities must be positive");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    ComponentDistribution d;
    double total = 0.0;
    for (const auto& [v, p] : atoms) {
        total += p;
        if (!d.atoms_.empty() && d.atoms_.back().value == v)
            d.atoms_.back().prob += p;
        else
            d.atoms_.push_back({v, p});
    }
    if (total > 1.0 + kMassTolerance)
        throw total_mass_exceeds_one_error("make_atomic: total probability exceeds 1");

    if (total < 1.0) {
        // deficit parked at 0, matching truncation semantics
        const double deficit = 1.0 - total;
        auto it = std::lower_bound(d.atoms_.begin(), d.atoms_.end(), 0.0,
                                   [](const Atom& a, double v) { return a.value < v; });
        if (it != d.atoms_.end() && it->value == 0.0)
            it->prob += deficit;
        else
            d.atoms_.insert(it, Atom{0.0, deficit});
    } else if (total > 1.0) {
        for (auto& a : d.atoms_) a.prob /= total;
    }

    d.cumulative_.reserve(d.atoms_.size());
    double acc = 0.0;
    for (const auto& a : d.atoms_) {
        acc += a.prob;
        d.cumulative_.push_back(acc);
    }
    d.cumulative_.back() = 1.0;
    return d;
}

double ComponentDistribution::tail_at(double x) const {
    if (x < 0.0) throw domain_error("tail_at: level must be nonnegative");
    double tail = 0.0;
    for (const auto& a : atoms_)
        if (std::fabs(a.value) > x) tail += a.prob;
    return tail;
}

StepCurve ComponentDistribution::tail_curve() const {
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(atoms_.size());
    for (const auto& a : atoms_) pairs.emplace_back(std::fabs(a.value), a.prob);
    return tail_curve_from_masses(std::move(pairs));
}

double ComponentDistribution::quantile_at(double u) const {
    if (u < 0.0 || u > 1.0) throw domain_error("quantile_at: u must lie in [0,1]");
    return tail_curve().inverse(u, InverseSide::Right);
}

double ComponentDistribution::log_exp_moment(double a) const {
    std::vector<double> terms;
    terms.reserve(atoms_.size());
    for (const auto& atom : atoms_) terms.push_back(std::log(atom.prob) + a * atom.value);
    return log_sum_exp(terms);
}

ComponentDistribution ComponentDistribution::truncate(double s, TruncationSide side) const {
    if (s < 0.0) throw domain_error("truncate: level must be nonnegative");
    std::vector<std::pair<double, double>> kept;
    kept.reserve(atoms_.size());
    for (const auto& a : atoms_) {
        const bool keep = side == TruncationSide::LeqMagnitude ? std::fabs(a.value) <= s
                                                               : std::fabs(a.value) > s;
        if (keep) kept.emplace_back(a.value, a.prob);
    }
    // make_atomic pads the removed mass at 0
    return make_atomic(std::move(kept));
}

double ComponentDistribution::sample(CounterRng& rng) const {
    const double u = rng.next_uniform();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return atoms_[static_cast<std::size_t>(it - cumulative_.begin())].value;
}

ComponentDistribution ComponentDistribution::scaled(double c) const {
    std::vector<std::pair<double, double>> scaled_atoms;
    scaled_atoms.reserve(atoms_.size());
    for (const auto& a : atoms_) scaled_atoms.emplace_back(c * a.value, a.prob);
    return make_atomic(std::move(scaled_atoms));
}

double ComponentDistribution::max_magnitude() const {
    double m = 0.0;
    for (const auto& a : atoms_) m = std::max(m, std::fabs(a.value));
    return m;
}

bool ComponentDistribution::almost_surely_zero() const {
    return atoms_.size() == 1 && atoms_.front().value == 0.0;
}

bool ComponentDistribution::is_symmetric() const {
    // atoms sorted by value: symmetry pairs the i-th from either end
    const std::size_t n = atoms_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Atom& lo = atoms_[i];
        const Atom& hi = atoms_[n - 1 - i];
        if (lo.value != -hi.value || lo.prob != hi.prob) return false;
    }
    return true;
}

bool ComponentDistribution::is_positive() const {
    return atoms_.front().value >= 0.0;
}

}  // namespace tailsum
