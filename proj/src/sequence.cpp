#include "tailsum/sequence.hpp"

#include <algorithm>

#include "tailsum/errors.hpp"

namespace tailsum {

IndependentSequence IndependentSequence::create(
    std::vector<ComponentDistribution> components, SequenceFlags flags,
    std::optional<std::pair<double, double>> levy_override) {
    if (components.empty()) throw empty_sequence_error("sequence must contain at least one variable");

    if (flags.positive)
        for (const auto& c : components)
            if (!c.is_positive())
                throw flag_mismatch_error("positive flag set but a component has a negative atom");
    if (flags.symmetric)
        for (const auto& c : components)
            if (!c.is_symmetric())
                throw flag_mismatch_error("symmetric flag set but a component is not symmetric");
    if (flags.iid)
        for (const auto& c : components)
            if (!(c == components.front()))
                throw flag_mismatch_error("iid flag set but components differ");
    if (levy_override && (levy_override->first <= 0.0 || levy_override->second <= 0.0))
        throw invalid_parameters_error("levy constants must be positive");

    IndependentSequence seq;
    seq.components_ = std::move(components);
    seq.flags_ = flags;
    seq.levy_override_ = levy_override;
    return seq;
}

std::optional<std::pair<double, double>> IndependentSequence::levy_constants() const {
    if (levy_override_) return levy_override_;
    if (flags_.positive) return std::make_pair(1.0, 1.0);
    if (flags_.symmetric) return std::make_pair(1.0, 2.0);
    if (flags_.iid) return std::make_pair(7.0, 2.0);
    return std::nullopt;
}

IndependentSequence IndependentSequence::truncated(double s, TruncationSide side) const {
    std::vector<ComponentDistribution> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.truncate(s, side));
    return create(std::move(comps), flags_, levy_override_);
}

IndependentSequence IndependentSequence::scaled(double c) const {
    std::vector<ComponentDistribution> comps;
    comps.reserve(components_.size());
    for (const auto& comp : components_) comps.push_back(comp.scaled(c));
    SequenceFlags flags = flags_;
    if (c < 0.0) flags.positive = false;
    return create(std::move(comps), flags, levy_override_);
}

double IndependentSequence::max_magnitude() const {
    double m = 0.0;
    for (const auto& c : components_) m = std::max(m, c.max_magnitude());
    return m;
}

}  // namespace tailsum
