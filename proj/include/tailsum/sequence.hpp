#ifndef TAILSUM_SEQUENCE_HPP
#define TAILSUM_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tailsum/atomic_distribution.hpp"

namespace tailsum {

struct SequenceFlags {
    bool positive = false;
    bool symmetric = false;
    bool iid = false;

    bool any() const { return positive || symmetric || iid; }
    bool operator==(const SequenceFlags&) const = default;
};

/// Ordered finite list of independent summands plus the structure flags that
/// carry Levy constants: positive -> (1,1), symmetric -> (1,2), iid -> (7,2),
/// with the smallest applicable pair chosen in that order. An explicit
/// override wins over the flag defaults.
class IndependentSequence {
public:
    // Validates flags against the components (throws flag_mismatch_error) and
    // rejects empty sequences (throws empty_sequence_error).
    static IndependentSequence create(std::vector<ComponentDistribution> components,
                                      SequenceFlags flags = {},
                                      std::optional<std::pair<double, double>> levy_override = {});

    const std::vector<ComponentDistribution>& components() const { return components_; }
    const ComponentDistribution& component(std::size_t i) const { return components_[i]; }
    std::size_t size() const { return components_.size(); }

    const SequenceFlags& flags() const { return flags_; }
    const std::optional<std::pair<double, double>>& levy_override() const { return levy_override_; }

    // (c1, c2) of the Levy property, or nullopt when no flag applies and no
    // override was given.
    std::optional<std::pair<double, double>> levy_constants() const;

    // Same components truncated at level s on the given side; flags are
    // preserved when they still hold (truncation keeps positivity, symmetry
    // and identical distributions).
    IndependentSequence truncated(double s, TruncationSide side) const;

    IndependentSequence scaled(double c) const;

    double max_magnitude() const;

    bool operator==(const IndependentSequence&) const = default;

private:
    IndependentSequence() = default;

    std::vector<ComponentDistribution> components_;
    SequenceFlags flags_;
    std::optional<std::pair<double, double>> levy_override_;
};

}  // namespace tailsum

#endif
