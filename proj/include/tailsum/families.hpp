#ifndef TAILSUM_FAMILIES_HPP
#define TAILSUM_FAMILIES_HPP

#include <string>
#include <vector>

#include "tailsum/atomic_distribution.hpp"

namespace tailsum {

enum class Family { Gaussian, Exponential, Pareto, Uniform, Weibull };

Family family_from_name(const std::string& name);
std::string family_name(Family family);

/// Recipe for turning a continuous law into a finite atomic distribution.
///
/// Parameters: gaussian(mean, stddev), exponential(rate), pareto(alpha, xm)
/// with alpha > 1, uniform(a, b), weibull(shape, scale).
struct ContinuousFamilySpec {
    Family family = Family::Uniform;
    std::vector<double> params;
    double eps_mass = 1e-3;   // max mass per atom, in (0, 0.25]
    double eps_value = 0.05;  // max value range per interior cell

    void validate() const;  // throws invalid_parameters_error
};

// Quantile-grid discretization. Cells are chosen so every atom carries at
// most eps_mass (eps_mass/2 when the support spans both signs, which keeps
// the |X|-tail error below eps_mass) and interior cells span at most
// eps_value in value. The two extreme cells are collapsed to their
// conditional mean. The result always has bounded support.
ComponentDistribution discretize(const ContinuousFamilySpec& spec);

}  // namespace tailsum

#endif
