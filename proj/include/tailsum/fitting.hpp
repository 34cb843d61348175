#ifndef TAILSUM_FITTING_HPP
#define TAILSUM_FITTING_HPP

#include <functional>
#include <vector>

namespace tailsum {

using CurveFn = std::function<double(double)>;

struct FitResult {
    double c = 1.0;            // least constant found, >= 1
    double witness_t = 0.0;    // grid point binding just below c
    std::vector<double> grid;
};

inline constexpr double kFitCeiling = 1e4;

/// Least c >= 1 with c^-1 f(min(c t, 1)) <= g(t) <= c f(t/c) for all grid t.
///
/// This is the symmetric single-constant specialization of the four-constant
/// equivalence of decreasing curves (one constant always suffices by taking
/// the max of the four). The search scans a geometric grid of ratio 1.05 up
/// to 1e4 and then refines the bracket so the returned c passes while c/1.01
/// fails. Throws no_fit_error when even 1e4 does not fit.
FitResult fit_constants(const CurveFn& f, const CurveFn& g, const std::vector<double>& t_grid);

// One-sided variant: least c >= 1 with g(t) <= c f(t/c) on the grid. Used for
// the one-sided comparison lemmas.
FitResult fit_constant_upper(const CurveFn& f, const CurveFn& g, const std::vector<double>& t_grid);

// Geometric grid of `points` values from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t points);

}  // namespace tailsum

#endif
