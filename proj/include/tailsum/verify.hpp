#ifndef TAILSUM_VERIFY_HPP
#define TAILSUM_VERIFY_HPP

#include <string>
#include <vector>

#include "tailsum/monte_carlo.hpp"
#include "tailsum/sequence.hpp"

namespace tailsum {

enum class Suite { EllMax, KN, LevyOtt, LevyL3, Tail, Lp, Disjoint };

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite suite);

struct VerifyConfig {
    std::uint64_t samples = 1'000'000;  // TAIL / LP suites
    std::uint64_t samples_small = 100'000;
    std::uint64_t seed = 1;
    double delta = 1e-3;
    double slack = 1e-12;               // additive slack for exact checks
    std::size_t grid_points = 40;
    double grid_lo = 1e-4;
    double grid_hi = 0.5;
    unsigned workers = 0;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    bool informational = false;  // fitted constants, never a failure gate
    double value = 0.0;          // margin for exact checks, constant for fits
    std::string detail;
};

struct VerificationReport {
    Suite suite = Suite::EllMax;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Runs one named suite against a sequence.
///
/// Exact suites (EllMax, KN, LevyOtt, LevyL3, Disjoint) evaluate the
/// inequalities with exact step arithmetic on enumeration oracles and report
/// the worst margin (RHS - LHS); existential suites (Tail, Lp) fit the single
/// equivalence constant against Monte Carlo curves and report it. Enumeration
/// suites require an enumerable sequence (enum_too_large_error otherwise).
VerificationReport verify_suite(const IndependentSequence& seq, Suite suite,
                                const VerifyConfig& config);

}  // namespace tailsum

#endif
