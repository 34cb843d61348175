#ifndef TAILSUM_REARRANGE_HPP
#define TAILSUM_REARRANGE_HPP

#include <vector>

#include "tailsum/sequence.hpp"
#include "tailsum/step_curve.hpp"

namespace tailsum {

// x -> sum_n Pr(|X_n| > x). Values may exceed 1 (up to N).
StepCurve sum_tail_curve(const IndependentSequence& seq);

// x -> Pr(max_n |X_n| > x) = 1 - prod_n (1 - Pr(|X_n| > x)).
StepCurve max_tail_curve(const IndependentSequence& seq);

/// Disjoint-sum rearrangement: for t in [0,1] the least x with
/// sum_n Pr(|X_n| > x) <= t; zero for t > 1. At t = 0 this is the largest
/// support magnitude (the least x at which the summed tail vanishes).
double ell(const IndependentSequence& seq, double t);
double ell(const StepCurve& sum_tail, double t);

/// M*(t): right inverse of the maximal-function tail at t.
double max_star(const IndependentSequence& seq, double t);

/// (integral_0^1 ell(t)^p dt)^(1/p), evaluated exactly over the step cells.
double ell_lp_norm(const IndependentSequence& seq, double p);

struct ChainRow {
    double t = 0.0;
    double ell_2t = 0.0;        // ell(2t)
    double ell_ratio = 0.0;     // ell(t / (1 - t))
    double m_star = 0.0;        // M*(t)
    double ell_t = 0.0;         // ell(t)
    bool ok = false;            // ell_2t <= ell_ratio <= m_star <= ell_t, no slack
};

struct ChainCheck {
    std::vector<ChainRow> rows;
    bool all_ok = false;
};

// Evaluates ell(2t) <= ell(t/(1-t)) <= M*(t) <= ell(t) on a grid of t values
// in (0, 1), with exact step arithmetic and zero slack.
ChainCheck check_ell_max_chain(const IndependentSequence& seq, const std::vector<double>& t_grid);

}  // namespace tailsum

#endif
