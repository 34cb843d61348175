#include "tailsum/rearrange.hpp"

#include <algorithm>
#include <cmath>

#include "tailsum/errors.hpp"
#include "tailsum/numeric.hpp"

namespace tailsum {

namespace {

// Merged breakpoint walk over all component tails. visit(x, tails) is called
// once per distinct magnitude with each component's tail at x.
template <typename Visit>
void walk_merged_breakpoints(const std::vector<StepCurve>& tails, Visit visit) {
    std::vector<double> merged{0.0};
    for (const auto& t : tails)
        merged.insert(merged.end(), t.xs().begin(), t.xs().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<double> at(tails.size());
    for (double x : merged) {
        for (std::size_t i = 0; i < tails.size(); ++i) at[i] = tails[i](x);
        visit(x, at);
    }
}

std::vector<StepCurve> component_tails(const IndependentSequence& seq) {
    std::vector<StepCurve> tails;
    tails.reserve(seq.size());
    for (const auto& c : seq.components()) tails.push_back(c.tail_curve());
    return tails;
}

}  // namespace

StepCurve sum_tail_curve(const IndependentSequence& seq) {
    const auto tails = component_tails(seq);
    std::vector<double> xs, vs;
    walk_merged_breakpoints(tails, [&](double x, const std::vector<double>& at) {
        double sum = 0.0;
        for (double v : at) sum += v;
        xs.push_back(x);
        vs.push_back(sum);
    });
    // float wobble guard: the sum of nonincreasing curves is nonincreasing
    for (std::size_t i = 1; i < vs.size(); ++i) vs[i] = std::min(vs[i], vs[i - 1]);
    return StepCurve::from_breakpoints(std::move(xs), std::move(vs));
}

StepCurve max_tail_curve(const IndependentSequence& seq) {
    const auto tails = component_tails(seq);
    std::vector<double> xs, vs;
    walk_merged_breakpoints(tails, [&](double x, const std::vector<double>& at) {
        // Pr(M > x) = 1 - prod_n (1 - tail_n(x)), accumulated in log space
        double log_prod = 0.0;
        bool certain = false;
        for (double v : at) {
            if (v >= 1.0) {
                certain = true;
                break;
            }
            log_prod += std::log1p(-v);
        }
        xs.push_back(x);
        vs.push_back(certain ? 1.0 : -std::expm1(log_prod));
    });
    for (std::size_t i = 1; i < vs.size(); ++i) vs[i] = std::min(vs[i], vs[i - 1]);
    for (auto& v : vs) v = std::max(v, 0.0);
    return StepCurve::from_breakpoints(std::move(xs), std::move(vs));
}

double ell(const StepCurve& sum_tail, double t) {
    if (t < 0.0) throw domain_error("ell: t must be nonnegative");
    if (t > 1.0) return 0.0;
    // least x with sum_tail(x) <= t; by right continuity this equals the
    // right inverse sup{ y : sum_tail(y) > t }
    return sum_tail.inverse(t, InverseSide::Right);
}

double ell(const IndependentSequence& seq, double t) {
    return ell(sum_tail_curve(seq), t);
}

double max_star(const IndependentSequence& seq, double t) {
    if (t < 0.0 || t > 1.0) throw domain_error("max_star: t must lie in [0,1]");
    return max_tail_curve(seq).inverse(t, InverseSide::Right);
}

double ell_lp_norm(const IndependentSequence& seq, double p) {
    if (p <= 0.0) throw domain_error("ell_lp_norm: p must be positive");
    // ell restricted to [0,1] is the right inverse of min(sum_tail, 1)
    const StepCurve sum_tail = sum_tail_curve(seq);
    std::vector<double> xs = sum_tail.xs();
    std::vector<double> vs = sum_tail.values();
    for (auto& v : vs) v = std::min(v, 1.0);
    return lp_norm_from_tail(StepCurve::from_breakpoints(std::move(xs), std::move(vs)), p);
}

ChainCheck check_ell_max_chain(const IndependentSequence& seq, const std::vector<double>& t_grid) {
    const StepCurve sum_tail = sum_tail_curve(seq);
    const StepCurve max_tail = max_tail_curve(seq);
    ChainCheck result;
    result.all_ok = true;
    result.rows.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t > 0.0 && t < 1.0)) throw domain_error("check_ell_max_chain: t must lie in (0,1)");
        ChainRow row;
        row.t = t;
        row.ell_2t = ell(sum_tail, 2.0 * t);
        row.ell_ratio = ell(sum_tail, t / (1.0 - t));
        row.m_star = max_tail.inverse(t, InverseSide::Right);
        row.ell_t = ell(sum_tail, t);
        row.ok = row.ell_2t <= row.ell_ratio && row.ell_ratio <= row.m_star && row.m_star <= row.ell_t;
        result.all_ok = result.all_ok && row.ok;
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace tailsum
