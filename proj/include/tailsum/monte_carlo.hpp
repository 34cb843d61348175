#ifndef TAILSUM_MONTE_CARLO_HPP
#define TAILSUM_MONTE_CARLO_HPP

#include <cstdint>

#include "tailsum/sequence.hpp"
#include "tailsum/step_curve.hpp"

namespace tailsum {

struct SimConfig {
    std::uint64_t n = 100'000;
    std::uint64_t seed = 0;
    double delta = 1e-3;          // DKW confidence parameter
    std::uint64_t chunk = 8192;   // replicas per substream
    unsigned workers = 0;         // 0 = auto (TAILSUM_THREADS or hardware)
};

/// Empirical tails of (|S|, U, M) from n independent replicas.
///
/// Replicas are generated from counter-based substreams keyed by
/// (seed, chunk index), so the summary is a pure function of
/// (seq, n, seed, chunk, delta) and bit-identical for any worker count.
struct MCSummary {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t chunk = 0;
    double delta = 0.0;
    double dkw_radius = 0.0;  // sqrt(ln(2/delta) / (2n))
    StepCurve s_tail;
    StepCurve u_tail;
    StepCurve m_tail;

    bool operator==(const MCSummary&) const = default;
};

double dkw_radius(std::uint64_t n, double delta);

// Requires n >= 1000 and delta in (0, 0.1]; throws domain_error otherwise.
MCSummary simulate(const IndependentSequence& seq, const SimConfig& config);

enum class WhichCurve { S, U, M };
double empirical_quantile(const MCSummary& summary, WhichCurve which, double t);

// Worker cap honoring the TAILSUM_THREADS environment variable.
unsigned effective_workers(unsigned requested);

}  // namespace tailsum

#endif
