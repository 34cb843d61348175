#ifndef TAILSUM_NUMERIC_HPP
#define TAILSUM_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

namespace tailsum {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// log(sum_i exp(xs[i])), safe against overflow; -inf for an empty sum.
double log_sum_exp(std::span<const double> xs);

// log(e^a + e^b)
double log_add_exp(double a, double b);

// log(k!) for integer k >= 0, exact summation of logs (cached for small k).
double log_factorial(unsigned k);

// Counter-based pseudo-random stream (SplitMix64 output function).
// The i-th output is a pure function of (key, i), which makes substreams
// reproducible regardless of how work is scheduled across threads.
struct CounterRng {
    std::uint64_t key = 0;
    std::uint64_t counter = 0;

    static std::uint64_t avalanche(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream_index) {
        return avalanche(avalanche(seed + 0x9E3779B97F4A7C15ULL) +
                         0x9E3779B97F4A7C15ULL * (stream_index + 1));
    }

    std::uint64_t next_u64() {
        counter += 1;
        return avalanche(key + 0x9E3779B97F4A7C15ULL * counter);
    }

    // Uniform draw in [0, 1) with 53 random bits.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
};

}  // namespace tailsum

#endif
