#include "tailsum/numeric.hpp"

#include <algorithm>
#include <vector>

namespace tailsum {

double log_sum_exp(std::span<const double> xs) {
    if (xs.empty()) return -kInf;
    const double m = *std::max_element(xs.begin(), xs.end());
    if (m == -kInf) return -kInf;
    if (m == kInf) return kInf;
    double sum = 0.0;
    for (double x : xs) sum += std::exp(x - m);
    return m + std::log(sum);
}

double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (a == -kInf) return -kInf;
    if (a == kInf) return kInf;
    return a + std::log1p(std::exp(b - a));
}

double log_factorial(unsigned k) {
    static const std::vector<double> table = [] {
        std::vector<double> t(64, 0.0);
        for (unsigned i = 2; i < t.size(); ++i) t[i] = t[i - 1] + std::log(static_cast<double>(i));
        return t;
    }();
    if (k < table.size()) return table[k];
    return std::lgamma(static_cast<double>(k) + 1.0);
}

}  // namespace tailsum
