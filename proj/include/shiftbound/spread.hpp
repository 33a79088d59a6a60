#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>

namespace shiftbound {

/// For a nonnegative off-diagonal row y with sum rho, the best shifted
/// dominance sup_{x >= 0} (rho - x - sum_k |y_k - x|).  The objective is
/// concave piecewise linear with breakpoints at the y_k, so the exact
/// supremum is the max over x in {0} union {y_k}.
inline double spread_sup(std::span<const double> y) {
    double rho = 0.0;
    for (double v : y) {
        if (v < 0.0) throw std::invalid_argument("spread entries must be nonnegative");
        rho += v;
    }
    auto value_at = [&](double x) {
        double s = rho - x;
        for (double v : y) s -= std::abs(v - x);
        return s;
    };
    double best = value_at(0.0);
    for (double v : y) best = std::max(best, value_at(v));
    return best;
}

/// Extremes of spread_sup over all nonnegative vectors of length N-1 with a
/// fixed sum rho: the worst arrangement (mass concentrated, more than half
/// zeros) yields 0, the best (all entries equal) yields rho (N-2)/(N-1).
inline std::pair<double, double> spread_extremes(int n, double rho) {
    if (n < 2) throw std::invalid_argument("need N >= 2");
    if (rho < 0.0) throw std::invalid_argument("rho must be nonnegative");
    return {0.0, rho * (n - 2) / (n - 1)};
}

}  // namespace shiftbound
