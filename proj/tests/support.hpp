#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "shiftbound/rng.hpp"
#include "shiftbound/symmetric_matrix.hpp"

namespace testsupport {

// The two worked 3x3 matrices used throughout the suites.
inline shiftbound::SymmetricMatrix all_fives() {
    return shiftbound::SymmetricMatrix{{6, 5, 5}, {5, 6, 5}, {5, 5, 6}};
}

inline shiftbound::SymmetricMatrix mixed_signs() {
    return shiftbound::SymmetricMatrix{{6, 1, 3}, {1, 7, 4}, {3, 4, 5}};
}

inline shiftbound::SymmetricMatrix random_symmetric(int n, double lo, double hi,
                                                    shiftbound::Xoshiro256StarStar& rng) {
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = rng.uniform_real(lo, hi);
            a[static_cast<std::size_t>(i) * n + j] = v;
            a[static_cast<std::size_t>(j) * n + i] = v;
        }
    return shiftbound::SymmetricMatrix(n, std::move(a));
}

}  // namespace testsupport
