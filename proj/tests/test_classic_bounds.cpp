#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <span>

#include "shiftbound/classic_bounds.hpp"
#include "shiftbound/jacobi.hpp"
#include "support.hpp"

using namespace shiftbound;
using Catch::Approx;
using testsupport::all_fives;
using testsupport::mixed_signs;
using testsupport::random_symmetric;

TEST_CASE("gershgorin bounds") {
    const BoundReport r = gershgorin_bounds(all_fives());
    CHECK(r.lower == -4.0);
    CHECK(r.upper == 16.0);
    CHECK(r.witness_lower.i == 0);  // all rows tie; smallest index wins

    CHECK(gershgorin_bounds(mixed_signs()).lower == -2.0);
    CHECK(gershgorin_bounds(mixed_signs()).witness_lower.i == 2);

    const BoundReport d = gershgorin_bounds(SymmetricMatrix::diagonal({1, 2, 3}));
    CHECK(d.lower == 1.0);
    CHECK(d.upper == 3.0);
}

TEST_CASE("brauer bounds") {
    const BoundReport r = brauer_bounds(all_fives());
    CHECK(r.lower == Approx(-4.0).margin(1e-12));  // 6 - sqrt(100)
    CHECK(r.upper == Approx(16.0).margin(1e-12));

    const BoundReport d = brauer_bounds(SymmetricMatrix::diagonal({1, 2, 3}));
    CHECK(d.lower == Approx(1.0).margin(1e-12));
    CHECK(d.upper == Approx(3.0).margin(1e-12));
    CHECK(d.witness_lower.i == 0);
    CHECK(d.witness_lower.j == 1);  // pair (1,2) in 1-based terms

    // Independent brute force over the three pairs of the mixed-sign matrix.
    const SymmetricMatrix a = mixed_signs();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double mid = 0.5 * (a(i, i) + a(j, j));
            const double half = 0.5 * (a(i, i) - a(j, j));
            const double rad = std::sqrt(half * half + row_radius(a, i) * row_radius(a, j));
            lo = std::min(lo, mid - rad);
            hi = std::max(hi, mid + rad);
        }
    const BoundReport m = brauer_bounds(a);
    CHECK(m.lower == Approx(lo).margin(1e-12));
    CHECK(m.upper == Approx(hi).margin(1e-12));
    // Frozen values: pair (1,2) has radicand 1 + 35 = 36, giving 6 -+ 6.
    CHECK(m.lower == Approx(0.0).margin(1e-12));
    CHECK(m.upper == Approx(12.0).margin(1e-12));
    CHECK(m.witness_lower.i == 1);
    CHECK(m.witness_lower.j == 2);

    const BoundReport one = brauer_bounds(SymmetricMatrix(1, {7.0}));
    CHECK(one.lower == 7.0);
    CHECK(one.upper == 7.0);
}

TEST_CASE("melman region membership") {
    const SymmetricMatrix d = SymmetricMatrix::diagonal({1, 2, 3});
    CHECK(melman_region_contains(d, 1.0));
    CHECK_FALSE(melman_region_contains(d, 1.5));

    CHECK(melman_region_contains(all_fives(), -4.0));
    CHECK_FALSE(melman_region_contains(all_fives(), -4.01));
}

TEST_CASE("melman bounds on a diagonal matrix") {
    const BoundReport r = melman_bounds(SymmetricMatrix::diagonal({1, 2, 3}));
    CHECK(r.lower == Approx(1.0).margin(1e-6));
    CHECK(r.upper == Approx(3.0).margin(1e-6));
}

TEST_CASE("ckv region and bounds") {
    const int s0[] = {0};
    CHECK(ckv_region_contains(all_fives(), s0, -4.0));
    CHECK_FALSE(ckv_region_contains(all_fives(), s0, -4.1));

    const BoundReport r = ckv_bounds(SymmetricMatrix::diagonal({1, 2, 3}), s0);
    CHECK(r.lower == Approx(1.0).margin(1e-6));
    CHECK(r.upper == Approx(3.0).margin(1e-6));

    CHECK_THROWS_AS(ckv_bounds(all_fives(), std::span<const int>{}), std::invalid_argument);

    // S = [n]: the region reduces to the union of the Gamma_i^S disks,
    // which is the plain Gershgorin union.
    const int all3[] = {0, 1, 2};
    const BoundReport g = ckv_bounds(all_fives(), all3);
    CHECK(g.lower == Approx(-4.0).margin(1e-6));
    CHECK(g.upper == Approx(16.0).margin(1e-6));
}

TEST_CASE("melman bounds on the worked example") {
    const BoundReport r = melman_bounds(all_fives());
    CHECK(r.lower == Approx(-4.0).margin(1e-6));
    CHECK(r.upper == Approx(16.0).margin(1e-6));
}

TEST_CASE("ordering and soundness across 1000 random matrices") {
    Xoshiro256StarStar rng(14);
    const int sizes[] = {3, 5, 8};
    for (int t = 0; t < 1000; ++t) {
        const int n = sizes[t % 3];
        const SymmetricMatrix a = random_symmetric(n, -10.0, 10.0, rng);
        const Spectrum spec = eigen_oracle(a);
        const double l1 = spec.min(), ln = spec.max();

        const BoundReport g = gershgorin_bounds(a);
        const BoundReport b = brauer_bounds(a);
        const BoundReport m = melman_bounds(a);
        const BoundReport c = ckv_bounds(a);

        REQUIRE(g.lower <= b.lower + 1e-9);
        REQUIRE(b.lower <= l1 + 1e-7);
        REQUIRE(ln <= b.upper + 1e-7);
        REQUIRE(b.upper <= g.upper + 1e-9);

        REQUIRE(m.lower >= b.lower - 1e-7);

        for (const BoundReport* r : {&g, &b, &m, &c}) {
            REQUIRE(r->lower <= l1 + 1e-7);
            REQUIRE(r->upper >= ln - 1e-7);
        }

        // Bisection-extracted bounds sit on the region boundary.
        REQUIRE(melman_region_contains(a, m.lower));
        REQUIRE_FALSE(melman_region_contains(a, m.lower - 1e-6));
        REQUIRE(melman_region_contains(a, m.upper));
        REQUIRE_FALSE(melman_region_contains(a, m.upper + 1e-6));
    }
}
