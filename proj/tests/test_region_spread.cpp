#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "shiftbound/region.hpp"
#include "shiftbound/spread.hpp"
#include "support.hpp"

using namespace shiftbound;
using Catch::Approx;

namespace {

bool region_has(const HalfPlaneRegion& r, double cy, double cz, double rhs) {
    for (const HalfPlane& h : r.inequalities)
        if (std::abs(h.cy - cy) <= 1e-9 && std::abs(h.cz - cz) <= 1e-9 &&
            std::abs(h.rhs - rhs) <= 1e-9)
            return true;
    return false;
}

SymmetricMatrix assemble_3x3(double a, double b, double c, double y, double z, double d) {
    return SymmetricMatrix{{y, a, b}, {a, z, c}, {b, c, d}};
}

}  // namespace

TEST_CASE("halfplane region for the worked parameters") {
    const HalfPlaneRegion r = region_halfplanes_3x3(2, 1, 2, 4);
    REQUIRE(r.inequalities.size() == 3);
    CHECK(region_has(r, 1, 0, 2));  // y >= 2
    CHECK(region_has(r, 0, 1, 2));  // z >= 2
    CHECK(region_has(r, 1, 1, 5));  // y + z >= 5

    for (const HalfPlane& h : r.inequalities) {
        CHECK(h.cy >= 0.0);
        CHECK(h.cz >= 0.0);
    }
}

TEST_CASE("halfplane region of a diagonal family") {
    const HalfPlaneRegion r = region_halfplanes_3x3(0, 0, 0, 4);
    REQUIRE(r.inequalities.size() == 2);
    CHECK(region_has(r, 1, 0, 0));  // y >= 0
    CHECK(region_has(r, 0, 1, 0));  // z >= 0
}

TEST_CASE("halfplane membership matches the shifted certificate on a grid") {
    for (const auto& params : std::vector<std::array<double, 4>>{
             {2, 1, 2, 4}, {2, 0, 2, 4}, {2, 2, 2, 4}}) {
        const auto [a, b, c, d] = params;
        const HalfPlaneRegion region = region_halfplanes_3x3(a, b, c, d);
        for (int iy = 0; iy < 50; ++iy)
            for (int iz = 0; iz < 50; ++iz) {
                const double y = 8.0 * iy / 49.0;
                const double z = 8.0 * iz / 49.0;
                const bool direct = pd_certify(assemble_3x3(a, b, c, y, z, d));
                REQUIRE(region.contains(y, z) == direct);
            }
    }
}

TEST_CASE("raster grids") {
    const SymmetricMatrix base = assemble_3x3(2, 1, 2, 0, 0, 4);
    const RegionGrid g = region_raster(base, 0, 1, 0, 8, 9, 0, 8, 9);

    // Grid point (3, 3): inside, with shifted value 0.5 attained at x = 1.5.
    const ShiftedBound sb = shifted_gersh_lower(assemble_3x3(2, 1, 2, 3, 3, 4));
    CHECK(sb.value == Approx(0.5).margin(1e-12));
    CHECK(sb.x_star == Approx(1.5).margin(1e-12));
    CHECK(g.shifted[g.index(3, 3)] == 1);  // ys[3] = zs[3] = 3

    CHECK_FALSE(pd_certify(assemble_3x3(2, 1, 2, 2.0 - 1e-6, 3, 4)));

    // Members satisfy the determinant condition 4yz - 4y - z - 8 >= 0.
    for (int iy = 0; iy < 9; ++iy)
        for (int iz = 0; iz < 9; ++iz)
            if (g.shifted[g.index(iy, iz)]) {
                const double y = g.ys[iy], z = g.zs[iz];
                REQUIRE(4 * y * z - 4 * y - z - 8 >= -1e-9);
                REQUIRE(g.exact[g.index(iy, iz)] == 1);
                REQUIRE(g.box[g.index(iy, iz)] <= g.shifted[g.index(iy, iz)]);
            }
}

TEST_CASE("spread of an off-diagonal row") {
    const std::vector<double> even{1, 1, 1};
    CHECK(spread_sup(even) == 2.0);  // rho (N-2)/(N-1) with N = 4, rho = 3

    const std::vector<double> lump{3, 0, 0};
    CHECK(spread_sup(lump) == 0.0);

    const std::vector<double> two{2, 1};
    CHECK(spread_sup(two) == 1.0);

    CHECK_THROWS_AS(spread_sup(std::vector<double>{-1.0, 2.0}), std::invalid_argument);

    const auto [worst, best] = spread_extremes(4, 3.0);
    CHECK(worst == 0.0);
    CHECK(best == 2.0);
    CHECK_THROWS_AS(spread_extremes(1, 3.0), std::invalid_argument);
}

TEST_CASE("spread properties on random nonnegative rows") {
    Xoshiro256StarStar rng(51);
    for (int t = 0; t < 200; ++t) {
        const int len = rng.uniform_int(2, 8);
        std::vector<double> y(len);
        double rho = 0.0;
        for (double& v : y) {
            v = rng.uniform_real(0.0, 5.0);
            rho += v;
        }
        const int n = len + 1;
        const double s = spread_sup(y);
        REQUIRE(s <= rho * (n - 2) / (n - 1) + 1e-12);
        REQUIRE(s >= -1e-12);

        // Dense-grid brute force, step 1e-4.
        const double x_hi = *std::max_element(y.begin(), y.end());
        double brute = -1e300;
        for (double x = 0.0; x <= x_hi + 1e-9; x += 1e-4) {
            double v = rho - x;
            for (double w : y) v -= std::abs(w - x);
            brute = std::max(brute, v);
        }
        REQUIRE(std::abs(s - brute) <= 1e-6);

        // Constant rows attain the extreme exactly.
        std::vector<double> flat(len, rho / len);
        REQUIRE(std::abs(spread_sup(flat) - rho * (n - 2) / (n - 1)) <= 1e-12);

        // More than half zeros nullifies the shifted gain.
        std::vector<double> mostly_zero(len, 0.0);
        mostly_zero[0] = rho;
        REQUIRE(spread_sup(mostly_zero) == 0.0);
    }
}
