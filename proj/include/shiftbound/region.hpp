#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "shiftbound/classic_bounds.hpp"
#include "shiftbound/format.hpp"
#include "shiftbound/jacobi.hpp"
#include "shiftbound/shifted_gershgorin.hpp"
#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

/// cy*y + cz*z >= rhs, with nonnegative coefficients normalized so the
/// leading nonzero coefficient is 1.
struct HalfPlane {
    double cy = 0.0;
    double cz = 0.0;
    double rhs = 0.0;
};

struct HalfPlaneRegion {
    std::vector<HalfPlane> inequalities;

    bool contains(double y, double z) const {
        for (const HalfPlane& h : inequalities)
            if (h.cy * y + h.cz * z < h.rhs) return false;
        return true;
    }
};

namespace detail {

struct Affine {
    double cy = 0.0, cz = 0.0, c0 = 0.0;  // cy*y + cz*z + c0
};

inline Affine operator+(Affine a, const Affine& b) {
    a.cy += b.cy;
    a.cz += b.cz;
    a.c0 += b.c0;
    return a;
}

inline Affine operator*(double t, Affine a) {
    a.cy *= t;
    a.cz *= t;
    a.c0 *= t;
    return a;
}

/// Removes half-planes implied by the rest.  A candidate cy*y + cz*z >= rhs
/// is redundant iff the minimum of its left side over the others (clipped to
/// a large box; the data here is desk-scale) is still >= rhs.  The minimum
/// over a bounded polygon is attained at an intersection of two constraint
/// boundaries, so pairwise intersections are enumerated.
inline void prune_halfplanes(std::vector<HalfPlane>& hs) {
    constexpr double kBox = 1e6;
    constexpr double kFeasTol = 1e-6;

    auto min_over = [&](const std::vector<HalfPlane>& cs, double cy, double cz) {
        std::vector<HalfPlane> all = cs;
        all.push_back({1.0, 0.0, -kBox});
        all.push_back({-1.0, 0.0, -kBox});
        all.push_back({0.0, 1.0, -kBox});
        all.push_back({0.0, -1.0, -kBox});
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p < all.size(); ++p) {
            for (std::size_t q = p + 1; q < all.size(); ++q) {
                const double det = all[p].cy * all[q].cz - all[p].cz * all[q].cy;
                if (std::abs(det) < 1e-12) continue;
                const double y = (all[p].rhs * all[q].cz - all[p].cz * all[q].rhs) / det;
                const double z = (all[p].cy * all[q].rhs - all[p].rhs * all[q].cy) / det;
                bool feasible = true;
                for (const HalfPlane& h : all)
                    if (h.cy * y + h.cz * z < h.rhs - kFeasTol) {
                        feasible = false;
                        break;
                    }
                if (feasible) best = std::min(best, cy * y + cz * z);
            }
        }
        return best;  // +inf when the others are infeasible (vacuous)
    };

    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            std::vector<HalfPlane> others;
            for (std::size_t j = 0; j < hs.size(); ++j)
                if (j != i) others.push_back(hs[j]);
            if (min_over(others, hs[i].cy, hs[i].cz) >= hs[i].rhs - kFeasTol) {
                hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
                break;
            }
        }
    }
}

}  // namespace detail

/// Exact half-plane description of {(y, z) : shifted Gershgorin certifies
/// A >= 0} for the 3x3 family with off-diagonals (a, b, c), free diagonal
/// entries y, z and fixed third diagonal d:
///
///     ( y  a  b )
///     ( a  z  c )
///     ( b  c  d )
///
/// A nonnegative shifted bound means some x >= 0 satisfies r_k x + s_k >= 0
/// for all three envelope lines (slopes 1, -1, -3), i.e.
/// s_2 >= 0, s_3 >= 0, s_1 + s_2 >= 0 and 3 s_1 + s_3 >= 0.  Each s_k is a
/// min of row terms affine in (y, z), and alpha*min_i f_i + beta*min_j g_j
/// >= 0 (alpha, beta >= 0) expands to the conjunction over row choices, so
/// the region is exactly the resulting finite intersection; redundant
/// members are pruned away.
inline HalfPlaneRegion region_halfplanes_3x3(double a, double b, double c, double d) {
    using detail::Affine;

    // Per-row affine expressions for s_{i,k}, k = 1..3.
    auto row_terms = [](double lo, double hi) -> std::array<double, 3> {
        if (lo > hi) std::swap(lo, hi);
        return {-(lo + hi), lo - hi, lo + hi};
    };
    const std::array<double, 3> d0 = row_terms(a, b);
    const std::array<double, 3> d1 = row_terms(a, c);
    const std::array<double, 3> d2 = row_terms(b, c);
    std::array<std::array<Affine, 3>, 3> s;  // s[k-1][row]
    for (int k = 0; k < 3; ++k) {
        s[k][0] = {1.0, 0.0, d0[k]};
        s[k][1] = {0.0, 1.0, d1[k]};
        s[k][2] = {0.0, 0.0, d + d2[k]};
    }

    std::vector<Affine> conds;
    for (int i = 0; i < 3; ++i) conds.push_back(s[1][i]);  // s_2 >= 0
    for (int i = 0; i < 3; ++i) conds.push_back(s[2][i]);  // s_3 >= 0
    for (int i = 0; i < 3; ++i)                             // s_1 + s_2 >= 0
        for (int j = 0; j < 3; ++j) conds.push_back(s[0][i] + s[1][j]);
    for (int i = 0; i < 3; ++i)                             // 3 s_1 + s_3 >= 0
        for (int j = 0; j < 3; ++j) conds.push_back(3.0 * s[0][i] + s[2][j]);

    std::vector<HalfPlane> hs;
    for (const Affine& f : conds) {
        if (f.cy == 0.0 && f.cz == 0.0) {
            if (f.c0 < 0.0) return HalfPlaneRegion{{HalfPlane{0.0, 0.0, 1.0}}};  // empty
            continue;
        }
        const double lead = f.cy != 0.0 ? f.cy : f.cz;
        hs.push_back({f.cy / lead, f.cz / lead, -f.c0 / lead});
    }

    std::sort(hs.begin(), hs.end(), [](const HalfPlane& x, const HalfPlane& y) {
        if (x.cy != y.cy) return x.cy < y.cy;
        if (x.cz != y.cz) return x.cz < y.cz;
        return x.rhs < y.rhs;
    });
    hs.erase(std::unique(hs.begin(), hs.end(),
                         [](const HalfPlane& x, const HalfPlane& y) {
                             return std::abs(x.cy - y.cy) <= 1e-9 &&
                                    std::abs(x.cz - y.cz) <= 1e-9 &&
                                    std::abs(x.rhs - y.rhs) <= 1e-9;
                         }),
             hs.end());

    detail::prune_halfplanes(hs);
    return HalfPlaneRegion{std::move(hs)};
}

/// Membership grids over two free diagonal entries: the shifted certificate,
/// the unshifted Gershgorin box (a_ii >= R_i for every row), and the exact
/// oracle region (smallest eigenvalue >= 0).
struct RegionGrid {
    std::vector<double> ys, zs;
    std::vector<std::uint8_t> shifted, box, exact;  // row-major, ys outer

    std::size_t index(int iy, int iz) const { return static_cast<std::size_t>(iy) * zs.size() + iz; }
};

inline RegionGrid region_raster(const SymmetricMatrix& base, int free_i, int free_j, double y0,
                                double y1, int ny, double z0, double z1, int nz) {
    base.check_row(free_i);
    base.check_row(free_j);
    if (free_i == free_j) throw std::invalid_argument("free diagonal indices must differ");
    if (ny < 1 || nz < 1) throw std::invalid_argument("grid resolution must be positive");

    RegionGrid g;
    g.ys.resize(ny);
    g.zs.resize(nz);
    for (int k = 0; k < ny; ++k) g.ys[k] = ny == 1 ? y0 : y0 + (y1 - y0) * k / (ny - 1);
    for (int k = 0; k < nz; ++k) g.zs[k] = nz == 1 ? z0 : z0 + (z1 - z0) * k / (nz - 1);
    g.shifted.resize(static_cast<std::size_t>(ny) * nz);
    g.box.resize(g.shifted.size());
    g.exact.resize(g.shifted.size());

    const int n = base.size();
    for (int iy = 0; iy < ny; ++iy) {
        for (int iz = 0; iz < nz; ++iz) {
            std::vector<double> e = base.data();
            e[static_cast<std::size_t>(free_i) * n + free_i] = g.ys[iy];
            e[static_cast<std::size_t>(free_j) * n + free_j] = g.zs[iz];
            const SymmetricMatrix m(n, std::move(e));
            const std::size_t at = g.index(iy, iz);
            g.shifted[at] = shifted_gersh_lower(m).value >= 0.0 ? 1 : 0;
            g.box[at] = gershgorin_bounds(m).lower >= 0.0 ? 1 : 0;
            g.exact[at] = eigen_oracle(m).min() >= 0.0 ? 1 : 0;
        }
    }
    return g;
}

inline void write_region_csv(std::ostream& os, const RegionGrid& g) {
    os << "y,z,member_shifted,member_box,member_exact\n";
    for (std::size_t iy = 0; iy < g.ys.size(); ++iy)
        for (std::size_t iz = 0; iz < g.zs.size(); ++iz) {
            const std::size_t at = g.index(static_cast<int>(iy), static_cast<int>(iz));
            os << fmt_g(g.ys[iy]) << ',' << fmt_g(g.zs[iz]) << ',' << int(g.shifted[at]) << ','
               << int(g.box[at]) << ',' << int(g.exact[at]) << "\n";
        }
}

}  // namespace shiftbound
