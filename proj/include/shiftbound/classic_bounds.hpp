#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

/// Witness of a bound: a single row (j < 0) or an unordered pair.
struct Witness {
    int i = -1;
    int j = -1;

    bool is_pair() const { return j >= 0; }
};

/// A method's two-sided bound with witnesses and shift values (zero for the
/// unshifted methods in this header).
struct BoundReport {
    std::string method;
    double lower = 0.0;
    double upper = 0.0;
    Witness witness_lower;
    Witness witness_upper;
    double shift_lower = 0.0;  // >= 0
    double shift_upper = 0.0;  // <= 0
};

inline BoundReport gershgorin_bounds(const SymmetricMatrix& a) {
    BoundReport r;
    r.method = "gershgorin";
    for (int i = 0; i < a.size(); ++i) {
        const double rad = row_radius(a, i);
        const double lo = a(i, i) - rad;
        const double hi = a(i, i) + rad;
        if (i == 0 || lo < r.lower) {
            r.lower = lo;
            r.witness_lower = {i, -1};
        }
        if (i == 0 || hi > r.upper) {
            r.upper = hi;
            r.witness_upper = {i, -1};
        }
    }
    return r;
}

/// Brauer ovals of Cassini.  The real-axis extremes over pairs i != j are
/// the roots of z^2 - (a_ii + a_jj) z + a_ii a_jj - R_i R_j = 0, i.e.
/// (a_ii + a_jj)/2 -+ sqrt(((a_ii - a_jj)/2)^2 + R_i R_j).
inline BoundReport brauer_bounds(const SymmetricMatrix& a) {
    BoundReport r;
    r.method = "brauer";
    const int n = a.size();
    if (n == 1) {
        r.lower = r.upper = a(0, 0);
        r.witness_lower = r.witness_upper = {0, -1};
        return r;
    }
    std::vector<double> rad(n);
    for (int i = 0; i < n; ++i) rad[i] = row_radius(a, i);

    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double mid = 0.5 * (a(i, i) + a(j, j));
            const double half = 0.5 * (a(i, i) - a(j, j));
            const double root = std::sqrt(half * half + rad[i] * rad[j]);
            if (first || mid - root < r.lower) {
                r.lower = mid - root;
                r.witness_lower = {i, j};
            }
            if (first || mid + root > r.upper) {
                r.upper = mid + root;
                r.witness_upper = {i, j};
            }
            first = false;
        }
    }
    return r;
}

/// Membership in the Melman inclusion region union_i intersect_{j != i}
/// Omega_ij, where Omega_ij is
///   |(z - a_ii)(z - a_jj) - a_ij^2|
///     <= |z - a_jj| sum_{k != i,j} |a_ik| + |a_ij| sum_{k != i,j} |a_jk|.
inline bool melman_region_contains(const SymmetricMatrix& a, double z) {
    const int n = a.size();
    if (n < 2) throw std::invalid_argument("melman region needs n >= 2");
    std::vector<double> rad(n);
    for (int i = 0; i < n; ++i) rad[i] = row_radius(a, i);

    for (int i = 0; i < n; ++i) {
        bool all = true;
        for (int j = 0; j < n && all; ++j) {
            if (j == i) continue;
            const double aij = std::abs(a(i, j));
            const double lhs = std::abs((z - a(i, i)) * (z - a(j, j)) - a(i, j) * a(i, j));
            const double rhs = std::abs(z - a(j, j)) * (rad[i] - aij) + aij * (rad[j] - aij);
            if (lhs > rhs) all = false;
        }
        if (all) return true;
    }
    return false;
}

namespace detail {

struct CkvData {
    std::vector<char> in_s;        // indicator of S
    std::vector<double> rad_in;    // R_i^S
    std::vector<double> rad_out;   // R_i^{S complement}
};

inline CkvData ckv_prepare(const SymmetricMatrix& a, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("subset S must be nonempty");
    const int n = a.size();
    CkvData d;
    d.in_s.assign(n, 0);
    for (int v : subset) {
        if (v < 0 || v >= n) throw std::invalid_argument("subset vertex out of range");
        d.in_s[v] = 1;
    }
    d.rad_in.assign(n, 0.0);
    d.rad_out.assign(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            (d.in_s[j] ? d.rad_in[i] : d.rad_out[i]) += std::abs(a(i, j));
        }
    return d;
}

/// Returns the disk ({i,-1}) or oval ({i,j}) containing z, or {-1,-1}.
inline Witness ckv_locate(const SymmetricMatrix& a, const CkvData& d, double z) {
    const int n = a.size();
    for (int i = 0; i < n; ++i) {
        if (!d.in_s[i]) continue;
        if (std::abs(z - a(i, i)) <= d.rad_in[i]) return {i, -1};
        for (int j = 0; j < n; ++j) {
            if (d.in_s[j]) continue;
            if ((std::abs(z - a(i, i)) - d.rad_in[i]) * (std::abs(z - a(j, j)) - d.rad_out[j]) <=
                d.rad_out[i] * d.rad_in[j])
                return {i, j};
        }
    }
    return {-1, -1};
}

}  // namespace detail

/// Membership in the Cvetkovic--Kostic--Varga region for a vertex subset S
/// (given as vertex indices): union of the disks Gamma_i^S (i in S) and the
/// ovals V_ij^S (i in S, j outside S).
inline bool ckv_region_contains(const SymmetricMatrix& a, std::span<const int> subset, double z) {
    if (a.size() < 2) throw std::invalid_argument("ckv region needs n >= 2");
    const detail::CkvData d = detail::ckv_prepare(a, subset);
    return detail::ckv_locate(a, d, z).i >= 0;
}

namespace detail {

/// Leftmost point of a bounded inclusion region given its membership
/// predicate.  The window starts at the Gershgorin interval and doubles
/// leftward while the left edge is still inside the region; the window is
/// then sampled left to right (1024 uniform steps plus the probe points) to
/// bracket the outermost entry into the region, and the bracket is bisected
/// to 1e-9.  Returns the member-true end of the bracket.
inline double scan_region_lower(const std::function<bool(double)>& member, double lo, double hi,
                                std::span<const double> probes) {
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    for (int tries = 0; member(lo); ++tries) {
        if (tries > 64) throw std::runtime_error("region appears unbounded to the left");
        lo -= (hi - lo);
    }
    for (int steps = 1024; steps <= 16384; steps *= 16) {
        std::vector<double> xs;
        xs.reserve(steps + 1 + probes.size());
        const double w = hi - lo;
        for (int k = 0; k <= steps; ++k) xs.push_back(lo + w * k / steps);
        for (double p : probes)
            if (p > lo && p < hi) xs.push_back(p);
        std::sort(xs.begin(), xs.end());

        double prev = xs[0];
        for (double x : xs) {
            if (member(x)) {
                double f = prev, t = x;
                while (t - f > 1e-9) {
                    const double mid = 0.5 * (f + t);
                    (member(mid) ? t : f) = mid;
                }
                return t;
            }
            prev = x;
        }
    }
    // No entry located; fall back to the (sound) window edge.
    return lo;
}

inline double scan_region_upper(const std::function<bool(double)>& member, double lo, double hi,
                                std::span<const double> probes) {
    auto mirrored = [&](double z) { return member(-z); };
    std::vector<double> neg(probes.begin(), probes.end());
    for (double& p : neg) p = -p;
    return -scan_region_lower(mirrored, -hi, -lo, neg);
}

}  // namespace detail

/// Melman bounds: the extreme real points of the Melman region, located by
/// scan + bisection (the region has no closed-form extremes).
inline BoundReport melman_bounds(const SymmetricMatrix& a) {
    BoundReport r;
    r.method = "melman";
    if (a.size() == 1) {
        r.lower = r.upper = a(0, 0);
        r.witness_lower = r.witness_upper = {0, -1};
        return r;
    }
    const BoundReport g = gershgorin_bounds(a);
    std::vector<double> probes(a.size());
    for (int i = 0; i < a.size(); ++i) probes[i] = a(i, i);
    auto member = [&](double z) { return melman_region_contains(a, z); };
    r.lower = detail::scan_region_lower(member, g.lower, g.upper, probes);
    r.upper = detail::scan_region_upper(member, g.lower, g.upper, probes);

    // Witness: the smallest i whose intersection contains the located point.
    auto witness_at = [&](double z) -> Witness {
        for (int i = 0; i < a.size(); ++i) {
            bool all = true;
            for (int j = 0; j < a.size() && all; ++j) {
                if (j == i) continue;
                const double aij = std::abs(a(i, j));
                const double lhs = std::abs((z - a(i, i)) * (z - a(j, j)) - a(i, j) * a(i, j));
                const double rhs = std::abs(z - a(j, j)) * (row_radius(a, i) - aij) +
                                   aij * (row_radius(a, j) - aij);
                if (lhs > rhs) all = false;
            }
            if (all) return {i, -1};
        }
        return {-1, -1};
    };
    r.witness_lower = witness_at(r.lower);
    r.witness_upper = witness_at(r.upper);
    return r;
}

/// CKV bounds for an explicit nonempty vertex subset S (vertex indices).
inline BoundReport ckv_bounds(const SymmetricMatrix& a, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("subset S must be nonempty");
    BoundReport r;
    r.method = "ckv";
    if (a.size() == 1) {
        r.lower = r.upper = a(0, 0);
        r.witness_lower = r.witness_upper = {0, -1};
        return r;
    }
    const detail::CkvData d = detail::ckv_prepare(a, subset);
    const BoundReport g = gershgorin_bounds(a);
    std::vector<double> probes(a.size());
    for (int i = 0; i < a.size(); ++i) probes[i] = a(i, i);
    auto member = [&](double z) { return detail::ckv_locate(a, d, z).i >= 0; };
    r.lower = detail::scan_region_lower(member, g.lower, g.upper, probes);
    r.upper = detail::scan_region_upper(member, g.lower, g.upper, probes);
    r.witness_lower = detail::ckv_locate(a, d, r.lower);
    r.witness_upper = detail::ckv_locate(a, d, r.upper);
    return r;
}

/// CKV bounds without a caller-chosen S: every singleton {i} yields a valid
/// inclusion region, so the best lower bound (and, independently, the best
/// upper bound) over singletons is reported.
inline BoundReport ckv_bounds(const SymmetricMatrix& a) {
    BoundReport best;
    best.method = "ckv";
    for (int i = 0; i < a.size(); ++i) {
        const int s[] = {i};
        const BoundReport r = ckv_bounds(a, s);
        if (i == 0) {
            best = r;
            best.witness_lower = best.witness_upper = {i, -1};
        } else {
            if (r.lower > best.lower) {
                best.lower = r.lower;
                best.witness_lower = {i, -1};
            }
            if (r.upper < best.upper) {
                best.upper = r.upper;
                best.witness_upper = {i, -1};
            }
        }
    }
    return best;
}

}  // namespace shiftbound
