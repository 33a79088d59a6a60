#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shiftbound/envelope.hpp"
#include "shiftbound/shifted_gershgorin.hpp"
#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

/// Outcome of optimizing the shifted Brauer lower bound.  `exact` is true
/// only for the averaged (tilde) path, whose objective is concave piecewise
/// linear; the general optimizer is best-effort but sound for any x >= 0.
struct BrauerShiftResult {
    double value = 0.0;
    double x_star = 0.0;
    std::pair<int, int> pair{-1, -1};
    bool exact = false;
};

namespace detail {

/// Smaller Cassini root for two rows given raw row data: diagonal values
/// q_i, q_j and off-diagonal entries y_i, y_j, all shifted by x.
inline double pair_lower_edge(double qi, std::span<const double> yi, double qj,
                              std::span<const double> yj, double x) {
    double ri = 0.0, rj = 0.0;
    for (double v : yi) ri += std::abs(v - x);
    for (double v : yj) rj += std::abs(v - x);
    const double half = 0.5 * (qi - qj);
    const double radicand = half * half + ri * rj;
    assert(radicand >= 0.0);
    return 0.5 * (qi + qj) - x - std::sqrt(radicand);
}

}  // namespace detail

/// f_ij(A, x): the smaller Cassini root of rows i, j of A - x*1,
/// (a_ii + a_jj)/2 - x - sqrt(((a_ii - a_jj)/2)^2 + R_i(A - x*1) R_j(A - x*1)).
/// At x = 0 this is exactly the unshifted Brauer pair bound.
inline double f_pair(const SymmetricMatrix& a, int i, int j, double x) {
    a.check_row(i);
    a.check_row(j);
    if (i == j) throw std::invalid_argument("f_pair needs two distinct rows");
    const std::vector<double> yi = a.off_diagonal_row(i);
    const std::vector<double> yj = a.off_diagonal_row(j);
    return detail::pair_lower_edge(a(i, i), yi, a(j, j), yj, x);
}

namespace detail {

// min over pairs i < j of f_ij(A, x), with the attaining pair.
inline double brauer_objective(const SymmetricMatrix& a, double x, std::pair<int, int>* argmin) {
    const int n = a.size();
    std::vector<double> rad(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) rad[i] += std::abs(a(i, j) - x);

    double best = 0.0;
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double half = 0.5 * (a(i, i) - a(j, j));
            const double v = 0.5 * (a(i, i) + a(j, j)) - x - std::sqrt(half * half + rad[i] * rad[j]);
            if (first || v < best) {
                best = v;
                if (argmin) *argmin = {i, j};
                first = false;
            }
        }
    return best;
}

// Stationary-point candidates of f_ij on an interval where both radii are
// linear, R_i = alpha_i + beta_i x and R_j = alpha_j + beta_j x: setting the
// derivative of x + sqrt(D + R_i R_j) to zero and squaring yields
//   4 p2 (p2 - 1) x^2 + 4 p1 (p2 - 1) x + (p1^2 - 4 p0 - 4 D) = 0
// with p2 = beta_i beta_j, p1 = alpha_i beta_j + alpha_j beta_i,
// p0 = alpha_i alpha_j.  Spurious roots from the squaring are harmless:
// every candidate is evaluated through the exact objective.
inline void stationary_candidates(double ai, double bi, double aj, double bj, double d,
                                  double lo, double hi, std::vector<double>& out) {
    const double p2 = bi * bj;
    const double p1 = ai * bj + aj * bi;
    const double p0 = ai * aj;
    const double c2 = 4.0 * p2 * (p2 - 1.0);
    const double c1 = 4.0 * p1 * (p2 - 1.0);
    const double c0 = p1 * p1 - 4.0 * p0 - 4.0 * d;

    auto push = [&](double x) {
        if (x > lo && x < hi) out.push_back(x);
    };
    if (std::abs(c2) > 1e-12) {
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            push((-c1 + sq) / (2.0 * c2));
            push((-c1 - sq) / (2.0 * c2));
        }
    } else if (std::abs(c1) > 1e-12) {
        push(-c0 / c1);
    }
}

}  // namespace detail

inline LinearEnvelope tilde_lines(const SymmetricMatrix& a);

/// Best-effort maximization of min_{i != j} f_ij(A, x) over x >= 0.
///
/// The objective is strictly decreasing beyond every off-diagonal entry, so
/// the search is confined to [0, max off-diagonal].  Candidates: the
/// interval endpoints, every off-diagonal breakpoint, the per-pair
/// per-interval stationary points, a 1024-point grid refined by golden
/// section around its best sample, and (for equal diagonals) the optimum of
/// the averaged envelope, which f_ij dominates pointwise.  Every candidate
/// is evaluated through the exact objective, so the result is a valid bound
/// even if the true supremum is missed.
inline BrauerShiftResult shifted_brauer_lower(const SymmetricMatrix& a) {
    const int n = a.size();
    if (n < 2) throw std::invalid_argument("shifted brauer needs n >= 2");

    std::vector<double> breaks;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) breaks.push_back(a(i, j));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const double x_max = std::max(0.0, breaks.back());

    std::vector<double> candidates{0.0, x_max};
    for (double b : breaks)
        if (b > 0.0 && b < x_max) candidates.push_back(b);

    if (x_max > 0.0) {
        // Per-pair stationary points on each linearity interval.
        std::vector<double> edges{0.0};
        for (double b : breaks)
            if (b > 0.0 && b < x_max) edges.push_back(b);
        edges.push_back(x_max);

        for (int i = 0; i < n; ++i) {
            const std::vector<double> yi = a.off_diagonal_row(i);
            for (int j = i + 1; j < n; ++j) {
                const std::vector<double> yj = a.off_diagonal_row(j);
                const double half = 0.5 * (a(i, i) - a(j, j));
                for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
                    const double lo = edges[e], hi = edges[e + 1];
                    const double mid = 0.5 * (lo + hi);
                    double ai = 0.0, bi = 0.0, aj = 0.0, bj = 0.0;
                    for (double v : yi) {
                        if (v < mid) {
                            ai -= v;
                            bi += 1.0;
                        } else {
                            ai += v;
                            bi -= 1.0;
                        }
                    }
                    for (double v : yj) {
                        if (v < mid) {
                            aj -= v;
                            bj += 1.0;
                        } else {
                            aj += v;
                            bj -= 1.0;
                        }
                    }
                    detail::stationary_candidates(ai, bi, aj, bj, half * half, lo, hi, candidates);
                }
            }
        }

        // Grid sweep with golden-section refinement around the best sample.
        const int grid = 1024;
        double best_g = -std::numeric_limits<double>::infinity();
        int best_k = 0;
        for (int k = 0; k <= grid; ++k) {
            const double x = x_max * k / grid;
            const double v = detail::brauer_objective(a, x, nullptr);
            if (v > best_g) {
                best_g = v;
                best_k = k;
            }
        }
        double lo = x_max * std::max(0, best_k - 1) / grid;
        double hi = x_max * std::min(grid, best_k + 1) / grid;
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        double f1 = detail::brauer_objective(a, x1, nullptr);
        double f2 = detail::brauer_objective(a, x2, nullptr);
        while (hi - lo > 1e-8) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = detail::brauer_objective(a, x2, nullptr);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = detail::brauer_objective(a, x1, nullptr);
            }
        }
        candidates.push_back(0.5 * (lo + hi));
    }

    bool equal_diag = true;
    for (int i = 1; i < n && equal_diag; ++i)
        if (std::abs(a(i, i) - a(0, 0)) > 1e-12) equal_diag = false;
    if (equal_diag) candidates.push_back(envelope_sup(tilde_lines(a)).x_star);

    std::sort(candidates.begin(), candidates.end());
    BrauerShiftResult out;
    bool first = true;
    for (double x : candidates) {
        std::pair<int, int> pr{-1, -1};
        const double v = detail::brauer_objective(a, x, &pr);
        if (first || v > out.value) {  // ascending x, so ties keep the smallest x
            out.value = v;
            out.x_star = x;
            out.pair = pr;
            first = false;
        }
    }
    out.exact = false;
    return out;
}

/// Upper-bound counterpart through negation duality.
inline BrauerShiftResult shifted_brauer_upper(const SymmetricMatrix& a) {
    BrauerShiftResult r = shifted_brauer_lower(negate(a));
    r.value = -r.value;
    r.x_star = -r.x_star;
    return r;
}

/// Lines of the averaged pair envelope for equal-diagonal matrices:
/// min_{i != j} (d_i(A,x) + d_j(A,x))/2 == min_k (p_k x + q_k) with
/// p_k = n - 1 - k for k = 1..2n-1 and
/// q_k = min_{i<j} (q + (sum_{m<k} y_m - sum_{m>=k} y_m) / 2)
/// over the combined sorted off-diagonal entries of rows i and j.
inline LinearEnvelope tilde_lines(const SymmetricMatrix& a) {
    const int n = a.size();
    if (n < 2) throw std::invalid_argument("tilde bound needs n >= 2");
    const double q = a(0, 0);
    for (int i = 1; i < n; ++i)
        if (std::abs(a(i, i) - q) > 1e-12)
            throw std::invalid_argument("tilde bound needs equal diagonal entries");

    const int lines = 2 * n - 1;
    LinearEnvelope env;
    env.sense = EnvelopeSense::Lower;
    env.lines.resize(lines);
    env.witness.assign(lines, 0);
    for (int k = 1; k <= lines; ++k) env.lines[k - 1].slope = static_cast<double>(n - 1 - k);

    std::vector<double> best(lines, 0.0);
    std::vector<double> y;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            y.clear();
            for (int c = 0; c < n; ++c) {
                if (c != i) y.push_back(a(i, c));
                if (c != j) y.push_back(a(j, c));
            }
            std::sort(y.begin(), y.end());
            double total = 0.0;
            for (double v : y) total += v;

            double prefix = 0.0;
            for (int k = 1; k <= lines; ++k) {
                if (k >= 2) prefix += y[k - 2];
                const double q_ijk = q + 0.5 * (2.0 * prefix - total);
                if (first || q_ijk < best[k - 1]) {
                    best[k - 1] = q_ijk;
                    env.witness[k - 1] = i;  // smaller row of the attaining pair
                }
            }
            first = false;
        }
    }
    for (int k = 0; k < lines; ++k) env.lines[k].intercept = best[k];
    return env;
}

/// Exact optimization of the averaged pair bound (Gershgorin-row averages
/// minorize f_ij when diagonals are equal), by the same concave envelope
/// enumeration as the shifted Gershgorin bound.
inline BrauerShiftResult tilde_shifted_lower(const SymmetricMatrix& a) {
    const ShiftedBound sb = envelope_sup(tilde_lines(a));
    BrauerShiftResult out;
    out.value = sb.value;
    out.x_star = sb.x_star;
    out.exact = true;

    // Locate the pair attaining the pointwise minimum at the optimum.
    const int n = a.size();
    bool first = true;
    double best = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v =
                0.5 * (row_lower_edge(a, i, sb.x_star) + row_lower_edge(a, j, sb.x_star));
            if (first || v < best) {
                best = v;
                out.pair = {i, j};
                first = false;
            }
        }
    return out;
}

}  // namespace shiftbound
