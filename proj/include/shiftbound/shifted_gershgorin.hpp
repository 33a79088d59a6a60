#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "shiftbound/envelope.hpp"
#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

/// Left edge of row i's Gershgorin interval after shifting every entry by x:
/// a_ii - x - sum_{j != i} |a_ij - x|.
inline double row_lower_edge(const SymmetricMatrix& a, int i, double x) {
    a.check_row(i);
    double s = a(i, i) - x;
    for (int j = 0; j < a.size(); ++j)
        if (j != i) s -= std::abs(a(i, j) - x);
    return s;
}

/// Right edge counterpart: a_ii - x + sum_{j != i} |a_ij - x|.
inline double row_upper_edge(const SymmetricMatrix& a, int i, double x) {
    a.check_row(i);
    double s = a(i, i) - x;
    for (int j = 0; j < a.size(); ++j)
        if (j != i) s += std::abs(a(i, j) - x);
    return s;
}

/// The n lines whose pointwise min equals min_i row_lower_edge(A, i, x).
///
/// Line k (1-based) has slope n - 2k and intercept
///   s_k = min_i (a_ii + sum_{j < k} y_j - sum_{j >= k} y_j),
/// where y_1 <= ... <= y_{n-1} are row i's off-diagonal entries sorted
/// nondecreasing.  Between consecutive sorted entries every |a_ij - x| has a
/// fixed sign, which makes each row's edge the min of these lines; taking the
/// min over rows keeps only the smallest intercept per slope.  witness[k]
/// records the smallest row index attaining s_k.
inline LinearEnvelope lower_lines(const SymmetricMatrix& a) {
    const int n = a.size();
    LinearEnvelope env;
    env.sense = EnvelopeSense::Lower;
    env.lines.resize(n);
    env.witness.assign(n, 0);
    for (int k = 1; k <= n; ++k) env.lines[k - 1].slope = static_cast<double>(n - 2 * k);

    std::vector<double> best(n, 0.0);
    for (int i = 0; i < n; ++i) {
        std::vector<double> y = a.off_diagonal_row(i);
        std::sort(y.begin(), y.end());
        double total = 0.0;
        for (double v : y) total += v;

        double prefix = 0.0;  // sum of y_j for j < k
        for (int k = 1; k <= n; ++k) {
            if (k >= 2) prefix += y[k - 2];
            const double s_ik = a(i, i) + (2.0 * prefix - total);
            if (i == 0 || s_ik < best[k - 1]) {
                best[k - 1] = s_ik;
                env.witness[k - 1] = i;
            }
        }
    }
    for (int k = 0; k < n; ++k) env.lines[k].intercept = best[k];
    return env;
}

/// Best lower bound over the family A - x*1, x >= 0.
inline ShiftedBound shifted_gersh_lower(const SymmetricMatrix& a) {
    return envelope_sup(lower_lines(a));
}

/// Best upper bound over A - x*1, x <= 0.  Computed through the exact
/// identity max_i row_upper_edge(A, i, -t) == -min_i row_lower_edge(-A, i, t).
inline ShiftedBound shifted_gersh_upper(const SymmetricMatrix& a) {
    ShiftedBound lb = shifted_gersh_lower(negate(a));
    ShiftedBound out;
    out.value = -lb.value;
    out.x_star = -lb.x_star;
    out.active = std::move(lb.active);
    out.improved = lb.improved;
    return out;
}

namespace detail {

// Right derivative at x = 0 of the lower envelope: the min slope among
// lines attaining the value at 0 (within 1e-9).
inline double envelope_right_derivative_at_zero(const LinearEnvelope& env) {
    double g0 = env.lines[0].intercept;
    for (const Line& ln : env.lines) g0 = std::min(g0, ln.intercept);
    double d = std::numeric_limits<double>::infinity();
    for (const Line& ln : env.lines)
        if (ln.intercept <= g0 + 1e-9) d = std::min(d, ln.slope);
    return d;
}

}  // namespace detail

/// True iff shifting strictly improves the lower bound, decided by the sign
/// of the envelope's right derivative at x = 0 (equivalent, by concavity, to
/// shifted_gersh_lower(A).value > min_i (a_ii - R_i)).
inline bool local_improvement_lower(const SymmetricMatrix& a) {
    return detail::envelope_right_derivative_at_zero(lower_lines(a)) > 0.0;
}

/// Closed-form evaluation of the shifted lower bound from the envelope
/// intercepts.  When the envelope is nonincreasing at 0 the optimum is the
/// unshifted bound; otherwise the optimum is the smallest intersection value
/// over pairs of a nonnegative-slope line k (2k <= n) and a negative-slope
/// line l (2l > n) with s_l >= s_k, attained at x = (s_l - s_k) / (2(l - k)).
inline ShiftedBound closed_form_lower(const SymmetricMatrix& a) {
    const LinearEnvelope env = lower_lines(a);
    const int n = static_cast<int>(env.lines.size());

    double g0 = env.lines[0].intercept;
    int arg0 = 0;
    for (int k = 1; k < n; ++k)
        if (env.lines[k].intercept < g0) {
            g0 = env.lines[k].intercept;
            arg0 = k;
        }

    ShiftedBound out;
    if (detail::envelope_right_derivative_at_zero(env) <= 0.0) {
        out.value = g0;
        out.x_star = 0.0;
        out.active = {arg0};
        out.improved = false;
        return out;
    }

    struct Pair {
        double val, x;
        int k, l;
    };
    std::vector<Pair> pairs;
    for (int k = 1; 2 * k <= n; ++k) {
        const double sk = env.lines[k - 1].intercept;
        for (int l = n; 2 * l > n; --l) {
            const double sl = env.lines[l - 1].intercept;
            if (sl < sk) continue;
            const double val = ((0.5 * n - k) * sl + (l - 0.5 * n) * sk) / (l - k);
            const double x = (sl - sk) / (2.0 * (l - k));
            pairs.push_back({val, x, k - 1, l - 1});
        }
    }
    if (pairs.empty()) {  // cannot happen when the derivative at 0 is positive
        out.value = g0;
        out.x_star = 0.0;
        out.active = {arg0};
        out.improved = false;
        return out;
    }
    double vmin = pairs[0].val;
    for (const Pair& p : pairs) vmin = std::min(vmin, p.val);
    const Pair* chosen = nullptr;
    for (const Pair& p : pairs)
        if (p.val <= vmin + 1e-9 && (chosen == nullptr || p.x < chosen->x)) chosen = &p;
    out.value = vmin;
    out.x_star = chosen->x;
    out.active = {chosen->k, chosen->l};
    out.improved = vmin > g0;
    return out;
}

/// Pointwise samples (x, min_i row_lower_edge(A, i, x)).
inline std::vector<std::pair<double, double>> profile_lower(const SymmetricMatrix& a,
                                                            std::span<const double> xs) {
    std::vector<std::pair<double, double>> out;
    out.reserve(xs.size());
    for (double x : xs) {
        double v = row_lower_edge(a, 0, x);
        for (int i = 1; i < a.size(); ++i) v = std::min(v, row_lower_edge(a, i, x));
        out.emplace_back(x, v);
    }
    return out;
}

/// Positive-(semi)definiteness certificate: the best shifted lower bound is
/// nonnegative.  A strictly positive bound certifies positive definiteness,
/// a zero bound positive semidefiniteness.
inline bool pd_certify(const SymmetricMatrix& a) { return shifted_gersh_lower(a).value >= 0.0; }

/// {x >= 0 : min_k (r_k x + s_k) > 0}, the shifts certifying positive
/// definiteness of A - x*1.
inline PositiveWindow pd_window(const SymmetricMatrix& a) {
    return positive_window(lower_lines(a));
}

}  // namespace shiftbound
