#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

namespace shiftbound {

struct Line {
    double slope;
    double intercept;

    double at(double x) const { return slope * x + intercept; }
};

enum class EnvelopeSense { Lower, Upper };

/// A finite family of lines whose pointwise min (lower sense) or max
/// (upper sense) represents a bound as a function of the shift x.
/// `witness` optionally records, per line, the row index that attained
/// the intercept (smallest index on ties).
struct LinearEnvelope {
    std::vector<Line> lines;
    EnvelopeSense sense = EnvelopeSense::Lower;
    std::vector<int> witness;

    double value_at(double x) const {
        assert(!lines.empty());
        double v = lines[0].at(x);
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const double w = lines[k].at(x);
            v = sense == EnvelopeSense::Lower ? std::min(v, w) : std::max(v, w);
        }
        return v;
    }
};

/// Result of optimizing a shifted bound over admissible shifts.
struct ShiftedBound {
    double value = 0.0;
    double x_star = 0.0;
    std::vector<int> active;  // the one or two line indices defining the optimum
    bool improved = false;    // strictly better than the unshifted (x = 0) value
};

/// Exact supremum over x >= 0 of a lower envelope (pointwise min of lines).
///
/// The envelope is concave, so the supremum is attained either at x = 0 or
/// at an intersection of a nonnegative-slope line with a nonpositive-slope
/// line; enumerating those candidates is exact.  Reports the smallest
/// optimal x when the optimum is attained on an interval (candidates within
/// 1e-9 of the best value count as ties).
inline ShiftedBound envelope_sup(const LinearEnvelope& env) {
    assert(env.sense == EnvelopeSense::Lower && !env.lines.empty());

    struct Candidate {
        double x;
        std::vector<int> active;
    };
    std::vector<Candidate> candidates;

    int arg0 = 0;
    for (int k = 1; k < static_cast<int>(env.lines.size()); ++k)
        if (env.lines[k].intercept < env.lines[arg0].intercept) arg0 = k;
    candidates.push_back({0.0, {arg0}});

    const int m = static_cast<int>(env.lines.size());
    for (int k = 0; k < m; ++k) {
        if (env.lines[k].slope < 0.0) continue;
        for (int l = 0; l < m; ++l) {
            if (l == k || env.lines[l].slope > 0.0) continue;
            const double denom = env.lines[k].slope - env.lines[l].slope;
            if (denom <= 0.0) continue;  // parallel zero-slope pair
            const double x = (env.lines[l].intercept - env.lines[k].intercept) / denom;
            if (x >= 0.0) candidates.push_back({x, {k, l}});
        }
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) best = std::max(best, env.value_at(c.x));

    const Candidate* chosen = nullptr;
    for (const auto& c : candidates) {
        if (env.value_at(c.x) < best - 1e-9) continue;
        if (chosen == nullptr || c.x < chosen->x) chosen = &c;
    }

    ShiftedBound out;
    out.value = best;
    out.x_star = chosen->x;
    out.active = chosen->active;
    out.improved = best > env.value_at(0.0);
    return out;
}

/// The set {x >= 0 : envelope(x) > 0} for a lower envelope.  The set is an
/// interval, open except possibly at 0 (lo == 0 with a positive value there).
struct PositiveWindow {
    bool empty = true;
    double lo = 0.0;
    double hi = 0.0;
};

inline PositiveWindow positive_window(const LinearEnvelope& env) {
    assert(env.sense == EnvelopeSense::Lower);
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (const Line& ln : env.lines) {
        if (ln.slope > 0.0)
            lo = std::max(lo, -ln.intercept / ln.slope);
        else if (ln.slope < 0.0)
            hi = std::min(hi, -ln.intercept / ln.slope);
        else if (ln.intercept <= 0.0)
            return {};
    }
    if (!(lo < hi)) return {};
    return {false, lo, hi};
}

}  // namespace shiftbound
