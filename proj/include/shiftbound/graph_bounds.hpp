#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftbound/graph.hpp"
#include "shiftbound/jacobi.hpp"
#include "shiftbound/rng.hpp"

namespace shiftbound {

/// Which regime of the degree case analysis produced a graph bound.
enum class DegreeCase {
    MaxDegree,  // all shifted-row slopes negative: unshifted bound
    Pivot,      // mixed slopes: all rows meet at (1/2, -n/2)
    MinDegree,  // all slopes positive: bound at shift 1
};

inline const char* to_string(DegreeCase c) {
    switch (c) {
        case DegreeCase::MaxDegree: return "max-degree";
        case DegreeCase::Pivot: return "pivot";
        case DegreeCase::MinDegree: return "min-degree";
    }
    return "?";
}

struct GraphBound {
    double value = 0.0;
    DegreeCase tag = DegreeCase::Pivot;
};

/// Lower bound on the adjacency spectrum from the degree sequence.  On
/// [0, 1] each shifted row edge is the line -deg(i) + (2 deg(i) - n) x and
/// all rows pass through (1/2, -n/2), so the optimum over shifts is one of
/// -Delta (x = 0), -n/2 (x = 1/2), or delta - n (x = 1).  Boundary ties
/// agree across cases and resolve to the pivot value.
inline GraphBound gersh_graph_lower(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0.0, DegreeCase::MaxDegree};
    const DegreeSummary d = degree_summary(g);
    const double half = 0.5 * n;
    if (d.max_degree < half) return {static_cast<double>(-d.max_degree), DegreeCase::MaxDegree};
    if (d.min_degree > half)
        return {static_cast<double>(d.min_degree - n), DegreeCase::MinDegree};
    return {-half, DegreeCase::Pivot};
}

/// Same case analysis on pair-averaged degrees: Delta, delta replaced by the
/// averages of the two largest / two smallest degrees.
inline GraphBound pair_gersh_graph_lower(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("pair bound needs at least two vertices");
    const DegreeSummary d = degree_summary(g);
    const double half = 0.5 * n;
    if (d.top_two_avg < half) return {-d.top_two_avg, DegreeCase::MaxDegree};
    if (d.bottom_two_avg > half) return {d.bottom_two_avg - n, DegreeCase::MinDegree};
    return {-half, DegreeCase::Pivot};
}

struct BrauerGraphBound {
    double value = 0.0;
    double x = 0.0;  // one of 0, 1/2, 1
};

/// Brauer bound on the adjacency spectrum evaluated at the three candidate
/// shifts: -sqrt(Delta Delta2nd) at x = 0, -n/2 at x = 1/2, and
/// -1 - sqrt((n-1-delta)(n-1-delta2nd)) at x = 1.  Every x >= 0 is sound,
/// so the best of the three is reported (smallest x on ties).
inline BrauerGraphBound brauer_graph_lower(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("brauer graph bound needs at least two vertices");
    const DegreeSummary d = degree_summary(g);

    const double at0 = -std::sqrt(static_cast<double>(d.max_degree) * d.second_max);
    const double at_half = -0.5 * n;
    const double at1 =
        -1.0 - std::sqrt(static_cast<double>(n - 1 - d.min_degree) * (n - 1 - d.second_min));

    BrauerGraphBound best{at0, 0.0};
    if (at_half > best.value) best = {at_half, 0.5};
    if (at1 > best.value) best = {at1, 1.0};
    return best;
}

/// One Erdos--Renyi G(n, p) sample; each unordered pair is an edge
/// independently with probability p, drawn in lexicographic order.
inline UndirectedGraph erdos_renyi(int n, double p, Xoshiro256StarStar& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return UndirectedGraph(n, std::move(edges));
}

struct ErRecord {
    int sample = 0;
    double lambda1 = 0.0;
    double bound = 0.0;
    double gap = 0.0;
};

/// Erdos--Renyi experiment: for each sample, the oracle's smallest
/// adjacency eigenvalue and the Brauer graph bound.  Sample k uses the
/// substream (seed, k), so results do not depend on evaluation order.
inline std::vector<ErRecord> er_experiment(int n, double p, int samples, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
    std::vector<ErRecord> out;
    out.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        Xoshiro256StarStar rng = Xoshiro256StarStar::substream(seed, static_cast<std::uint64_t>(k));
        const UndirectedGraph g = erdos_renyi(n, p, rng);
        ErRecord rec;
        rec.sample = k;
        rec.lambda1 = eigen_oracle(adjacency(g)).min();
        rec.bound = brauer_graph_lower(g).value;
        rec.gap = rec.lambda1 - rec.bound;
        out.push_back(rec);
    }
    return out;
}

}  // namespace shiftbound
