#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

/// Undirected loop-free graph on vertices 0..n-1.  Edges are stored as
/// normalized (u < v) pairs, sorted; duplicates and self-loops rejected.
class UndirectedGraph {
public:
    UndirectedGraph(int n, std::vector<std::pair<int, int>> edges)
        : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
        for (auto& [u, v] : edges_) {
            if (u == v) throw std::invalid_argument("self-loop in graph input");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge in graph input");
    }

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const auto& [u, v] : edges_) {
            ++d[u];
            ++d[v];
        }
        return d;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Degree statistics used by the graph bounds: max/min degree, second
/// largest/smallest, and the averages of the top-two / bottom-two degrees.
struct DegreeSummary {
    std::vector<int> degrees;
    int max_degree;
    int second_max;
    int min_degree;
    int second_min;
    double top_two_avg;
    double bottom_two_avg;
};

inline DegreeSummary degree_summary(const UndirectedGraph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("degree summary needs at least two vertices");
    DegreeSummary s;
    s.degrees = g.degrees();
    std::vector<int> sorted = s.degrees;
    std::sort(sorted.begin(), sorted.end());
    const int n = static_cast<int>(sorted.size());
    s.min_degree = sorted[0];
    s.second_min = sorted[1];
    s.max_degree = sorted[n - 1];
    s.second_max = sorted[n - 2];
    s.top_two_avg = 0.5 * (s.max_degree + s.second_max);
    s.bottom_two_avg = 0.5 * (s.min_degree + s.second_min);
    return s;
}

/// 0/1 adjacency matrix with zero diagonal.
inline SymmetricMatrix adjacency(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + v] = 1.0;
        a[static_cast<std::size_t>(v) * n + u] = 1.0;
    }
    return SymmetricMatrix(n, std::move(a));
}

}  // namespace shiftbound
