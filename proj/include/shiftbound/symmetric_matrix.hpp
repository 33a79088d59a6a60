#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shiftbound {

/// Dense real symmetric matrix, row-major storage, immutable after
/// construction.  Construction validates finiteness and symmetry:
/// entries with |a_ij - a_ji| <= 1e-12 are symmetrized by averaging,
/// anything worse is rejected.
class SymmetricMatrix {
public:
    SymmetricMatrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
        if (n_ < 1) throw std::invalid_argument("matrix dimension must be at least 1");
        if (a_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw std::invalid_argument("entry count does not match dimension");
        for (double v : a_)
            if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                const double ij = a_[idx(i, j)], ji = a_[idx(j, i)];
                if (std::abs(ij - ji) > 1e-12)
                    throw std::invalid_argument("matrix is not symmetric");
                const double avg = 0.5 * (ij + ji);
                a_[idx(i, j)] = avg;
                a_[idx(j, i)] = avg;
            }
        }
    }

    SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : SymmetricMatrix(static_cast<int>(rows.size()), flatten(rows)) {}

    static SymmetricMatrix diagonal(std::vector<double> d) {
        const int n = static_cast<int>(d.size());
        std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = d[i];
        return SymmetricMatrix(n, std::move(a));
    }

    int size() const { return n_; }

    double operator()(int i, int j) const {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return a_[idx(i, j)];
    }

    const std::vector<double>& data() const { return a_; }

    /// Off-diagonal entries of row i (the n-1 values a_ij, j != i).
    std::vector<double> off_diagonal_row(int i) const {
        check_row(i);
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(n_) - 1);
        for (int j = 0; j < n_; ++j)
            if (j != i) out.push_back(a_[idx(i, j)]);
        return out;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += a_[idx(i, i)];
        return t;
    }

    void check_row(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("row index out of range");
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    static std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows) {
        std::vector<double> a;
        for (const auto& r : rows) {
            if (r.size() != rows.size()) throw std::invalid_argument("matrix rows must form a square");
            a.insert(a.end(), r.begin(), r.end());
        }
        return a;
    }

    int n_;
    std::vector<double> a_;
};

/// A - x*1, where 1 is the all-ones matrix: subtracts x from every entry.
inline SymmetricMatrix shift_matrix(const SymmetricMatrix& a, double x) {
    assert(std::isfinite(x));
    std::vector<double> e = a.data();
    for (double& v : e) v -= x;
    return SymmetricMatrix(a.size(), std::move(e));
}

inline SymmetricMatrix negate(const SymmetricMatrix& a) {
    std::vector<double> e = a.data();
    for (double& v : e) v = -v;
    return SymmetricMatrix(a.size(), std::move(e));
}

/// Row radius R_i(A) = sum_{j != i} |a_ij|.
inline double row_radius(const SymmetricMatrix& a, int i) {
    a.check_row(i);
    double r = 0.0;
    for (int j = 0; j < a.size(); ++j)
        if (j != i) r += std::abs(a(i, j));
    return r;
}

}  // namespace shiftbound
