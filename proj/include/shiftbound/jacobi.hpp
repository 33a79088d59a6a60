#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

/// Eigenvalues of a symmetric matrix, sorted nondecreasing.
struct Spectrum {
    std::vector<double> eigenvalues;

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

/// Full eigendecomposition: eigenvalues[k] belongs to the eigenvector stored
/// in column k of `vectors` (row-major n*n).
struct EigenDecomposition {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> vectors;

    double vector_entry(int row, int k) const {
        return vectors[static_cast<std::size_t>(row) * n + k];
    }
};

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<std::size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi eigensolver.  Sweeps rotate every off-diagonal pair until
/// the off-diagonal Frobenius norm drops below `tol`; throws after
/// `max_sweeps` sweeps without convergence.  Intended as a ground-truth
/// oracle at test scale (n <= 256), not as a production eigensolver.
inline EigenDecomposition jacobi_eigen(const SymmetricMatrix& m, double tol = 1e-12,
                                       int max_sweeps = 100) {
    const int n = m.size();
    if (n > 256) throw std::invalid_argument("dense oracle limited to n <= 256");

    std::vector<double> a = m.data();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    auto at = [&](std::vector<double>& w, int i, int j) -> double& {
        return w[static_cast<std::size_t>(i) * n + j];
    };

    bool converged = (n == 1) || detail::off_diagonal_norm(a, n) < tol;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double tau = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = at(a, p, p), aqq = at(a, q, q);
                at(a, p, p) = app - t * apq;
                at(a, q, q) = aqq + t * apq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k != p && k != q) {
                        const double akp = at(a, k, p), akq = at(a, k, q);
                        at(a, k, p) = c * akp - s * akq;
                        at(a, p, k) = at(a, k, p);
                        at(a, k, q) = s * akp + c * akq;
                        at(a, q, k) = at(a, k, q);
                    }
                    const double vkp = at(v, k, p), vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
        converged = detail::off_diagonal_norm(a, n) < tol;
    }
    if (!converged) throw std::runtime_error("jacobi_eigen: no convergence within sweep cap");

    EigenDecomposition dec;
    dec.n = n;
    dec.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) dec.eigenvalues[i] = a[static_cast<std::size_t>(i) * n + i];

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return dec.eigenvalues[x] < dec.eigenvalues[y]; });
    std::vector<double> ev(n);
    std::vector<double> vec(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        ev[k] = dec.eigenvalues[order[k]];
        for (int r = 0; r < n; ++r)
            vec[static_cast<std::size_t>(r) * n + k] = v[static_cast<std::size_t>(r) * n + order[k]];
    }
    dec.eigenvalues = std::move(ev);
    dec.vectors = std::move(vec);
    return dec;
}

/// Ground-truth spectrum of a symmetric matrix (sorted nondecreasing).
inline Spectrum eigen_oracle(const SymmetricMatrix& m) {
    return Spectrum{jacobi_eigen(m).eigenvalues};
}

}  // namespace shiftbound
