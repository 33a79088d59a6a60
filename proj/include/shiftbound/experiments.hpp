#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "shiftbound/classic_bounds.hpp"
#include "shiftbound/format.hpp"
#include "shiftbound/jacobi.hpp"
#include "shiftbound/rng.hpp"
#include "shiftbound/shifted_gershgorin.hpp"
#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

/// Random symmetric matrix with integer entries: each upper-triangle entry
/// (i <= j, row-major order) is uniform on [lo, hi] and mirrored.
inline SymmetricMatrix random_symmetric_int(int n, int lo, int hi, Xoshiro256StarStar& rng) {
    if (lo > hi) throw std::invalid_argument("empty entry range");
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = static_cast<double>(rng.uniform_int(lo, hi));
            a[static_cast<std::size_t>(i) * n + j] = v;
            a[static_cast<std::size_t>(j) * n + i] = v;
        }
    return SymmetricMatrix(n, std::move(a));
}

struct ComparisonRecord {
    int sample = 0;
    double lb_gersh = 0.0;
    double lb_brauer = 0.0;
    double ls_gersh = 0.0;
    double lambda1 = 0.0;
};

struct ComparisonSummary {
    int wins = 0;    // shifted Gershgorin strictly above unshifted Brauer
    int ties = 0;    // equal within 1e-9
    int losses = 0;
    double win_rate = 0.0;
};

struct ComparisonResult {
    std::vector<ComparisonRecord> records;  // sorted by lb_brauer ascending
    ComparisonSummary summary;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Per-sample comparison of the unshifted Gershgorin/Brauer lower bounds,
/// the shifted Gershgorin lower bound, and the oracle's smallest
/// eigenvalue, on random integer matrices with entries 0..10.  Sample k
/// uses the substream (seed, k).
inline ComparisonResult compare_experiment(int n, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    ComparisonResult out;
    out.n = n;
    out.samples = samples;
    out.seed = seed;
    out.records.reserve(samples);

    for (int k = 0; k < samples; ++k) {
        Xoshiro256StarStar rng = Xoshiro256StarStar::substream(seed, static_cast<std::uint64_t>(k));
        const SymmetricMatrix a = random_symmetric_int(n, 0, 10, rng);
        ComparisonRecord rec;
        rec.sample = k;
        rec.lb_gersh = gershgorin_bounds(a).lower;
        rec.lb_brauer = brauer_bounds(a).lower;
        rec.ls_gersh = shifted_gersh_lower(a).value;
        rec.lambda1 = eigen_oracle(a).min();
        out.records.push_back(rec);

        const double diff = rec.ls_gersh - rec.lb_brauer;
        if (diff > 1e-9)
            ++out.summary.wins;
        else if (diff < -1e-9)
            ++out.summary.losses;
        else
            ++out.summary.ties;
    }
    out.summary.win_rate = static_cast<double>(out.summary.wins) / samples;

    std::stable_sort(out.records.begin(), out.records.end(),
                     [](const ComparisonRecord& x, const ComparisonRecord& y) {
                         return x.lb_brauer < y.lb_brauer;
                     });
    return out;
}

inline void write_comparison_csv(std::ostream& os, const ComparisonResult& r) {
    os << "# generator: xoshiro256** with splitmix64 per-sample substreams"
       << "; seed=" << r.seed << "; n=" << r.n << "; samples=" << r.samples << "\n";
    os << "sample,lbG,lbB,lsG,lambda1\n";
    for (const ComparisonRecord& rec : r.records)
        os << rec.sample << ',' << fmt_g(rec.lb_gersh) << ',' << fmt_g(rec.lb_brauer) << ','
           << fmt_g(rec.ls_gersh) << ',' << fmt_g(rec.lambda1) << "\n";
}

inline void write_summary(std::ostream& os, const ComparisonSummary& s) {
    os << "wins,ties,losses,win_rate\n"
       << s.wins << ',' << s.ties << ',' << s.losses << ',' << fmt_g(s.win_rate) << "\n";
}

}  // namespace shiftbound
