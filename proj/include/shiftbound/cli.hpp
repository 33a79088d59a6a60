#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "shiftbound/shiftbound.hpp"

namespace shiftbound::cli {

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline std::string witness_str(const Witness& w) {
    if (w.i < 0) return "-";
    if (!w.is_pair()) return "row " + std::to_string(w.i);
    return "pair (" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
}

inline void print_report(std::ostream& out, const BoundReport& r) {
    out << r.method << ": lower = " << fmt_g(r.lower) << " (" << witness_str(r.witness_lower)
        << "), upper = " << fmt_g(r.upper) << " (" << witness_str(r.witness_upper) << ")\n";
}

inline void print_shifted_gersh(std::ostream& out, const SymmetricMatrix& a) {
    const ShiftedBound lo = shifted_gersh_lower(a);
    const ShiftedBound hi = shifted_gersh_upper(a);
    out << "shifted-gershgorin: lower = " << fmt_g(lo.value) << " at x* = " << fmt_g(lo.x_star)
        << ", upper = " << fmt_g(hi.value) << " at x* = " << fmt_g(hi.x_star) << "\n";
    const PositiveWindow w = pd_window(a);
    if (w.empty)
        out << "pd-window: empty\n";
    else
        out << "pd-window: (" << fmt_g(w.lo) << ", " << fmt_g(w.hi) << ")\n";
    if (lo.value > 0.0)
        out << "certificate: positive definite\n";
    else if (lo.value == 0.0)
        out << "certificate: positive semidefinite\n";
}

inline void print_shifted_brauer(std::ostream& out, const SymmetricMatrix& a) {
    const BrauerShiftResult lo = shifted_brauer_lower(a);
    const BrauerShiftResult hi = shifted_brauer_upper(a);
    out << "shifted-brauer: lower = " << fmt_g(lo.value) << " at x* = " << fmt_g(lo.x_star)
        << " (pair (" << lo.pair.first << "," << lo.pair.second << ")), upper = "
        << fmt_g(hi.value) << " at x* = " << fmt_g(hi.x_star) << "\n";
}

inline void print_tilde(std::ostream& out, const SymmetricMatrix& a) {
    const BrauerShiftResult t = tilde_shifted_lower(a);
    out << "tilde: lower = " << fmt_g(t.value) << " at x* = " << fmt_g(t.x_star) << " (pair ("
        << t.pair.first << "," << t.pair.second << "), exact)\n";
}

inline int run_bounds(std::ostream& out, const std::string& file, const std::string& method) {
    const SymmetricMatrix a = parse_matrix(read_input(file));
    const bool all = method == "all";
    if (all || method == "gershgorin") print_report(out, gershgorin_bounds(a));
    if (all || method == "brauer") print_report(out, brauer_bounds(a));
    if (all || method == "melman") print_report(out, melman_bounds(a));
    if (all || method == "ckv") print_report(out, ckv_bounds(a));
    if (all || method == "shifted-gershgorin") print_shifted_gersh(out, a);
    if (all || method == "shifted-brauer") {
        if (a.size() >= 2)
            print_shifted_brauer(out, a);
        else if (!all)
            throw ParseError("shifted-brauer needs a matrix of dimension >= 2");
    }
    if (all || method == "tilde") {
        bool equal_diag = true;
        for (int i = 1; i < a.size(); ++i)
            if (std::abs(a(i, i) - a(0, 0)) > 1e-12) equal_diag = false;
        if (a.size() >= 2 && equal_diag)
            print_tilde(out, a);
        else if (!all)
            throw ParseError("tilde bound needs equal diagonal entries and n >= 2");
        else
            out << "tilde: not applicable (unequal diagonal entries)\n";
    }
    return 0;
}

inline int run_profile(std::ostream& out, const std::string& file, const std::string& method,
                       const std::vector<int>& pair, double x_min, double x_max, int steps,
                       const std::string& out_path) {
    if (steps < 1) throw ParseError("--steps must be positive");
    const SymmetricMatrix a = parse_matrix(read_input(file));
    std::vector<double> xs(steps);
    for (int k = 0; k < steps; ++k)
        xs[k] = steps == 1 ? x_min : x_min + (x_max - x_min) * k / (steps - 1);

    std::ostringstream csv;
    csv << "x,value\n";
    if (method == "shifted-gershgorin") {
        for (const auto& [x, v] : profile_lower(a, xs)) csv << fmt_g(x) << ',' << fmt_g(v) << "\n";
    } else if (method == "shifted-brauer") {
        if (!pair.empty()) {
            for (double x : xs)
                csv << fmt_g(x) << ',' << fmt_g(f_pair(a, pair[0], pair[1], x)) << "\n";
        } else {
            for (double x : xs) {
                std::pair<int, int> dummy;
                csv << fmt_g(x) << ',' << fmt_g(shiftbound::detail::brauer_objective(a, x, &dummy))
                    << "\n";
            }
        }
    } else if (method == "tilde") {
        const LinearEnvelope env = tilde_lines(a);
        for (double x : xs) csv << fmt_g(x) << ',' << fmt_g(env.value_at(x)) << "\n";
    } else {
        throw ParseError("--method must be shifted-gershgorin, shifted-brauer or tilde for profile");
    }

    if (out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open output file '" + out_path + "'");
        f << csv.str();
        out << "profile written to " << out_path << "\n";
    }
    return 0;
}

inline int run_graph(std::ostream& out, const std::string& file, const std::string& method,
                     bool unit_diagonal) {
    const UndirectedGraph g = parse_graph(read_input(file));
    const double offset = unit_diagonal ? 1.0 : 0.0;  // unit diagonal shifts the spectrum by +1
    const bool all = method == "all";

    if (all || method == "gershgorin") {
        const GraphBound b = gersh_graph_lower(g);
        out << "gershgorin: " << fmt_g(b.value + offset) << " (case " << to_string(b.tag) << ")\n";
    }
    if (all || method == "tilde") {
        const GraphBound b = pair_gersh_graph_lower(g);
        out << "pair-gershgorin: " << fmt_g(b.value + offset) << " (case " << to_string(b.tag)
            << ")\n";
    }
    if (all || method == "brauer") {
        const BrauerGraphBound b = brauer_graph_lower(g);
        out << "brauer: " << fmt_g(b.value + offset) << " at x = " << fmt_g(b.x) << "\n";
    }
    if (all) {
        const double l1 = eigen_oracle(adjacency(g)).min();
        out << "oracle lambda1: " << fmt_g(l1 + offset) << "\n";
    }
    if (method == "shifted-gershgorin") {
        const ShiftedBound b = shifted_gersh_lower(adjacency(g));
        out << "shifted-gershgorin: " << fmt_g(b.value + offset) << " at x* = " << fmt_g(b.x_star)
            << "\n";
    }
    if (method == "shifted-brauer") {
        const BrauerShiftResult b = shifted_brauer_lower(adjacency(g));
        out << "shifted-brauer: " << fmt_g(b.value + offset) << " at x* = " << fmt_g(b.x_star)
            << "\n";
    }
    if (method == "melman" || method == "ckv")
        throw ParseError("method '" + method + "' is not available for graphs");
    return 0;
}

inline int run_region(std::ostream& out, const std::string& file, const std::vector<int>& free_ij,
                      const std::string& grid_spec, const std::string& out_path) {
    const SymmetricMatrix a = parse_matrix(read_input(file));
    const int fi = free_ij.empty() ? 0 : free_ij[0];
    const int fj = free_ij.empty() ? 1 : free_ij[1];

    double y0 = 0, y1 = 8, z0 = 0, z1 = 8;
    int ny = 100, nz = 100;
    if (!grid_spec.empty()) {
        // "y0:y1:ny,z0:z1:nz"
        const auto comma = grid_spec.find(',');
        if (comma == std::string::npos) throw ParseError("--grid must be 'y0:y1:ny,z0:z1:nz'");
        auto parse_range = [](const std::string& s, double& lo, double& hi, int& steps) {
            const auto c1 = s.find(':');
            const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw ParseError("--grid must be 'y0:y1:ny,z0:z1:nz'");
            try {
                lo = std::stod(s.substr(0, c1));
                hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
                steps = std::stoi(s.substr(c2 + 1));
            } catch (const std::exception&) {
                throw ParseError("malformed --grid range '" + s + "'");
            }
        };
        parse_range(grid_spec.substr(0, comma), y0, y1, ny);
        parse_range(grid_spec.substr(comma + 1), z0, z1, nz);
    }

    std::ostringstream csv;
    if (a.size() == 3 && ((fi == 0 && fj == 1) || (fi == 1 && fj == 0))) {
        const HalfPlaneRegion region =
            region_halfplanes_3x3(a(0, 1), a(0, 2), a(1, 2), a(2, 2));
        for (const HalfPlane& h : region.inequalities)
            csv << "# halfplane: " << fmt_g(h.cy) << "*y + " << fmt_g(h.cz)
                << "*z >= " << fmt_g(h.rhs) << "\n";
    }
    write_region_csv(csv, region_raster(a, fi, fj, y0, y1, ny, z0, z1, nz));

    if (out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open output file '" + out_path + "'");
        f << csv.str();
        out << "region raster written to " << out_path << "\n";
    }
    return 0;
}

inline int run_spread(std::ostream& out, const std::string& file) {
    const std::string text = read_input(file);
    std::vector<double> y;
    for (const auto& line : shiftbound::detail::tokenize_lines(text))
        for (const auto& tok : line) y.push_back(shiftbound::detail::parse_double_token(tok));
    if (y.empty()) throw ParseError("spread input must contain at least one value");
    double rho = 0.0;
    for (double v : y) rho += v;
    const int n = static_cast<int>(y.size()) + 1;
    const auto [worst, best] = spread_extremes(n, rho);
    out << "spread_sup = " << fmt_g(spread_sup(y)) << "\n";
    out << "N = " << n << ", rho = " << fmt_g(rho) << "\n";
    out << "worst = " << fmt_g(worst) << ", best = " << fmt_g(best) << "\n";
    return 0;
}

inline int run_bench(std::ostream& out, int n, int samples, std::uint64_t seed,
                     const std::string& out_path) {
    const ComparisonResult r = compare_experiment(n, samples, seed);
    if (out_path.empty()) {
        write_comparison_csv(out, r);
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open output file '" + out_path + "'");
        write_comparison_csv(f, r);
        out << "comparison written to " << out_path << "\n";
    }
    write_summary(out, r.summary);
    return 0;
}

inline int run_er(std::ostream& out, int n, double p, int samples, std::uint64_t seed,
                  const std::string& out_path) {
    const std::vector<ErRecord> recs = er_experiment(n, p, samples, seed);
    std::ostringstream csv;
    csv << "# generator: xoshiro256** with splitmix64 per-sample substreams"
        << "; seed=" << seed << "; n=" << n << "; p=" << fmt_g(p) << "; samples=" << samples
        << "\n";
    csv << "sample,lambda1,bound,gap\n";
    double min_gap = std::numeric_limits<double>::infinity();
    for (const ErRecord& r : recs) {
        csv << r.sample << ',' << fmt_g(r.lambda1) << ',' << fmt_g(r.bound) << ','
            << fmt_g(r.gap) << "\n";
        min_gap = std::min(min_gap, r.gap);
    }
    if (out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open output file '" + out_path + "'");
        f << csv.str();
        out << "experiment written to " << out_path << "\n";
    }
    out << "min_gap = " << fmt_g(min_gap) << "\n";
    return 0;
}

}  // namespace detail

/// Dispatches a command line.  Exit codes: 0 success, 2 input/usage error,
/// 1 internal error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical and shift-improved eigenvalue bounds for symmetric matrices"};
    app.require_subcommand(1);

    static const std::vector<std::string> kMethods = {
        "gershgorin", "brauer",         "melman", "ckv",
        "shifted-gershgorin", "shifted-brauer", "tilde",  "all"};

    std::string file = "-", method = "all", out_path, grid_spec;
    std::vector<int> pair, free_ij;
    double x_min = 0.0, x_max = 10.0, p = 0.9;
    int steps = 101, n = 5, samples = 1000;
    std::uint64_t seed = 1;
    bool unit_diagonal = false;

    auto* bounds = app.add_subcommand("bounds", "Eigenvalue bounds for a matrix file");
    bounds->add_option("--file", file, "matrix file ('-' for stdin)")->required();
    bounds->add_option("--method", method)->check(CLI::IsMember(kMethods));

    auto* profile = app.add_subcommand("profile", "Bound-vs-shift curve as CSV");
    profile->add_option("--file", file)->required();
    profile->add_option("--method", method)->check(CLI::IsMember(kMethods));
    profile->add_option("--pair", pair, "row pair for the shifted-brauer curve")->expected(2);
    profile->add_option("--x-min", x_min);
    profile->add_option("--x-max", x_max);
    profile->add_option("--steps", steps);
    profile->add_option("--out", out_path);

    auto* graph = app.add_subcommand("graph", "Adjacency-spectrum bounds for a graph file");
    graph->add_option("--file", file)->required();
    graph->add_option("--method", method)->check(CLI::IsMember(kMethods));
    graph->add_flag("--unit-diagonal", unit_diagonal,
                    "report bounds for the unit-diagonal adjacency convention");

    auto* region = app.add_subcommand("region", "Positive-definiteness region raster");
    region->add_option("--file", file)->required();
    region->add_option("--free", free_ij, "free diagonal indices")->expected(2);
    region->add_option("--grid", grid_spec, "'y0:y1:ny,z0:z1:nz'");
    region->add_option("--out", out_path);

    auto* spread = app.add_subcommand("spread", "Shifted dominance of an off-diagonal row");
    spread->add_option("--file", file)->required();

    auto* bench = app.add_subcommand("bench", "Random-matrix bound comparison");
    bench->add_option("--n", n);
    bench->add_option("--samples", samples);
    bench->add_option("--seed", seed);
    bench->add_option("--out", out_path);

    auto* er = app.add_subcommand("er", "Erdos-Renyi adjacency bound experiment");
    er->add_option("--n", n);
    er->add_option("--p", p);
    er->add_option("--samples", samples);
    er->add_option("--seed", seed);
    er->add_option("--out", out_path);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (bounds->parsed()) return detail::run_bounds(out, file, method);
        if (profile->parsed()) {
            const std::string m = method == "all" ? "shifted-gershgorin" : method;
            return detail::run_profile(out, file, m, pair, x_min, x_max, steps, out_path);
        }
        if (graph->parsed()) return detail::run_graph(out, file, method, unit_diagonal);
        if (region->parsed()) return detail::run_region(out, file, free_ij, grid_spec, out_path);
        if (spread->parsed()) return detail::run_spread(out, file);
        if (bench->parsed()) return detail::run_bench(out, n, samples, seed, out_path);
        if (er->parsed()) return detail::run_er(out, n, p, samples, seed, out_path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace shiftbound::cli
