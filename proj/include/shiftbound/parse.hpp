#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shiftbound/graph.hpp"
#include "shiftbound/symmetric_matrix.hpp"

namespace shiftbound {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Splits input into lines, dropping blank lines and '#' comment lines,
// then tokenizes each remaining line on whitespace.
inline std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        lines.push_back(std::move(toks));
    }
    return lines;
}

inline double parse_double_token(const std::string& tok) {
    const char* b = tok.data();
    const char* e = b + tok.size();
    double v = 0.0;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw ParseError("malformed token '" + tok + "'");
    return v;
}

inline int parse_int_token(const std::string& tok) {
    const char* b = tok.data();
    const char* e = b + tok.size();
    int v = 0;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw ParseError("malformed token '" + tok + "'");
    return v;
}

}  // namespace detail

/// Matrix file: line 1 = n, then n lines of n whitespace-separated decimals.
/// '#' starts a comment line.  Symmetry of parsed literals is checked with
/// exact equality.
inline SymmetricMatrix parse_matrix(std::string_view text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty matrix input");
    if (lines[0].size() != 1) throw ParseError("first line must contain the dimension only");
    const int n = detail::parse_int_token(lines[0][0]);
    if (n < 1) throw ParseError("dimension must be at least 1");
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("dimension mismatch: expected " + std::to_string(n) + " matrix rows");

    std::vector<double> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(lines[i].size()) != n)
            throw ParseError("dimension mismatch on row " + std::to_string(i - 1));
        for (const auto& tok : lines[i]) a.push_back(detail::parse_double_token(tok));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[static_cast<std::size_t>(i) * n + j] != a[static_cast<std::size_t>(j) * n + i])
                throw ParseError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    try {
        return SymmetricMatrix(n, std::move(a));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// Graph file: line 1 = vertex count, then one "u v" edge per line with
/// 0 <= u < v < n.  Duplicates and self-loops are rejected.
inline UndirectedGraph parse_graph(std::string_view text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty graph input");
    if (lines[0].size() != 1) throw ParseError("first line must contain the vertex count only");
    const int n = detail::parse_int_token(lines[0][0]);
    if (n < 1) throw ParseError("vertex count must be at least 1");

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != 2) throw ParseError("edge line must contain exactly two endpoints");
        const int u = detail::parse_int_token(lines[i][0]);
        const int v = detail::parse_int_token(lines[i][1]);
        if (u == v) throw ParseError("self-loop in graph input");
        if (!(0 <= u && u < v && v < n))
            throw ParseError("edge endpoints must satisfy 0 <= u < v < n");
        edges.emplace_back(u, v);
    }
    try {
        return UndirectedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace shiftbound
