#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "tdp/graph.hpp"

namespace tdp {

// graph6: McKay's printable encoding of an undirected graph. One graph per
// line, bytes in 63..126. The bit vector lists the upper triangle column by
// column: (0,1), (0,2), (1,2), (0,3), ...

inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 258047) throw parameter_error("graph6 encoder supports order <= 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int bit = 5;
    int acc = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (g.has_edge(row, col)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(char(acc + 63));
                acc = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(char(acc + 63));
    return out;
}

inline Graph graph6_decode(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (line.substr(0, header.size()) == header) pos = header.size();

    auto sixbits = [&](const char* what) -> int {
        if (pos >= line.size()) throw parse_error(std::string("graph6: truncated ") + what, pos);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw parse_error(std::string("graph6: byte out of range in ") + what, pos);
        ++pos;
        return c - 63;
    };

    long n;
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
        ++pos;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126)
            throw parse_error("graph6: orders beyond 258047 not supported", pos);
        long a = sixbits("order"), b = sixbits("order"), c = sixbits("order");
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits("order");
    }

    Graph g{int(n)};
    int bit = -1;
    int acc = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (bit < 0) {
                acc = sixbits("adjacency");
                bit = 5;
            }
            if ((acc >> bit) & 1) g.add_edge(row, col);
            --bit;
        }
    if (pos != line.size()) throw parse_error("graph6: trailing bytes after adjacency", pos);
    return g;
}

// Plain edge-list text format: first line "n", then one "u v" line per edge,
// 0-based indices. Blank lines are ignored.

inline std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline Graph edge_list_decode(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_order = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        if (!have_order) {
            int n;
            if (!(fields >> n) || n < 0)
                throw parse_error("edge list: bad order line", lineno);
            g = Graph(n);
            have_order = true;
        } else {
            int u, v;
            if (!(fields >> u >> v)) throw parse_error("edge list: bad edge line", lineno);
            g.add_edge(u, v);
        }
    }
    if (!have_order) throw parse_error("edge list: missing order line", 0);
    return g;
}

} // namespace tdp
