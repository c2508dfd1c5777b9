#pragma once

#include <sstream>
#include <string>

#include "rigi/graph.hpp"

namespace rigi {

// Human-editable text format: '#' starts a comment, the first data line is
// "n m", followed by m lines "u v".

inline Graph parse_edge_list(std::istream& in) {
    auto next_token_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) return true;
        }
        return false;
    };

    std::string line;
    if (!next_token_line(line)) throw std::runtime_error("edge-list format: missing header");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge-list format: bad header \"" + line + "\"");

    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_token_line(line))
            throw std::runtime_error("edge-list format: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) throw std::runtime_error("edge-list format: bad edge line \"" + line + "\"");
        pairs.emplace_back(u, v);
    }
    try {
        return from_edge_list(static_cast<int>(n), pairs);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge-list format: ") + e.what());
    }
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace rigi
