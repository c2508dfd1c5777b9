#pragma once

#include <string>
#include <string_view>
#include <stdexcept>

#include "rigi/graph.hpp"

namespace rigi {

// graph6 interchange format: printable bytes in [63,126], the order followed
// by the upper-triangular adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed six per byte, most significant bit first. Orders above 62 use the
// extended four-byte header '~' c1 c2 c3 (18-bit big-endian order).

namespace detail {

inline int g6_byte(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw std::runtime_error("graph6 format: byte out of range");
    return b - 63;
}

} // namespace detail

inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw std::runtime_error("graph6 format: empty line");

    std::size_t pos = 0;
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw std::runtime_error("graph6 format: 8-byte order form not supported");
        if (line.size() < 4) throw std::runtime_error("graph6 format: truncated order");
        n = (static_cast<long long>(detail::g6_byte(line[1])) << 12) |
            (detail::g6_byte(line[2]) << 6) | detail::g6_byte(line[3]);
        pos = 4;
    } else {
        n = detail::g6_byte(line[0]);
        pos = 1;
    }

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != pos + nbytes) throw std::runtime_error("graph6 format: bad length");

    std::vector<Edge> edges;
    long long bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) cur = detail::g6_byte(line[pos + static_cast<std::size_t>(bit / 6)]);
            if (cur & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    return from_edge_list(static_cast<int>(n), edges);
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.n;
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::runtime_error("graph6 format: order above 258047 not supported");
    }

    const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    int cur = 0;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
            }
        }
    }
    if (nbits % 6 != 0) out.push_back(static_cast<char>((cur << (6 - nbits % 6)) + 63));
    return out;
}

} // namespace rigi
