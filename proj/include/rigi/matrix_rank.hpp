#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rigi/graph.hpp"
#include "rigi/prng.hpp"
#include "rigi/rigidity.hpp"

namespace rigi {

namespace detail {

// Arithmetic over F_p for the Mersenne prime p = 2^61 - 1.
inline constexpr std::uint64_t kRankPrime = (1ULL << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kRankPrime);
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kRankPrime - b;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a) { return powmod(a, kRankPrime - 2); }

inline int matrix_rank_modp(std::vector<std::vector<std::uint64_t>>& rows, int cols) {
    int rank = 0;
    const int m = static_cast<int>(rows.size());
    for (int c = 0; c < cols && rank < m; ++c) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint64_t inv = invmod(rows[rank][c]);
        for (int r = rank + 1; r < m; ++r) {
            if (rows[r][c] == 0) continue;
            const std::uint64_t f = mulmod(rows[r][c], inv);
            for (int k = c; k < cols; ++k)
                rows[r][k] = submod(rows[r][k], mulmod(f, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

// Rank of the rigidity matrix at pseudo-random positions over F_p: one row
// per edge {u,v} with entries (p(u)-p(v)) in u's columns and the negation in
// v's. Equals the generic rank except with probability O(m/p).
inline int rigidity_matrix_rank_modp(const Graph& g, std::uint64_t seed) {
    SplitMix64 rng = SplitMix64(seed).split(0x72616e6bULL);
    std::vector<std::uint64_t> x(g.n), y(g.n);
    for (int v = 0; v < g.n; ++v) {
        x[v] = rng.next_below(kRankPrime);
        y[v] = rng.next_below(kRankPrime);
    }
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) {
        std::vector<std::uint64_t> row(2 * g.n, 0);
        const std::uint64_t dx = submod(x[u], x[v]);
        const std::uint64_t dy = submod(y[u], y[v]);
        row[2 * u] = dx;
        row[2 * u + 1] = dy;
        row[2 * v] = submod(0, dx);
        row[2 * v + 1] = submod(0, dy);
        rows.push_back(std::move(row));
    }
    return matrix_rank_modp(rows, 2 * g.n);
}

} // namespace detail

// Numeric cross-check of the combinatorial rank. Computes the rigidity
// matrix rank at random positions over a fixed 61-bit prime field; on a
// mismatch with the pebble rank it retries with fresh seeds before giving up,
// since a persistent disagreement signals a bug rather than bad luck.
inline int rigidity_matrix_rank_probabilistic(const Graph& g, std::uint64_t seed) {
    const int combinatorial = rigidity_rank(g);
    for (int attempt = 0; attempt < 3; ++attempt) {
        const int numeric = detail::rigidity_matrix_rank_modp(g, SplitMix64(seed).split(attempt).next());
        if (numeric == combinatorial) return numeric;
    }
    throw std::runtime_error("rank disagreement: numeric rank differs from pebble rank");
}

} // namespace rigi
