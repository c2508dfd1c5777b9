#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

// Incremental (2,3)-sparsity oracle. Every vertex starts with two pebbles;
// an edge is accepted iff four pebbles can be gathered on its endpoints, and
// accepting orients the edge away from the endpoint that pays a pebble.
// Invariants maintained after every move:
//   pebbles(v) + out_degree(v) == 2 for every v,
//   total pebbles + |accepted| == 2n.
// The accepted edges always form a maximum (2,3)-sparse subgraph of the
// edges attempted so far, which is exactly a maximum independent set of the
// two-dimensional generic rigidity matroid.
class PebbleGame {
public:
    explicit PebbleGame(int n) : n_(n), pebbles_(n, 2), out_(n) {}

    int n() const { return n_; }
    int pebbles(int v) const { return pebbles_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    const std::vector<Edge>& accepted() const { return accepted_; }
    int accepted_count() const { return static_cast<int>(accepted_.size()); }

    int total_pebbles() const { return std::accumulate(pebbles_.begin(), pebbles_.end(), 0); }

    bool invariants_ok() const {
        for (int v = 0; v < n_; ++v)
            if (pebbles_[v] + out_degree(v) != 2) return false;
        if (total_pebbles() + accepted_count() != 2 * n_) return false;
        if (n_ >= 2 && total_pebbles() < 3) return false;
        return true;
    }

    // Attempts to insert {u,v}. Returns true and records the edge when it is
    // independent; otherwise leaves the accepted set unchanged (pebble
    // relocations performed during the failed search are kept, which is
    // harmless: they do not change what is accepted later).
    bool attempt_insert(int u, int v) {
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("vertex range in pebble insert");
        while (pebbles_[u] + pebbles_[v] < 4) {
            bool moved = false;
            if (pebbles_[u] < 2) moved = gather_one(u, v);
            if (!moved && pebbles_[v] < 2) moved = gather_one(v, u);
            if (!moved) return false;
        }
        insert_sorted(out_[u], v);
        --pebbles_[u];
        accepted_.push_back(make_edge(u, v));
        return true;
    }

    bool attempt_insert(Edge e) { return attempt_insert(e.first, e.second); }

private:
    static void insert_sorted(std::vector<int>& v, int x) {
        v.insert(std::upper_bound(v.begin(), v.end(), x), x);
    }

    static void erase_sorted(std::vector<int>& v, int x) {
        v.erase(std::lower_bound(v.begin(), v.end(), x));
    }

    // Depth-first search along the orientation for a free pebble, with both
    // endpoints blocked; neighbors are explored in ascending order. On
    // success the path is reversed and one pebble moves to `target`.
    bool gather_one(int target, int blocked) {
        std::vector<int> parent(n_, -1);
        std::vector<char> seen(n_, 0);
        seen[target] = seen[blocked] = 1;
        std::vector<int> stack{target};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v != target && pebbles_[v] > 0) {
                --pebbles_[v];
                ++pebbles_[target];
                for (int w = v; w != target;) {
                    int p = parent[w];
                    erase_sorted(out_[p], w);
                    insert_sorted(out_[w], p);
                    w = p;
                }
                return true;
            }
            // push in descending order so the stack pops ascending neighbors first
            const auto& nb = out_[v];
            for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
                if (!seen[*it]) {
                    seen[*it] = 1;
                    parent[*it] = v;
                    stack.push_back(*it);
                }
            }
        }
        return false;
    }

    int n_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
    std::vector<Edge> accepted_;
};

} // namespace rigi
