#pragma once

#include <optional>
#include <set>

#include "rigi/connectivity.hpp"
#include "rigi/pebble.hpp"

namespace rigi {

// Rank of the generic two-dimensional rigidity matroid: the size of a maximum
// edge subset that is (2,3)-sparse. Edges are attempted in lexicographic
// order; the value is order-invariant.
inline int rigidity_rank(const Graph& g) {
    PebbleGame game(g.n);
    for (const auto& e : g.edges) game.attempt_insert(e);
    return game.accepted_count();
}

// A graph is rigid iff it contains a spanning minimally rigid subgraph,
// i.e. its rank reaches 2n-3. Graphs on at most one vertex count as rigid.
inline bool is_rigid(const Graph& g) {
    if (g.n <= 1) return true;
    return rigidity_rank(g) == 2 * g.n - 3;
}

// The accepted edge set of a full pebble run: a spanning minimally rigid
// subgraph when g is rigid and n >= 2, absent otherwise.
inline std::optional<std::vector<Edge>> spanning_minimally_rigid_subgraph(const Graph& g) {
    if (g.n < 2) return std::nullopt;
    PebbleGame game(g.n);
    for (const auto& e : g.edges) game.attempt_insert(e);
    if (game.accepted_count() != 2 * g.n - 3) return std::nullopt;
    auto laman = game.accepted();
    std::sort(laman.begin(), laman.end());
    return laman;
}

struct RedundantRigidity {
    bool redundant = false;
    std::optional<Edge> witness;  // lexicographically least edge whose removal breaks rigidity
};

// G is redundantly rigid iff G is rigid and stays rigid after deleting any
// single edge. Checked by the plain per-edge loop.
inline RedundantRigidity is_redundantly_rigid(const Graph& g) {
    if (g.n <= 1) return {true, std::nullopt};
    if (!is_rigid(g)) {
        if (g.m() == 0) return {false, std::nullopt};
        return {false, g.edges.front()};  // nothing to delete helps: every edge fails
    }
    for (const auto& e : g.edges)
        if (!is_rigid(delete_edge(g, e))) return {false, e};
    return {true, std::nullopt};
}

enum class GlobalRigidityReason {
    small_complete,
    three_connected_and_redundant,
    fails_connectivity,
    fails_redundancy,
};

inline const char* to_string(GlobalRigidityReason r) {
    switch (r) {
        case GlobalRigidityReason::small_complete: return "small-complete";
        case GlobalRigidityReason::three_connected_and_redundant:
            return "three-connected-and-redundant";
        case GlobalRigidityReason::fails_connectivity: return "fails-connectivity";
        case GlobalRigidityReason::fails_redundancy: return "fails-redundancy";
    }
    return "?";
}

struct GlobalRigidityReport {
    bool globally_rigid = false;
    GlobalRigidityReason reason = GlobalRigidityReason::fails_connectivity;
    std::optional<VertexSet> cut_witness;  // present for fails_connectivity
    std::optional<Edge> edge_witness;      // present for fails_redundancy
};

// Decision rule for global rigidity: a complete graph on at most three
// vertices, or 3-connected and redundantly rigid.
inline GlobalRigidityReport is_globally_rigid(const Graph& g) {
    if (g.n <= 3 && g.is_complete())
        return {true, GlobalRigidityReason::small_complete, std::nullopt, std::nullopt};
    if (!is_k_connected(g, 3)) {
        auto kappa = vertex_connectivity(g);
        return {false, GlobalRigidityReason::fails_connectivity, kappa.witness, std::nullopt};
    }
    auto rr = is_redundantly_rigid(g);
    if (!rr.redundant)
        return {false, GlobalRigidityReason::fails_redundancy, std::nullopt, rr.witness};
    return {true, GlobalRigidityReason::three_connected_and_redundant, std::nullopt, std::nullopt};
}

struct RigidityReport {
    int rank = 0;
    bool rigid = false;
    bool minimally_rigid = false;
    bool sparse = false;  // every edge independent: rank == m
    std::optional<std::vector<Edge>> spanning_laman;
};

inline RigidityReport rigidity_report(const Graph& g) {
    RigidityReport r;
    r.rank = rigidity_rank(g);
    r.rigid = g.n <= 1 || r.rank == 2 * g.n - 3;
    r.minimally_rigid = r.rigid && g.m() == (g.n <= 1 ? 0 : 2 * g.n - 3);
    r.sparse = r.rank == g.m();
    if (r.rigid && g.n >= 2) r.spanning_laman = spanning_minimally_rigid_subgraph(g);
    return r;
}

// Result of growing a spanning minimally rigid subgraph from a given base:
// either the 2n-3 edges or the first vertex that could not be attached.
struct LamanAssembly {
    std::optional<std::vector<Edge>> edges;
    std::optional<int> stuck_vertex;

    bool ok() const { return edges.has_value(); }
};

// Grows base (a minimally rigid edge set on its support) to a spanning
// minimally rigid subgraph of g by attaching each remaining vertex with
// exactly two edges into the current support, never using `forbidden`.
// Vertices are attached in ascending order among those currently attachable,
// choosing the two lexicographically least usable edges.
inline LamanAssembly assemble_spanning_laman(const Graph& g, const std::vector<Edge>& base,
                                             std::optional<Edge> forbidden = std::nullopt) {
    if (forbidden) forbidden = make_edge(forbidden->first, forbidden->second);

    std::vector<char> in_support(g.n, 0);
    PebbleGame replay(g.n);
    int support_size = 0;
    for (auto e : base) {
        e = make_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("base edge not in graph");
        if (forbidden && e == *forbidden)
            throw std::invalid_argument("base contains the forbidden edge");
        for (int v : {e.first, e.second})
            if (!in_support[v]) {
                in_support[v] = 1;
                ++support_size;
            }
        if (!replay.attempt_insert(e)) throw std::invalid_argument("base is not sparse");
    }
    if (replay.accepted_count() != 2 * support_size - 3)
        throw std::invalid_argument("base is not minimally rigid on its support");

    std::vector<Edge> result = base;
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    if (static_cast<int>(result.size()) != replay.accepted_count())
        throw std::invalid_argument("base contains duplicate edges");

    int remaining = g.n - support_size;
    while (remaining > 0) {
        int attached = -1;
        for (int v = 0; v < g.n && attached < 0; ++v) {
            if (in_support[v]) continue;
            std::vector<int> usable;
            for (int w : g.adj[v]) {
                if (!in_support[w]) continue;
                if (forbidden && make_edge(v, w) == *forbidden) continue;
                usable.push_back(w);
                if (usable.size() == 2) break;  // adj is ascending: these are the least
            }
            if (usable.size() < 2) continue;
            for (int w : usable) {
                Edge e = make_edge(v, w);
                result.push_back(e);
                if (!replay.attempt_insert(e))
                    throw std::logic_error("laman assembly produced a dependent edge");
            }
            in_support[v] = 1;
            attached = v;
        }
        if (attached < 0) {
            for (int v = 0; v < g.n; ++v)
                if (!in_support[v]) return {std::nullopt, v};
        }
        --remaining;
    }

    if (replay.accepted_count() != 2 * g.n - 3)
        throw std::logic_error("laman assembly lost the edge count");
    std::sort(result.begin(), result.end());
    return {result, std::nullopt};
}

} // namespace rigi
