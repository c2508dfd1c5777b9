#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigi {

// Unordered vertex pair, normalized so that first < second.
using Edge = std::pair<int, int>;

// Subset of the vertex range of some graph, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

inline Edge make_edge(int u, int v) {
    if (u == v)
        throw std::invalid_argument("loop edge " + std::to_string(u) + "-" + std::to_string(v));
    return u < v ? Edge{u, v} : Edge{v, u};
}

inline VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Simple undirected graph on vertices 0..n-1. Values are immutable after
// construction: every operation returns a fresh Graph, so shared instances
// are safe to read from any number of threads.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;            // sorted, unique, u < v
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n) return false;
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool is_complete() const { return 2 * m() == n * (n - 1); }

    int min_degree() const {
        int d = n > 0 ? degree(0) : 0;
        for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// Builds a graph from raw pairs. Duplicate pairs collapse to a single edge
// (multigraph inputs are normalized at ingestion); loops are rejected.
inline Graph from_edge_list(int n, const std::vector<Edge>& pairs) {
    if (n < 0) throw std::invalid_argument("vertex range: negative order");
    Graph g;
    g.n = n;
    g.edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("vertex range: edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        g.edges.push_back(make_edge(u, v));  // throws on loop
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.adj.assign(n, {});
    for (const auto& [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

// Number of edges with both endpoints inside x.
inline int induced_edge_count(const Graph& g, const VertexSet& x) {
    std::vector<char> in(g.n, 0);
    for (int v : x) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex range: " + std::to_string(v));
        in[v] = 1;
    }
    int count = 0;
    for (const auto& [u, v] : g.edges)
        if (in[u] && in[v]) ++count;
    return count;
}

inline Graph delete_edge(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("no such edge " + std::to_string(e.first) + "-" +
                                    std::to_string(e.second));
    std::vector<Edge> rest;
    rest.reserve(g.edges.size() - 1);
    for (const auto& f : g.edges)
        if (f != e) rest.push_back(f);
    return from_edge_list(g.n, rest);
}

inline Graph add_edge(const Graph& g, Edge e) {
    std::vector<Edge> all = g.edges;
    all.push_back(e);
    return from_edge_list(g.n, all);
}

// Result of deleting a vertex set: remaining vertices are relabeled
// 0..n-|x|-1 by ascending original index; kept[new] = original label.
struct VertexDeletion {
    Graph graph;
    std::vector<int> kept;
};

inline VertexDeletion delete_vertices(const Graph& g, const VertexSet& x) {
    std::vector<char> gone(g.n, 0);
    for (int v : x) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex range: " + std::to_string(v));
        gone[v] = 1;
    }
    VertexDeletion out;
    std::vector<int> new_of_old(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) {
            new_of_old[v] = static_cast<int>(out.kept.size());
            out.kept.push_back(v);
        }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges)
        if (!gone[u] && !gone[v]) edges.emplace_back(new_of_old[u], new_of_old[v]);
    out.graph = from_edge_list(static_cast<int>(out.kept.size()), edges);
    return out;
}

// Connected components; a part is nontrivial iff it contains at least one edge.
struct ComponentDecomposition {
    std::vector<std::vector<int>> parts;  // each sorted; ordered by smallest member
    std::vector<bool> nontrivial;

    int count() const { return static_cast<int>(parts.size()); }
    int nontrivial_count() const {
        int k = 0;
        for (bool b : nontrivial) k += b ? 1 : 0;
        return k;
    }
};

inline ComponentDecomposition components(const Graph& g) {
    ComponentDecomposition out;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> part;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            part.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(part.begin(), part.end());
        bool has_edge = false;
        for (int v : part)
            if (g.degree(v) > 0) {
                has_edge = true;
                break;
            }
        out.parts.push_back(std::move(part));
        out.nontrivial.push_back(has_edge);
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).count() <= 1; }

} // namespace rigi
