#pragma once

#include <optional>
#include <tuple>

#include "rigi/graph.hpp"

namespace rigi {

namespace detail {

// Max-flow on a digraph with paired residual arcs. Augmenting paths are found
// by BFS scanning arcs in insertion order, so flows and cuts are deterministic
// for a fixed construction order.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : out_(nodes) {}

    void add_arc(int from, int to, int cap) {
        out_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        out_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    // Augments unit paths until the flow reaches `cutoff` or no augmenting
    // path remains. Returns the flow found (== cutoff means "at least cutoff").
    int max_flow(int s, int t, int cutoff) {
        s_ = s;
        t_ = t;
        int flow = 0;
        while (flow < cutoff && augment()) ++flow;
        return flow;
    }

    // Residual reachability from the source after max_flow.
    std::vector<char> source_side() const {
        std::vector<char> seen(out_.size(), 0);
        std::vector<int> stack{s_};
        seen[s_] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : out_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int cap;
    };

    bool augment() {
        std::vector<int> parent_arc(out_.size(), -1);
        std::vector<char> seen(out_.size(), 0);
        std::vector<int> queue{s_};
        seen[s_] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (v == t_) break;
            for (int id : out_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    parent_arc[a.to] = id;
                    queue.push_back(a.to);
                }
            }
        }
        if (!seen[t_]) return false;
        for (int v = t_; v != s_;) {
            int id = parent_arc[v];
            arcs_[id].cap -= 1;
            arcs_[id ^ 1].cap += 1;
            v = arcs_[id ^ 1].to;
        }
        return true;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    int s_ = 0;
    int t_ = 0;
};

// Minimum s-t vertex cut for non-adjacent s, t via vertex splitting: node 2v
// is the in-copy and 2v+1 the out-copy of v; internal vertices carry unit
// capacity. Stops early once the cut is known to be >= cutoff.
struct StCut {
    int size;            // == cutoff means "at least cutoff"
    VertexSet vertices;  // empty when size == cutoff
};

inline StCut st_vertex_cut(const Graph& g, int s, int t, int cutoff) {
    const int big = g.n + 5;
    FlowNetwork net(2 * g.n);
    for (int v = 0; v < g.n; ++v) net.add_arc(2 * v, 2 * v + 1, v == s || v == t ? big : 1);
    for (const auto& [u, v] : g.edges) {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    int flow = net.max_flow(2 * s + 1, 2 * t, cutoff);
    if (flow >= cutoff) return {cutoff, {}};
    auto side = net.source_side();
    VertexSet cut;
    for (int v = 0; v < g.n; ++v)
        if (side[2 * v] && !side[2 * v + 1]) cut.push_back(v);
    return {flow, cut};
}

inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace detail

// Vertex connectivity with a witness cut. Complete graphs have no cut at all;
// they report n-1 together with the complete_graph marker.
struct VertexConnectivity {
    int value = 0;
    VertexSet witness;  // empty when complete_graph (or when the graph is disconnected)
    bool complete_graph = false;
};

inline VertexConnectivity vertex_connectivity(const Graph& g) {
    if (g.n <= 0) return {0, {}, true};
    if (g.is_complete()) return {g.n - 1, {}, true};
    if (!is_connected(g)) return {0, {}, false};

    // Any minimum cut either misses the minimum-degree vertex v* (then some
    // non-neighbor of v* lies across it) or contains v* (then two of v*'s
    // neighbors lie in different components), so scanning these pairs is exact.
    int vstar = 0;
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) < g.degree(vstar)) vstar = v;

    int best = g.degree(vstar);
    VertexSet best_cut = g.adj[vstar];

    auto consider = [&](int s, int t) {
        auto r = detail::st_vertex_cut(g, s, t, best + 1);
        if (r.size > best) return;
        if (r.size < best || detail::lex_less(r.vertices, best_cut)) {
            best = r.size;
            best_cut = r.vertices;
        }
    };

    for (int u = 0; u < g.n; ++u)
        if (u != vstar && !g.has_edge(vstar, u)) consider(vstar, u);
    const auto nb = g.adj[vstar];
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) consider(nb[i], nb[j]);

    return {best, best_cut, false};
}

// True iff g has at least k+1 vertices and connectivity at least k.
inline bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return g.n >= k + 1;
    if (g.n < k + 1) return false;
    return vertex_connectivity(g).value >= k;
}

// Cut separating two vertex-disjoint edges: the smallest X disjoint from both
// edges whose removal leaves them in different components.
struct EdgePairCut {
    int size = 0;
    VertexSet cut;
};

namespace detail {

enum class PairCutStatus { separable, inseparable, at_least_cutoff };

struct PairCutResult {
    PairCutStatus status;
    EdgePairCut cut;  // valid when separable
};

inline PairCutResult edge_pair_cut(const Graph& g, Edge e1, Edge e2, int cutoff) {
    const int a1 = e1.first, b1 = e1.second, a2 = e2.first, b2 = e2.second;
    for (int x : {a1, b1})
        for (int y : {a2, b2})
            if (g.has_edge(x, y)) return {PairCutStatus::inseparable, {}};

    // Contract each edge to a terminal; internal vertices keep unit capacity.
    const int big = g.n + 5;
    const int S = 2 * g.n, T = 2 * g.n + 1;
    FlowNetwork net(2 * g.n + 2);
    std::vector<char> terminal(g.n, 0);
    terminal[a1] = terminal[b1] = terminal[a2] = terminal[b2] = 1;
    for (int v = 0; v < g.n; ++v)
        if (!terminal[v]) net.add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [u, v] : g.edges) {
        bool su = (u == a1 || u == b1), sv = (v == a1 || v == b1);
        bool tu = (u == a2 || u == b2), tv = (v == a2 || v == b2);
        if ((su && sv) || (tu && tv)) continue;  // inside a terminal
        if (su) net.add_arc(S, 2 * v, big);
        else if (sv) net.add_arc(S, 2 * u, big);
        else if (tu) net.add_arc(2 * v + 1, T, big);
        else if (tv) net.add_arc(2 * u + 1, T, big);
        else {
            net.add_arc(2 * u + 1, 2 * v, big);
            net.add_arc(2 * v + 1, 2 * u, big);
        }
    }
    int flow = net.max_flow(S, T, cutoff);
    if (flow >= cutoff) return {PairCutStatus::at_least_cutoff, {}};
    auto side = net.source_side();
    VertexSet cut;
    for (int v = 0; v < g.n; ++v)
        if (!terminal[v] && side[2 * v] && !side[2 * v + 1]) cut.push_back(v);
    return {PairCutStatus::separable, {flow, cut}};
}

inline void require_disjoint_edges(const Graph& g, Edge e1, Edge e2) {
    for (Edge e : {e1, e2})
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("no such edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second));
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
        e1.second == e2.second)
        throw std::invalid_argument("not disjoint: the two edges share a vertex");
}

} // namespace detail

// Returns nullopt when the edges cannot be separated (the contracted
// terminals are adjacent).
inline std::optional<EdgePairCut> min_cut_separating_edges(const Graph& g, Edge e1, Edge e2) {
    e1 = make_edge(e1.first, e1.second);
    e2 = make_edge(e2.first, e2.second);
    detail::require_disjoint_edges(g, e1, e2);
    auto r = detail::edge_pair_cut(g, e1, e2, g.n + 1);
    if (r.status != detail::PairCutStatus::separable) return std::nullopt;
    return r.cut;
}

// Essential connectivity: the smallest vertex set whose removal leaves at
// least two components that each contain an edge. A graph may have no such
// cut at all; that is reported as "unbounded" (value == nullopt), never as a
// sentinel integer.
struct EssentialWitness {
    VertexSet cut;
    Edge e1;
    Edge e2;
};

struct EssentialConnectivity {
    std::optional<int> value;                  // nullopt: unbounded
    std::optional<EssentialWitness> witness;   // present iff value is

    bool unbounded() const { return !value.has_value(); }
};

inline EssentialConnectivity essential_connectivity(const Graph& g) {
    // Minimum over vertex-disjoint edge pairs of the cut separating them;
    // ties break on (cut size, lexicographic cut, pair), which makes the scan
    // order immaterial and the result reproducible.
    std::optional<EssentialWitness> best;
    int best_size = g.n + 1;
    const auto& es = g.edges;
    for (std::size_t i = 0; i < es.size() && best_size > 0; ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge &e1 = es[i], &e2 = es[j];
            if (e1.first == e2.first || e1.second == e2.first || e1.second == e2.second ||
                e1.first == e2.second)
                continue;
            auto r = detail::edge_pair_cut(g, e1, e2, best ? best_size + 1 : g.n + 1);
            if (r.status != detail::PairCutStatus::separable) continue;
            if (!best || r.cut.size < best_size ||
                (r.cut.size == best_size && detail::lex_less(r.cut.cut, best->cut))) {
                best_size = r.cut.size;
                best = EssentialWitness{r.cut.cut, e1, e2};
            }
            if (best_size == 0) break;
        }
    }
    if (!best) return {std::nullopt, std::nullopt};
    return {best_size, best};
}

// True iff g has at least k+1 vertices and no essential cut smaller than k.
inline bool is_essentially_k_connected(const Graph& g, int k) {
    if (g.n < k + 1) return false;
    auto ess = essential_connectivity(g);
    return ess.unbounded() || *ess.value >= k;
}

// Exhaustive reference for essential connectivity. Enumerates candidate cuts
// by increasing size, so the first hit is the exact minimum.
inline EssentialConnectivity essential_connectivity_bruteforce(const Graph& g, int guard_max_n = 16) {
    if (g.n > guard_max_n)
        throw std::runtime_error("oracle limit: n = " + std::to_string(g.n) + " exceeds " +
                                 std::to_string(guard_max_n));

    std::vector<char> gone(g.n, 0);
    auto essential_check = [&]() -> std::optional<std::pair<Edge, Edge>> {
        // components of g minus the marked vertices, tracking one edge each
        std::vector<int> comp(g.n, -1);
        std::vector<Edge> comp_edge;
        int ncomp = 0;
        for (int s = 0; s < g.n; ++s) {
            if (gone[s] || comp[s] >= 0) continue;
            int id = ncomp++;
            comp_edge.emplace_back(-1, -1);
            std::vector<int> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.adj[v]) {
                    if (gone[w]) continue;
                    Edge e = make_edge(v, w);
                    if (comp_edge[id].first < 0 || e < comp_edge[id]) comp_edge[id] = e;
                    if (comp[w] < 0) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
                }
            }
        }
        std::vector<Edge> nontrivial;
        for (int c = 0; c < ncomp; ++c)
            if (comp_edge[c].first >= 0) nontrivial.push_back(comp_edge[c]);
        if (nontrivial.size() < 2) return std::nullopt;
        return std::make_pair(nontrivial[0], nontrivial[1]);
    };

    std::vector<int> pick;
    // lexicographic enumeration of size-s subsets
    auto search = [&](auto&& self, int next, int remaining) -> std::optional<VertexSet> {
        if (remaining == 0) {
            if (essential_check()) return VertexSet(pick.begin(), pick.end());
            return std::nullopt;
        }
        for (int v = next; v + remaining <= g.n; ++v) {
            gone[v] = 1;
            pick.push_back(v);
            if (auto found = self(self, v + 1, remaining - 1)) return found;
            pick.pop_back();
            gone[v] = 0;
        }
        return std::nullopt;
    };

    for (int s = 0; s + 4 <= g.n; ++s) {
        if (auto cut = search(search, 0, s)) {
            for (int v : *cut) gone[v] = 1;
            auto pair = essential_check();
            return {s, EssentialWitness{*cut, pair->first, pair->second}};
        }
    }
    return {std::nullopt, std::nullopt};
}

struct ConnectivityReport {
    VertexConnectivity kappa;
    EssentialConnectivity essential;
};

inline ConnectivityReport connectivity_report(const Graph& g) {
    return {vertex_connectivity(g), essential_connectivity(g)};
}

} // namespace rigi
