#pragma once

#include <optional>
#include <string>

#include "rigi/connectivity.hpp"
#include "rigi/graph.hpp"
#include "rigi/prng.hpp"
#include "rigi/rigidity.hpp"

namespace rigi {

// ---------------------------------------------------------------------------
// Named families

inline Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete: order must be nonnegative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete-bipartite: bad part sizes");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return from_edge_list(a + b, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return from_edge_list(n, edges);
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: order must be positive");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_edge_list(n, edges);
}

// Hub vertex 0 joined to a cycle on the remaining n-1 vertices.
inline Graph wheel_graph(int n) {
    if (n < 4) throw std::invalid_argument("wheel: order must be at least 4");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(0, v);
        edges.push_back(make_edge(v, v == n - 1 ? 1 : v + 1));
    }
    return from_edge_list(n, edges);
}

inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int v = 0; v < 5; ++v) {
        edges.push_back(make_edge(v, (v + 1) % 5));      // outer cycle
        edges.push_back(make_edge(5 + v, 5 + (v + 2) % 5));  // inner pentagram
        edges.emplace_back(v, 5 + v);                    // spokes
    }
    return from_edge_list(10, edges);
}

// Circulant graph on n vertices with the given offsets.
inline Graph circulant_graph(int n, const std::vector<int>& offsets) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int d : offsets) {
            if (d <= 0 || 2 * d > n + 1) continue;
            int w = (v + d) % n;
            if (w != v) edges.push_back(make_edge(v, w));
        }
    return from_edge_list(n, edges);
}

enum class StandardKind { complete, complete_bipartite, cycle, path, wheel, petersen };

inline Graph standard_graph(StandardKind kind, int a = 0, int b = 0) {
    switch (kind) {
        case StandardKind::complete: return complete_graph(a);
        case StandardKind::complete_bipartite: return rigi::complete_bipartite(a, b);
        case StandardKind::cycle: return cycle_graph(a);
        case StandardKind::path: return path_graph(a);
        case StandardKind::wheel: return wheel_graph(a);
        case StandardKind::petersen: return petersen_graph();
    }
    throw std::invalid_argument("unknown standard graph kind");
}

// ---------------------------------------------------------------------------
// Random minimally rigid graphs: start from an edge and repeatedly attach a
// new vertex to two distinct existing vertices.

inline Graph random_laman(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_laman: order must be at least 2");
    SplitMix64 rng = SplitMix64(seed).split(0x6c616d616eULL);
    std::vector<Edge> edges{{0, 1}};
    for (int v = 2; v < n; ++v) {
        int a = rng.next_int(0, v - 1);
        int b = rng.next_int(0, v - 2);
        if (b >= a) ++b;
        edges.push_back(make_edge(v, a));
        edges.push_back(make_edge(v, b));
    }
    Graph g = from_edge_list(n, edges);
    if (rigidity_rank(g) != 2 * n - 3 || g.m() != 2 * n - 3)
        throw std::logic_error("random_laman produced a non-minimally-rigid graph");
    return g;
}

// ---------------------------------------------------------------------------
// Clique-expansion family: a 3-connected bipartite base whose one side has
// degree 3 and the other degree t, with every degree-t vertex blown up into a
// K_t. For t <= 8 and order above 96 the result cannot contain a spanning
// minimally rigid subgraph.

struct EssTFamilySpec {
    int t = 6;             // clique size, 3..8
    int n3 = 30;           // number of degree-3 vertices; t must divide 3*n3
    std::uint64_t seed = 1;

    int nt() const { return 3 * n3 / t; }
    int order() const { return 4 * n3; }  // n3 + t*nt
};

namespace detail {

inline void check_family_spec(const EssTFamilySpec& spec) {
    if (spec.t < 3 || spec.t > 8)
        throw std::invalid_argument("family spec: t must be in 3..8, got " +
                                    std::to_string(spec.t));
    if (spec.n3 <= 0 || (3 * spec.n3) % spec.t != 0)
        throw std::invalid_argument("family spec: t must divide 3*n3");
    if (spec.n3 < spec.t)
        throw std::invalid_argument("family spec: infeasible, each degree-t vertex needs t "
                                    "distinct neighbors (n3 >= t required)");
    if (spec.nt() < 3)
        throw std::invalid_argument("family spec: infeasible, each degree-3 vertex needs 3 "
                                    "distinct neighbors (3*n3/t >= 3 required)");
}

// Stub-matching construction of a bipartite graph with n3 vertices of degree
// 3 (labels 0..n3-1) and nt vertices of degree t (labels n3..n3+nt-1),
// retried until simple and 3-connected. When n3 == t the base is forced to
// be complete bipartite and is built directly.
inline Graph build_biregular(int t, int n3, std::uint64_t seed, int max_attempts = 20000) {
    const int nt = 3 * n3 / t;
    if (n3 == t) {
        Graph g = complete_bipartite(n3, nt);
        if (vertex_connectivity(g).value < 3)
            throw std::runtime_error("no 3-connected base found for t = " + std::to_string(t));
        return g;
    }
    SplitMix64 root = SplitMix64(seed).split(0x62697265ULL);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        SplitMix64 rng = root.split(attempt);
        std::vector<int> ystubs;
        ystubs.reserve(3 * n3);
        for (int y = 0; y < nt; ++y)
            for (int k = 0; k < t; ++k) ystubs.push_back(n3 + y);
        rng.shuffle(ystubs);
        std::vector<Edge> edges;
        edges.reserve(3 * n3);
        bool simple = true;
        std::vector<std::vector<char>> used(n3, std::vector<char>(nt, 0));
        for (int i = 0; i < 3 * n3 && simple; ++i) {
            int x = i / 3, y = ystubs[i] - n3;
            if (used[x][y]) simple = false;
            used[x][y] = 1;
            edges.emplace_back(x, ystubs[i]);
        }
        if (!simple) continue;
        Graph g = from_edge_list(n3 + nt, edges);
        if (vertex_connectivity(g).value >= 3) return g;
    }
    throw std::runtime_error("no 3-connected base found for t = " + std::to_string(t) +
                             ", n3 = " + std::to_string(n3));
}

// Blow-up: each degree-t vertex y becomes a K_t; the former edges at y attach
// to pairwise different clique vertices, sorted neighbor k of y to clique
// vertex k.
inline Graph expand_clique(const Graph& T, int t, int n3) {
    const int nt = T.n - n3;
    std::vector<Edge> edges;
    for (const auto& [u, v] : T.edges)
        if (v < n3 || u >= n3)
            throw std::invalid_argument("not biregular: edge inside one side");
    for (int x = 0; x < n3; ++x)
        if (T.degree(x) != 3) throw std::invalid_argument("not biregular: bad degree-3 side");
    for (int j = 0; j < nt; ++j) {
        const int y = n3 + j;
        if (T.degree(y) != t) throw std::invalid_argument("not biregular: bad degree-t side");
        const int base = n3 + j * t;
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) edges.emplace_back(base + a, base + b);
        const auto& nb = T.adj[y];  // ascending
        for (int k = 0; k < t; ++k) edges.push_back(make_edge(nb[k], base + k));
    }
    return from_edge_list(n3 + nt * t, edges);
}

} // namespace detail

// The bipartite base T of the family.
inline Graph generate_biregular_bipartite(const EssTFamilySpec& spec) {
    detail::check_family_spec(spec);
    return detail::build_biregular(spec.t, spec.n3, spec.seed);
}

// Blow-up step. T must be biregular with the degree-3 side on the low labels;
// the split is recovered from the counts n3 = t*n/(t+3).
inline Graph expand_to_clique_family(const Graph& T, int t) {
    if (t < 3) throw std::invalid_argument("not biregular: t must be at least 3");
    if ((static_cast<long long>(t) * T.n) % (t + 3) != 0)
        throw std::invalid_argument("not biregular: order incompatible with t");
    const int n3 = static_cast<int>(static_cast<long long>(t) * T.n / (t + 3));
    return detail::expand_clique(T, t, n3);
}

// Full construction with certification. The returned graph is checked to be
// 3-connected, essentially t-connected and non-rigid before returning; a
// certification failure is a generator bug, not a caller error. Small
// instances (order <= 96) are only reachable with allow_unchecked_small and
// skip the non-rigidity certificate: they may or may not be rigid.
inline Graph ess_t_nonrigid(const EssTFamilySpec& spec, bool allow_unchecked_small = false) {
    detail::check_family_spec(spec);
    if (spec.order() <= 96 && !allow_unchecked_small)
        throw std::invalid_argument("family spec: order 4*n3 must exceed 96, got " +
                                    std::to_string(spec.order()));

    Graph T = detail::build_biregular(spec.t, spec.n3, spec.seed);
    Graph g = detail::expand_clique(T, spec.t, spec.n3);

    if (g.n != spec.order()) throw std::logic_error("family order mismatch");
    if (!is_k_connected(g, 3))
        throw std::runtime_error("family certification failed: not 3-connected");
    if (!is_essentially_k_connected(g, spec.t))
        throw std::runtime_error("family certification failed: not essentially " +
                                 std::to_string(spec.t) + "-connected");
    if (spec.order() > 96) {
        const int rank = rigidity_rank(g);
        const int bound = 3 * spec.n3 + spec.nt() * (2 * spec.t - 3);
        if (rank > bound) throw std::runtime_error("family certification failed: rank bound");
        if (rank == 2 * g.n - 3)
            throw std::runtime_error("family certification failed: instance is rigid");
    }
    return g;
}

// ---------------------------------------------------------------------------
// Certified samplers for connectivity-hypothesis campaigns. Candidates come
// from a few shape pools; every returned graph has been re-checked against
// the required connectivity and essential connectivity, so callers may rely
// on the hypotheses outright. Returns nullopt when this seed's bounded search
// finds nothing.

namespace detail {

inline Graph dense_random_graph(int n, double p, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

inline Graph complete_minus_matching(int n, SplitMix64& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    Graph g = complete_graph(n);
    std::vector<Edge> removed;
    for (int i = 0; i + 1 < n; i += 2) removed.push_back(make_edge(order[i], order[i + 1]));
    std::vector<Edge> edges;
    for (const auto& e : g.edges)
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
    return from_edge_list(n, edges);
}

// K_{s,n-s} with a random subset of edges added inside the small side.
inline Graph complete_bipartite_plus(int s, int n, SplitMix64& rng) {
    Graph g = complete_bipartite(s, n - s);
    std::vector<Edge> edges = g.edges;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v)
            if (rng.next_bool(0.5)) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

struct CampaignSampler {
    int min_connectivity;
    int essential_k;

    std::optional<std::pair<Graph, std::string>> draw(int n, SplitMix64& rng) const {
        const int hub = min_connectivity;  // small side of the bipartite shapes
        std::vector<std::string> shapes;
        if (n >= hub + essential_k - 2) shapes.push_back("bipartite-hub");
        if (n >= hub + essential_k - 2) shapes.push_back("bipartite-hub-plus");
        if (n >= essential_k + 3) shapes.push_back("complete-minus-matching");
        if (n >= 12 && n <= 16) shapes.push_back("dense");
        if (essential_k == 6 && n >= 10) shapes.push_back("circulant");
        if (essential_k == 9 && n >= 14) shapes.push_back("circulant");
        if (essential_k == 9 && n == 36) shapes.push_back("clique-family-t9");
        if (shapes.empty()) return std::nullopt;

        const std::string shape = shapes[rng.next_below(shapes.size())];
        if (shape == "bipartite-hub") return {{complete_bipartite(hub, n - hub), shape}};
        if (shape == "bipartite-hub-plus") return {{complete_bipartite_plus(hub, n, rng), shape}};
        if (shape == "complete-minus-matching") return {{complete_minus_matching(n, rng), shape}};
        if (shape == "dense") return {{dense_random_graph(n, 0.55 + 0.35 * rng.next_unit(), rng), shape}};
        if (shape == "circulant") {
            std::vector<int> offsets(essential_k == 6 ? 3 : 5);
            for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = static_cast<int>(i) + 1;
            return {{circulant_graph(n, offsets), shape}};
        }
        // clique-family-t9: three K_9 on a K_{9,3} base, the tight case for
        // essential 9-connectivity
        Graph T = complete_bipartite(9, 3);
        return {{expand_clique(T, 9, 9), shape}};
    }

    bool certify(const Graph& g) const {
        return is_k_connected(g, min_connectivity) && is_essentially_k_connected(g, essential_k);
    }
};

inline std::optional<Graph> certified_sample(const CampaignSampler& sampler, int n,
                                             std::uint64_t seed) {
    SplitMix64 root = SplitMix64(seed).split(0x73616d70ULL);
    for (int attempt = 0; attempt < 8; ++attempt) {
        SplitMix64 rng = root.split(attempt);
        auto drawn = sampler.draw(n, rng);
        if (!drawn) return std::nullopt;
        if (sampler.certify(drawn->first)) return drawn->first;
    }
    return std::nullopt;
}

} // namespace detail

// Best-effort sampler of certified 3-connected essentially-9-connected graphs.
inline std::optional<Graph> random_3conn_ess9(int n, std::uint64_t seed) {
    if (n < 10) throw std::invalid_argument("random_3conn_ess9: order must be at least 10");
    return detail::certified_sample(detail::CampaignSampler{3, 9}, n, seed);
}

// Companion sampler of certified 4-connected essentially-6-connected graphs.
inline std::optional<Graph> random_4conn_ess6(int n, std::uint64_t seed) {
    if (n < 7) throw std::invalid_argument("random_4conn_ess6: order must be at least 7");
    return detail::certified_sample(detail::CampaignSampler{4, 6}, n, seed);
}

} // namespace rigi
