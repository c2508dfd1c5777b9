#pragma once

#include <climits>
#include <optional>
#include <string>

#include "rigi/graph.hpp"
#include "rigi/rigidity.hpp"

namespace rigi {

// A cover: vertex subsets whose induced edge sets jointly contain E(G).
// Its value is the sum of 2|X|-3 over the parts.
struct Cover {
    std::vector<VertexSet> parts;
};

inline long long cover_value(const Cover& c) {
    long long total = 0;
    for (const auto& part : c.parts) total += 2 * static_cast<long long>(part.size()) - 3;
    return total;
}

struct CoverViolation {
    enum class Kind { uncovered_edge, part_too_small } kind;
    std::optional<Edge> edge;   // for uncovered_edge
    std::optional<int> part;    // for part_too_small

    std::string describe() const {
        if (kind == Kind::uncovered_edge)
            return "uncovered edge " + std::to_string(edge->first) + "-" +
                   std::to_string(edge->second);
        return "part " + std::to_string(*part) + " has fewer than 2 vertices";
    }
};

// Checks both cover invariants; violations are return values, not errors.
inline std::optional<CoverViolation> validate_cover(const Graph& g, const Cover& c) {
    for (std::size_t i = 0; i < c.parts.size(); ++i)
        if (c.parts[i].size() < 2)
            return CoverViolation{CoverViolation::Kind::part_too_small, std::nullopt,
                                  static_cast<int>(i)};
    std::vector<char> in(g.n, 0);
    std::vector<char> covered(g.edges.size(), 0);
    for (const auto& part : c.parts) {
        for (int v : part) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("vertex range in cover part");
            in[v] = 1;
        }
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (in[g.edges[e].first] && in[g.edges[e].second]) covered[e] = 1;
        for (int v : part) in[v] = 0;
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (!covered[e])
            return CoverViolation{CoverViolation::Kind::uncovered_edge, g.edges[e], std::nullopt};
    return std::nullopt;
}

// Size guards for the exhaustive cover search. The defaults bound the
// enumeration to Bell(12) partitions; both limits are configurable.
struct CoverGuards {
    int max_edges = 12;
    int max_vertices = 12;
};

namespace detail {

// Exact minimum of the cover value over all partitions of E(G), enumerated as
// restricted-growth strings. Each part is shrunk to the vertex support of its
// edges, which never increases 2|X|-3, and the minimum over edge partitions
// equals the minimum over arbitrary covers. Partial sums only grow along a
// branch, so pruning against the incumbent is exact.
class EdgePartitionSearch {
public:
    explicit EdgePartitionSearch(const Graph& g) : g_(g), assign_(g.edges.size(), -1) {}

    void run() {
        best_value_ = LLONG_MAX;
        dfs(0, 0, 0);
    }

    long long best_value() const { return best_value_; }

    Cover best_cover() const {
        int nparts = 0;
        for (int p : best_assign_) nparts = std::max(nparts, p + 1);
        Cover cover;
        cover.parts.assign(nparts, {});
        std::vector<std::vector<char>> seen(nparts, std::vector<char>(g_.n, 0));
        for (std::size_t e = 0; e < best_assign_.size(); ++e) {
            int p = best_assign_[e];
            for (int v : {g_.edges[e].first, g_.edges[e].second})
                if (!seen[p][v]) {
                    seen[p][v] = 1;
                    cover.parts[p].push_back(v);
                }
        }
        for (auto& part : cover.parts) std::sort(part.begin(), part.end());
        return cover;
    }

private:
    void dfs(std::size_t i, int nparts, long long total) {
        if (total >= best_value_) return;
        if (i == g_.edges.size()) {
            best_value_ = total;
            best_assign_ = assign_;
            return;
        }
        const auto [u, v] = g_.edges[i];
        for (int p = 0; p < nparts; ++p) {
            long long delta = 2 * ((vcount_[p][u] == 0) + (vcount_[p][v] == 0));
            assign_[i] = p;
            ++vcount_[p][u];
            ++vcount_[p][v];
            dfs(i + 1, nparts, total + delta);
            --vcount_[p][u];
            --vcount_[p][v];
        }
        if (static_cast<int>(vcount_.size()) == nparts) vcount_.emplace_back(g_.n, 0);
        assign_[i] = nparts;
        ++vcount_[nparts][u];
        ++vcount_[nparts][v];
        dfs(i + 1, nparts + 1, total + 1);  // a fresh part starts at 2*2-3
        --vcount_[nparts][u];
        --vcount_[nparts][v];
        assign_[i] = -1;
    }

    const Graph& g_;
    std::vector<std::vector<int>> vcount_;  // per part, per vertex incidence count
    std::vector<int> assign_;
    std::vector<int> best_assign_;
    long long best_value_ = LLONG_MAX;
};

inline void check_cover_guards(const Graph& g, const CoverGuards& guards) {
    if (g.m() > guards.max_edges || g.n > guards.max_vertices)
        throw std::runtime_error("oracle limit: graph has n = " + std::to_string(g.n) +
                                 ", m = " + std::to_string(g.m()));
}

} // namespace detail

// Exact minimum cover value with an argmin cover. Exhaustive; guarded.
inline std::pair<long long, Cover> min_cover_value_bruteforce(const Graph& g,
                                                              const CoverGuards& guards = {}) {
    detail::check_cover_guards(g, guards);
    if (g.m() == 0) return {0, Cover{}};
    detail::EdgePartitionSearch search(g);
    search.run();
    return {search.best_value(), search.best_cover()};
}

// A cover of value below 2n-3 certifies non-rigidity. Absent when none exists.
inline std::optional<Cover> deficient_cover_witness(const Graph& g,
                                                    const CoverGuards& guards = {}) {
    auto [value, cover] = min_cover_value_bruteforce(g, guards);
    if (value < 2LL * g.n - 3) return cover;
    return std::nullopt;
}

// Cross-check of the rigidity decision: the pebble game must call g rigid
// exactly when no cover has value below 2n-3.
inline bool verify_lovasz_yemini(const Graph& g, const CoverGuards& guards = {}) {
    auto [value, cover] = min_cover_value_bruteforce(g, guards);
    (void)cover;
    return is_rigid(g) == (value >= 2LL * g.n - 3);
}

} // namespace rigi
