#pragma once

#include <chrono>
#include <map>
#include <string>

#include "json.hpp"

#include "rigi/connectivity.hpp"
#include "rigi/covers.hpp"
#include "rigi/graph6.hpp"
#include "rigi/rigidity.hpp"

namespace rigi {

// Full per-graph verdict: connectivity, essential connectivity, rank and the
// rigidity flags, with witnesses and per-stage timings.
struct VerdictReport {
    int n = 0;
    int m = 0;
    VertexConnectivity kappa;
    EssentialConnectivity essential;
    int rank = 0;
    bool rigid = false;
    bool minimally_rigid = false;
    bool redundantly_rigid = false;
    bool globally_rigid = false;
    GlobalRigidityReason global_reason = GlobalRigidityReason::fails_connectivity;
    std::optional<Edge> redundancy_witness;
    std::optional<std::vector<Edge>> spanning_laman;
    std::map<std::string, double> timings_ms;
};

inline VerdictReport analyze_graph(const Graph& g) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    VerdictReport r;
    r.n = g.n;
    r.m = g.m();

    auto t0 = clock::now();
    r.kappa = vertex_connectivity(g);
    r.timings_ms["connectivity"] = ms_since(t0);

    t0 = clock::now();
    r.essential = essential_connectivity(g);
    r.timings_ms["essential_connectivity"] = ms_since(t0);

    t0 = clock::now();
    auto rig = rigidity_report(g);
    r.rank = rig.rank;
    r.rigid = rig.rigid;
    r.minimally_rigid = rig.minimally_rigid;
    r.spanning_laman = rig.spanning_laman;
    r.timings_ms["rank"] = ms_since(t0);

    t0 = clock::now();
    auto rr = is_redundantly_rigid(g);
    r.redundantly_rigid = rr.redundant;
    r.redundancy_witness = rr.witness;
    r.timings_ms["redundancy"] = ms_since(t0);

    t0 = clock::now();
    auto global = is_globally_rigid(g);
    r.globally_rigid = global.globally_rigid;
    r.global_reason = global.reason;
    r.timings_ms["global_rigidity"] = ms_since(t0);

    return r;
}

namespace detail {

inline nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.first, e.second}); }

inline nlohmann::json edges_json(const std::vector<Edge>& edges) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : edges) a.push_back(edge_json(e));
    return a;
}

inline nlohmann::json essential_json(const EssentialConnectivity& ess) {
    nlohmann::json j;
    j["unbounded"] = ess.unbounded();
    j["value"] = ess.value ? nlohmann::json(*ess.value) : nlohmann::json();
    if (ess.witness) {
        j["witness"] = {{"cut", ess.witness->cut},
                        {"e1", edge_json(ess.witness->e1)},
                        {"e2", edge_json(ess.witness->e2)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

// The flags are recomputed relations of each other; refuse to serialize an
// inconsistent report.
inline void check_verdict_consistency(const VerdictReport& r) {
    const bool rigid = r.n <= 1 || r.rank == 2 * r.n - 3;
    if (rigid != r.rigid) throw std::logic_error("verdict inconsistency: rigid flag vs rank");
    if (r.minimally_rigid != (r.rigid && (r.n <= 1 ? r.m == 0 : r.m == 2 * r.n - 3)))
        throw std::logic_error("verdict inconsistency: minimally rigid flag");
    if (r.redundantly_rigid && !r.rigid)
        throw std::logic_error("verdict inconsistency: redundantly rigid but not rigid");
    const bool small_complete = r.n <= 3 && r.m == r.n * (r.n - 1) / 2;
    const bool three_conn = r.n >= 4 && r.kappa.value >= 3;
    if (r.globally_rigid != (small_complete || (three_conn && r.redundantly_rigid)))
        throw std::logic_error("verdict inconsistency: global rigidity decision rule");
}

} // namespace detail

inline nlohmann::json verdict_to_json(const VerdictReport& r, bool include_timings = true) {
    detail::check_verdict_consistency(r);
    nlohmann::json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["kappa"] = {{"value", r.kappa.value},
                  {"complete_graph", r.kappa.complete_graph},
                  {"witness", r.kappa.complete_graph ? nlohmann::json() : nlohmann::json(r.kappa.witness)}};
    j["essential_kappa"] = detail::essential_json(r.essential);
    j["rank"] = r.rank;
    j["is_rigid"] = r.rigid;
    j["is_minimally_rigid"] = r.minimally_rigid;
    j["is_redundantly_rigid"] = r.redundantly_rigid;
    j["is_globally_rigid"] = r.globally_rigid;
    j["global_rigidity_reason"] = to_string(r.global_reason);
    j["redundancy_witness"] =
        r.redundancy_witness ? detail::edge_json(*r.redundancy_witness) : nlohmann::json();
    j["spanning_laman"] =
        r.spanning_laman ? detail::edges_json(*r.spanning_laman) : nlohmann::json();
    if (include_timings) j["timings_ms"] = r.timings_ms;
    return j;
}

// Oracle report: exact minimum cover value against the 2n-3 threshold.
inline nlohmann::json oracle_report_json(const Graph& g, const CoverGuards& guards = {}) {
    nlohmann::json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.n;
    j["m"] = g.m();
    try {
        auto [value, cover] = min_cover_value_bruteforce(g, guards);
        const long long threshold = 2LL * g.n - 3;
        j["min_cover_value"] = value;
        j["threshold"] = threshold;
        j["deficiency"] = threshold - value;
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& part : cover.parts) parts.push_back(part);
        j["cover"] = parts;
        j["consistent"] = is_rigid(g) == (value >= threshold);
    } catch (const std::runtime_error& e) {
        j["error"] = e.what();
    }
    return j;
}

} // namespace rigi
