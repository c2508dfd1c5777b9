#pragma once

#include <string>

#include "rigi/generators.hpp"
#include "rigi/report.hpp"

namespace rigi {

// Verification campaign: draw certified hypothesis-satisfying instances and
// check that every one of them is redundantly rigid and globally rigid.
//   th3ess9: 3-connected, essentially 9-connected
//   th4ess6: 4-connected, essentially 6-connected
// A recorded counterexample would contradict the connectivity hypotheses'
// guarantee and therefore signals an implementation bug; the entry carries
// the full failing certificates so it can be replayed.
struct CampaignConfig {
    std::string theorem;  // "th3ess9" or "th4ess6"
    int samples = 50;
    int max_n = 40;
    std::uint64_t seed = 1;
};

struct CampaignSampleDigest {
    std::string kind;
    std::string graph6;
    int n = 0;
    int m = 0;
    int kappa = 0;
    std::optional<int> essential;  // nullopt: unbounded
    bool redundantly_rigid = false;
    bool globally_rigid = false;
};

struct CampaignReport {
    std::string theorem;
    std::uint64_t seed = 0;
    int attempted = 0;
    int certified = 0;
    std::vector<nlohmann::json> counterexamples;
    std::vector<CampaignSampleDigest> digests;
};

inline CampaignReport run_campaign(const CampaignConfig& cfg) {
    detail::CampaignSampler sampler{};
    int min_n = 0;
    if (cfg.theorem == "th3ess9") {
        sampler = detail::CampaignSampler{3, 9};
        min_n = 10;
    } else if (cfg.theorem == "th4ess6") {
        sampler = detail::CampaignSampler{4, 6};
        min_n = 8;
    } else {
        throw std::invalid_argument("unknown theorem id: " + cfg.theorem);
    }
    if (cfg.max_n < min_n)
        throw std::invalid_argument("max n below the smallest admissible instance");

    CampaignReport report;
    report.theorem = cfg.theorem;
    report.seed = cfg.seed;

    SplitMix64 root = SplitMix64(cfg.seed).split(0x63616d70ULL);
    const int budget = cfg.samples * 10;
    for (int attempt = 0; attempt < budget && report.certified < cfg.samples; ++attempt) {
        ++report.attempted;
        SplitMix64 rng = root.split(attempt);
        const int n = min_n + static_cast<int>(rng.next_below(
                                  static_cast<std::uint64_t>(cfg.max_n - min_n + 1)));
        auto drawn = sampler.draw(n, rng);
        if (!drawn || !sampler.certify(drawn->first)) continue;

        const Graph& g = drawn->first;
        ++report.certified;

        auto kappa = vertex_connectivity(g);
        auto ess = essential_connectivity(g);
        auto rr = is_redundantly_rigid(g);
        auto global = is_globally_rigid(g);

        CampaignSampleDigest digest;
        digest.kind = drawn->second;
        digest.graph6 = to_graph6(g);
        digest.n = g.n;
        digest.m = g.m();
        digest.kappa = kappa.value;
        digest.essential = ess.value;
        digest.redundantly_rigid = rr.redundant;
        digest.globally_rigid = global.globally_rigid;
        report.digests.push_back(digest);

        if (!rr.redundant || !global.globally_rigid) {
            nlohmann::json bad;
            bad["kind"] = drawn->second;
            bad["graph6"] = digest.graph6;
            bad["n"] = g.n;
            bad["m"] = g.m();
            bad["kappa"] = {{"value", kappa.value},
                            {"complete_graph", kappa.complete_graph},
                            {"witness", kappa.witness}};
            bad["essential_kappa"] = detail::essential_json(ess);
            bad["rank"] = rigidity_rank(g);
            bad["is_redundantly_rigid"] = rr.redundant;
            bad["redundancy_witness"] =
                rr.witness ? detail::edge_json(*rr.witness) : nlohmann::json();
            bad["is_globally_rigid"] = global.globally_rigid;
            bad["global_rigidity_reason"] = to_string(global.reason);
            report.counterexamples.push_back(bad);
        }
    }
    return report;
}

inline nlohmann::json campaign_to_json(const CampaignReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["seed"] = r.seed;
    j["samples_attempted"] = r.attempted;
    j["samples_certified"] = r.certified;
    j["counterexamples"] = r.counterexamples;
    nlohmann::json digests = nlohmann::json::array();
    for (const auto& d : r.digests) {
        digests.push_back({{"kind", d.kind},
                           {"graph6", d.graph6},
                           {"n", d.n},
                           {"m", d.m},
                           {"kappa", d.kappa},
                           {"essential_kappa", d.essential ? nlohmann::json(*d.essential) : nlohmann::json()},
                           {"is_redundantly_rigid", d.redundantly_rigid},
                           {"is_globally_rigid", d.globally_rigid}});
    }
    j["samples"] = digests;
    return j;
}

} // namespace rigi
