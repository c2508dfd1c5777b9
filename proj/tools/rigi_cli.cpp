// Command-line front end: per-graph verdict reports, cover-oracle runs,
// family generation and connectivity-hypothesis verification campaigns.
// Output is one JSON object per line on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 counterexample found, 2 input error,
// 3 empty campaign.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "rigi/rigi.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitEmptyCampaign = 3;

int cmd_check(const std::string& path, bool edgelist, bool no_timings) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitInputError;
    }
    bool had_error = false;
    if (edgelist) {
        try {
            rigi::Graph g = rigi::parse_edge_list(in);
            std::cout << rigi::verdict_to_json(rigi::analyze_graph(g), !no_timings).dump() << "\n";
        } catch (const std::exception& e) {
            std::cerr << path << ": " << e.what() << "\n";
            had_error = true;
        }
    } else {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                rigi::Graph g = rigi::parse_graph6(line);
                std::cout << rigi::verdict_to_json(rigi::analyze_graph(g), !no_timings).dump()
                          << "\n";
            } catch (const std::exception& e) {
                std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
                had_error = true;
            }
        }
    }
    return had_error ? kExitInputError : kExitOk;
}

int cmd_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitInputError;
    }
    bool had_error = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            rigi::Graph g = rigi::parse_graph6(line);
            std::cout << rigi::oracle_report_json(g).dump() << "\n";
        } catch (const std::exception& e) {
            std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
            had_error = true;
        }
    }
    return had_error ? kExitInputError : kExitOk;
}

struct GenerateOptions {
    std::string kind;
    int n = 0;
    int a = 0;
    int b = 0;
    int t = 6;
    int n3 = 30;
    bool unchecked = false;
    std::uint64_t seed = 1;
    std::string out_path;
};

int cmd_generate(const GenerateOptions& opt) {
    rigi::Graph g;
    nlohmann::json sidecar;
    try {
        if (opt.kind == "complete") {
            g = rigi::complete_graph(opt.n);
        } else if (opt.kind == "complete-bipartite") {
            g = rigi::complete_bipartite(opt.a, opt.b);
        } else if (opt.kind == "cycle") {
            g = rigi::cycle_graph(opt.n);
        } else if (opt.kind == "path") {
            g = rigi::path_graph(opt.n);
        } else if (opt.kind == "wheel") {
            g = rigi::wheel_graph(opt.n);
        } else if (opt.kind == "petersen") {
            g = rigi::petersen_graph();
        } else if (opt.kind == "laman") {
            g = rigi::random_laman(opt.n, opt.seed);
        } else if (opt.kind == "ess-nonrigid") {
            rigi::EssTFamilySpec spec{opt.t, opt.n3, opt.seed};
            g = rigi::ess_t_nonrigid(spec, opt.unchecked);
            auto ess = rigi::essential_connectivity(g);
            sidecar["t"] = spec.t;
            sidecar["n3"] = spec.n3;
            sidecar["seed"] = spec.seed;
            sidecar["n"] = g.n;
            sidecar["m"] = g.m();
            sidecar["kappa"] = rigi::vertex_connectivity(g).value;
            sidecar["essential_kappa"] = rigi::detail::essential_json(ess);
            sidecar["rank"] = rigi::rigidity_rank(g);
            sidecar["rank_bound"] = 3 * spec.n3 + spec.nt() * (2 * spec.t - 3);
            sidecar["is_rigid"] = rigi::is_rigid(g);
            sidecar["certified_nonrigid"] = !opt.unchecked;
        } else {
            std::cerr << "unknown kind: " << opt.kind << "\n";
            return kExitInputError;
        }
    } catch (const std::exception& e) {
        std::cerr << "generate failed: " << e.what() << "\n";
        return kExitInputError;
    }

    const std::string line = rigi::to_graph6(g);
    if (opt.out_path.empty()) {
        std::cout << line << "\n";
        if (!sidecar.empty()) std::cerr << sidecar.dump() << "\n";
    } else {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "cannot write " << opt.out_path << "\n";
            return kExitInputError;
        }
        out << line << "\n";
        if (!sidecar.empty()) {
            std::ofstream side(opt.out_path + ".cert.json");
            if (!side) {
                std::cerr << "cannot write " << opt.out_path << ".cert.json\n";
                return kExitInputError;
            }
            side << sidecar.dump(2) << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify_theorem(const std::string& theorem, int samples, int max_n, std::uint64_t seed) {
    rigi::CampaignConfig cfg{theorem, samples, max_n, seed};
    rigi::CampaignReport report;
    try {
        report = rigi::run_campaign(cfg);
    } catch (const std::exception& e) {
        std::cerr << "verify-theorem failed: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cout << rigi::campaign_to_json(report).dump() << "\n";
    if (report.certified == 0) {
        std::cerr << "warning: no certified samples within budget\n";
        return kExitEmptyCampaign;
    }
    if (!report.counterexamples.empty()) {
        std::cerr << "counterexample recorded: this indicates an implementation bug\n";
        return kExitCounterexample;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D combinatorial rigidity toolkit"};
    app.require_subcommand(1);
    bool no_timings = false;
    app.add_flag("--no-timings", no_timings, "omit timings from reports (canonical output)");

    auto* check = app.add_subcommand("check", "verdict report per input graph");
    std::string check_path;
    bool flag_graph6 = false, flag_edgelist = false;
    check->add_option("file", check_path, "input file")->required();
    auto* g6opt = check->add_flag("--graph6", flag_graph6, "input is graph6 lines (default)");
    check->add_flag("--edgelist", flag_edgelist, "input is edge-list text")->excludes(g6opt);

    auto* oracle = app.add_subcommand("oracle", "minimum cover value per input graph");
    std::string oracle_path;
    oracle->add_option("file", oracle_path, "graph6 input file")->required();

    auto* generate = app.add_subcommand("generate", "emit a named graph as graph6");
    GenerateOptions gen;
    generate->add_option("--kind", gen.kind, "complete|complete-bipartite|cycle|path|wheel|"
                                             "petersen|laman|ess-nonrigid")
        ->required();
    generate->add_option("--n", gen.n, "order (complete, cycle, path, wheel, laman)");
    generate->add_option("--a", gen.a, "first part size (complete-bipartite)");
    generate->add_option("--b", gen.b, "second part size (complete-bipartite)");
    generate->add_option("--t", gen.t, "clique size (ess-nonrigid)");
    generate->add_option("--n3", gen.n3, "number of degree-3 vertices (ess-nonrigid)");
    generate->add_flag("--unchecked", gen.unchecked,
                       "allow orders at most 96 without the non-rigidity certificate");
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("-o,--out", gen.out_path, "output file (certificates as .cert.json)");

    auto* verify = app.add_subcommand("verify-theorem", "redundant-rigidity campaign");
    std::string theorem;
    int samples = 50;
    int max_n = 40;
    std::uint64_t seed = 1;
    verify->add_option("--theorem", theorem, "th3ess9 or th4ess6")->required();
    verify->add_option("--samples", samples, "certified samples to collect");
    verify->add_option("--max-n", max_n, "largest instance order");
    verify->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (check->parsed()) return cmd_check(check_path, flag_edgelist, no_timings);
    if (oracle->parsed()) return cmd_oracle(oracle_path);
    if (generate->parsed()) return cmd_generate(gen);
    if (verify->parsed()) {
        if (theorem != "th3ess9" && theorem != "th4ess6") {
            std::cerr << "unknown theorem id: " << theorem << " (expected th3ess9 or th4ess6)\n";
            return kExitInputError;
        }
        return cmd_verify_theorem(theorem, samples, max_n, seed);
    }
    return kExitInputError;
}
