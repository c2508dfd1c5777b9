#include <catch2/catch_amalgamated.hpp>

#include "rigi/generators.hpp"
#include "rigi/matrix_rank.hpp"
#include "rigi/rigidity.hpp"

#include "test_util.hpp"

using namespace rigi;

TEST_CASE("pebble game accepts exactly the sparse edges") {
    PebbleGame fresh(2);
    CHECK(fresh.attempt_insert(0, 1));  // 2+2 pebbles available

    SECTION("triangle saturates three vertices") {
        PebbleGame game(3);
        CHECK(game.attempt_insert(0, 1));
        CHECK(game.attempt_insert(0, 2));
        CHECK(game.attempt_insert(1, 2));
        CHECK_FALSE(game.attempt_insert(0, 1));  // fourth insert on n=3 must fail
        CHECK(game.accepted_count() == 3);
        CHECK(game.invariants_ok());
    }

    SECTION("K4 keeps five of six edges") {
        PebbleGame game(4);
        int accepted = 0;
        for (const auto& e : complete_graph(4).edges) accepted += game.attempt_insert(e) ? 1 : 0;
        CHECK(accepted == 5);
        CHECK(game.invariants_ok());
    }

    SECTION("loop edges are rejected outright") {
        PebbleGame game(3);
        CHECK_THROWS_WITH(game.attempt_insert(1, 1), Catch::Matchers::ContainsSubstring("loop"));
    }
}

TEST_CASE("pebble invariants hold after every move") {
    SplitMix64 rng(31);
    for (int it = 0; it < 30; ++it) {
        Graph g = testutil::random_graph(rng, 10, 25);
        if (g.n < 2) continue;
        PebbleGame game(g.n);
        for (int move = 0; move < 60; ++move) {
            int u = rng.next_int(0, g.n - 1);
            int v = rng.next_int(0, g.n - 1);
            if (u == v) continue;
            game.attempt_insert(u, v);
            REQUIRE(game.invariants_ok());
        }
    }
}

TEST_CASE("rigidity rank on named graphs") {
    CHECK(rigidity_rank(complete_bipartite(3, 3)) == 9);
    CHECK(rigidity_rank(cycle_graph(3)) == 3);
    CHECK(rigidity_rank(cycle_graph(5)) == 5);
    CHECK(rigidity_rank(complete_graph(4)) == 5);
}

TEST_CASE("rank is order-invariant") {
    SplitMix64 rng(32);
    for (int it = 0; it < 25; ++it) {
        Graph g = testutil::random_graph(rng, 9, 16);
        const int rank = rigidity_rank(g);
        for (int p = 0; p < 20; ++p) {
            auto edges = g.edges;
            rng.shuffle(edges);
            PebbleGame game(g.n);
            for (const auto& e : edges) game.attempt_insert(e);
            CHECK(game.accepted_count() == rank);
        }
    }
}

TEST_CASE("rigidity decisions") {
    CHECK(is_rigid(complete_bipartite(3, 3)));
    CHECK_FALSE(is_rigid(cycle_graph(5)));
    CHECK(is_rigid(complete_graph(1)));
    CHECK(is_rigid(from_edge_list(1, {})));
    CHECK(is_rigid(from_edge_list(2, {{0, 1}})));
    CHECK_FALSE(is_rigid(from_edge_list(2, {})));
}

TEST_CASE("spanning minimally rigid subgraph") {
    auto k4 = spanning_minimally_rigid_subgraph(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->size() == 5);
    CHECK(testutil::sparse_by_definition(4, *k4));

    auto k33 = spanning_minimally_rigid_subgraph(complete_bipartite(3, 3));
    REQUIRE(k33.has_value());
    CHECK(k33->size() == 9);
    CHECK(*k33 == complete_bipartite(3, 3).edges);  // minimally rigid: everything kept

    CHECK_FALSE(spanning_minimally_rigid_subgraph(cycle_graph(5)).has_value());

    SECTION("present iff rigid, sparse by definition, spans") {
        SplitMix64 rng(33);
        for (int it = 0; it < 60; ++it) {
            Graph g = testutil::random_graph(rng, 9, 20);
            auto laman = spanning_minimally_rigid_subgraph(g);
            if (g.n < 2) continue;
            CHECK(laman.has_value() == is_rigid(g));
            if (!laman) continue;
            CHECK(static_cast<int>(laman->size()) == 2 * g.n - 3);
            CHECK(testutil::sparse_by_definition(g.n, *laman));
            std::vector<int> deg(g.n, 0);
            for (const auto& [u, v] : *laman) ++deg[u], ++deg[v];
            for (int v = 0; v < g.n; ++v) CHECK(deg[v] >= 1);
        }
    }
}

TEST_CASE("redundant rigidity") {
    // every single-edge deletion of K4 leaves 2n-3 edges that are still sparse
    for (const auto& e : complete_graph(4).edges) {
        Graph del = delete_edge(complete_graph(4), e);
        CHECK(testutil::sparse_by_definition(4, del.edges));
        CHECK(is_rigid(del));
    }
    CHECK(is_redundantly_rigid(complete_graph(4)).redundant);

    auto k33 = is_redundantly_rigid(complete_bipartite(3, 3));
    CHECK_FALSE(k33.redundant);
    CHECK(k33.witness == Edge{0, 3});  // least edge of a minimally rigid graph

    CHECK(is_redundantly_rigid(complete_graph(1)).redundant);
    CHECK_FALSE(is_redundantly_rigid(cycle_graph(5)).redundant);

    SECTION("implications among the flags") {
        SplitMix64 rng(34);
        for (int it = 0; it < 60; ++it) {
            Graph g = testutil::random_graph(rng, 8, 14);
            auto rr = is_redundantly_rigid(g);
            if (rr.redundant && g.n >= 2) CHECK(is_rigid(g));
            auto report = rigidity_report(g);
            if (report.minimally_rigid && g.n >= 3) CHECK_FALSE(rr.redundant);
            if (!rr.redundant && g.m() > 0) {
                REQUIRE(rr.witness.has_value());
                CHECK_FALSE(is_rigid(delete_edge(g, *rr.witness)));
            }
        }
    }
}

TEST_CASE("global rigidity decision rule") {
    auto k3 = is_globally_rigid(complete_graph(3));
    CHECK(k3.globally_rigid);
    CHECK(k3.reason == GlobalRigidityReason::small_complete);

    auto k33 = is_globally_rigid(complete_bipartite(3, 3));
    CHECK_FALSE(k33.globally_rigid);
    CHECK(k33.reason == GlobalRigidityReason::fails_redundancy);
    REQUIRE(k33.edge_witness.has_value());

    auto k5 = is_globally_rigid(complete_graph(5));
    CHECK(k5.globally_rigid);
    CHECK(k5.reason == GlobalRigidityReason::three_connected_and_redundant);
    CHECK(vertex_connectivity(complete_graph(5)).value == 4);

    auto c6 = is_globally_rigid(cycle_graph(6));
    CHECK_FALSE(c6.globally_rigid);
    CHECK(c6.reason == GlobalRigidityReason::fails_connectivity);
    REQUIRE(c6.cut_witness.has_value());
    CHECK(components(delete_vertices(cycle_graph(6), *c6.cut_witness).graph).count() > 1);

    SECTION("rule is literally 3-connected plus redundantly rigid") {
        SplitMix64 rng(35);
        for (int it = 0; it < 50; ++it) {
            Graph g = testutil::random_graph(rng, 8, 16);
            bool expect = (g.n <= 3 && g.is_complete()) ||
                          (is_k_connected(g, 3) && is_redundantly_rigid(g).redundant);
            CHECK(is_globally_rigid(g).globally_rigid == expect);
        }
    }
}

TEST_CASE("numeric rank agrees with the pebble game") {
    CHECK(rigidity_matrix_rank_probabilistic(complete_bipartite(3, 3), 1) == 9);
    CHECK(rigidity_matrix_rank_probabilistic(cycle_graph(5), 1) == 5);
    CHECK(rigidity_matrix_rank_probabilistic(complete_graph(4), 1) == 5);

    SECTION("exhaustive n <= 5 and random graphs") {
        for (int n = 1; n <= 5; ++n)
            for (unsigned long long mask = 0; mask < testutil::graph_count(n); ++mask) {
                Graph g = testutil::graph_from_mask(n, mask);
                CHECK(detail::rigidity_matrix_rank_modp(g, 77 + mask) == rigidity_rank(g));
            }
        SplitMix64 rng(36);
        for (int it = 0; it < 200; ++it) {
            Graph g = testutil::random_graph(rng, 10, 24);
            CHECK(detail::rigidity_matrix_rank_modp(g, rng.next()) == rigidity_rank(g));
        }
    }
}

TEST_CASE("laman assembly") {
    // K_{3,3} base inside K_{3,4}: the seventh vertex attaches with two edges
    Graph k34 = complete_bipartite(3, 4);
    std::vector<Edge> base;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) base.push_back(make_edge(u, v));
    auto grown = assemble_spanning_laman(k34, base);
    REQUIRE(grown.ok());
    CHECK(grown.edges->size() == 11);  // 2*7-3
    CHECK(testutil::sparse_by_definition(7, *grown.edges));

    SECTION("identity on a full minimally rigid graph") {
        Graph laman = random_laman(8, 5);
        auto kept = assemble_spanning_laman(laman, laman.edges);
        REQUIRE(kept.ok());
        CHECK(*kept.edges == laman.edges);
    }

    SECTION("degree-1 pendant gets stuck") {
        Graph k33 = complete_bipartite(3, 3);
        std::vector<Edge> edges = k33.edges;
        edges.push_back({0, 6});
        Graph pendant = from_edge_list(7, edges);
        auto stuck = assemble_spanning_laman(pendant, k33.edges);
        CHECK_FALSE(stuck.ok());
        CHECK(stuck.stuck_vertex == 6);
    }

    SECTION("forbidden edge is never used") {
        Graph k5 = complete_graph(5);
        std::vector<Edge> base{{0, 1}, {0, 2}, {1, 2}};
        Edge forbidden{0, 3};
        auto grown2 = assemble_spanning_laman(k5, base, forbidden);
        REQUIRE(grown2.ok());
        CHECK(std::find(grown2.edges->begin(), grown2.edges->end(), forbidden) ==
              grown2.edges->end());
        CHECK(grown2.edges->size() == 7);
    }

    SECTION("bad bases are rejected") {
        Graph k4 = complete_graph(4);
        CHECK_THROWS_WITH(assemble_spanning_laman(k4, k4.edges),
                          Catch::Matchers::ContainsSubstring("not sparse"));
        CHECK_THROWS_WITH(assemble_spanning_laman(k4, {{0, 1}, {2, 3}}),
                          Catch::Matchers::ContainsSubstring("minimally rigid"));
    }
}
