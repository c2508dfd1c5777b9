#include <catch2/catch_amalgamated.hpp>

#include "rigi/generators.hpp"
#include "rigi/covers.hpp"

#include "test_util.hpp"

using namespace rigi;

TEST_CASE("standard graphs") {
    CHECK(standard_graph(StandardKind::complete, 4) == complete_graph(4));
    CHECK(complete_graph(4).m() == 6);
    CHECK(complete_bipartite(3, 3).m() == 9);
    Graph w6 = wheel_graph(6);
    CHECK(w6.n == 6);
    CHECK(w6.m() == 10);  // hub plus a 5-cycle
    CHECK(w6.degree(0) == 5);
    CHECK(petersen_graph().m() == 15);
    for (int v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(wheel_graph(3), std::invalid_argument);
}

TEST_CASE("random laman graphs are minimally rigid") {
    CHECK(random_laman(3, 1) == complete_graph(3));  // the only option
    CHECK(random_laman(2, 9).m() == 1);

    Graph g6 = random_laman(6, 7);
    CHECK(g6.m() == 9);
    CHECK(rigidity_rank(g6) == 9);

    SplitMix64 rng(51);
    for (int it = 0; it < 30; ++it) {
        int n = rng.next_int(2, 14);
        std::uint64_t seed = rng.next();
        Graph g = random_laman(n, seed);
        CHECK(g.m() == 2 * n - 3);
        CHECK(rigidity_rank(g) == 2 * n - 3);
        CHECK(g == random_laman(n, seed));  // deterministic in (n, seed)
    }
}

TEST_CASE("biregular bipartite bases") {
    EssTFamilySpec small{3, 4, 1};
    Graph t = generate_biregular_bipartite(small);
    CHECK(t.n == 8);
    for (int v = 0; v < t.n; ++v) CHECK(t.degree(v) == 3);
    CHECK(vertex_connectivity(t).value >= 3);

    SECTION("infeasible: degree-t side cannot find t distinct neighbors") {
        CHECK_THROWS_WITH(generate_biregular_bipartite(EssTFamilySpec{6, 4, 1}),
                          Catch::Matchers::ContainsSubstring("infeasible"));
    }

    SECTION("degree audit at production size") {
        EssTFamilySpec spec{6, 30, 1};
        Graph base = generate_biregular_bipartite(spec);
        CHECK(base.n == 45);
        for (int v = 0; v < 30; ++v) CHECK(base.degree(v) == 3);
        for (int v = 30; v < 45; ++v) CHECK(base.degree(v) == 6);
        CHECK(vertex_connectivity(base).value >= 3);
        CHECK(base == generate_biregular_bipartite(spec));  // deterministic
    }

    SECTION("spec invariants enforced") {
        CHECK_THROWS_AS(generate_biregular_bipartite(EssTFamilySpec{9, 9, 1}),
                        std::invalid_argument);  // t out of range
        CHECK_THROWS_AS(generate_biregular_bipartite(EssTFamilySpec{5, 7, 1}),
                        std::invalid_argument);  // t does not divide 3*n3
    }
}

TEST_CASE("clique expansion") {
    Graph t33 = complete_bipartite(3, 3);
    Graph g = expand_to_clique_family(t33, 3);
    CHECK(g.n == 12);  // three triangles plus the three degree-3 originals
    int deg3 = 0;
    for (int v = 0; v < g.n; ++v) {
        CHECK(g.degree(v) == 3);
        ++deg3;
    }
    CHECK(deg3 == 12);
    CHECK(g.m() == 3 * 3 + 3 * 3);  // clique edges plus attachment edges

    SECTION("scale law and degree multiset") {
        EssTFamilySpec spec{6, 6, 2};
        Graph base = generate_biregular_bipartite(spec);
        Graph fam = expand_to_clique_family(base, 6);
        CHECK(fam.n == 4 * spec.n3);
        int low = 0, high = 0;
        for (int v = 0; v < fam.n; ++v) {
            if (fam.degree(v) == 3) ++low;
            else if (fam.degree(v) == 6) ++high;
        }
        CHECK(low == spec.n3);
        CHECK(high == spec.t * spec.nt());
    }

    SECTION("non-biregular inputs rejected") {
        CHECK_THROWS_WITH(expand_to_clique_family(complete_graph(4), 3),
                          Catch::Matchers::ContainsSubstring("not biregular"));
        CHECK_THROWS_WITH(expand_to_clique_family(complete_bipartite(4, 3), 3),
                          Catch::Matchers::ContainsSubstring("not biregular"));
    }
}

TEST_CASE("certified non-rigid family instances") {
    EssTFamilySpec spec{3, 27, 1};
    Graph g = ess_t_nonrigid(spec);
    CHECK(g.n == 108);
    CHECK(is_k_connected(g, 3));
    CHECK(is_essentially_k_connected(g, 3));
    const int rank = rigidity_rank(g);
    const int bound = 3 * spec.n3 + spec.nt() * (2 * spec.t - 3);
    CHECK(rank <= bound);
    CHECK(bound < 2 * g.n - 3);
    CHECK_FALSE(is_rigid(g));
    CHECK(g == ess_t_nonrigid(spec));  // deterministic

    SECTION("preconditions") {
        CHECK_THROWS_AS(ess_t_nonrigid(EssTFamilySpec{9, 27, 1}), std::invalid_argument);
        CHECK_THROWS_AS(ess_t_nonrigid(EssTFamilySpec{6, 6, 1}), std::invalid_argument);  // order 24
        CHECK_NOTHROW(ess_t_nonrigid(EssTFamilySpec{6, 6, 1}, true));  // unchecked small instance
    }
}

TEST_CASE("certified connectivity samplers") {
    auto k3m = random_3conn_ess9(15, 4);
    REQUIRE(k3m.has_value());
    CHECK(is_k_connected(*k3m, 3));
    CHECK(is_essentially_k_connected(*k3m, 9));

    // K_{3,12} has no essential cut at all
    Graph k312 = complete_bipartite(3, 12);
    CHECK(essential_connectivity(k312).unbounded());
    CHECK(is_essentially_k_connected(k312, 9));

    auto four = random_4conn_ess6(12, 4);
    REQUIRE(four.has_value());
    CHECK(is_k_connected(*four, 4));
    CHECK(is_essentially_k_connected(*four, 6));

    CHECK_THROWS_AS(random_3conn_ess9(9, 1), std::invalid_argument);  // n >= k+1 required

    SECTION("a 6-regular circulant with a 6-cut is rejected for ess-9") {
        Graph c = circulant_graph(20, {1, 2, 3});
        CHECK_FALSE(is_essentially_k_connected(c, 9));
        CHECK(is_essentially_k_connected(c, 6));
    }

    SECTION("the tight clique-expansion case for essential 9-connectivity") {
        // three K9 blocks on a K_{9,3} base: 3-connected, essentially
        // 9-connected, and still redundantly rigid
        Graph g = detail::expand_clique(complete_bipartite(9, 3), 9, 9);
        CHECK(g.n == 36);
        CHECK(is_k_connected(g, 3));
        auto ess = essential_connectivity(g);
        REQUIRE(ess.value.has_value());
        CHECK(*ess.value == 9);
        CHECK(is_redundantly_rigid(g).redundant);
        CHECK(is_globally_rigid(g).globally_rigid);
    }
}
