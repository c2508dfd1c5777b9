#include <catch2/catch_amalgamated.hpp>

#include "rigi/covers.hpp"
#include "rigi/generators.hpp"

#include "test_util.hpp"

using namespace rigi;

TEST_CASE("cover validation") {
    Graph k3 = complete_graph(3);
    CHECK_FALSE(validate_cover(k3, Cover{{{0, 1, 2}}}).has_value());

    Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto missing = validate_cover(c4, Cover{{{0, 1}, {1, 2}, {2, 3}}});
    REQUIRE(missing.has_value());
    CHECK(missing->kind == CoverViolation::Kind::uncovered_edge);
    CHECK(missing->edge == Edge{0, 3});

    auto small = validate_cover(k3, Cover{{{0}}});
    REQUIRE(small.has_value());
    CHECK(small->kind == CoverViolation::Kind::part_too_small);
}

TEST_CASE("cover values") {
    CHECK(cover_value(Cover{{{0, 1, 2, 3}}}) == 5);
    CHECK(cover_value(Cover{{{0, 1}, {1, 2}, {2, 3}, {0, 3}}}) == 4);
    CHECK(cover_value(Cover{{{0, 1, 2, 3, 4, 5}}}) == 9);
}

TEST_CASE("minimum cover values on named graphs") {
    auto [k33_value, k33_cover] = min_cover_value_bruteforce(complete_bipartite(3, 3));
    CHECK(k33_value == 9);
    CHECK_FALSE(validate_cover(complete_bipartite(3, 3), k33_cover).has_value());

    Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto [c4_value, c4_cover] = min_cover_value_bruteforce(c4);
    CHECK(c4_value == 4);  // each edge its own part beats any merge
    CHECK(c4_cover.parts.size() == 4);

    auto [k4_value, k4_cover] = min_cover_value_bruteforce(complete_graph(4));
    CHECK(k4_value == 5);

    SECTION("oracle guard") {
        CHECK_THROWS_WITH(min_cover_value_bruteforce(complete_bipartite(3, 5)),
                          Catch::Matchers::ContainsSubstring("oracle limit"));  // 15 edges
        CHECK_NOTHROW(min_cover_value_bruteforce(complete_bipartite(3, 5), CoverGuards{15, 12}));
    }
}

TEST_CASE("edge-partition minimum equals the general cover minimum (n <= 5)") {
    for (int n = 2; n <= 5; ++n)
        for (unsigned long long mask = 0; mask < testutil::graph_count(n); ++mask) {
            Graph g = testutil::graph_from_mask(n, mask);
            auto [value, cover] = min_cover_value_bruteforce(g);
            CHECK(value == testutil::min_general_cover_value(g));
            if (g.m() > 0) CHECK_FALSE(validate_cover(g, cover).has_value());
        }
}

TEST_CASE("deficient covers certify non-rigidity") {
    Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto c4_witness = deficient_cover_witness(c4);
    REQUIRE(c4_witness.has_value());
    CHECK(cover_value(*c4_witness) == 4);
    CHECK(cover_value(*c4_witness) < 2 * 4 - 3 + 1);

    CHECK_FALSE(deficient_cover_witness(complete_bipartite(3, 3)).has_value());

    auto c5_witness = deficient_cover_witness(cycle_graph(5));
    REQUIRE(c5_witness.has_value());
    CHECK(cover_value(*c5_witness) == 5);  // five 2-sets, one per edge
    CHECK_FALSE(validate_cover(cycle_graph(5), *c5_witness).has_value());
}

TEST_CASE("rigidity decision agrees with the cover bound") {
    CHECK(verify_lovasz_yemini(complete_graph(4)));
    Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(verify_lovasz_yemini(c4));
    CHECK(verify_lovasz_yemini(delete_edge(complete_bipartite(3, 3), {0, 3})));

    SECTION("random corpus within the guards") {
        SplitMix64 rng(41);
        for (int it = 0; it < 150; ++it) {
            Graph g = testutil::random_graph(rng, 8, 12);
            CHECK(verify_lovasz_yemini(g));
        }
    }

    SECTION("minimum cover value dominates the rank") {
        SplitMix64 rng(42);
        for (int it = 0; it < 100; ++it) {
            Graph g = testutil::random_graph(rng, 8, 12);
            auto [value, cover] = min_cover_value_bruteforce(g);
            CHECK(value >= rigidity_rank(g));
        }
    }
}
