#include <doctest.h>

#include <algorithm>

#include "posgames/constructions.hpp"
#include "posgames/errors.hpp"
#include "posgames/game.hpp"
#include "posgames/solver.hpp"

using namespace posgames;

TEST_CASE("branched path sizes") {
    auto g11 = build_gtb(1, 1);
    CHECK(g11.digraph.nv() == 2);
    CHECK(g11.digraph.arc_count() == 1);
    auto g32 = build_gtb(3, 2);
    CHECK(g32.digraph.nv() == 6);
    CHECK(g32.digraph.arc_count() == 9);
    CHECK(g32.digraph.start() == 0);
    CHECK(g32.digraph.end() == 3);
    for (int t = 1; t <= 5; ++t)
        for (int b = 1; b <= 3; ++b) {
            auto g = build_gtb(t, b).digraph;
            int v = 2;
            long long arcs = 1;
            for (int i = 1; i < t; ++i) {
                v = v + 1 + b * (v - 2);
                arcs *= b + 1;
            }
            CHECK(g.nv() == v);
            CHECK(g.arc_count() == arcs);
        }
    CHECK_THROWS_AS(build_gtb(0, 1), InvalidArgument);
    CHECK_THROWS_AS(build_gtb(30, 3), GuardExceeded);
}

TEST_CASE("branched path structure") {
    for (int t = 1; t <= 4; ++t)
        for (int b = 1; b <= 3; ++b) {
            CAPTURE(t);
            CAPTURE(b);
            auto built = build_gtb(t, b);
            const auto& g = built.digraph;
            CHECK(g.is_acyclic());
            CHECK(g.distances()[0][t] == 1 << (t - 1));
            for (int v = 0; v < g.nv(); ++v)
                if (v != 0 && v != t) CHECK(g.out_degree(v) == b);
            CHECK(built.layout.arcs.size() == static_cast<std::size_t>(g.arc_count()));
            CHECK(built.layout.inner_vertices.size() == static_cast<std::size_t>(g.nv() - 2));
        }
}

TEST_CASE("branched star sizes") {
    auto h31 = build_htb(3, 1).digraph;
    CHECK(h31.nv() == 3);
    CHECK(h31.arc_count() == 4);
    auto h32 = build_htb(3, 2);
    CHECK(h32.digraph.nv() == 4);
    CHECK(h32.digraph.arc_count() == 9);
    CHECK(h32.copies.size() == 3);
    CHECK(h32.copies[2].size() == 3);
    auto h41 = build_htb(4, 1).digraph;
    CHECK(h41.nv() == 7);
    CHECK(h41.arc_count() == 8);
    CHECK_FALSE(h41.end().has_value());
    CHECK_THROWS_AS(build_htb(2, 1), InvalidArgument);
}

TEST_CASE("H(m,b,s,t) examples") {
    auto a = build_hmbst(1, 1, 3, 3);
    CHECK(a.hypergraph.n() == 7);
    CHECK(a.hypergraph.edge_count() == 4);
    CHECK(a.family.sets.size() == 3);
    auto b = build_hmbst(1, 2, 3, 3);
    CHECK(b.hypergraph.n() == 13);
    CHECK(b.hypergraph.edge_count() == 9);
    CHECK_THROWS_AS(build_hmbst(1, 1, 2, 3), InvalidArgument);
    CHECK_THROWS_AS(build_hmbst(2, 1, 5, 3), InvalidArgument);
    CHECK_THROWS_AS(build_hmbst(1, 1, 3, 2), InvalidArgument);
    CHECK_THROWS_AS(build_hmbst(1, 3, 3, 6), GuardExceeded);
}

TEST_CASE("H(m,b,s,t) is uniform with a well-behaved family") {
    const int params[][4] = {{1, 1, 3, 3}, {1, 2, 3, 3}, {1, 1, 3, 4}, {1, 1, 4, 4}, {1, 1, 5, 5},
                             {2, 2, 5, 3}, {2, 2, 6, 3}, {2, 2, 7, 4}, {1, 2, 4, 4}, {2, 3, 5, 3}};
    for (const auto& p : params) {
        CAPTURE(p[0]);
        CAPTURE(p[2]);
        CAPTURE(p[3]);
        auto built = build_hmbst(p[0], p[1], p[2], p[3]);
        for (const auto& e : built.hypergraph.edges()) CHECK(e.count() == p[2]);
        for (const auto& v : built.family.sets) CHECK(v.count() == p[0]);
        CHECK(satisfies_overlap_properties(built.hypergraph, built.family));
        CHECK(built.layout.lifted == (p[2] <= 3 * p[0]));
        CHECK(static_cast<int>(built.hypergraph.labels().size()) == built.hypergraph.n());
    }
}

TEST_CASE("overlap property check rejects violations") {
    auto h = Hypergraph::from_lists(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK(satisfies_overlap_properties(h, {{ElementSet{2}}}));
    CHECK_FALSE(satisfies_overlap_properties(h, {}));
    CHECK_FALSE(satisfies_overlap_properties(h, {{ElementSet{1, 3}, ElementSet{2}}}));
    CHECK_FALSE(satisfies_overlap_properties(h, {{ElementSet{2}, ElementSet{2, 4}}}));
}

TEST_CASE("gadget on a single-element edge") {
    auto h = Hypergraph::from_lists(2, {{0}});
    auto g = build_gadget(h, 1);
    CHECK(g.covers.size() == 2);
    CHECK(g.block_size == 16);
    CHECK(g.graph.n() == 34);
    CHECK(g.graph.has_edge(0, 1));
    CHECK(g.graph.degree(1) == 1 + 16);
    CHECK(g.graph.degree(0) == 1 + 32);
    auto minimal = build_gadget(h, 1, GadgetOptions{true, 1000});
    CHECK(minimal.covers.size() == 1);
    CHECK_THROWS_AS(build_gadget(h, 1, GadgetOptions{false, 10}), GuardExceeded);
    CHECK_THROWS_AS(build_gadget(Hypergraph(21, {}), 1), GuardExceeded);
}

TEST_CASE("non-monotone family") {
    auto b2 = build_nonmonotone({2});
    CHECK(b2.n() == 6);
    CHECK(b2.edge_count() == 8);
    auto b1 = build_nonmonotone({1});
    CHECK(b1.n() == 2);
    CHECK(b1.edge_count() == 1);
    auto b12 = build_nonmonotone({1, 2});
    CHECK(b12.n() == 4);
    CHECK(b12.edge_count() == 2);
    auto b13 = build_nonmonotone({1, 3});
    CHECK(b13.n() == 2 + 6);
    CHECK(b13.edge_count() == 9);
    CHECK_THROWS_AS(build_nonmonotone({}), InvalidArgument);
    CHECK_THROWS_AS(build_nonmonotone({0}), InvalidArgument);
}

TEST_CASE("composite constructions") {
    auto gap = build_first_mover_gap(1, 1, 3, 3, 3, 3);
    CHECK(gap.hypergraph.n() == 14);
    CHECK(gap.family.sets.size() == 6);
    CHECK(satisfies_overlap_properties(gap.hypergraph, gap.family));
    auto gap2 = build_first_mover_gap(1, 2, 3, 3, 3, 3);
    CHECK(gap2.hypergraph.n() == 39);
    CHECK_THROWS_AS(build_first_mover_gap(1, 1, 3, 4, 3, 3), InvalidArgument);

    auto small = build_first_mover_gap_with_small_edge(1, 2, 2, 3, 3, 3, 3);
    CHECK(small.hypergraph.min_edge_size() == 2);
    CHECK(satisfies_overlap_properties(small.hypergraph, small.family));
    CHECK_THROWS_AS(build_first_mover_gap_with_small_edge(2, 2, 2, 5, 5, 3, 3), InvalidArgument);

    auto large = build_large_before_small(1, 1, 3, 4);
    CHECK(large.n() == 31);
    CHECK(large.min_edge_size() == 3);
    CHECK(large.edge_count() == 16 + binomial(31, 4));

    auto fast = build_fast_versus_small(1, 1, 3, 3, 3, 3);
    CHECK(fast.hypergraph.n() == 14);
    CHECK(fast.hypergraph.edge_sizes() == std::vector<int>{3});
    CHECK_THROWS_AS(build_fast_versus_small(1, 1, 3, 4, 3, 3), InvalidArgument);
    auto mixed = build_fast_versus_small(1, 1, 3, 4, 4, 4);
    CHECK(mixed.hypergraph.edge_sizes() == std::vector<int>{3, 4});
}

TEST_CASE("waiter-client gap family") {
    auto h3 = build_wc_pairs_family(3);
    CHECK(h3.n() == 8);
    CHECK(h3.edge_count() == 4);
    for (const auto& e : h3.edges()) CHECK(e.count() == 2);
    auto h4 = build_wc_pairs_family(4);
    CHECK(h4.n() == 10);
    CHECK(h4.edge_count() == 8);
    for (const auto& e : h4.edges()) CHECK(e.count() == 3);
    CHECK(build_complete_uniform(6, 3).edge_count() == 20);
    auto gap = build_wc_gap(3, 3);
    CHECK(gap.n() == 14);
    CHECK(gap.edge_count() == 24);
    CHECK_THROWS_AS(build_wc_gap(2, 3), InvalidArgument);
}

TEST_CASE("fast and small wins on a composite board") {
    auto f = build_fast_versus_small(1, 1, 3, 4, 4, 5);
    MoveRestriction r{f.family.sets};
    auto res = game_values(GameSpec::maker_breaker(f.hypergraph, 1, 1, Player::Maker), {}, &r);
    CHECK(res.min_rounds == 4);
    CHECK(res.min_size == 3);
    CHECK(res.frontier == std::vector<std::pair<int, int>>{{5, 3}, {4, 4}});
}

TEST_CASE("solver on the branched constructions") {
    for (int t = 1; t <= 3; ++t) {
        auto g = build_gtb(t, 2).digraph;
        CHECK(solve_aux_game(g, 2, ElementSet{0, t}, Objective::within(t)));
        if (t > 1) CHECK_FALSE(solve_aux_game(g, 2, ElementSet{0, t}, Objective::within(t - 1)));
        CHECK_FALSE(solve_aux_game(g, 2, ElementSet{t}, Objective::unbounded()));
    }
    auto h = build_hmbst(1, 1, 3, 3);
    MoveRestriction r{h.family.sets};
    CHECK_NOTHROW(validate_restriction(h.hypergraph, 1, 1, r));
    CHECK(decide_mb(h.hypergraph, 1, 1, Player::Maker, Objective::within(3, 3), &r));
    CHECK_FALSE(decide_mb(h.hypergraph, 1, 1, Player::Maker, Objective::within(2, 3), &r));
    for (auto biases : std::vector<std::vector<int>>{{1}, {2}, {1, 2}}) {
        auto nm = build_nonmonotone(biases);
        for (int b = 1; b <= 3; ++b) {
            const bool in_set = std::find(biases.begin(), biases.end(), b) != biases.end();
            CHECK(decide_mb(nm, b, b, Player::Maker, Objective::unbounded()) == !in_set);
        }
    }
}
