#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posgames/errors.hpp"
#include "posgames/game.hpp"
#include "posgames/json_io.hpp"

using namespace posgames;

TEST_CASE("element set basics") {
    ElementSet s{0, 5, 64, 200};
    CHECK(s.count() == 4);
    CHECK(s.first() == 0);
    CHECK(s.next(6) == 64);
    CHECK(s.last() == 200);
    CHECK(ElementSet::prefix(70).count() == 70);
    CHECK((s - ElementSet{5}).to_vector() == std::vector<int>{0, 64, 200});
    CHECK(ElementSet{1, 2}.is_subset_of(ElementSet{0, 1, 2}));
    CHECK_THROWS_AS(s.set(kMaxElements), InvalidArgument);
    int visited = 0;
    for_each_k_subset(ElementSet::prefix(5), 2, [&](const ElementSet&) {
        ++visited;
        return true;
    });
    CHECK(visited == 10);
}

TEST_CASE("hypergraph construction canonicalizes") {
    auto h = Hypergraph::from_lists(3, {{0, 1}, {1, 2}});
    CHECK(h.n() == 3);
    CHECK(h.edge_count() == 2);
    CHECK(Hypergraph::from_lists(3, {{1, 0}, {0, 1}}).edge_lists() == std::vector<std::vector<int>>{{0, 1}});
    CHECK_THROWS_AS(Hypergraph::from_lists(2, {{0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph::from_lists(2, {{}}), InvalidArgument);
}

TEST_CASE("minimalize") {
    CHECK(minimalize(Hypergraph::from_lists(2, {{0}, {0, 1}})).edge_lists() == std::vector<std::vector<int>>{{0}});
    auto anti = Hypergraph::from_lists(3, {{0, 1}, {1, 2}});
    CHECK(minimalize(anti) == anti);
    CHECK(minimalize(Hypergraph(3, {})).edge_count() == 0);
}

TEST_CASE("disjoint union shifts the second board") {
    auto a = Hypergraph::from_lists(2, {{0, 1}});
    auto b = Hypergraph::from_lists(1, {{0}});
    auto u = disjoint_union(a, b);
    CHECK(u.n() == 3);
    CHECK(u.edge_lists() == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(disjoint_union(a, Hypergraph(0, {})) == a);
    CHECK(disjoint_union(a, a).edge_lists() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("transversal hypergraph") {
    CHECK(transversal_hypergraph(Hypergraph::from_lists(2, {{0}, {1}})).family.edge_lists() ==
          std::vector<std::vector<int>>{{0, 1}});
    CHECK(transversal_hypergraph(Hypergraph::from_lists(3, {{0, 1}, {1, 2}})).family.edge_lists() ==
          std::vector<std::vector<int>>{{0, 2}, {1}});
    auto degenerate = transversal_hypergraph(Hypergraph(2, {}));
    CHECK(degenerate.degenerate);
    CHECK(degenerate.family.edge_count() == 0);
    CHECK_THROWS_AS(transversal_hypergraph(Hypergraph(25, {ElementSet{0}})), GuardExceeded);
}

TEST_CASE("transversal hypergraph matches brute force") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        auto h = oracle::random_hypergraph(n, 1 + static_cast<int>(rng() % 5), rng);
        auto t = transversal_hypergraph(h).family;
        CHECK(t == oracle::minimal_transversals(h));
        for (const auto& e : t.edges()) {
            for (const auto& f : h.edges()) CHECK(e.intersects(f));
            e.for_each([&](int x) {
                ElementSet smaller = e;
                smaller.reset(x);
                bool hits_all = true;
                for (const auto& f : h.edges()) hits_all = hits_all && smaller.intersects(f);
                CHECK_FALSE(hits_all);
            });
        }
    }
}

TEST_CASE("minimalize is idempotent") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
        auto h = oracle::random_hypergraph(6, 6, rng);
        CHECK(minimalize(minimalize(h)) == minimalize(h));
    }
}

TEST_CASE("add all k-subsets") {
    CHECK(add_all_k_subsets(Hypergraph(3, {}), 2).edge_count() == 3);
    CHECK(add_all_k_subsets(Hypergraph::from_lists(3, {{0, 1}}), 2).edge_count() == 3);
    CHECK(add_all_k_subsets(Hypergraph(4, {}), 4).edge_lists() == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK_THROWS_AS(add_all_k_subsets(Hypergraph(3, {}), 0), InvalidArgument);
    CHECK_THROWS_AS(add_all_k_subsets(Hypergraph(60, {}), 30), GuardExceeded);
}

TEST_CASE("simple graph") {
    SimpleGraph g(4, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.is_connected());
    CHECK_THROWS_AS(SimpleGraph(2, {{1, 1}}), InvalidArgument);
    CHECK(graphs::cycle(5).edge_count() == 5);
    CHECK(graphs::path(4).is_tree());
    std::vector<int> kept;
    auto smaller = graphs::path(4).without({0, 1}, &kept);
    CHECK(smaller == graphs::path(2));
    CHECK(kept == std::vector<int>{2, 3});
}

TEST_CASE("free tree enumeration counts") {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        auto trees = graphs::all_free_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        for (const auto& t : trees) CHECK(t.is_tree());
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) CHECK(graphs::random_tree(9, rng).is_tree());
}

TEST_CASE("digraph distances and acyclicity") {
    RootedDigraph d(3, {{0, 1}, {1, 2}, {0, 1}}, 0, 2);
    CHECK(d.out_degree(0) == 2);
    CHECK(d.distances()[0][2] == 2);
    CHECK(d.distances()[2][0] == -1);
    CHECK(d.is_acyclic());
    CHECK_FALSE(RootedDigraph(2, {{0, 1}, {1, 0}}, 0).is_acyclic());
    CHECK_THROWS_AS(RootedDigraph(2, {{0, 2}}, 0), InvalidArgument);
}

TEST_CASE("json round trips") {
    auto h = Hypergraph::from_lists(3, {{0, 1}, {2}}, {"a", "b", "c"});
    CHECK(hypergraph_from_json(to_json(h)) == h);
    auto g = graphs::cycle(5);
    CHECK(graph_from_json(to_json(g)) == g);
    RootedDigraph d(3, {{0, 1}, {1, 2}}, 0, 2);
    CHECK(digraph_from_json(to_json(d)) == d);
    RootedDigraph open(2, {{0, 1}}, 0);
    CHECK(digraph_from_json(to_json(open)) == open);
    SolveResult r{true, 3, std::nullopt, {{3, 4}, {2, 5}}};
    CHECK(solve_result_from_json(to_json(r)) == r);
    CHECK(to_json(SolveResult{}).dump() ==
          R"({"frontier":[],"maker_wins":false,"min_rounds":null,"min_size":null,"type":"solve_result"})");
    CHECK_THROWS_AS(hypergraph_from_json(json{{"type", "graph"}}), InvalidArgument);
    CHECK_THROWS_AS(hypergraph_from_json(json{{"type", "hypergraph"}, {"n", 2}}), InvalidArgument);
}

TEST_CASE("maker-breaker moves use exact bias") {
    auto spec = GameSpec::maker_breaker(Hypergraph::from_lists(2, {{0, 1}}), 1, 1);
    auto s = initial_state(spec);
    CHECK(legal_moves(spec, s).size() == 2);
    auto wide = GameSpec::maker_breaker(Hypergraph::from_lists(2, {{0, 1}}), 3, 1);
    auto moves = legal_moves(wide, initial_state(wide));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].elements == ElementSet{0, 1});
    auto after = apply_move(spec, s, Move::claim(ElementSet{0}));
    CHECK(after.maker == ElementSet{0});
    CHECK(after.maker_moves == 1);
    CHECK(after.to_move == Player::Breaker);
    CHECK_THROWS_AS(apply_move(spec, s, Move::claim(ElementSet{0, 1})), IllegalMove);
}

TEST_CASE("waiter-client moves") {
    auto spec = GameSpec::waiter_client(Hypergraph::from_lists(3, {{0, 1}}));
    auto s = apply_move(spec, initial_state(spec), Move::offer(ElementSet{0, 1}));
    CHECK(legal_moves(spec, s).size() == 2);
    s = apply_move(spec, s, Move::choose(1));
    CHECK(s.maker == ElementSet{0});
    CHECK(s.breaker == ElementSet{1});
    CHECK(s.maker_moves == 1);
    auto moves = legal_moves(spec, s);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].elements == ElementSet{2});
    s = apply_move(spec, s, moves[0]);
    s = apply_move(spec, s, Move::choose(2));
    CHECK(s.breaker.test(2));
    CHECK(status(spec, s).outcome == Outcome::MakerCannotWin);
}

TEST_CASE("aux game moves") {
    RootedDigraph g1(2, {{0, 1}}, 0, 1);
    auto spec = GameSpec::aux(g1, 1, ElementSet{0, 1});
    auto moves = legal_moves(spec, initial_state(spec));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].elements == ElementSet{2});
    auto won = apply_move(spec, initial_state(spec), moves[0]);
    CHECK(status(spec, won).outcome == Outcome::MakerWin);
    auto open = GameSpec::aux(g1, 1);
    CHECK(legal_moves(open, initial_state(open)).size() == 2);
}

TEST_CASE("status reports the smallest witness") {
    auto spec = GameSpec::maker_breaker(Hypergraph::from_lists(2, {{0}, {0, 1}}), 1, 1);
    GameState s;
    s.maker = ElementSet{0, 1};
    auto st = status(spec, s);
    CHECK(st.outcome == Outcome::MakerWin);
    CHECK(st.witness == ElementSet{0});
    auto pair = GameSpec::maker_breaker(Hypergraph::from_lists(2, {{0, 1}}), 1, 1);
    GameState blocked;
    blocked.breaker = ElementSet{1};
    CHECK(status(pair, blocked).outcome == Outcome::MakerCannotWin);
}

TEST_CASE("witness minimality matches brute force") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 200; ++round) {
        auto h = oracle::random_hypergraph(7, 6, rng);
        auto spec = GameSpec::maker_breaker(h, 1, 1);
        GameState s;
        for (int x = 0; x < 7; ++x)
            if (rng() % 2) s.maker.set(x);
        int best = 0;
        for (const auto& e : h.edges())
            if (e.is_subset_of(s.maker) && (best == 0 || e.count() < best)) best = e.count();
        auto st = status(spec, s);
        CHECK((st.outcome == Outcome::MakerWin) == (best > 0));
        if (best > 0) CHECK(st.witness->count() == best);
    }
}

TEST_CASE("random plays conserve elements") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 100; ++round) {
        auto h = oracle::random_hypergraph(7, 4, rng);
        const bool wc = round % 2;
        auto spec = wc ? GameSpec::waiter_client(h)
                       : GameSpec::maker_breaker(h, 1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2));
        auto s = initial_state(spec);
        while (true) {
            auto moves = legal_moves(spec, s);
            if (moves.empty()) break;
            auto next = apply_move(spec, s, moves[rng() % moves.size()]);
            CHECK(s.maker.is_subset_of(next.maker));
            CHECK(s.breaker.is_subset_of(next.breaker));
            CHECK_FALSE(next.maker.intersects(next.breaker));
            s = next;
        }
        CHECK(s.maker.count() + s.breaker.count() == 7);
        if (wc) {
            CHECK(s.maker.count() == 3);
            CHECK(s.breaker.count() == 4);
        }
    }
}
