#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posgames/errors.hpp"
#include "posgames/solver.hpp"

using namespace posgames;

namespace {

Hypergraph complete_uniform(int n, int k) { return add_all_k_subsets(Hypergraph(n, {}), k); }

RootedDigraph random_digraph(int nv, int arcs, std::mt19937_64& rng) {
    std::vector<Arc> list;
    for (int i = 0; i < arcs; ++i) {
        const int u = static_cast<int>(rng() % nv);
        int v = static_cast<int>(rng() % nv);
        if (v == u) v = (u + 1) % nv;
        list.emplace_back(u, v);
    }
    return RootedDigraph(nv, list, 0);
}

}  // namespace

TEST_CASE("decide on tiny maker-breaker boards") {
    auto single = Hypergraph::from_lists(2, {{0}});
    CHECK(decide_mb(single, 1, 1, Player::Maker, Objective::within(1, 1)));
    CHECK_FALSE(decide_mb(single, 1, 1, Player::Breaker, Objective::unbounded()));
    auto pair = Hypergraph::from_lists(2, {{0, 1}});
    CHECK_FALSE(decide_mb(pair, 1, 1, Player::Maker, Objective::unbounded()));
    CHECK(decide_mb(pair, 2, 1, Player::Maker, Objective::within(1)));
    CHECK_FALSE(decide_mb(Hypergraph(3, {}), 1, 1, Player::Maker, Objective::unbounded()));
    CHECK_THROWS_AS(decide_mb(pair, 1, 1, Player::Maker, Objective::within(0)), InvalidArgument);
}

TEST_CASE("decide on tiny waiter-client boards") {
    CHECK_FALSE(decide_wc(Hypergraph::from_lists(1, {{0}}), Objective::unbounded()));
    CHECK_FALSE(decide_wc(Hypergraph::from_lists(2, {{0, 1}}), Objective::unbounded()));
    CHECK(decide_wc(Hypergraph::from_lists(2, {{0}, {1}}), Objective::within(1)));
}

TEST_CASE("complete 3-uniform hypergraph on six elements") {
    auto h = complete_uniform(6, 3);
    auto r = game_values(h, 1, 1, Player::Maker);
    CHECK(r.maker_wins);
    CHECK(r.min_rounds == 3);
    CHECK(r.min_size == 3);
    CHECK(r.frontier == std::vector<std::pair<int, int>>{{3, 3}});
    auto second = game_values(h, 1, 1, Player::Breaker);
    CHECK(second.min_rounds == 3);
}

TEST_CASE("aux game on a single arc") {
    RootedDigraph g1(2, {{0, 1}}, 0, 1);
    CHECK(solve_aux_game(g1, 1, ElementSet{0, 1}, Objective::within(1)));
    CHECK_FALSE(solve_aux_game(g1, 1, ElementSet{0}, Objective::unbounded()));
}

TEST_CASE("frontier is a staircase") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 60; ++round) {
        auto h = oracle::random_hypergraph(7, 5, rng, 4);
        auto r = game_values(h, 1, 1, round % 2 ? Player::Maker : Player::Breaker);
        if (!r.maker_wins) {
            CHECK(r.frontier.empty());
            continue;
        }
        REQUIRE_FALSE(r.frontier.empty());
        CHECK(r.frontier.front().second == *r.min_size);
        CHECK(r.frontier.back().first == *r.min_rounds);
        for (std::size_t i = 1; i < r.frontier.size(); ++i) {
            CHECK(r.frontier[i].first < r.frontier[i - 1].first);
            CHECK(r.frontier[i].second > r.frontier[i - 1].second);
        }
    }
}

TEST_CASE("solver agrees with naive minimax on random boards") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 150; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto h = oracle::random_hypergraph(n, 1 + static_cast<int>(rng() % 4), rng, 4);
        const int m = 1 + static_cast<int>(rng() % 2);
        const int b = 1 + static_cast<int>(rng() % 2);
        const Player first = rng() % 2 ? Player::Maker : Player::Breaker;
        auto spec = GameSpec::maker_breaker(h, m, b, first);
        for (int s : h.edge_sizes()) {
            CAPTURE(round);
            CAPTURE(s);
            CHECK(min_rounds(spec, s) == oracle::naive_min_rounds(spec, s));
        }
    }
}

TEST_CASE("waiter-client solver agrees with naive minimax") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 150; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto h = oracle::random_hypergraph(n, 1 + static_cast<int>(rng() % 4), rng, 3);
        auto spec = GameSpec::waiter_client(h);
        for (int s : h.edge_sizes()) {
            CAPTURE(round);
            CHECK(min_rounds(spec, s) == oracle::naive_min_rounds(spec, s));
        }
    }
}

TEST_CASE("aux solver agrees with naive minimax") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 60; ++round) {
        auto d = random_digraph(3 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3), rng);
        ElementSet pre;
        if (rng() % 2) pre.set(0);
        auto spec = GameSpec::aux(d, 1 + static_cast<int>(rng() % 2), pre);
        if (rng() % 3 == 0) {
            spec.first = Player::Breaker;
            spec.opening_bias = 1;
        }
        CAPTURE(round);
        CHECK(min_rounds(spec) == oracle::naive_min_rounds(spec));
    }
}

TEST_CASE("memo-free, memoized and parallel runs agree") {
    std::mt19937_64 rng(4);
    SolverOptions plain;
    plain.use_memo = false;
    SolverOptions parallel;
    parallel.jobs = 3;
    for (int round = 0; round < 40; ++round) {
        auto h = oracle::random_hypergraph(6, 4, rng, 3);
        auto spec = GameSpec::maker_breaker(h, 1, 1, round % 2 ? Player::Maker : Player::Breaker);
        auto base = game_values(spec);
        CHECK(game_values(spec, plain) == base);
        CHECK(game_values(spec, parallel) == base);
        auto wc = GameSpec::waiter_client(h);
        CHECK(game_values(wc, plain) == game_values(wc, parallel));
    }
}

TEST_CASE("memo cap aborts loudly") {
    SolverOptions tiny;
    tiny.memo_cap = 1;
    CHECK_THROWS_AS(game_values(complete_uniform(6, 3), 1, 1, Player::Maker, tiny), GuardExceeded);
}

TEST_CASE("decide_from continues a game in progress") {
    auto spec = GameSpec::maker_breaker(complete_uniform(6, 3), 1, 1);
    auto s = apply_move(spec, initial_state(spec), Move::claim(ElementSet{0}));
    CHECK(decide_from(spec, s, Objective::within(3)));
    CHECK_FALSE(decide_from(spec, s, Objective::within(2)));
}

TEST_CASE("restriction hypotheses are validated") {
    auto h = Hypergraph::from_lists(5, {{0, 1, 2}, {2, 3, 4}});
    MoveRestriction ok{{ElementSet{2}}};
    CHECK_NOTHROW(validate_restriction(h, 1, 1, ok));
    CHECK_THROWS_AS(validate_restriction(h, 1, 1, MoveRestriction{{ElementSet{0}}}), InvalidArgument);
    CHECK_THROWS_AS(validate_restriction(h, 2, 1, ok), InvalidArgument);
    CHECK_THROWS_AS(validate_restriction(h, 1, 1, MoveRestriction{{ElementSet{2, 3}}}), InvalidArgument);
    auto small = Hypergraph::from_lists(2, {{0}});
    CHECK_THROWS_AS(validate_restriction(small, 1, 1, MoveRestriction{}), InvalidArgument);
}
