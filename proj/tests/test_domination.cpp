#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "posgames/domination.hpp"
#include "posgames/errors.hpp"

using namespace posgames;

namespace {

std::vector<int> sorted_degrees(const SimpleGraph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

SimpleGraph relabeled(const SimpleGraph& g, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return SimpleGraph(g.n(), edges);
}

}  // namespace

TEST_CASE("dominating set checks") {
    auto star = graphs::star(3);
    CHECK(is_dominating(star, std::vector<int>{0}));
    auto p4 = graphs::path(4);
    CHECK_FALSE(is_dominating(p4, std::vector<int>{1}));
    CHECK(is_dominating(p4, ElementSet::prefix(4)));
    CHECK_THROWS_AS(is_dominating(p4, std::vector<int>{7}), InvalidArgument);
}

TEST_CASE("domination number") {
    CHECK(domination_number(graphs::cycle(5)) == 2);
    CHECK(domination_number(graphs::star(3)) == 1);
    CHECK(domination_number(graphs::path(7)) == 3);
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        auto g = graphs::random_graph(1 + static_cast<int>(rng() % 11), 0.3, rng);
        CAPTURE(round);
        CHECK(domination_number(g) == oracle::domination_number(g));
    }
    CHECK_THROWS_AS(domination_number(graphs::path(60), 5), GuardExceeded);
}

TEST_CASE("minimal dominating sets") {
    CHECK(minimal_dominating_sets(graphs::complete(2)).edge_lists() == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(minimal_dominating_sets(graphs::path(3)).edge_lists() == std::vector<std::vector<int>>{{0, 2}, {1}});
    auto c4 = minimal_dominating_sets(graphs::cycle(4));
    CHECK(c4.edge_count() == 6);
    std::mt19937_64 rng(12);
    for (int round = 0; round < 200; ++round) {
        auto g = graphs::random_graph(1 + static_cast<int>(rng() % 9), 0.35, rng);
        CAPTURE(round);
        CHECK(minimal_dominating_sets(g) == oracle::minimal_dominating_sets(g));
    }
}

TEST_CASE("domination game values") {
    auto star = dom_game_values(graphs::star(3), 1, 1, Player::Maker);
    CHECK(star.min_rounds == 1);
    CHECK(star.min_size == 1);
    auto p4 = dom_game_values(graphs::path(4), 1, 1, Player::Maker);
    CHECK(p4.min_rounds == 2);
    CHECK(p4.min_size == 2);
    CHECK(dom_wc_values(graphs::cycle(7)).min_rounds == 3);
}

TEST_CASE("domination numbers bound the game values") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 60; ++round) {
        auto g = graphs::random_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
        const int gamma = domination_number(g);
        auto first = dom_game_values(g, 1, 1, Player::Maker).min_rounds;
        auto second = dom_game_values(g, 1, 1, Player::Breaker).min_rounds;
        CAPTURE(round);
        if (first) CHECK(gamma <= *first);
        if (second) {
            REQUIRE(first);
            CHECK(*first <= *second);
        }
    }
}

TEST_CASE("residue examples") {
    auto p4 = residue(graphs::path(4));
    CHECK(p4.residue.n() == 2);
    CHECK(p4.residue.edge_count() == 1);
    CHECK(p4.removed_pairs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(p4.kept == std::vector<int>{2, 3});
    CHECK(residue(graphs::complete(2)).removed_pairs.empty());
    auto p6 = residue(graphs::path(6));
    CHECK(p6.residue.n() == 2);
    CHECK(p6.removed_pairs.size() == 2);
    CHECK(residue(graphs::cycle(5)).removed_pairs.empty());
}

TEST_CASE("residue invariants and order independence") {
    std::mt19937_64 rng(14);
    for (int round = 0; round < 200; ++round) {
        auto t = graphs::random_tree(2 + static_cast<int>(rng() % 11), rng);
        auto report = residue(t);
        CHECK(report.residue.n() == t.n() - 2 * static_cast<int>(report.removed_pairs.size()));
        std::vector<int> removed;
        for (auto [v, w] : report.removed_pairs) {
            std::vector<int> kept;
            auto current = t.without(removed, &kept);
            const int cv = static_cast<int>(std::find(kept.begin(), kept.end(), v) - kept.begin());
            const int cw = static_cast<int>(std::find(kept.begin(), kept.end(), w) - kept.begin());
            CHECK(current.degree(cv) == 1);
            CHECK(current.degree(cw) == 2);
            removed.push_back(v);
            removed.push_back(w);
        }
        auto other = residue(relabeled(t, rng));
        CHECK(other.residue.n() == report.residue.n());
        CHECK(sorted_degrees(other.residue) == sorted_degrees(report.residue));
    }
}

TEST_CASE("perfect matching") {
    std::mt19937_64 rng(15);
    for (int round = 0; round < 200; ++round) {
        auto g = graphs::random_graph(1 + static_cast<int>(rng() % 10), 0.3, rng);
        CHECK(has_perfect_matching(g) == oracle::has_perfect_matching(g));
    }
}

TEST_CASE("closed forms") {
    CHECK(wc_tree_value(graphs::path(4)) == 2);
    CHECK_FALSE(wc_tree_value(graphs::path(5)).has_value());
    CHECK_THROWS_AS(wc_tree_value(graphs::cycle(4)), InvalidArgument);
    CHECK(wc_cycle_value(8) == 4);
    CHECK_THROWS_AS(wc_cycle_value(2), InvalidArgument);
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : graphs::all_free_trees(n)) {
            CAPTURE(n);
            CHECK(dom_wc_values(t).min_rounds == wc_tree_value(t));
        }
}

TEST_CASE("residue gives the waiter-client value") {
    std::mt19937_64 rng(16);
    for (int round = 0; round < 40; ++round) {
        auto t = graphs::random_tree(2 + static_cast<int>(rng() % 7), rng);
        CHECK(wc_rounds_via_residue(t) == dom_wc_values(t).min_rounds);
    }
}

TEST_CASE("transference gadget claims") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 30; ++round) {
        const int n = 1 + static_cast<int>(rng() % 4);
        auto h = oracle::random_hypergraph(n, 1 + static_cast<int>(rng() % 3), rng);
        auto gadget = build_gadget(h, 1 + static_cast<int>(rng() % 2));
        auto report = check_gadget(h, gadget);
        CAPTURE(round);
        CHECK(report.ok());
        CHECK(gadget_domination_number(gadget) == report.domination_number);
    }
    auto single = Hypergraph::from_lists(2, {{0}});
    auto g = build_gadget(single, 1);
    auto values = dom_game_values(g.graph, 1, 1, Player::Maker);
    CHECK(values.min_rounds == 1);
    CHECK(values.min_size == 1);
}
