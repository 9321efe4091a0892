#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "posgames/constructions.hpp"
#include "posgames/domination.hpp"
#include "posgames/errors.hpp"
#include "posgames/solver.hpp"
#include "posgames/strategies.hpp"

using namespace posgames;

namespace {

VerifyResult verify(const std::string& id, const json& params) {
    const auto inst = strategy_instance(id, params);
    return verify_strategy(inst.spec, *get_strategy(id, params), inst.guarantee);
}

Move random_move(const GameSpec& spec, const GameState& state, std::mt19937_64& rng) {
    auto moves = legal_moves(spec, state);
    if (moves.empty()) return Move::claim({});
    return moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
}

/// Plays the strategy against uniformly random replies; checks legality and
/// returns the final state.
GameState playout(const GameSpec& spec, Strategy& strat, std::mt19937_64& rng,
                  const std::function<void(const GameState&)>& after_strategy = {}) {
    GameState state = initial_state(spec);
    while (status(spec, state).outcome == Outcome::Ongoing &&
           (free_elements(spec, state).any() || state.pending_offer)) {
        if (state.to_move == strat.role()) {
            const Move mv = strat.next_move(spec, state);
            REQUIRE(is_legal(spec, state, mv));
            state = apply_move(spec, state, mv);
            if (after_strategy) after_strategy(state);
        } else {
            state = apply_move(spec, state, random_move(spec, state, rng));
        }
    }
    return state;
}

}  // namespace

TEST_CASE("every catalog instance meets its guarantee") {
    const auto instances = catalog_instances();
    CHECK(instances.size() == strategy_ids().size());
    for (const auto& inst : instances) {
        CAPTURE(inst.id);
        const auto r = verify_strategy(inst.spec, *get_strategy(inst.id, inst.params), inst.guarantee);
        CHECK(r.ok);
        CHECK(r.reason.empty());
    }
}

TEST_CASE("larger strategy instances") {
    for (int t = 2; t <= 4; ++t)
        for (int b = 1; b <= 3; ++b) {
            CAPTURE(t);
            CAPTURE(b);
            const json p = {{"t", t}, {"b", b}};
            CHECK(verify("breaker-gtb-slow", p).ok);
            if (t <= 3 || b == 1) {
                auto r = verify("maker-gtb", p);
                CHECK(r.ok);
                CHECK(r.worst_rounds == t);
            }
            if (t <= 3 || b <= 2) CHECK(verify("breaker-gtb-block", {{"t", t}, {"b", b}, {"v", 1}}).ok);
        }
    for (int t = 3; t <= 4; ++t)
        for (int b = 1; b <= 2; ++b) {
            const json p = {{"t", t}, {"b", b}};
            CHECK(verify("breaker-htb-premove", p).ok);
            CHECK(verify("breaker-htb-slow", p).ok);
            if (t == 3 || b == 1) CHECK(verify("maker-htb", p).ok);
        }
    for (int n = 3; n <= 9; ++n) {
        CAPTURE(n);
        CHECK(verify("waiter-cycle", {{"n", n}}).ok);
        CHECK(verify("client-cycle", {{"n", n}}).ok);
    }
    CHECK(verify("maker-nonmonotone", {{"B", {1, 3}}, {"b", 2}}).ok);
    CHECK(verify("breaker-nonmonotone", {{"B", {1, 3}}, {"b", 3}}).ok);
    CHECK(verify("breaker-pairing", {{"t", 4}}).ok);
    CHECK(verify("maker-hmbst", {{"m", 1}, {"b", 1}, {"s", 3}, {"t", 4}}).ok);
    CHECK(verify("maker-hmbst", {{"m", 1}, {"b", 2}, {"s", 3}, {"t", 3}}).ok);
}

TEST_CASE("waiter-tree on trees with a perfect matching") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 40; ++i) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 4)(rng);
        const auto tree = graphs::random_tree(n, rng);
        if (!has_perfect_matching(tree)) continue;
        ++checked;
        CHECK(verify("waiter-tree", {{"tree", to_json(tree)}}).ok);
    }
    CHECK(checked >= 20);
    CHECK_THROWS_AS(strategy_instance("waiter-tree", {{"tree", to_json(graphs::star(3))}}), InvalidArgument);
}

TEST_CASE("opening moves") {
    SUBCASE("maker-gtb claims the middle of the spine") {
        const auto inst = strategy_instance("maker-gtb", {{"t", 2}, {"b", 2}});
        auto s = get_strategy("maker-gtb", inst.params);
        CHECK(s->next_move(inst.spec, initial_state(inst.spec)) == Move::claim(ElementSet{1}));
    }
    SUBCASE("pairing answers inside the pair") {
        const auto inst = strategy_instance("breaker-pairing", {{"t", 3}});
        auto s = get_strategy("breaker-pairing", inst.params);
        const auto state = apply_move(inst.spec, initial_state(inst.spec), Move::claim(ElementSet{0}));
        CHECK(s->next_move(inst.spec, state) == Move::claim(ElementSet{1}));
    }
    SUBCASE("waiter-cycle opens with the last two vertices") {
        const auto inst = strategy_instance("waiter-cycle", {{"n", 5}});
        auto s = get_strategy("waiter-cycle", inst.params);
        CHECK(s->next_move(inst.spec, initial_state(inst.spec)) == Move::offer(ElementSet{3, 4}));
    }
    SUBCASE("breaker-htb-premove takes the start") {
        const auto inst = strategy_instance("breaker-htb-premove", {{"t", 3}, {"b", 1}});
        auto s = get_strategy("breaker-htb-premove", inst.params);
        CHECK(s->next_move(inst.spec, initial_state(inst.spec)) == Move::claim(ElementSet{0}));
    }
}

TEST_CASE("slow invariants hold along random plays") {
    std::mt19937_64 rng(5);
    for (int t = 2; t <= 4; ++t)
        for (int b = 1; b <= 2; ++b)
            for (int rep = 0; rep < 30; ++rep) {
                const auto inst = strategy_instance("breaker-gtb-slow", {{"t", t}, {"b", b}});
                auto s = get_strategy("breaker-gtb-slow", inst.params);
                const auto& d = inst.spec.digraph();
                const auto end = playout(inst.spec, *s, rng, [&](const GameState& st) {
                    CHECK(slow_invariants_hold(d, st, st.maker_moves, t));
                });
                const auto st = status(inst.spec, end);
                CHECK((st.outcome != Outcome::MakerWin || end.maker_moves >= t));
            }
}

TEST_CASE("pairing strategies on random paired families") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = std::uniform_int_distribution<int>(4, 10)(rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        json pairs = json::array();
        std::vector<std::pair<int, int>> pv;
        for (int i = 0; i + 1 < n; i += 2) {
            pv.emplace_back(perm[i], perm[i + 1]);
            pairs.push_back({perm[i], perm[i + 1]});
        }
        std::vector<ElementSet> edges;
        const int m = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int k = 0; k < m; ++k) {
            auto [x, y] = pv[std::uniform_int_distribution<std::size_t>(0, pv.size() - 1)(rng)];
            ElementSet e{x, y};
            for (int v = 0; v < n; ++v)
                if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) e.set(v);
            edges.push_back(e);
        }
        const Hypergraph h(n, edges);
        const json params = {{"pairs", pairs}, {"hypergraph", to_json(h)}};
        const auto inst = strategy_instance("breaker-pairing", params);
        CHECK(verify_strategy(inst.spec, *get_strategy("breaker-pairing", params), inst.guarantee).ok);
        CHECK_FALSE(decide(inst.spec, Objective::unbounded()));
    }
}

TEST_CASE("random plays on instances too large to verify") {
    std::mt19937_64 rng(8);
    const std::vector<std::pair<std::string, json>> cases = {
        {"maker-gtb", {{"t", 4}, {"b", 2}}},
        {"maker-gtb", {{"t", 4}, {"b", 3}}},
        {"maker-htb", {{"t", 4}, {"b", 2}}},
        {"breaker-gtb-block", {{"t", 4}, {"b", 3}, {"v", 2}}},
        {"breaker-htb-slow", {{"t", 5}, {"b", 1}}},
        {"waiter-cycle", {{"n", 14}}},
        {"client-cycle", {{"n", 14}}},
    };
    for (const auto& [id, params] : cases) {
        CAPTURE(id);
        const auto inst = strategy_instance(id, params);
        for (int rep = 0; rep < 25; ++rep) {
            auto s = get_strategy(id, params);
            const auto end = playout(inst.spec, *s, rng);
            const bool won = status(inst.spec, end).outcome == Outcome::MakerWin;
            switch (inst.guarantee.kind) {
                case Guarantee::Kind::WinWithin:
                    CHECK(won);
                    CHECK(end.maker_moves <= inst.guarantee.rounds);
                    break;
                case Guarantee::Kind::NeverLoses: CHECK_FALSE(won); break;
                case Guarantee::Kind::OpponentNotWithin:
                    CHECK((!won || end.maker_moves > inst.guarantee.rounds));
                    break;
            }
        }
    }
}

TEST_CASE("guarantees agree with the solver") {
    for (const auto& inst : catalog_instances()) {
        if (inst.spec.n() > 40) continue;
        CAPTURE(inst.id);
        const auto values = game_values(inst.spec);
        switch (inst.guarantee.kind) {
            case Guarantee::Kind::WinWithin:
                REQUIRE(values.min_rounds);
                CHECK(*values.min_rounds <= inst.guarantee.rounds);
                break;
            case Guarantee::Kind::NeverLoses: CHECK_FALSE(values.maker_wins); break;
            case Guarantee::Kind::OpponentNotWithin:
                CHECK((!values.min_rounds || *values.min_rounds > inst.guarantee.rounds));
                break;
        }
    }
}

TEST_CASE("verifier reports failures") {
    const auto inst = strategy_instance("maker-gtb", {{"t", 3}, {"b", 1}});
    auto s = get_strategy("maker-gtb", inst.params);
    const auto r = verify_strategy(inst.spec, *s, Guarantee::win_within(2));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.reason.empty());
    CHECK_FALSE(r.counterexample.empty());
    CHECK_FALSE(verify_strategy(inst.spec, *s, Guarantee::never_loses()).ok);

    VerifyOptions tiny;
    tiny.node_cap = 3;
    const auto big = strategy_instance("maker-gtb", {{"t", 3}, {"b", 2}});
    CHECK_THROWS_AS(verify_strategy(big.spec, *get_strategy("maker-gtb", big.params), big.guarantee, tiny),
                    GuardExceeded);
}

TEST_CASE("strategy parameters and guarantees") {
    CHECK_THROWS_AS(get_strategy("no-such", json::object()), InvalidArgument);
    CHECK_THROWS_AS(get_strategy("maker-gtb", {{"t", 2}}), InvalidArgument);
    CHECK_THROWS_AS(get_strategy("maker-gtb", {{"t", "x"}, {"b", 1}}), InvalidArgument);
    CHECK_THROWS_AS(strategy_instance("maker-nonmonotone", {{"B", {2}}, {"b", 2}}), InvalidArgument);

    const auto inst = strategy_instance("waiter-cycle", {{"n", 5}});
    auto wrong = get_strategy("maker-gtb", {{"t", 2}, {"b", 1}});
    CHECK_THROWS_AS(wrong->next_move(inst.spec, initial_state(inst.spec)), InvalidArgument);

    for (const auto& g : {Guarantee::win_within(3), Guarantee::never_loses(), Guarantee::opponent_not_within(2)}) {
        const auto back = guarantee_from_string(to_string(g));
        CHECK(back.kind == g.kind);
        CHECK(back.rounds == g.rounds);
    }
    CHECK_THROWS_AS(guarantee_from_string("win-within:x"), InvalidArgument);
    CHECK_THROWS_AS(guarantee_from_string("sometimes"), InvalidArgument);
}
