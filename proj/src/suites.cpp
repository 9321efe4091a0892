#include "posgames/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "posgames/constructions.hpp"
#include "posgames/domination.hpp"
#include "posgames/errors.hpp"
#include "posgames/strategies.hpp"

namespace posgames {

namespace {

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json obj_json(const Objective& o) { return {{"t", opt(o.max_rounds)}, {"s", opt(o.max_size)}}; }

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    void check(json row, bool ok) {
        row["ok"] = ok;
        if (!ok && report_.ok) {
            report_.ok = false;
            report_.counterexample = row;
        }
        report_.rows.push_back(std::move(row));
    }

private:
    SuiteReport& report_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Hypergraph random_board(std::mt19937_64& rng, int n_lo, int n_hi, int max_edges, int min_edge_size,
                        int max_edge_size) {
    const int n = uniform(rng, n_lo, n_hi);
    std::vector<ElementSet> edges;
    const int count = uniform(rng, 1, max_edges);
    for (int i = 0; i < count; ++i) {
        const int size = uniform(rng, std::min(n, min_edge_size), std::min(n, max_edge_size));
        ElementSet e;
        while (e.count() < size) e.set(uniform(rng, 0, n - 1));
        edges.push_back(e);
    }
    return Hypergraph(n, edges);
}

Objective random_objective(std::mt19937_64& rng, int n) {
    Objective o;
    if (uniform(rng, 0, 3) > 0) o.max_rounds = uniform(rng, 1, 4);
    if (uniform(rng, 0, 2) > 0) o.max_size = uniform(rng, 1, n);
    return o;
}

Player random_first(std::mt19937_64& rng) { return uniform(rng, 0, 1) ? Player::Breaker : Player::Maker; }

GameSpec random_game(std::mt19937_64& rng, const Hypergraph& h) {
    if (uniform(rng, 0, 3) == 0) return GameSpec::waiter_client(h);
    return GameSpec::maker_breaker(h, uniform(rng, 1, 2), uniform(rng, 1, 2), random_first(rng));
}

json spec_json(const GameSpec& spec) {
    json j{{"kind", to_string(spec.kind)}};
    if (spec.kind == GameKind::AuxEdgeGame)
        j["board"] = to_json(spec.digraph());
    else
        j["board"] = to_json(spec.hypergraph());
    if (spec.kind == GameKind::MakerBreaker) {
        j["m"] = spec.maker_bias;
        j["b"] = spec.breaker_bias;
        j["first"] = to_string(spec.first);
    }
    return j;
}

Objective bounded(int t, std::optional<int> s = std::nullopt) { return Objective::within(t, s); }

// ---------------------------------------------------------------------------

void branched_path_table(Recorder& rec, const SuiteOptions& o) {
    for (auto [t, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const auto d = build_gtb(t, b).digraph;
        const ElementSet ends{0, t};
        const bool within = solve_aux_game(d, b, ends, bounded(t), o.solver);
        const bool faster = t > 1 && solve_aux_game(d, b, ends, bounded(t - 1), o.solver);
        bool single = false;
        for (int v = 0; v < d.nv() && !single; ++v)
            single = solve_aux_game(d, b, ElementSet{v}, Objective::unbounded(), o.solver);
        rec.check({{"t", t}, {"b", b}, {"win_within_t", within}, {"win_within_t_minus_1", faster},
                   {"win_from_single_vertex", single}},
                  within && !faster && !single);
    }
}

void branched_star_table(Recorder& rec, const SuiteOptions& o) {
    for (auto [t, b] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}}) {
        const auto d = build_htb(t, b).digraph;
        auto spec = GameSpec::aux(d, b);
        const bool within = decide(spec, bounded(t), nullptr, o.solver);
        const bool faster = decide(spec, bounded(t - 1), nullptr, o.solver);
        spec.first = Player::Breaker;
        spec.opening_bias = 1;
        const bool premove = decide(spec, Objective::unbounded(), nullptr, o.solver);
        rec.check({{"t", t}, {"b", b}, {"win_within_t", within}, {"win_within_t_minus_1", faster},
                   {"win_after_premove", premove}},
                  within && !faster && !premove);
    }
}

void lifted_family(Recorder& rec, const SuiteOptions& o) {
    for (auto [m, b, s, t] : std::vector<std::array<int, 4>>{{1, 1, 3, 3}, {1, 2, 3, 3}}) {
        const auto build = build_hmbst(m, b, s, t);
        const MoveRestriction restriction{build.family.sets};
        validate_restriction(build.hypergraph, m, b, restriction);
        json row{{"m", m}, {"b", b}, {"s", s}, {"t", t}, {"elements", build.hypergraph.n()}};
        bool ok = true;
        for (const MoveRestriction* r : {static_cast<const MoveRestriction*>(nullptr), &restriction}) {
            const std::string tag = r ? "_restricted" : "";
            const bool within = decide_mb(build.hypergraph, m, b, Player::Maker, bounded(t, s), r, o.solver);
            const bool faster = decide_mb(build.hypergraph, m, b, Player::Maker, bounded(t - 1, s), r, o.solver);
            const bool second =
                decide_mb(build.hypergraph, m, b, Player::Breaker, Objective::unbounded(), r, o.solver);
            row["win_within_t" + tag] = within;
            row["win_within_t_minus_1" + tag] = faster;
            row["win_moving_second" + tag] = second;
            ok = ok && within && !faster && !second;
        }
        rec.check(row, ok);
    }
}

void nonmonotone(Recorder& rec, const SuiteOptions& o) {
    for (const auto& biases : std::vector<std::vector<int>>{{1}, {2}, {1, 2}}) {
        const auto h = build_nonmonotone(biases);
        for (int b = 1; b <= 4; ++b) {
            const bool wins = decide_mb(h, b, b, Player::Maker, Objective::unbounded(), nullptr, o.solver);
            const bool expected = std::find(biases.begin(), biases.end(), b) == biases.end();
            rec.check({{"B", biases}, {"b", b}, {"elements", h.n()}, {"maker_wins", wins}, {"expected", expected}},
                      wins == expected && h.n() <= 12);
        }
    }
}

void cycles(Recorder& rec, const SuiteOptions& o) {
    const int max_n = o.max_n > 0 ? o.max_n : 9;
    for (int n = 3; n <= max_n; ++n) {
        const auto values = dom_wc_values(graphs::cycle(n), o.solver);
        const int closed = wc_cycle_value(n);
        rec.check({{"n", n}, {"min_rounds", opt(values.min_rounds)}, {"min_size", opt(values.min_size)},
                   {"closed_form", closed}},
                  values.min_rounds == n / 2 && values.min_size == n / 2 && closed == n / 2);
    }
}

void check_tree(Recorder& rec, const SimpleGraph& tree, const std::string& source, const SuiteOptions& o) {
    const auto values = dom_wc_values(tree, o.solver);
    const bool matching = has_perfect_matching(tree);
    const std::optional<int> expected = matching ? std::optional<int>(tree.n() / 2) : std::nullopt;
    const auto closed = wc_tree_value(tree);
    rec.check({{"n", tree.n()},
               {"source", source},
               {"tree", to_json(tree)},
               {"perfect_matching", matching},
               {"min_rounds", opt(values.min_rounds)},
               {"min_size", opt(values.min_size)},
               {"closed_form", opt(closed)}},
              values.min_rounds == expected && values.min_size == expected && closed == expected);
}

void trees(Recorder& rec, const SuiteOptions& o) {
    const int max_n = o.max_n > 0 ? o.max_n : 10;
    std::mt19937_64 rng(o.seed);
    for (int n = 1; n <= std::min(max_n, 8); ++n)
        for (const auto& tree : graphs::all_free_trees(n)) check_tree(rec, tree, "exhaustive", o);
    for (int n = 9; n <= max_n; ++n)
        for (int i = 0; i < o.instances; ++i) check_tree(rec, graphs::random_tree(n, rng), "random", o);
}

void residue_rounds(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    int checked = 0;
    while (checked < 50) {
        const auto tree = graphs::random_tree(uniform(rng, 3, 10), rng);
        std::vector<std::pair<int, int>> pairs;
        for (int v = 0; v < tree.n(); ++v)
            if (tree.degree(v) == 1 && tree.degree(tree.neighbors(v)[0]) == 2)
                pairs.emplace_back(v, tree.neighbors(v)[0]);
        if (pairs.empty()) continue;
        ++checked;
        const auto [v, w] = pairs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pairs.size()) - 1))];
        const auto whole = dom_wc_values(tree, o.solver);
        const auto rest = dom_wc_values(tree.without({v, w}), o.solver);
        auto plus_one = [](std::optional<int> x) { return x ? std::optional<int>(*x + 1) : std::nullopt; };
        const auto via_residue = wc_rounds_via_residue(tree, o.solver);
        rec.check({{"tree", to_json(tree)},
                   {"v", v},
                   {"w", w},
                   {"min_rounds", opt(whole.min_rounds)},
                   {"min_size", opt(whole.min_size)},
                   {"min_rounds_without_pair", opt(rest.min_rounds)},
                   {"min_size_without_pair", opt(rest.min_size)},
                   {"rounds_via_residue", opt(via_residue)}},
                  whole.min_rounds == plus_one(rest.min_rounds) && whole.min_size == plus_one(rest.min_size) &&
                      via_residue == whole.min_rounds);
    }
}

void gadget(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < 20; ++i) {
        const auto h = random_board(rng, 2, 5, 4, 1, 5);
        const auto g = build_gadget(h, 1);
        const auto report = check_gadget(h, g);
        rec.check({{"hypergraph", to_json(h)},
                   {"gadget_vertices", g.graph.n()},
                   {"edges_dominate", report.edges_dominate},
                   {"domination_number", report.domination_number},
                   {"min_edge_size", report.min_edge_size},
                   {"x_dominators_contain_edge", report.x_dominators_contain_edge}},
                  report.ok());
    }
    const auto single = Hypergraph::from_lists(2, {{0}});
    const auto dom = dom_game_values(build_gadget(single, 1).graph, 1, 1, Player::Maker, o.solver);
    const auto direct = game_values(single, 1, 1, Player::Maker, o.solver);
    rec.check({{"hypergraph", to_json(single)},
               {"dom_min_rounds", opt(dom.min_rounds)},
               {"dom_min_size", opt(dom.min_size)},
               {"min_rounds", opt(direct.min_rounds)},
               {"min_size", opt(direct.min_size)}},
              dom.min_rounds == 1 && dom.min_size == 1 && direct.min_rounds == 1 && direct.min_size == 1);
}

void wc_gap(Recorder& rec, const SuiteOptions& o) {
    const auto h = build_wc_gap(3, 3);
    const auto first = game_values(h, 1, 1, Player::Maker, o.solver);
    const auto second = game_values(h, 1, 1, Player::Breaker, o.solver);
    const auto wc = wc_game_values(h, o.solver);
    rec.check({{"elements", h.n()},
               {"mb_first_min_rounds", opt(first.min_rounds)},
               {"mb_second_min_rounds", opt(second.min_rounds)},
               {"wc_min_rounds", opt(wc.min_rounds)}},
              h.n() == 14 && first.min_rounds == 3 && second.min_rounds == 3 && wc.min_rounds == 3);

    const auto pairs = build_wc_pairs_family(3);
    const auto inst = strategy_instance("breaker-pairing", {{"t", 3}});
    const auto cert = verify_strategy(inst.spec, *get_strategy(inst.id, inst.params), inst.guarantee);
    const bool pairs_first = decide_mb(pairs, 1, 1, Player::Maker, Objective::unbounded(), nullptr, o.solver);
    const auto uniform6 = game_values(build_complete_uniform(6, 3), 1, 1, Player::Maker, o.solver);
    rec.check({{"pairing_certified", cert.ok},
               {"pairs_part_maker_wins", pairs_first},
               {"uniform_part_min_rounds", opt(uniform6.min_rounds)}},
              cert.ok && !pairs_first && uniform6.min_rounds == 3);
}

void catalog(Recorder& rec, const SuiteOptions& o) {
    for (const auto& inst : catalog_instances()) {
        const auto cert = verify_strategy(inst.spec, *get_strategy(inst.id, inst.params), inst.guarantee);
        json row{{"strategy", inst.id},
                 {"params", inst.params},
                 {"guarantee", to_string(inst.guarantee)},
                 {"verified", cert.ok},
                 {"nodes", cert.nodes}};
        bool consistent = true;
        switch (inst.guarantee.kind) {
            case Guarantee::Kind::WinWithin: {
                const int rounds = cert.worst_rounds.value_or(inst.guarantee.rounds);
                row["certified_rounds"] = rounds;
                consistent = decide(inst.spec, bounded(rounds), nullptr, o.solver);
                if (rounds > 1) {
                    const bool faster = decide(inst.spec, bounded(rounds - 1), nullptr, o.solver);
                    row["solver_wins_faster"] = faster;
                }
                break;
            }
            case Guarantee::Kind::NeverLoses:
                consistent = !decide(inst.spec, Objective::unbounded(), nullptr, o.solver);
                break;
            case Guarantee::Kind::OpponentNotWithin:
                consistent = inst.guarantee.rounds < 1 ||
                             !decide(inst.spec, bounded(inst.guarantee.rounds), nullptr, o.solver);
                break;
        }
        row["solver_consistent"] = consistent;
        if (!cert.ok) {
            row["reason"] = cert.reason;
            json trace = json::array();
            for (const auto& mv : cert.counterexample) trace.push_back(describe(mv));
            row["counterexample"] = trace;
        }
        rec.check(row, cert.ok && consistent);
    }
}

// ---------------------------------------------------------------------------
// Property suites over random boards with at most 8 elements.

void bias_monotonicity(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.instances; ++i) {
        const auto h = random_board(rng, 4, 8, 6, 2, 4);
        const int m = uniform(rng, 1, 2);
        const int b = uniform(rng, 1, 2);
        const Player first = random_first(rng);
        const auto obj = random_objective(rng, h.n());
        const bool base = decide_mb(h, m, b, first, obj, nullptr, o.solver);
        const bool more_maker = decide_mb(h, m + 1, b, first, obj, nullptr, o.solver);
        const bool more_breaker = decide_mb(h, m, b + 1, first, obj, nullptr, o.solver);
        rec.check({{"hypergraph", to_json(h)},
                   {"m", m},
                   {"b", b},
                   {"first", to_string(first)},
                   {"objective", obj_json(obj)},
                   {"wins", base},
                   {"wins_with_maker_bias_plus_1", more_maker},
                   {"wins_with_breaker_bias_plus_1", more_breaker}},
                  (!base || more_maker) && (base || !more_breaker));
    }
}

void objective_monotonicity(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.instances; ++i) {
        const auto h = random_board(rng, 4, 8, 6, 2, 4);
        const auto spec = random_game(rng, h);
        const int t = uniform(rng, 1, 4);
        const int s = uniform(rng, 1, h.n());
        const bool base = decide(spec, bounded(t, s), nullptr, o.solver);
        const bool longer = decide(spec, bounded(t + 1, s), nullptr, o.solver);
        const bool larger = decide(spec, bounded(t, s + 1), nullptr, o.solver);
        rec.check({{"game", spec_json(spec)}, {"t", t}, {"s", s}, {"wins", base}, {"wins_t_plus_1", longer},
                   {"wins_s_plus_1", larger}},
                  !base || (longer && larger));
    }
}

void first_mover(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.instances; ++i) {
        const auto h = random_board(rng, 4, 8, 6, 2, 4);
        const int m = uniform(rng, 1, 2);
        const int b = uniform(rng, 1, 2);
        const auto obj = random_objective(rng, h.n());
        const bool second = decide_mb(h, m, b, Player::Breaker, obj, nullptr, o.solver);
        const bool first = decide_mb(h, m, b, Player::Maker, obj, nullptr, o.solver);
        rec.check({{"hypergraph", to_json(h)},
                   {"m", m},
                   {"b", b},
                   {"objective", obj_json(obj)},
                   {"wins_moving_first", first},
                   {"wins_moving_second", second}},
                  !second || first);
    }
}

void minimalization(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.instances; ++i) {
        auto h = random_board(rng, 4, 8, 4, 1, 3);
        // Add supersets so minimalization has something to remove.
        std::vector<ElementSet> edges = h.edges();
        for (const auto& e : h.edges()) {
            ElementSet bigger = e;
            bigger.set(uniform(rng, 0, h.n() - 1));
            edges.push_back(bigger);
        }
        h = Hypergraph(h.n(), edges);
        auto spec = random_game(rng, h);
        const auto full = game_values(spec, o.solver);
        spec.board = minimalize(h);
        const auto reduced = game_values(spec, o.solver);
        rec.check({{"game", spec_json(spec)}, {"values", to_json(full)}, {"minimalized_values", to_json(reduced)}},
                  full == reduced);
    }
}

void memo_transparency(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    SolverOptions plain = o.solver;
    plain.use_memo = false;
    plain.jobs = 1;
    for (int i = 0; i < o.instances; ++i) {
        const auto h = random_board(rng, 3, 6, 5, 1, 4);
        const auto spec = random_game(rng, h);
        const auto memo = game_values(spec, o.solver);
        const auto bare = game_values(spec, plain);
        rec.check({{"game", spec_json(spec)}, {"memo_values", to_json(memo)}, {"plain_values", to_json(bare)}},
                  memo == bare);
    }
}

using SuiteFn = std::function<void(Recorder&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"branched-paths", branched_path_table},
        {"branched-stars", branched_star_table},
        {"lifted-family", lifted_family},
        {"nonmonotone", nonmonotone},
        {"cycles", cycles},
        {"trees", trees},
        {"residue", residue_rounds},
        {"gadget", gadget},
        {"wc-gap", wc_gap},
        {"catalog", catalog},
        {"bias-monotonicity", bias_monotonicity},
        {"objective-monotonicity", objective_monotonicity},
        {"first-mover", first_mover},
        {"minimalization", minimalization},
        {"memo-transparency", memo_transparency},
    };
    return suites;
}

std::string canonical(const std::string& name) { return name == "thm1.8" ? "cycles" : name; }

}  // namespace

json SuiteReport::to_json() const {
    json j{{"suite", name}, {"ok", ok}, {"checked", rows.size()}, {"seconds", seconds}, {"rows", rows}};
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

bool is_suite(const std::string& name) {
    const auto c = canonical(name);
    const auto& r = registry();
    return std::any_of(r.begin(), r.end(), [&](const auto& e) { return e.first == c; });
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    const auto c = canonical(name);
    for (const auto& [suite, fn] : registry()) {
        if (suite != c) continue;
        SuiteReport report;
        report.name = suite;
        Recorder rec(report);
        const auto start = std::chrono::steady_clock::now();
        fn(rec, options);
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace posgames
