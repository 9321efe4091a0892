#include "posgames/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "posgames/constructions.hpp"
#include "posgames/domination.hpp"
#include "posgames/errors.hpp"
#include "posgames/json_io.hpp"
#include "posgames/solver.hpp"
#include "posgames/strategies.hpp"
#include "posgames/suites.hpp"
#include "posgames/version.hpp"

namespace posgames::cli {

namespace {

struct UsageError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string data = buf.str();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return hex.str();
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

/// Table rows of a payload: its "rows" array, or the payload as one row.
void write_csv(const json& payload, std::ostream& out) {
    json rows = json::array();
    if (payload.contains("rows") && payload.at("rows").is_array()) {
        rows = payload.at("rows");
    } else {
        json row = json::object();
        for (const auto& [k, v] : payload.items())
            if (!v.is_structured()) row[k] = v;
        rows.push_back(row);
    }
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (const auto& [k, v] : row.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(cols[i]);
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row.at(cols[i])) : "");
        out << "\n";
    }
}

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

Player parse_player(const std::string& s) {
    if (s == "maker" || s == "waiter" || s == "dominator") return Player::Maker;
    if (s == "breaker" || s == "client" || s == "staller") return Player::Breaker;
    throw UsageError("--first must be maker or breaker, got '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

/// Shared state of one invocation.
struct Context {
    std::string format = "json";
    int jobs = 1;
    std::size_t memo_cap = default_memo_cap();
    std::string manifest;
    std::uint64_t seed = 1;
    long long node_cap = kDefaultVerifyNodes;
    long long work_cap = kDefaultDominationWork;
    long long gadget_cap = GadgetOptions{}.vertex_cap;
    json inputs = json::array();
    int exit_code = kOk;

    [[nodiscard]] SolverOptions solver() const {
        SolverOptions o;
        o.memo_cap = memo_cap;
        o.jobs = jobs;
        return o;
    }

    json read(const std::string& path) {
        json j = read_json_file(path);
        inputs.push_back({{"path", path}, {"sha256", sha256_file(path)}});
        return j;
    }
};

SimpleGraph graph_from_spec(const std::string& spec, std::uint64_t seed) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto number = [&]() {
        const auto v = parse_int_list(rest);
        if (v.size() != 1) throw UsageError("graph '" + spec + "' needs one size, e.g. cycle:7");
        return v[0];
    };
    if (kind == "cycle") return graphs::cycle(number());
    if (kind == "path") return graphs::path(number());
    if (kind == "star") return graphs::star(number());
    if (kind == "complete") return graphs::complete(number());
    if (kind == "pruefer") {
        const auto seq = parse_int_list(rest);
        return graphs::from_pruefer(seq, static_cast<int>(seq.size()) + 2);
    }
    if (kind == "random-tree") {
        std::mt19937_64 rng(seed);
        return graphs::random_tree(number(), rng);
    }
    throw UsageError("unknown graph '" + spec + "' (cycle:N, path:N, star:L, complete:N, pruefer:a,b,..., random-tree:N)");
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
    std::string name;
    std::optional<int> t, b, m, s, s2, t2, r, n, k, a;
    std::string biases;
    std::string input;
    std::string graph;
    bool minimal_covers = false;
    std::string output;
    std::string restriction_out;
};

int need(const std::optional<int>& v, const char* flag, const std::string& name) {
    if (!v) throw UsageError("gen " + name + " needs --" + std::string(flag));
    return *v;
}

json gen(Context& ctx, const GenArgs& g) {
    auto p = [&](const std::optional<int>& v, const char* flag) { return need(v, flag, g.name); };
    std::optional<AssociatedFamily> family;
    json board;
    if (g.name == "gtb") {
        board = to_json(build_gtb(p(g.t, "t"), p(g.b, "b")).digraph);
    } else if (g.name == "htb") {
        board = to_json(build_htb(p(g.t, "t"), p(g.b, "b")).digraph);
    } else if (g.name == "hmbst") {
        auto build = build_hmbst(p(g.m, "m"), p(g.b, "b"), p(g.s, "s"), p(g.t, "t"));
        board = to_json(build.hypergraph);
        family = build.family;
    } else if (g.name == "nonmonotone") {
        board = to_json(build_nonmonotone(parse_int_list(g.biases)));
    } else if (g.name == "first-mover-gap") {
        auto build = build_first_mover_gap(p(g.m, "m"), p(g.b, "b"), p(g.s, "s"), p(g.s2, "s2"), p(g.t, "t"),
                                           p(g.t2, "t2"));
        board = to_json(build.hypergraph);
        family = build.family;
    } else if (g.name == "first-mover-gap-small-edge") {
        auto build = build_first_mover_gap_with_small_edge(p(g.m, "m"), p(g.b, "b"), p(g.r, "r"), p(g.s, "s"),
                                                           p(g.s2, "s2"), p(g.t, "t"), p(g.t2, "t2"));
        board = to_json(build.hypergraph);
        family = build.family;
    } else if (g.name == "large-before-small") {
        board = to_json(build_large_before_small(p(g.m, "m"), p(g.b, "b"), p(g.s, "s"), p(g.t, "t")));
    } else if (g.name == "fast-versus-small") {
        auto build = build_fast_versus_small(p(g.m, "m"), p(g.b, "b"), p(g.s, "s"), p(g.s2, "s2"), p(g.t, "t"),
                                             p(g.t2, "t2"));
        board = to_json(build.hypergraph);
        family = build.family;
    } else if (g.name == "wc-pairs") {
        board = to_json(build_wc_pairs_family(p(g.t, "t")));
    } else if (g.name == "complete-uniform") {
        board = to_json(build_complete_uniform(p(g.n, "n"), p(g.k, "k")));
    } else if (g.name == "wc-gap") {
        board = to_json(build_wc_gap(p(g.s, "s"), p(g.t, "t")));
    } else if (g.name == "gadget") {
        if (g.input.empty()) throw UsageError("gen gadget needs --input HYPERGRAPH.json");
        GadgetOptions options;
        options.minimal_covers = g.minimal_covers;
        options.vertex_cap = ctx.gadget_cap;
        board = to_json(build_gadget(hypergraph_from_json(ctx.read(g.input)), p(g.a, "a"), options).graph);
    } else if (g.name == "transversal") {
        if (g.input.empty()) throw UsageError("gen transversal needs --input HYPERGRAPH.json");
        const auto tr = transversal_hypergraph(hypergraph_from_json(ctx.read(g.input)));
        if (tr.degenerate) throw InvalidArgument("input has no edges; its only transversal is the empty set");
        board = to_json(tr.family);
    } else if (g.name == "dominating-sets") {
        SimpleGraph graph = !g.input.empty() ? graph_from_json(ctx.read(g.input)) : graph_from_spec(g.graph, ctx.seed);
        board = to_json(minimal_dominating_sets(graph));
    } else if (g.name == "graph") {
        if (g.graph.empty()) throw UsageError("gen graph needs --graph SPEC");
        board = to_json(graph_from_spec(g.graph, ctx.seed));
    } else {
        throw UsageError("unknown generator '" + g.name + "'");
    }
    if (!g.restriction_out.empty()) {
        if (!family) throw UsageError("generator '" + g.name + "' has no associated family");
        write_json_file(g.restriction_out, to_json(MoveRestriction{family->sets}));
    }
    if (g.output.empty()) return board;
    write_json_file(g.output, board);
    json summary{{"written", g.output}, {"type", board.at("type")}, {"n", board.at("n")}};
    if (board.contains("edges")) summary["edges"] = board.at("edges").size();
    if (board.contains("arcs")) summary["arcs"] = board.at("arcs").size();
    return summary;
}

// ---------------------------------------------------------------------------
// solve / frontier

struct GameArgs {
    std::string kind;
    std::string input;
    int m = 1;
    int b = 1;
    std::string first = "maker";
    std::optional<int> opening;
    std::optional<int> rounds;
    std::optional<int> size;
    std::string restriction;
    std::string start_vertices;
    bool minimalize = false;
};

void add_game_options(CLI::App* app, GameArgs& g) {
    app->add_option("kind", g.kind, "mb, wc or aux")->required()->check(CLI::IsMember({"mb", "wc", "aux"}));
    app->add_option("--input,-i", g.input, "board JSON (hypergraph, or digraph for aux)")->required();
    app->add_option("--m", g.m, "Maker bias");
    app->add_option("--b", g.b, "Breaker bias");
    app->add_option("--first", g.first, "maker or breaker");
    app->add_option("--opening", g.opening, "size of Breaker's opening move when he starts");
    app->add_option("--rounds,-t", g.rounds, "round budget");
    app->add_option("--size,-s", g.size, "winning-set size bound");
    app->add_option("--restriction", g.restriction, "associated family JSON (Maker-Breaker only)");
    app->add_option("--S", g.start_vertices, "aux game: vertices Maker owns at the start, e.g. 0,3");
    app->add_flag("--minimalize", g.minimalize, "drop non-minimal winning sets first");
}

GameSpec game_spec(Context& ctx, const GameArgs& g, std::optional<MoveRestriction>& restriction) {
    const json board = ctx.read(g.input);
    GameSpec spec;
    if (g.kind == "aux") {
        ElementSet s;
        const auto d = digraph_from_json(board);
        for (int v : parse_int_list(g.start_vertices)) {
            if (v < 0 || v >= d.nv()) throw InvalidArgument("--S vertex " + std::to_string(v) + " out of range");
            s.set(v);
        }
        spec = GameSpec::aux(d, g.b, s);
        spec.first = parse_player(g.first);
    } else {
        Hypergraph h = hypergraph_from_json(board);
        if (g.minimalize) h = minimalize(h);
        spec = g.kind == "wc" ? GameSpec::waiter_client(h) : GameSpec::maker_breaker(h, g.m, g.b, parse_player(g.first));
    }
    if (g.opening) spec.opening_bias = *g.opening;
    if (!g.restriction.empty()) {
        if (g.kind != "mb") throw UsageError("--restriction applies to Maker-Breaker games only");
        restriction = restriction_from_json(ctx.read(g.restriction));
        validate_restriction(spec.hypergraph(), spec.maker_bias, spec.breaker_bias, *restriction);
    }
    spec.validate();
    return spec;
}

json solve(Context& ctx, const GameArgs& g) {
    std::optional<MoveRestriction> restriction;
    const auto spec = game_spec(ctx, g, restriction);
    const MoveRestriction* r = restriction ? &*restriction : nullptr;
    SolverStats stats;
    json out;
    if (g.rounds || g.size) {
        const Objective obj{g.rounds, g.size};
        out = {{"type", "decision"},
               {"maker_wins", decide(spec, obj, r, ctx.solver(), &stats)},
               {"rounds", opt(g.rounds)},
               {"size", opt(g.size)}};
    } else {
        out = to_json(game_values(spec, ctx.solver(), r, &stats));
    }
    out["nodes"] = stats.nodes;
    return out;
}

json frontier(Context& ctx, const GameArgs& g) {
    std::optional<MoveRestriction> restriction;
    const auto spec = game_spec(ctx, g, restriction);
    const auto values = game_values(spec, ctx.solver(), restriction ? &*restriction : nullptr);
    json rows = json::array();
    for (auto [t, s] : values.frontier) rows.push_back({{"rounds", t}, {"size", s}});
    return {{"maker_wins", values.maker_wins},
            {"min_rounds", opt(values.min_rounds)},
            {"min_size", opt(values.min_size)},
            {"rows", rows}};
}

// ---------------------------------------------------------------------------
// dom

struct DomArgs {
    std::string input;
    std::string graph;
    bool wc = false;
    int m = 1;
    int b = 1;
    std::string first = "maker";
    std::string family;
    std::optional<int> n;
};

void add_graph_options(CLI::App* app, DomArgs& d) {
    app->add_option("--input,-i", d.input, "graph JSON");
    app->add_option("--graph,-g", d.graph, "named graph: cycle:N, path:N, star:L, complete:N, pruefer:..., random-tree:N");
}

SimpleGraph dom_graph(Context& ctx, const DomArgs& d) {
    if (!d.input.empty() && !d.graph.empty()) throw UsageError("give either --input or --graph, not both");
    if (!d.input.empty()) return graph_from_json(ctx.read(d.input));
    if (!d.graph.empty()) return graph_from_spec(d.graph, ctx.seed);
    throw UsageError("a graph is required (--input FILE or --graph SPEC)");
}

json dom_solve(Context& ctx, const DomArgs& d) {
    const auto g = dom_graph(ctx, d);
    const auto values = d.wc ? dom_wc_values(g, ctx.solver())
                             : dom_game_values(g, d.m, d.b, parse_player(d.first), ctx.solver());
    json out = to_json(values);
    out["game"] = d.wc ? "waiter-client" : "maker-breaker";
    return out;
}

json dom_residue(Context& ctx, const DomArgs& d) {
    const auto g = dom_graph(ctx, d);
    const auto report = residue(g);
    json pairs = json::array();
    for (auto [v, w] : report.removed_pairs) pairs.push_back({v, w});
    return {{"residue", to_json(report.residue)}, {"removed_pairs", pairs}, {"kept", report.kept}};
}

json dom_closedform(Context& ctx, const DomArgs& d) {
    if (d.family == "cycle") {
        if (!d.n) throw UsageError("dom closedform cycle needs --n");
        return {{"value", wc_cycle_value(*d.n)}};
    }
    if (d.family == "tree") return {{"value", opt(wc_tree_value(dom_graph(ctx, d)))}};
    throw UsageError("closed forms exist for 'cycle' and 'tree'");
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string target;
    std::optional<int> max_n;
    int instances = 200;
    std::string params = "{}";
    std::string params_file;
    std::string guarantee;
    bool brief = false;
};

json verify(Context& ctx, const VerifyArgs& v) {
    if (v.target == "all" || is_suite(v.target)) {
        SuiteOptions o;
        o.seed = ctx.seed;
        o.max_n = v.max_n.value_or(0);
        o.instances = v.instances;
        o.solver = ctx.solver();
        std::vector<std::string> names = v.target == "all" ? suite_names() : std::vector<std::string>{v.target};
        json reports = json::array();
        json rows = json::array();
        bool ok = true;
        for (const auto& name : names) {
            const auto report = run_suite(name, o);
            ok = ok && report.ok;
            json j = report.to_json();
            if (v.brief || names.size() > 1) j.erase("rows");
            rows.push_back({{"suite", report.name}, {"ok", report.ok}, {"checked", report.rows.size()},
                            {"seconds", report.seconds}});
            reports.push_back(j);
        }
        if (!ok) ctx.exit_code = kClaimViolated;
        if (names.size() == 1) return reports[0];
        return {{"ok", ok}, {"rows", rows}, {"suites", reports}};
    }

    const auto& ids = strategy_ids();
    if (std::find(ids.begin(), ids.end(), v.target) == ids.end())
        throw UsageError("'" + v.target + "' is neither a suite nor a strategy");
    json params;
    try {
        params = v.params_file.empty() ? json::parse(v.params) : ctx.read(v.params_file);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--params is not valid JSON: ") + e.what());
    }
    const auto inst = strategy_instance(v.target, params);
    const Guarantee g = v.guarantee.empty() ? inst.guarantee : guarantee_from_string(v.guarantee);
    VerifyOptions vo;
    vo.node_cap = ctx.node_cap;
    const auto result = verify_strategy(inst.spec, *get_strategy(v.target, params), g, vo);
    json out{{"strategy", v.target},
             {"params", params},
             {"guarantee", to_string(g)},
             {"ok", result.ok},
             {"nodes", result.nodes},
             {"worst_rounds", opt(result.worst_rounds)}};
    if (!result.ok) {
        json trace = json::array();
        for (const auto& mv : result.counterexample) trace.push_back(describe(mv));
        out["reason"] = result.reason;
        out["counterexample"] = trace;
        ctx.exit_code = kClaimViolated;
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver for Maker-Breaker, Waiter-Client and domination games", "posgames"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    Context ctx;
    app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs,-j", ctx.jobs, "worker threads for root-level search")->check(CLI::PositiveNumber);
    app.add_option("--memo-cap", ctx.memo_cap, "memo table entry cap (default: POSGAMES_MEMO_CAP or 2^27)")
        ->check(CLI::PositiveNumber);
    app.add_option("--manifest", ctx.manifest, "write a run manifest JSON to this file");
    app.add_option("--seed", ctx.seed, "seed for random instances");
    app.add_option("--node-cap", ctx.node_cap, "strategy verifier node cap")->check(CLI::PositiveNumber);
    app.add_option("--work-cap", ctx.work_cap, "domination number search node cap")->check(CLI::PositiveNumber);
    app.add_option("--gadget-cap", ctx.gadget_cap, "transference gadget vertex cap")->check(CLI::PositiveNumber);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate a construction or graph");
    gen_cmd->add_option("name", gen_args.name, "generator name")->required();
    gen_cmd->add_option("--t", gen_args.t);
    gen_cmd->add_option("--b", gen_args.b);
    gen_cmd->add_option("--m", gen_args.m);
    gen_cmd->add_option("--s", gen_args.s);
    gen_cmd->add_option("--s2", gen_args.s2);
    gen_cmd->add_option("--t2", gen_args.t2);
    gen_cmd->add_option("--r", gen_args.r);
    gen_cmd->add_option("--n", gen_args.n);
    gen_cmd->add_option("--k", gen_args.k);
    gen_cmd->add_option("--a", gen_args.a);
    gen_cmd->add_option("--B", gen_args.biases, "bias set, e.g. 1,2");
    gen_cmd->add_option("--input,-i", gen_args.input);
    gen_cmd->add_option("--graph,-g", gen_args.graph);
    gen_cmd->add_flag("--minimal-covers", gen_args.minimal_covers, "gadget over minimal covers only (not faithful)");
    gen_cmd->add_option("--output,-o", gen_args.output);
    gen_cmd->add_option("--restriction-out", gen_args.restriction_out, "write the associated family here");

    GameArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "game values or a single decision");
    add_game_options(solve_cmd, solve_args);
    GameArgs frontier_args;
    auto* frontier_cmd = app.add_subcommand("frontier", "Pareto frontier of (rounds, size)");
    add_game_options(frontier_cmd, frontier_args);

    DomArgs dom_args;
    auto* dom_cmd = app.add_subcommand("dom", "domination games on graphs");
    dom_cmd->require_subcommand(1);
    auto* dom_solve_cmd = dom_cmd->add_subcommand("solve", "game values of the domination game");
    add_graph_options(dom_solve_cmd, dom_args);
    dom_solve_cmd->add_flag("--wc", dom_args.wc, "Waiter-Client instead of Maker-Breaker");
    dom_solve_cmd->add_option("--m", dom_args.m);
    dom_solve_cmd->add_option("--b", dom_args.b);
    dom_solve_cmd->add_option("--first", dom_args.first, "maker (Dominator) or breaker (Staller)");
    auto* dom_gamma_cmd = dom_cmd->add_subcommand("gamma", "domination number");
    add_graph_options(dom_gamma_cmd, dom_args);
    auto* dom_residue_cmd = dom_cmd->add_subcommand("residue", "leaf/degree-2 pair removal");
    add_graph_options(dom_residue_cmd, dom_args);
    auto* dom_closed_cmd = dom_cmd->add_subcommand("closedform", "closed-form Waiter-Client values");
    dom_closed_cmd->add_option("family", dom_args.family, "cycle or tree")->required();
    dom_closed_cmd->add_option("--n", dom_args.n);
    add_graph_options(dom_closed_cmd, dom_args);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run a check suite or certify a catalog strategy");
    verify_cmd->add_option("target", verify_args.target, "suite name, 'all', or strategy id")->required();
    verify_cmd->add_option("--max-n", verify_args.max_n, "largest graph order for the domination suites");
    verify_cmd->add_option("--instances", verify_args.instances, "random instances per property suite");
    verify_cmd->add_option("--params", verify_args.params, "strategy parameters as JSON");
    verify_cmd->add_option("--params-file", verify_args.params_file);
    verify_cmd->add_option("--guarantee", verify_args.guarantee, "override, e.g. win-within:3");
    verify_cmd->add_flag("--brief", verify_args.brief, "omit per-instance rows");

    std::vector<std::string> argv_store{"posgames"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    json payload;
    int code = kOk;
    try {
        if (*gen_cmd) payload = gen(ctx, gen_args);
        else if (*solve_cmd) payload = solve(ctx, solve_args);
        else if (*frontier_cmd) payload = frontier(ctx, frontier_args);
        else if (*dom_solve_cmd) payload = dom_solve(ctx, dom_args);
        else if (*dom_gamma_cmd) payload = {{"gamma", domination_number(dom_graph(ctx, dom_args), ctx.work_cap)}};
        else if (*dom_residue_cmd) payload = dom_residue(ctx, dom_args);
        else if (*dom_closed_cmd) payload = dom_closedform(ctx, dom_args);
        else if (*verify_cmd) payload = verify(ctx, verify_args);
        code = ctx.exit_code;
    } catch (const GuardExceeded& e) {
        err << "aborted: " << e.what() << "\n";
        code = kGuardAbort;
    } catch (const std::bad_alloc&) {
        err << "aborted: out of memory\n";
        code = kGuardAbort;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        code = kUsage;
    }

    if (!payload.is_null()) {
        if (ctx.format == "csv")
            write_csv(payload, out);
        else
            out << payload.dump(2) << "\n";
    }
    if (!ctx.manifest.empty()) {
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json manifest{{"command", argv_store},
                      {"version", kVersion},
                      {"inputs", ctx.inputs},
                      {"seed", ctx.seed},
                      {"jobs", ctx.jobs},
                      {"wall_time_seconds", wall},
                      {"exit_code", code},
                      {"result", payload}};
        try {
            write_json_file(ctx.manifest, manifest);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            if (code == kOk) code = kUsage;
        }
    }
    return code;
}

}  // namespace posgames::cli
