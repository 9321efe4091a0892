#include "posgames/json_io.hpp"

#include <fstream>

#include "posgames/errors.hpp"

namespace posgames {

namespace {

void expect_type(const json& j, const char* type) {
    if (!j.is_object() || !j.contains("type") || j.at("type") != type)
        throw InvalidArgument(std::string("expected a JSON object with \"type\":\"") + type + "\"");
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> read_optional_int(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<int>();
}

}  // namespace

json to_json(const Hypergraph& h) {
    json j{{"type", "hypergraph"}, {"n", h.n()}, {"edges", h.edge_lists()}};
    if (h.has_labels()) j["labels"] = h.labels();
    return j;
}

json to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"type", "graph"}, {"n", g.n()}, {"edges", edges}};
}

json to_json(const RootedDigraph& d) {
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
    json j{{"type", "digraph"}, {"n", d.nv()}, {"arcs", arcs}, {"start", d.start()}};
    if (d.end()) j["end"] = *d.end();
    return j;
}

json to_json(const SolveResult& r) {
    json frontier = json::array();
    for (auto [t, s] : r.frontier) frontier.push_back({t, s});
    return {{"type", "solve_result"},
            {"maker_wins", r.maker_wins},
            {"min_rounds", optional_int(r.min_rounds)},
            {"min_size", optional_int(r.min_size)},
            {"frontier", frontier}};
}

json to_json(const MoveRestriction& r) {
    json sets = json::array();
    for (const auto& s : r.sets) sets.push_back(s.to_vector());
    return {{"type", "restriction"}, {"sets", sets}};
}

Hypergraph hypergraph_from_json(const json& j) {
    expect_type(j, "hypergraph");
    return guarded([&] {
        const int n = j.at("n").get<int>();
        auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return Hypergraph::from_lists(n, edges, std::move(labels));
    });
}

SimpleGraph graph_from_json(const json& j) {
    expect_type(j, "graph");
    return guarded([&] {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidArgument("graph edges must be pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return SimpleGraph(j.at("n").get<int>(), edges);
    });
}

RootedDigraph digraph_from_json(const json& j) {
    expect_type(j, "digraph");
    return guarded([&] {
        std::vector<Arc> arcs;
        for (const auto& a : j.at("arcs")) {
            if (!a.is_array() || a.size() != 2) throw InvalidArgument("digraph arcs must be pairs");
            arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
        }
        std::optional<int> end;
        if (j.contains("end") && !j.at("end").is_null()) end = j.at("end").get<int>();
        return RootedDigraph(j.at("n").get<int>(), std::move(arcs), j.at("start").get<int>(), end);
    });
}

SolveResult solve_result_from_json(const json& j) {
    expect_type(j, "solve_result");
    return guarded([&] {
        SolveResult r;
        r.maker_wins = j.at("maker_wins").get<bool>();
        r.min_rounds = read_optional_int(j.at("min_rounds"));
        r.min_size = read_optional_int(j.at("min_size"));
        for (const auto& p : j.at("frontier")) r.frontier.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        return r;
    });
}

MoveRestriction restriction_from_json(const json& j) {
    expect_type(j, "restriction");
    return guarded([&] {
        MoveRestriction r;
        for (const auto& set : j.at("sets")) {
            ElementSet s;
            for (int e : set.get<std::vector<int>>()) {
                if (e < 0 || e >= kMaxElements) throw InvalidArgument("restriction element out of range");
                s.set(e);
            }
            r.sets.push_back(s);
        }
        return r;
    });
}

Board board_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw InvalidArgument("board JSON needs a \"type\" field");
    const auto type = j.at("type").get<std::string>();
    if (type == "hypergraph") return hypergraph_from_json(j);
    if (type == "graph") return graph_from_json(j);
    if (type == "digraph") return digraph_from_json(j);
    throw InvalidArgument("unknown board type \"" + type + "\"");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace posgames
