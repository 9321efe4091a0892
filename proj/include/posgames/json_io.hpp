#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "posgames/digraph.hpp"
#include "posgames/graph.hpp"
#include "posgames/hypergraph.hpp"
#include "posgames/solver.hpp"

namespace posgames {

using json = nlohmann::json;
using Board = std::variant<Hypergraph, SimpleGraph, RootedDigraph>;

json to_json(const Hypergraph& h);
json to_json(const SimpleGraph& g);
json to_json(const RootedDigraph& d);
json to_json(const SolveResult& r);
json to_json(const MoveRestriction& r);

/// Each parser checks the "type" tag and throws InvalidArgument on malformed input.
Hypergraph hypergraph_from_json(const json& j);
SimpleGraph graph_from_json(const json& j);
RootedDigraph digraph_from_json(const json& j);
SolveResult solve_result_from_json(const json& j);
MoveRestriction restriction_from_json(const json& j);
Board board_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace posgames
