#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posgames/cli.hpp"
#include "posgames/domination.hpp"
#include "posgames/errors.hpp"
#include "posgames/json_io.hpp"
#include "posgames/solver.hpp"
#include "posgames/strategies.hpp"
#include "posgames/suites.hpp"
#include "posgames/version.hpp"

namespace py = pybind11;
using namespace posgames;

namespace {

Player player(const std::string& s) {
    if (s == "maker") return Player::Maker;
    if (s == "breaker") return Player::Breaker;
    throw InvalidArgument("first must be 'maker' or 'breaker'");
}

GameSpec spec_from(const std::string& board, const std::string& kind, int m, int b, const std::string& first,
                   const std::vector<int>& start) {
    const json j = json::parse(board);
    if (kind == "aux") {
        ElementSet s;
        for (int v : start) {
            if (v < 0 || v >= kMaxElements) throw InvalidArgument("start vertex out of range");
            s.set(v);
        }
        auto spec = GameSpec::aux(digraph_from_json(j), b, s);
        spec.first = player(first);
        return spec;
    }
    if (kind == "wc") return GameSpec::waiter_client(hypergraph_from_json(j));
    if (kind == "mb") return GameSpec::maker_breaker(hypergraph_from_json(j), m, b, player(first));
    throw InvalidArgument("kind must be 'mb', 'wc' or 'aux'");
}

SolverOptions solver_options(int jobs) {
    SolverOptions o;
    o.jobs = jobs;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact Maker-Breaker / Waiter-Client solver (JSON-string interface; see the posgames package)";
    mod.attr("__version__") = kVersion;

    static py::exception<GuardExceeded> guard(mod, "GuardExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const GuardExceeded& e) {
            py::set_error(guard, e.what());
        } catch (const InvalidArgument& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const IllegalMove& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const json::exception& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    mod.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));

    mod.def(
        "game_values",
        [](const std::string& board, const std::string& kind, int m, int b, const std::string& first,
           const std::vector<int>& start, int jobs) {
            const auto spec = spec_from(board, kind, m, b, first, start);
            py::gil_scoped_release release;
            return to_json(game_values(spec, solver_options(jobs))).dump();
        },
        py::arg("board"), py::arg("kind"), py::arg("m") = 1, py::arg("b") = 1, py::arg("first") = "maker",
        py::arg("start") = std::vector<int>{}, py::arg("jobs") = 1);

    mod.def(
        "decide",
        [](const std::string& board, const std::string& kind, int m, int b, const std::string& first,
           const std::vector<int>& start, std::optional<int> rounds, std::optional<int> size, int jobs) {
            const auto spec = spec_from(board, kind, m, b, first, start);
            py::gil_scoped_release release;
            return decide(spec, Objective{rounds, size}, nullptr, solver_options(jobs));
        },
        py::arg("board"), py::arg("kind"), py::arg("m") = 1, py::arg("b") = 1, py::arg("first") = "maker",
        py::arg("start") = std::vector<int>{}, py::arg("rounds") = py::none(), py::arg("size") = py::none(),
        py::arg("jobs") = 1);

    mod.def(
        "dom_values",
        [](const std::string& graph, bool wc, int m, int b, const std::string& first) {
            const auto g = graph_from_json(json::parse(graph));
            const Player p = player(first);
            py::gil_scoped_release release;
            return to_json(wc ? dom_wc_values(g) : dom_game_values(g, m, b, p)).dump();
        },
        py::arg("graph"), py::arg("wc") = false, py::arg("m") = 1, py::arg("b") = 1, py::arg("first") = "maker");

    mod.def("domination_number",
            [](const std::string& graph) { return domination_number(graph_from_json(json::parse(graph))); });
    mod.def("minimal_dominating_sets", [](const std::string& graph) {
        return to_json(minimal_dominating_sets(graph_from_json(json::parse(graph)))).dump();
    });
    mod.def("wc_cycle_value", &wc_cycle_value, py::arg("n"));
    mod.def("wc_tree_value",
            [](const std::string& tree) { return wc_tree_value(graph_from_json(json::parse(tree))); });

    mod.def("strategy_ids", &strategy_ids);
    mod.def(
        "verify_strategy",
        [](const std::string& id, const std::string& params, const std::string& guarantee) {
            const json p = json::parse(params);
            const auto inst = strategy_instance(id, p);
            const Guarantee g = guarantee.empty() ? inst.guarantee : guarantee_from_string(guarantee);
            const auto strat = get_strategy(id, p);
            py::gil_scoped_release release;
            const auto r = verify_strategy(inst.spec, *strat, g);
            json trace = json::array();
            for (const auto& mv : r.counterexample) trace.push_back(describe(mv));
            return json{{"ok", r.ok},
                        {"guarantee", to_string(g)},
                        {"nodes", r.nodes},
                        {"worst_rounds", r.worst_rounds ? json(*r.worst_rounds) : json(nullptr)},
                        {"reason", r.reason},
                        {"counterexample", trace}}
                .dump();
        },
        py::arg("id"), py::arg("params") = "{}", py::arg("guarantee") = "");

    mod.def("suite_names", &suite_names);
    mod.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, int max_n, int instances) {
            SuiteOptions o;
            o.seed = seed;
            o.max_n = max_n;
            o.instances = instances;
            py::gil_scoped_release release;
            return run_suite(name, o).to_json().dump();
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("max_n") = 0, py::arg("instances") = 200);
}
