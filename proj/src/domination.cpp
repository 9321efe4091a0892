#include "posgames/domination.hpp"

#include <algorithm>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "posgames/errors.hpp"

namespace posgames {

bool is_dominating(const SimpleGraph& g, const std::vector<int>& d) {
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    for (int v : d) {
        if (v < 0 || v >= g.n()) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
        covered[v] = 1;
        for (int w : g.neighbors(v)) covered[w] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_dominating(const SimpleGraph& g, const ElementSet& d) { return is_dominating(g, d.to_vector()); }

namespace {

class DominationSearch {
public:
    DominationSearch(const SimpleGraph& g, long long cap) : g_(g), cap_(cap), cover_(g.n(), 0) {
        for (int v = 0; v < g.n(); ++v) max_reach_ = std::max(max_reach_, g.degree(v) + 1);
    }

    bool fits(int k) { return search(k, g_.n()); }

private:
    void add(int v, int delta, int& undominated) {
        auto touch = [&](int u) {
            if (delta > 0 && cover_[u]++ == 0) --undominated;
            if (delta < 0 && --cover_[u] == 0) ++undominated;
        };
        touch(v);
        for (int w : g_.neighbors(v)) touch(w);
    }

    bool search(int k, int undominated) {
        if (undominated == 0) return true;
        if (k == 0 || static_cast<long long>(k) * max_reach_ < undominated) return false;
        if (++work_ > cap_)
            throw GuardExceeded("domination number search exceeded " + std::to_string(cap_) + " nodes");
        int pick = -1;
        for (int v = 0; v < g_.n(); ++v)
            if (cover_[v] == 0 && (pick < 0 || g_.degree(v) < g_.degree(pick))) pick = v;
        std::vector<int> options{pick};
        options.insert(options.end(), g_.neighbors(pick).begin(), g_.neighbors(pick).end());
        for (int v : options) {
            add(v, 1, undominated);
            const bool ok = search(k - 1, undominated);
            add(v, -1, undominated);
            if (ok) return true;
        }
        return false;
    }

    const SimpleGraph& g_;
    long long cap_;
    long long work_ = 0;
    int max_reach_ = 1;
    std::vector<int> cover_;
};

}  // namespace

int domination_number(const SimpleGraph& g, long long work_cap) {
    DominationSearch search(g, work_cap);
    for (int k = 0; k <= g.n(); ++k)
        if (search.fits(k)) return k;
    return g.n();
}

Hypergraph minimal_dominating_sets(const SimpleGraph& g) {
    if (g.n() < 1) throw InvalidArgument("graph has no vertices");
    if (g.n() > kMaxElements)
        throw GuardExceeded("graph has " + std::to_string(g.n()) + " vertices, board capacity is " +
                            std::to_string(kMaxElements));
    std::vector<ElementSet> closed;
    for (int v = 0; v < g.n(); ++v) {
        ElementSet nb{v};
        for (int w : g.neighbors(v)) nb.set(w);
        closed.push_back(nb);
    }
    return berge_transversals(Hypergraph(g.n(), std::move(closed))).family;
}

SolveResult dom_game_values(const SimpleGraph& g, int m, int b, Player first, const SolverOptions& options) {
    return game_values(GameSpec::maker_breaker(minimal_dominating_sets(g), m, b, first), options);
}

SolveResult dom_wc_values(const SimpleGraph& g, const SolverOptions& options) {
    return game_values(GameSpec::waiter_client(minimal_dominating_sets(g)), options);
}

ResidueReport residue(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    auto live_neighbor = [&](int v) {
        for (int w : g.neighbors(v))
            if (alive[w]) return w;
        return -1;
    };
    ResidueReport report;
    std::vector<int> removed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n && !progress; ++v) {
            if (!alive[v] || degree[v] != 1) continue;
            const int w = live_neighbor(v);
            if (degree[w] != 2) continue;
            for (int x : {v, w}) {
                alive[x] = 0;
                for (int y : g.neighbors(x))
                    if (alive[y]) --degree[y];
            }
            report.removed_pairs.emplace_back(v, w);
            removed.push_back(v);
            removed.push_back(w);
            progress = true;
        }
    }
    report.residue = g.without(removed, &report.kept);
    return report;
}

std::optional<int> wc_rounds_via_residue(const SimpleGraph& g, const SolverOptions& options) {
    const auto report = residue(g);
    const auto rest = dom_wc_values(report.residue, options).min_rounds;
    if (!rest) return std::nullopt;
    return static_cast<int>(report.removed_pairs.size()) + *rest;
}

bool has_perfect_matching(const SimpleGraph& g) {
    if (g.n() % 2) return false;
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<std::size_t>(g.n()));
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(static_cast<std::size_t>(g.n()));
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    return 2 * static_cast<int>(boost::matching_size(bg, &mate[0])) == g.n();
}

std::optional<int> wc_tree_value(const SimpleGraph& tree) {
    if (!tree.is_tree()) throw InvalidArgument("input is not a tree");
    if (!has_perfect_matching(tree)) return std::nullopt;
    return tree.n() / 2;
}

int wc_cycle_value(int n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    return n / 2;
}

int gadget_domination_number(const GadgetBuild& gadget) {
    const int x = gadget.x_count;
    long long best = -1;
    for (unsigned mask = 0; mask < (1U << x); ++mask) {
        ElementSet d;
        for (int v = 0; v < x; ++v)
            if (mask >> v & 1U) d.set(v);
        long long size = d.count();
        for (const auto& cover : gadget.covers)
            if (!cover.intersects(d)) size += gadget.block_size;
        // With D ∩ X empty, X itself must be dominated by the blocks taken.
        if (mask == 0) {
            ElementSet reached;
            for (const auto& cover : gadget.covers) reached |= cover;
            if (reached != ElementSet::prefix(x)) continue;
        }
        if (best < 0 || size < best) best = size;
    }
    return static_cast<int>(best);
}

GadgetReport check_gadget(const Hypergraph& h, const GadgetBuild& gadget, long long work_cap) {
    if (h.edges().empty()) throw InvalidArgument("gadget check needs at least one winning set");
    GadgetReport report;
    report.min_edge_size = h.min_edge_size();
    report.edges_dominate = std::all_of(h.edges().begin(), h.edges().end(),
                                        [&](const ElementSet& e) { return is_dominating(gadget.graph, e); });
    report.domination_number = domination_number(gadget.graph, work_cap);
    report.x_dominators_contain_edge = true;
    for (unsigned mask = 0; mask < (1U << gadget.x_count); ++mask) {
        ElementSet d;
        for (int v = 0; v < gadget.x_count; ++v)
            if (mask >> v & 1U) d.set(v);
        if (!is_dominating(gadget.graph, d)) continue;
        const bool contains = std::any_of(h.edges().begin(), h.edges().end(),
                                          [&](const ElementSet& e) { return e.is_subset_of(d); });
        if (!contains) report.x_dominators_contain_edge = false;
    }
    return report;
}

}  // namespace posgames
