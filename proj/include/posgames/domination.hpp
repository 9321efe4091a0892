#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "posgames/constructions.hpp"
#include "posgames/graph.hpp"
#include "posgames/hypergraph.hpp"
#include "posgames/solver.hpp"

namespace posgames {

bool is_dominating(const SimpleGraph& g, const std::vector<int>& d);
bool is_dominating(const SimpleGraph& g, const ElementSet& d);

inline constexpr long long kDefaultDominationWork = 50'000'000;

/// Smallest dominating set size. Tries sizes k = 1, 2, ... and branches on the
/// closed neighbourhood of an undominated vertex of least degree; throws
/// GuardExceeded after `work_cap` search nodes.
int domination_number(const SimpleGraph& g, long long work_cap = kDefaultDominationWork);

/// Inclusion-minimal dominating sets as a hypergraph on V(G).
Hypergraph minimal_dominating_sets(const SimpleGraph& g);

/// Dominator plays Maker (Waiter); winning sets are the minimal dominating sets.
SolveResult dom_game_values(const SimpleGraph& g, int m, int b, Player first, const SolverOptions& options = {});
SolveResult dom_wc_values(const SimpleGraph& g, const SolverOptions& options = {});

struct ResidueReport {
    SimpleGraph residue;
    /// (leaf v, support w) in removal order, as original vertex indices.
    std::vector<std::pair<int, int>> removed_pairs;
    /// Original index of each residue vertex.
    std::vector<int> kept;
};

/// Repeatedly deletes a leaf v together with its neighbour w of degree 2,
/// always taking the lexicographically least such (v, w).
ResidueReport residue(const SimpleGraph& g);

/// Waiter-Client domination rounds of G computed as the number of removed
/// pairs plus the solver value on the residue; nullopt when Dominator loses.
std::optional<int> wc_rounds_via_residue(const SimpleGraph& g, const SolverOptions& options = {});

bool has_perfect_matching(const SimpleGraph& g);

/// n/2 when the tree has a perfect matching, nullopt (Dominator loses) otherwise.
std::optional<int> wc_tree_value(const SimpleGraph& tree);
/// floor(n/2) for the cycle C_n, n >= 3.
int wc_cycle_value(int n);

/// Domination number of a transference gadget from its block structure:
/// min over D ⊆ X of |D| + the sizes of all blocks whose cover misses D.
int gadget_domination_number(const GadgetBuild& gadget);

struct GadgetReport {
    bool edges_dominate = false;
    int domination_number = 0;
    int min_edge_size = 0;
    bool x_dominators_contain_edge = false;
    [[nodiscard]] bool ok() const {
        return edges_dominate && domination_number == min_edge_size && x_dominators_contain_edge;
    }
};

/// Every winning set dominates the gadget, its domination number is the
/// smallest winning-set size, and every dominating subset of X contains a
/// winning set. Requires a non-empty family.
GadgetReport check_gadget(const Hypergraph& h, const GadgetBuild& gadget, long long work_cap = kDefaultDominationWork);

}  // namespace posgames
