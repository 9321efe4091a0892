#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posgames/digraph.hpp"
#include "posgames/graph.hpp"
#include "posgames/hypergraph.hpp"
#include "posgames/solver.hpp"

namespace posgames {

/// Recursive layout of one copy of the branched path G_l(b) inside a larger
/// digraph. A level-l copy (l >= 2) from `start` to `end` consists of a
/// level-(l-1) copy start→middle (parts[0]) and b level-(l-1) copies
/// middle→end (parts[1..b]). A level-1 copy is the single arc `arc`.
struct GtbCopy {
    int level = 1;
    int start = 0;
    int end = 0;
    int middle = -1;
    int arc = -1;
    std::vector<GtbCopy> parts;
    /// Vertices strictly inside the copy (not start or end).
    std::vector<int> inner_vertices;
    /// Arc indices of the copy.
    std::vector<int> arcs;
};

struct GtbBuild {
    RootedDigraph digraph;
    GtbCopy layout;
    std::vector<std::string> labels;
};

/// x_0..x_{b+1} are vertices 0..b+1; copies[i-1][j] is the j-th copy of
/// G_{t-2}(b) from x_0 to x_i.
struct HtbBuild {
    RootedDigraph digraph;
    std::vector<int> x;
    std::vector<std::vector<GtbCopy>> copies;
    std::vector<std::string> labels;
};

inline constexpr long long kMaxConstructionArcs = 1'000'000;

/// Spine vertices v_0..v_t are indices 0..t; start v_0, end v_t.
GtbBuild build_gtb(int t, int b);
HtbBuild build_htb(int t, int b);

struct AssociatedFamily {
    std::vector<ElementSet> sets;
};

/// Element layout of H(m,b,s,t). For s <= 3m it is a lifted H_t(b): vertex x
/// becomes vertex_sets[x] and arc a becomes the edge vertex_sets[u] ∪
/// vertex_sets[v] ∪ arc_extras[a]. Otherwise `top` is added to every edge of
/// b+1 disjoint children H(m,b,s-m,t-1).
struct HmbstLayout {
    int s = 0;
    int t = 0;
    bool lifted = true;
    HtbBuild htb;
    std::vector<ElementSet> vertex_sets;
    std::vector<ElementSet> arc_extras;
    ElementSet top;
    std::vector<HmbstLayout> children;
};

struct HmbstBuild {
    Hypergraph hypergraph;
    AssociatedFamily family;
    HmbstLayout layout;
};

/// Requires s >= 2m+1, m <= b, t >= ceil(s/m).
HmbstBuild build_hmbst(int m, int b, int s, int t);

/// Every edge contains or misses each family set, and elements outside the
/// family lie in at most one edge.
bool satisfies_overlap_properties(const Hypergraph& h, const AssociatedFamily& family);

struct GadgetOptions {
    /// Use only inclusion-minimal covers. Smaller, but not the faithful gadget.
    bool minimal_covers = false;
    long long vertex_cap = 2'000'000;
};

/// X is vertices 0..|X|-1; block k (vertices block_start[k] ..
/// block_start[k]+block_size-1) is joined to covers[k].
struct GadgetBuild {
    SimpleGraph graph;
    int x_count = 0;
    std::vector<ElementSet> covers;
    std::vector<int> block_start;
    int block_size = 0;
};

inline constexpr int kMaxGadgetBoard = 20;

GadgetBuild build_gadget(const Hypergraph& h, int a, const GadgetOptions& options = {});

/// Blocks V_1..V_{b_l+1}; the winning sets pick exactly one element per block.
Hypergraph build_nonmonotone(const std::vector<int>& biases);
/// (first element, size) of each block of build_nonmonotone(biases).
std::vector<std::pair<int, int>> nonmonotone_blocks(const std::vector<int>& biases);

struct HypergraphWithFamily {
    Hypergraph hypergraph;
    AssociatedFamily family;
};

/// b copies of H(m,b,s,t) and one copy of H(m,b,s',t').
HypergraphWithFamily build_first_mover_gap(int m, int b, int s, int s2, int t, int t2);
/// build_first_mover_gap plus one disjoint edge of size r.
HypergraphWithFamily build_first_mover_gap_with_small_edge(int m, int b, int r, int s, int s2, int t, int t2);
/// H(m,b,s,ceil(t/m)+1) plus every t-subset of its board.
Hypergraph build_large_before_small(int m, int b, int s, int t);
/// H(m,b,s',t) disjoint union H(m,b,s,t').
HypergraphWithFamily build_fast_versus_small(int m, int b, int s, int s2, int t, int t2);

/// Elements a_i = 2(i-1), b_i = 2i-1 (i = 1..4) followed by 2t-6 elements M;
/// edges {a_i, b_i} ∪ S for every (t-3)-subset S of M.
Hypergraph build_wc_pairs_family(int t);
std::vector<std::pair<int, int>> wc_pairs(int t);
Hypergraph build_complete_uniform(int n, int k);
/// build_wc_pairs_family(t) disjoint union build_complete_uniform(2s, s).
Hypergraph build_wc_gap(int s, int t);

int ceil_div(int a, int b);

}  // namespace posgames
