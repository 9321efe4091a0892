#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace posgames {

using Edge = std::pair<int, int>;

/// Undirected simple graph. Not bounded by the board capacity: transference
/// gadgets can have thousands of vertices.
class SimpleGraph {
public:
    SimpleGraph() = default;
    /// Loops are rejected; repeated edges are collapsed.
    SimpleGraph(int n, const std::vector<Edge>& edges);

    [[nodiscard]] int n() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    [[nodiscard]] int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    [[nodiscard]] bool has_edge(int u, int v) const;
    [[nodiscard]] int edge_count() const;
    /// Edges as (u, v) with u < v, ascending.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] bool is_connected() const;
    [[nodiscard]] bool is_tree() const { return n() >= 1 && is_connected() && edge_count() == n() - 1; }

    /// Induced subgraph on the complement of `removed`, with vertices
    /// renumbered in ascending order. `kept`, when given, receives the
    /// original index of each new vertex.
    [[nodiscard]] SimpleGraph without(const std::vector<int>& removed,
                                      std::vector<int>* kept = nullptr) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<std::vector<int>> adj_;
};

namespace graphs {

SimpleGraph cycle(int n);
SimpleGraph path(int n);
SimpleGraph star(int leaves);
SimpleGraph complete(int n);
/// Tree with n = seq.size() + 2 vertices from a Prüfer sequence.
SimpleGraph from_pruefer(const std::vector<int>& seq, int n);
/// Uniform labelled tree on n vertices.
SimpleGraph random_tree(int n, std::mt19937_64& rng);
/// G(n, p).
SimpleGraph random_graph(int n, double p, std::mt19937_64& rng);
/// One representative per isomorphism class of trees on n vertices.
std::vector<SimpleGraph> all_free_trees(int n);

}  // namespace graphs

}  // namespace posgames
