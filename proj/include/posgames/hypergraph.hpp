#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "posgames/element_set.hpp"

namespace posgames {

/// A board X = {0..n-1} together with a family of winning sets.
///
/// Construction canonicalizes: edges are deduplicated and kept in a fixed
/// order (ascending by sorted element list), so two hypergraphs with the same
/// family compare equal. Immutable afterwards.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<ElementSet> edges, std::vector<std::string> labels = {});

    static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges,
                                 std::vector<std::string> labels = {});

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<ElementSet>& edges() const { return edges_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
    [[nodiscard]] ElementSet board() const { return ElementSet::prefix(n_); }

    [[nodiscard]] std::vector<std::vector<int>> edge_lists() const;
    /// Smallest edge size; 0 for an empty family.
    [[nodiscard]] int min_edge_size() const;
    /// Distinct edge sizes in ascending order.
    [[nodiscard]] std::vector<int> edge_sizes() const;
    /// The subfamily of edges with at most s elements (same board).
    [[nodiscard]] Hypergraph restricted_to_size(int s) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    int n_ = 0;
    std::vector<ElementSet> edges_;
    std::vector<std::string> labels_;
};

/// Inclusion-minimal subfamily.
Hypergraph minimalize(const Hypergraph& h);

/// Board of `a` followed by board of `b` (b's indices shifted by a.n()).
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

struct Transversal {
    /// Inclusion-minimal transversals of the input family.
    Hypergraph family;
    /// Set when the input has no edges: the empty set is then the only
    /// minimal transversal, which cannot be stored as an edge.
    bool degenerate = false;
};

inline constexpr int kMaxTransversalBoard = 24;

/// All inclusion-minimal subsets of the board meeting every edge.
Transversal transversal_hypergraph(const Hypergraph& h);

inline constexpr std::size_t kMaxTransversalFamily = 2'000'000;

/// Same enumeration without the board-size guard; bounded instead by the
/// number of intermediate candidates.
Transversal berge_transversals(const Hypergraph& h, std::size_t family_cap = kMaxTransversalFamily);

inline constexpr long long kMaxSubsetEdges = 1'000'000;

/// Adds every k-subset of the board as an edge.
Hypergraph add_all_k_subsets(const Hypergraph& h, int k);

/// Binomial coefficient, saturating at LLONG_MAX.
long long binomial(int n, int k);

}  // namespace posgames
