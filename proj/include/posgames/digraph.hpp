#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace posgames {

using Arc = std::pair<int, int>;

/// Directed multigraph with a distinguished start vertex and optional end vertex.
class RootedDigraph {
public:
    RootedDigraph() = default;
    RootedDigraph(int nv, std::vector<Arc> arcs, int start, std::optional<int> end = std::nullopt);

    [[nodiscard]] int nv() const { return nv_; }
    [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }
    [[nodiscard]] int arc_count() const { return static_cast<int>(arcs_.size()); }
    [[nodiscard]] int start() const { return start_; }
    [[nodiscard]] std::optional<int> end() const { return end_; }

    /// Indices into arcs() leaving v.
    [[nodiscard]] const std::vector<int>& out_arcs(int v) const { return out_.at(v); }
    [[nodiscard]] int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }

    /// dist[u][v] = length of a shortest directed u→v path, -1 when unreachable
    /// (dist[v][v] = 0). Quadratic memory; meant for desk-scale instances.
    [[nodiscard]] std::vector<std::vector<int>> distances() const;
    [[nodiscard]] bool is_acyclic() const;

    friend bool operator==(const RootedDigraph& a, const RootedDigraph& b) {
        return a.nv_ == b.nv_ && a.arcs_ == b.arcs_ && a.start_ == b.start_ && a.end_ == b.end_;
    }

private:
    int nv_ = 0;
    std::vector<Arc> arcs_;
    int start_ = 0;
    std::optional<int> end_;
    std::vector<std::vector<int>> out_;
};

}  // namespace posgames
