#include "posgames/digraph.hpp"

#include <deque>
#include <string>

#include "posgames/errors.hpp"

namespace posgames {

RootedDigraph::RootedDigraph(int nv, std::vector<Arc> arcs, int start, std::optional<int> end)
    : nv_(nv), arcs_(std::move(arcs)), start_(start), end_(end) {
    if (nv < 1) throw InvalidArgument("digraph needs at least one vertex");
    auto valid = [&](int v) { return v >= 0 && v < nv; };
    if (!valid(start)) throw InvalidArgument("start vertex " + std::to_string(start) + " out of range");
    if (end && !valid(*end)) throw InvalidArgument("end vertex " + std::to_string(*end) + " out of range");
    out_.assign(static_cast<std::size_t>(nv), {});
    for (int a = 0; a < arc_count(); ++a) {
        auto [u, v] = arcs_[a];
        if (!valid(u) || !valid(v))
            throw InvalidArgument("arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        out_[u].push_back(a);
    }
}

std::vector<std::vector<int>> RootedDigraph::distances() const {
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(nv_), std::vector<int>(nv_, -1));
    for (int s = 0; s < nv_; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int a : out_[u]) {
                const int v = arcs_[a].second;
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

bool RootedDigraph::is_acyclic() const {
    std::vector<int> indegree(static_cast<std::size_t>(nv_), 0);
    for (auto [u, v] : arcs_) ++indegree[v];
    std::vector<int> ready;
    for (int v = 0; v < nv_; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        const int u = ready.back();
        ready.pop_back();
        ++seen;
        for (int a : out_[u])
            if (--indegree[arcs_[a].second] == 0) ready.push_back(arcs_[a].second);
    }
    return seen == nv_;
}

}  // namespace posgames
