#include "posgames/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "posgames/errors.hpp"

namespace posgames {

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
        if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

int SimpleGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adj_) total += list.size();
    return static_cast<int>(total / 2);
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool SimpleGraph::is_connected() const {
    if (n() == 0) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n();
}

SimpleGraph SimpleGraph::without(const std::vector<int>& removed, std::vector<int>* kept) const {
    std::vector<int> index(adj_.size(), -1);
    std::vector<char> gone(adj_.size(), 0);
    for (int v : removed) gone.at(v) = 1;
    std::vector<int> keep;
    for (int v = 0; v < n(); ++v)
        if (!gone[v]) {
            index[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    std::vector<Edge> edges;
    for (auto [u, v] : this->edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    if (kept) *kept = keep;
    return SimpleGraph(static_cast<int>(keep.size()), edges);
}

namespace graphs {

SimpleGraph cycle(int n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, edges);
}

SimpleGraph path(int n) {
    if (n < 1) throw InvalidArgument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph(n, edges);
}

SimpleGraph star(int leaves) {
    if (leaves < 0) throw InvalidArgument("negative leaf count");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return SimpleGraph(leaves + 1, edges);
}

SimpleGraph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

SimpleGraph from_pruefer(const std::vector<int>& seq, int n) {
    if (n < 1) throw InvalidArgument("tree needs n >= 1");
    if (n == 1) return SimpleGraph(1, {});
    if (static_cast<int>(seq.size()) != n - 2) throw InvalidArgument("Pruefer sequence must have n-2 entries");
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw InvalidArgument("Pruefer entry out of range");
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (int x : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    const int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return SimpleGraph(n, edges);
}

SimpleGraph random_tree(int n, std::mt19937_64& rng) {
    if (n <= 2) return path(std::max(n, 1));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq) x = pick(rng);
    return from_pruefer(seq, n);
}

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

namespace {

std::string rooted_code(const SimpleGraph& g, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
        if (w != parent) kids.push_back(rooted_code(g, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
}

std::vector<int> centers(const SimpleGraph& g) {
    const int n = g.n();
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : g.neighbors(v))
                if (--degree[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string tree_code(const SimpleGraph& g) {
    std::string best;
    for (int c : centers(g)) {
        std::string code = rooted_code(g, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace

std::vector<SimpleGraph> all_free_trees(int n) {
    if (n < 1) throw InvalidArgument("tree needs n >= 1");
    if (n > 14) throw GuardExceeded("free tree enumeration capped at n = 14");
    std::vector<SimpleGraph> level{SimpleGraph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, SimpleGraph> seen;
        for (const auto& t : level)
            for (int v = 0; v < t.n(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, t.n());
                SimpleGraph grown(size, edges);
                seen.try_emplace(tree_code(grown), std::move(grown));
            }
        level.clear();
        for (auto& [code, tree] : seen) level.push_back(std::move(tree));
    }
    return level;
}

}  // namespace graphs

}  // namespace posgames
