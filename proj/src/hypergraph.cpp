#include "posgames/hypergraph.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace posgames {

std::string ElementSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int e) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    });
    return out + "}";
}

namespace {

bool lex_less(const ElementSet& a, const ElementSet& b) {
    int x = a.first();
    int y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = a.next(x + 1);
        y = b.next(y + 1);
    }
    return x < 0 && y >= 0;
}

void canonicalize(std::vector<ElementSet>& edges) {
    std::sort(edges.begin(), edges.end(), lex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<ElementSet> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n < 0 || n > kMaxElements)
        throw InvalidArgument("hypergraph board size " + std::to_string(n) + " outside [0," +
                              std::to_string(kMaxElements) + "]");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw InvalidArgument("label count does not match board size");
    const ElementSet board = ElementSet::prefix(n);
    for (const auto& e : edges_) {
        if (e.empty()) throw InvalidArgument("empty edge");
        if (!e.is_subset_of(board))
            throw InvalidArgument("edge " + e.to_string() + " has an index >= n=" + std::to_string(n));
    }
    canonicalize(edges_);
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<int>>& edges,
                                  std::vector<std::string> labels) {
    std::vector<ElementSet> sets;
    sets.reserve(edges.size());
    for (const auto& list : edges) {
        ElementSet s;
        for (int e : list) {
            if (e < 0 || e >= n)
                throw InvalidArgument("index " + std::to_string(e) + " out of range for n=" +
                                      std::to_string(n));
            s.set(e);
        }
        if (s.empty()) throw InvalidArgument("empty edge");
        sets.push_back(s);
    }
    return Hypergraph(n, std::move(sets), std::move(labels));
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.to_vector());
    return out;
}

int Hypergraph::min_edge_size() const {
    int best = 0;
    for (const auto& e : edges_) {
        const int c = e.count();
        if (best == 0 || c < best) best = c;
    }
    return best;
}

std::vector<int> Hypergraph::edge_sizes() const {
    std::set<int> sizes;
    for (const auto& e : edges_) sizes.insert(e.count());
    return {sizes.begin(), sizes.end()};
}

Hypergraph Hypergraph::restricted_to_size(int s) const {
    std::vector<ElementSet> kept;
    for (const auto& e : edges_)
        if (e.count() <= s) kept.push_back(e);
    return Hypergraph(n_, std::move(kept), labels_);
}

Hypergraph minimalize(const Hypergraph& h) {
    std::vector<ElementSet> sorted = h.edges();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ElementSet& a, const ElementSet& b) { return a.count() < b.count(); });
    std::vector<ElementSet> kept;
    for (const auto& e : sorted) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [&](const ElementSet& k) { return k.is_subset_of(e); });
        if (!dominated) kept.push_back(e);
    }
    return Hypergraph(h.n(), std::move(kept), h.labels());
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    const int n = a.n() + b.n();
    if (n > kMaxElements)
        throw InvalidArgument("disjoint union exceeds board capacity (" + std::to_string(n) + ")");
    std::vector<ElementSet> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back(e.shifted(a.n()));
    std::vector<std::string> labels;
    if (a.has_labels() || b.has_labels()) {
        labels.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < a.n(); ++i) labels.push_back(a.has_labels() ? a.labels()[i] : std::string{});
        for (int i = 0; i < b.n(); ++i) labels.push_back(b.has_labels() ? b.labels()[i] : std::string{});
    }
    return Hypergraph(n, std::move(edges), std::move(labels));
}

Transversal transversal_hypergraph(const Hypergraph& h) {
    if (h.n() > kMaxTransversalBoard)
        throw GuardExceeded("transversal enumeration needs n <= " + std::to_string(kMaxTransversalBoard) +
                            ", got " + std::to_string(h.n()));
    return berge_transversals(h);
}

Transversal berge_transversals(const Hypergraph& h, std::size_t family_cap) {
    if (h.edges().empty()) return {Hypergraph(h.n(), {}, h.labels()), true};

    // Berge multiplication: fold edges in one at a time, keeping the minimal
    // transversals of the edges seen so far.
    std::vector<ElementSet> current{ElementSet{}};
    const Hypergraph reduced = minimalize(h);
    for (const auto& edge : reduced.edges()) {
        std::vector<ElementSet> next;
        for (const auto& t : current) {
            if (t.intersects(edge)) {
                next.push_back(t);
            } else {
                edge.for_each([&](int e) {
                    ElementSet grown = t;
                    grown.set(e);
                    next.push_back(grown);
                });
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const ElementSet& a, const ElementSet& b) {
                      return a.count() != b.count() ? a.count() < b.count() : a < b;
                  });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() > family_cap)
            throw GuardExceeded("transversal enumeration exceeded " + std::to_string(family_cap) + " candidates");
        current.clear();
        for (const auto& t : next) {
            const bool dominated = std::any_of(current.begin(), current.end(),
                                               [&](const ElementSet& k) { return k.is_subset_of(t); });
            if (!dominated) current.push_back(t);
        }
    }
    return {Hypergraph(h.n(), std::move(current), h.labels()), false};
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        const long long num = n - k + i;
        if (r > LLONG_MAX / num) return LLONG_MAX;
        r = r * num / i;
    }
    return r;
}

Hypergraph add_all_k_subsets(const Hypergraph& h, int k) {
    if (k < 1 || k > h.n())
        throw InvalidArgument("subset size " + std::to_string(k) + " outside [1," + std::to_string(h.n()) + "]");
    const long long count = binomial(h.n(), k);
    if (count > kMaxSubsetEdges)
        throw GuardExceeded("C(" + std::to_string(h.n()) + "," + std::to_string(k) + ") = " +
                            std::to_string(count) + " subsets exceeds cap");
    std::vector<ElementSet> edges = h.edges();
    edges.reserve(edges.size() + static_cast<std::size_t>(count));
    for_each_k_subset(h.board(), k, [&](const ElementSet& s) {
        edges.push_back(s);
        return true;
    });
    return Hypergraph(h.n(), std::move(edges), h.labels());
}

}  // namespace posgames
