#include "posgames/constructions.hpp"

#include <algorithm>
#include <string>

#include "posgames/errors.hpp"

namespace posgames {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

long long gtb_arcs(int level, int b) {
    long long arcs = 1;
    for (int i = 1; i < level; ++i) {
        arcs *= b + 1;
        if (arcs > kMaxConstructionArcs) throw GuardExceeded("branched path has too many arcs");
    }
    return arcs;
}

struct DigraphBuilder {
    int b = 1;
    int next_vertex = 0;
    std::vector<Arc> arcs;
    std::vector<std::string> labels;

    int fresh_vertex() {
        labels.push_back("u" + std::to_string(next_vertex));
        return next_vertex++;
    }

    // Copies on the spine take their middle vertex from the spine, v_{level-1}
    // being index level-1; all others get fresh middles.
    GtbCopy copy(int level, int start, int end, bool on_spine) {
        GtbCopy c;
        c.level = level;
        c.start = start;
        c.end = end;
        if (level == 1) {
            c.arc = static_cast<int>(arcs.size());
            arcs.emplace_back(start, end);
            c.arcs.push_back(c.arc);
            return c;
        }
        c.middle = on_spine ? level - 1 : fresh_vertex();
        c.parts.push_back(copy(level - 1, start, c.middle, on_spine));
        for (int j = 0; j < b; ++j) c.parts.push_back(copy(level - 1, c.middle, end, false));
        c.inner_vertices.push_back(c.middle);
        for (const auto& p : c.parts) {
            c.inner_vertices.insert(c.inner_vertices.end(), p.inner_vertices.begin(), p.inner_vertices.end());
            c.arcs.insert(c.arcs.end(), p.arcs.begin(), p.arcs.end());
        }
        std::sort(c.inner_vertices.begin(), c.inner_vertices.end());
        return c;
    }
};

}  // namespace

GtbBuild build_gtb(int t, int b) {
    require(t >= 1 && b >= 1, "branched path needs t >= 1 and b >= 1");
    gtb_arcs(t, b);
    DigraphBuilder bld;
    bld.b = b;
    for (int i = 0; i <= t; ++i) bld.labels.push_back("v" + std::to_string(i));
    bld.next_vertex = t + 1;
    GtbCopy layout = bld.copy(t, 0, t, true);
    GtbBuild out;
    out.digraph = RootedDigraph(bld.next_vertex, std::move(bld.arcs), 0, t);
    out.layout = std::move(layout);
    out.labels = std::move(bld.labels);
    return out;
}

HtbBuild build_htb(int t, int b) {
    require(t >= 3 && b >= 1, "branched star needs t >= 3 and b >= 1");
    if (gtb_arcs(t - 2, b) * (b + 1) * (b + 1) > kMaxConstructionArcs)
        throw GuardExceeded("branched star has too many arcs");
    DigraphBuilder bld;
    bld.b = b;
    HtbBuild out;
    for (int i = 0; i <= b + 1; ++i) {
        bld.labels.push_back("x" + std::to_string(i));
        out.x.push_back(i);
    }
    bld.next_vertex = b + 2;
    for (int i = 1; i <= b + 1; ++i) {
        out.copies.emplace_back();
        for (int j = 0; j <= b; ++j) out.copies.back().push_back(bld.copy(t - 2, 0, i, false));
    }
    out.digraph = RootedDigraph(bld.next_vertex, std::move(bld.arcs), 0);
    out.labels = std::move(bld.labels);
    return out;
}

namespace {

void check_hmbst(int m, int b, int s, int t) {
    require(m >= 1 && b >= 1, "biases must be positive");
    require(s >= 2 * m + 1, "H(m,b,s,t) needs s >= 2m+1");
    require(m <= b, "H(m,b,s,t) needs m <= b");
    require(t >= ceil_div(s, m), "H(m,b,s,t) needs t >= ceil(s/m)");
}

long long hmbst_size(int m, int b, int s, int t) {
    if (s <= 3 * m) {
        const long long copy_arcs = gtb_arcs(t - 2, b);
        long long copy_vertices = 2;
        for (int level = 2; level <= t - 2; ++level) copy_vertices += 1 + b * (copy_vertices - 2);
        const long long copies = static_cast<long long>(b + 1) * (b + 1);
        const long long nv = b + 2 + copies * (copy_vertices - 2);
        return nv * m + copies * copy_arcs * (s - 2 * m);
    }
    return m + (b + 1) * hmbst_size(m, b, s - m, t - 1);
}

struct HmbstBuilder {
    int m, b;
    std::vector<ElementSet> edges;
    std::vector<ElementSet> family;
    std::vector<std::string> labels;

    ElementSet take(int count, int& next, const std::string& prefix) {
        ElementSet out;
        for (int k = 0; k < count; ++k) {
            out.set(next++);
            labels.push_back(count == 1 ? prefix : prefix + "." + std::to_string(k));
        }
        return out;
    }

    HmbstLayout build(int s, int t, int& next, const std::string& prefix) {
        HmbstLayout lay;
        lay.s = s;
        lay.t = t;
        if (s <= 3 * m) {
            lay.lifted = true;
            lay.htb = build_htb(t, b);
            const auto& d = lay.htb.digraph;
            for (int x = 0; x < d.nv(); ++x) {
                lay.vertex_sets.push_back(take(m, next, prefix + lay.htb.labels[x]));
                family.push_back(lay.vertex_sets.back());
            }
            for (int a = 0; a < d.arc_count(); ++a) {
                const auto [u, v] = d.arcs()[a];
                lay.arc_extras.push_back(take(s - 2 * m, next, prefix + "e" + std::to_string(a)));
                edges.push_back(lay.vertex_sets[u] | lay.vertex_sets[v] | lay.arc_extras.back());
            }
            return lay;
        }
        lay.lifted = false;
        lay.top = take(m, next, prefix + "V");
        family.push_back(lay.top);
        for (int i = 0; i <= b; ++i) {
            const std::size_t first_edge = edges.size();
            lay.children.push_back(build(s - m, t - 1, next, prefix + "c" + std::to_string(i) + "/"));
            for (std::size_t e = first_edge; e < edges.size(); ++e) edges[e] |= lay.top;
        }
        return lay;
    }
};

Hypergraph prefixed(const Hypergraph& h, const std::string& prefix) {
    std::vector<std::string> labels;
    for (int i = 0; i < h.n(); ++i) labels.push_back(prefix + (h.has_labels() ? h.labels()[i] : std::to_string(i)));
    return Hypergraph(h.n(), h.edges(), std::move(labels));
}

void append(HypergraphWithFamily& acc, const HypergraphWithFamily& part) {
    const int shift = acc.hypergraph.n();
    acc.hypergraph = disjoint_union(acc.hypergraph, part.hypergraph);
    for (const auto& v : part.family.sets) acc.family.sets.push_back(v.shifted(shift));
}

HypergraphWithFamily hmbst_part(int m, int b, int s, int t, const std::string& prefix) {
    auto built = build_hmbst(m, b, s, t);
    return {prefixed(built.hypergraph, prefix), built.family};
}

}  // namespace

HmbstBuild build_hmbst(int m, int b, int s, int t) {
    check_hmbst(m, b, s, t);
    const long long size = hmbst_size(m, b, s, t);
    if (size > kMaxElements)
        throw GuardExceeded("H(m,b,s,t) needs " + std::to_string(size) + " elements, board capacity is " +
                            std::to_string(kMaxElements));
    HmbstBuilder bld{m, b, {}, {}, {}};
    int next = 0;
    HmbstBuild out;
    out.layout = bld.build(s, t, next, "");
    out.hypergraph = Hypergraph(next, std::move(bld.edges), std::move(bld.labels));
    out.family.sets = std::move(bld.family);
    return out;
}

bool satisfies_overlap_properties(const Hypergraph& h, const AssociatedFamily& family) {
    ElementSet covered;
    for (const auto& v : family.sets) {
        if (v.intersects(covered)) return false;
        covered |= v;
        for (const auto& e : h.edges())
            if (e.intersects(v) && !v.is_subset_of(e)) return false;
    }
    ElementSet seen;
    for (const auto& e : h.edges()) {
        const ElementSet outside = e - covered;
        if (outside.intersects(seen)) return false;
        seen |= outside;
    }
    return true;
}

GadgetBuild build_gadget(const Hypergraph& h, int a, const GadgetOptions& options) {
    require(a >= 1, "gadget bias must be positive");
    if (h.n() > kMaxGadgetBoard)
        throw GuardExceeded("gadget enumerates vertex covers and needs |X| <= " + std::to_string(kMaxGadgetBoard));
    const int n = h.n();
    GadgetBuild out;
    out.x_count = n;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        ElementSet c;
        for (int x = 0; x < n; ++x)
            if (mask >> x & 1U) c.set(x);
        bool cover = true;
        for (const auto& e : h.edges()) cover = cover && e.intersects(c);
        if (cover) out.covers.push_back(c);
    }
    if (options.minimal_covers) {
        std::vector<ElementSet> minimal;
        for (const auto& c : out.covers) {
            bool is_min = true;
            for (const auto& d : out.covers) is_min = is_min && (d == c || !d.is_subset_of(c));
            if (is_min) minimal.push_back(c);
        }
        out.covers = std::move(minimal);
    }
    const long long block = 4LL * a * (n + static_cast<long long>(out.covers.size()));
    const long long total = n + block * static_cast<long long>(out.covers.size());
    if (total > options.vertex_cap)
        throw GuardExceeded("gadget would have " + std::to_string(total) + " vertices (cap " +
                            std::to_string(options.vertex_cap) + ")");
    out.block_size = static_cast<int>(block);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    int next = n;
    for (const auto& c : out.covers) {
        out.block_start.push_back(next);
        for (int k = 0; k < out.block_size; ++k, ++next)
            c.for_each([&](int x) { edges.emplace_back(x, next); });
    }
    out.graph = SimpleGraph(next, edges);
    return out;
}

std::vector<std::pair<int, int>> nonmonotone_blocks(const std::vector<int>& biases) {
    require(!biases.empty(), "bias set must be non-empty");
    std::vector<int> bs = biases;
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    require(bs.front() >= 1, "biases must be positive");
    std::vector<std::pair<int, int>> blocks;
    int prev = -1;
    int offset = 0;
    for (int bj : bs) {
        for (int i = prev + 2; i <= bj + 1; ++i) {
            blocks.emplace_back(offset, bj);
            offset += bj;
        }
        prev = bj;
    }
    if (offset > kMaxElements) throw GuardExceeded("non-monotone board exceeds capacity");
    return blocks;
}

Hypergraph build_nonmonotone(const std::vector<int>& biases) {
    const auto blocks = nonmonotone_blocks(biases);
    const int count_blocks = static_cast<int>(blocks.size());
    long long count = 1;
    for (const auto& [offset, size] : blocks) {
        count *= size;
        if (count > kMaxSubsetEdges) throw GuardExceeded("non-monotone family has too many winning sets");
    }
    std::vector<std::string> labels;
    for (int i = 0; i < count_blocks; ++i)
        for (int k = 0; k < blocks[i].second; ++k)
            labels.push_back("V" + std::to_string(i + 1) + "." + std::to_string(k));
    std::vector<ElementSet> edges;
    std::vector<int> pick(static_cast<std::size_t>(count_blocks), 0);
    while (true) {
        ElementSet e;
        for (int i = 0; i < count_blocks; ++i) e.set(blocks[i].first + pick[i]);
        edges.push_back(e);
        int i = count_blocks - 1;
        while (i >= 0 && pick[i] == blocks[i].second - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    const int n = static_cast<int>(labels.size());
    return Hypergraph(n, std::move(edges), std::move(labels));
}

HypergraphWithFamily build_first_mover_gap(int m, int b, int s, int s2, int t, int t2) {
    check_hmbst(m, b, s, t);
    require(s2 >= s, "needs s' >= s");
    require(t2 >= t, "needs t' >= t");
    require(t2 >= ceil_div(s2, m), "needs t' >= ceil(s'/m)");
    HypergraphWithFamily out;
    for (int i = 0; i < b; ++i) append(out, hmbst_part(m, b, s, t, "A" + std::to_string(i) + ":"));
    append(out, hmbst_part(m, b, s2, t2, "B:"));
    return out;
}

HypergraphWithFamily build_first_mover_gap_with_small_edge(int m, int b, int r, int s, int s2, int t, int t2) {
    require(r >= 1 && s >= r, "needs s >= r");
    require(m <= r - 1, "needs m <= r-1");
    auto out = build_first_mover_gap(m, b, s, s2, t, t2);
    std::vector<std::string> labels;
    for (int k = 0; k < r; ++k) labels.push_back("r" + std::to_string(k));
    append(out, {Hypergraph(r, {ElementSet::prefix(r)}, std::move(labels)), {}});
    return out;
}

Hypergraph build_large_before_small(int m, int b, int s, int t) {
    require(m >= 1 && m <= b, "needs 1 <= m <= b");
    require(t > s && s >= 2 * m + 1, "needs t > s >= 2m+1");
    auto core = build_hmbst(m, b, s, ceil_div(t, m) + 1).hypergraph;
    if (binomial(core.n(), t) > kMaxSubsetEdges)
        throw GuardExceeded("too many " + std::to_string(t) + "-subsets");
    return add_all_k_subsets(core, t);
}

HypergraphWithFamily build_fast_versus_small(int m, int b, int s, int s2, int t, int t2) {
    require(m >= 1 && m <= b, "needs 1 <= m <= b");
    require(s2 >= s && s >= 2 * m + 1, "needs s' >= s >= 2m+1");
    require(t2 >= t && t >= ceil_div(s2, m), "needs t' >= t >= ceil(s'/m)");
    HypergraphWithFamily out = hmbst_part(m, b, s2, t, "fast:");
    append(out, hmbst_part(m, b, s, t2, "small:"));
    return out;
}

Hypergraph build_wc_pairs_family(int t) {
    require(t >= 3, "needs t >= 3");
    const int extra = 2 * t - 6;
    const int n = 8 + extra;
    if (n > kMaxElements) throw GuardExceeded("pairs family exceeds board capacity");
    if (binomial(extra, t - 3) * 4 > kMaxSubsetEdges) throw GuardExceeded("pairs family has too many edges");
    std::vector<std::string> labels;
    for (int i = 1; i <= 4; ++i) {
        labels.push_back("a" + std::to_string(i));
        labels.push_back("b" + std::to_string(i));
    }
    ElementSet pool;
    for (int k = 0; k < extra; ++k) {
        labels.push_back("m" + std::to_string(k + 1));
        pool.set(8 + k);
    }
    std::vector<ElementSet> edges;
    for (const auto& [a, b] : wc_pairs(t)) {
        for_each_k_subset(pool, t - 3, [&](const ElementSet& s) {
            ElementSet e = s;
            e.set(a);
            e.set(b);
            edges.push_back(e);
            return true;
        });
    }
    return Hypergraph(n, std::move(edges), std::move(labels));
}

std::vector<std::pair<int, int>> wc_pairs(int t) {
    require(t >= 3, "needs t >= 3");
    return {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
}

Hypergraph build_complete_uniform(int n, int k) {
    require(n >= 0 && n <= kMaxElements, "board size out of range");
    require(k >= 1 && k <= n, "needs 1 <= k <= n");
    return add_all_k_subsets(Hypergraph(n, {}), k);
}

Hypergraph build_wc_gap(int s, int t) {
    require(t >= 3 && s >= t, "needs s >= t >= 3");
    return disjoint_union(build_wc_pairs_family(t), build_complete_uniform(2 * s, s));
}

}  // namespace posgames
