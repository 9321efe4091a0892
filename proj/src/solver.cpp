#include "posgames/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "posgames/errors.hpp"

namespace posgames {

std::size_t default_memo_cap() {
    if (const char* env = std::getenv("POSGAMES_MEMO_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMemoCap;
}

namespace {

struct Key {
    ElementSet a;
    ElementSet b;
    int extra = 0;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = k.a.hash();
        h ^= k.b.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h ^ (static_cast<std::size_t>(k.extra) * 0xff51afd7ed558ccdULL);
    }
};

/// Budget-monotone knowledge about one position: Maker fails with any budget
/// <= fail_upto and wins with any budget >= win_from.
struct Bounds {
    int fail_upto = -1;
    int win_from = INT_MAX;
};

class Memo {
public:
    Memo(std::size_t cap, bool enabled, bool concurrent)
        : cap_(cap), enabled_(enabled), concurrent_(concurrent), shards_(new Shard[kShards]) {}

    std::optional<bool> lookup(const Key& key, int budget) {
        if (!enabled_) return std::nullopt;
        Shard& shard = shard_for(key);
        std::unique_lock lock(shard.mu, std::defer_lock);
        if (concurrent_) lock.lock();
        auto it = shard.map.find(key);
        if (it == shard.map.end()) return std::nullopt;
        if (budget >= it->second.win_from) return true;
        if (budget <= it->second.fail_upto) return false;
        return std::nullopt;
    }

    void record(const Key& key, int budget, bool win) {
        if (!enabled_) return;
        Shard& shard = shard_for(key);
        std::unique_lock lock(shard.mu, std::defer_lock);
        if (concurrent_) lock.lock();
        auto [it, inserted] = shard.map.try_emplace(key);
        if (inserted && size_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_)
            throw GuardExceeded("solver memo exceeded " + std::to_string(cap_) +
                                " entries (raise --memo-cap or POSGAMES_MEMO_CAP)");
        if (win) it->second.win_from = std::min(it->second.win_from, budget);
        else it->second.fail_upto = std::max(it->second.fail_upto, budget);
    }

    [[nodiscard]] std::size_t size() const { return size_.load(); }

private:
    static constexpr int kShards = 64;
    struct Shard {
        std::mutex mu;
        std::unordered_map<Key, Bounds, KeyHash> map;
    };
    Shard& shard_for(const Key& key) { return shards_[KeyHash{}(key) % kShards]; }

    std::size_t cap_;
    bool enabled_;
    bool concurrent_;
    std::unique_ptr<Shard[]> shards_;
    std::atomic<std::size_t> size_{0};
};

struct Context {
    Context(const SolverOptions& o) : options(o), memo(o.memo_cap, o.use_memo, o.jobs > 1) {}
    const SolverOptions& options;
    Memo memo;
    std::atomic<long long> nodes{0};

    void count() { nodes.fetch_add(1, std::memory_order_relaxed); }
};

/// Evaluates eval(0..count-1) until one returns `want`; the answer is `want`
/// if any did. With jobs > 1 the indices are spread over worker threads.
template <class F>
bool search_children(std::size_t count, int jobs, bool want, F&& eval) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (eval(i) == want) return want;
        return !want;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> hit{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        try {
            while (!hit.load()) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                if (eval(i) == want) hit = true;
            }
        } catch (...) {
            std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
            hit = true;
        }
    };
    std::vector<std::thread> threads;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t j = 0; j < workers; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return hit ? want : !want;
}

/// All k-subsets of `items` (kept in the given order), lexicographic by position.
std::vector<ElementSet> combinations(const std::vector<int>& items, int k) {
    std::vector<ElementSet> out;
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        ElementSet s;
        for (int i : idx) s.set(items[i]);
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return out;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<int> by_score(const ElementSet& pool, const std::array<double, kMaxElements>& score) {
    std::vector<int> items = pool.to_vector();
    std::stable_sort(items.begin(), items.end(), [&](int x, int y) { return score[x] > score[y]; });
    return items;
}

// Maker-Breaker on a hypergraph. Positions are taken at Maker's turn; only
// edges avoiding Breaker ("live" edges) matter, so a position is keyed by the
// union L of live edges and Maker's part of it.
class MakerBreakerSearch {
public:
    MakerBreakerSearch(std::vector<ElementSet> edges, int m, int b, const std::vector<ElementSet>* family,
                       Context& ctx)
        : edges_(std::move(edges)), m_(m), b_(b), family_(family), ctx_(ctx) {}

    bool maker_turn(const ElementSet& maker, const ElementSet& breaker, int budget, bool root = false) {
        ctx_.count();
        const Live live = scan(maker, breaker);
        if (live.won) return true;
        if (budget <= 0 || live.edges.empty()) return false;
        if (live.min_residual <= m_) return true;
        if (budget == 1 || (live.min_residual + m_ - 1) / m_ > budget) return false;

        const Key key{maker & live.union_set, live.union_set, 0};
        if (auto hit = ctx_.memo.lookup(key, budget)) return *hit;

        const ElementSet free_live = live.union_set - maker;
        std::vector<ElementSet> moves;
        if (family_) {
            std::vector<std::pair<double, ElementSet>> ranked;
            for (const auto& v : *family_)
                if (v.is_subset_of(free_live)) {
                    double s = 0;
                    v.for_each([&](int e) { s += live.score[e]; });
                    ranked.emplace_back(s, v);
                }
            std::stable_sort(ranked.begin(), ranked.end(),
                             [](const auto& x, const auto& y) { return x.first > y.first; });
            for (auto& r : ranked) moves.push_back(r.second);
        } else {
            moves = combinations(by_score(free_live, live.score), std::min(m_, free_live.count()));
        }
        const int jobs = root ? ctx_.options.jobs : 1;
        const bool win = search_children(moves.size(), jobs, true, [&](std::size_t i) {
            return breaker_turn(maker | moves[i], breaker, budget - 1, b_);
        });
        ctx_.memo.record(key, budget, win);
        return win;
    }

    /// Breaker to move with `bias`; true when Maker still wins within `budget`
    /// further moves whatever Breaker does.
    bool breaker_turn(const ElementSet& maker, const ElementSet& breaker, int budget, int bias, bool root = false) {
        ctx_.count();
        const Live live = scan(maker, breaker);
        if (live.won) return true;
        if (budget <= 0 || live.edges.empty()) return false;
        const ElementSet free_live = live.union_set - maker;
        std::vector<ElementSet> threats;
        for (int i : live.edges) {
            const ElementSet rest = edges_[i] - maker;
            if (rest.count() <= m_) threats.push_back(rest);
        }
        const auto moves = combinations(by_score(free_live, live.score), std::min(bias, free_live.count()));
        const int jobs = root ? ctx_.options.jobs : 1;
        const bool refuted = search_children(moves.size(), jobs, true, [&](std::size_t i) {
            const ElementSet& y = moves[i];
            for (const auto& t : threats)
                if (!t.intersects(y)) return false;
            return !maker_turn(maker, breaker | y, budget);
        });
        return !refuted;
    }

private:
    struct Live {
        std::vector<int> edges;
        ElementSet union_set;
        int min_residual = INT_MAX;
        bool won = false;
        std::array<double, kMaxElements> score{};
    };

    Live scan(const ElementSet& maker, const ElementSet& breaker) const {
        Live live;
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            const ElementSet& e = edges_[i];
            if (e.intersects(breaker)) continue;
            const ElementSet rest = e - maker;
            const int r = rest.count();
            if (r == 0) {
                live.won = true;
                return live;
            }
            live.edges.push_back(i);
            live.union_set |= e;
            live.min_residual = std::min(live.min_residual, r);
            const double w = std::ldexp(1.0, -r);
            rest.for_each([&](int x) { live.score[x] += w; });
        }
        return live;
    }

    std::vector<ElementSet> edges_;
    int m_;
    int b_;
    const std::vector<ElementSet>* family_;
    Context& ctx_;
};

// The directed-edge game: Maker (bias 1) claims vertices, and may claim an arc
// once she owns both endpoints, which wins. An arc is live while neither it
// nor an endpoint belongs to Breaker.
class AuxSearch {
public:
    AuxSearch(const RootedDigraph& d, int b, Context& ctx) : d_(d), nv_(d.nv()), b_(b), ctx_(ctx) {}

    bool maker_turn(const ElementSet& maker, const ElementSet& breaker, int budget, bool root = false) {
        ctx_.count();
        const Live live = scan(maker, breaker);
        if (live.won) return true;
        if (budget <= 0 || live.arcs.empty()) return false;
        if (live.min_need <= 1) return true;
        if (live.min_need > budget) return false;

        const Key key{maker & live.union_set, live.union_set, 0};
        if (auto hit = ctx_.memo.lookup(key, budget)) return *hit;

        const ElementSet free_vertices = (live.union_set - maker) & ElementSet::prefix(nv_);
        const auto order = by_score(free_vertices, live.score);
        const int jobs = root ? ctx_.options.jobs : 1;
        const bool win = search_children(order.size(), jobs, true, [&](std::size_t i) {
            ElementSet next = maker;
            next.set(order[i]);
            return breaker_turn(next, breaker, budget - 1, b_);
        });
        ctx_.memo.record(key, budget, win);
        return win;
    }

    bool breaker_turn(const ElementSet& maker, const ElementSet& breaker, int budget, int bias, bool root = false) {
        ctx_.count();
        const Live live = scan(maker, breaker);
        if (live.won) return true;
        if (budget <= 0 || live.arcs.empty()) return false;
        // Arcs with both endpoints owned by Maker must be taken now.
        ElementSet forced;
        for (int a : live.arcs) {
            auto [u, v] = d_.arcs()[a];
            if (maker.test(u) && maker.test(v)) forced.set(nv_ + a);
        }
        const ElementSet free_live = live.union_set - maker;
        const int size = std::min(bias, free_live.count());
        if (forced.count() > size) return true;
        const auto rest = combinations(by_score(free_live - forced, live.score), size - forced.count());
        const int jobs = root ? ctx_.options.jobs : 1;
        const bool refuted = search_children(rest.size(), jobs, true, [&](std::size_t i) {
            return !maker_turn(maker, breaker | forced | rest[i], budget);
        });
        return !refuted;
    }

private:
    struct Live {
        std::vector<int> arcs;
        ElementSet union_set;
        int min_need = INT_MAX;
        bool won = false;
        std::array<double, kMaxElements> score{};
    };

    Live scan(const ElementSet& maker, const ElementSet& breaker) const {
        Live live;
        for (int a = 0; a < d_.arc_count(); ++a) {
            const int elem = nv_ + a;
            if (maker.test(elem)) {
                live.won = true;
                return live;
            }
            auto [u, v] = d_.arcs()[a];
            if (breaker.test(elem) || breaker.test(u) || breaker.test(v)) continue;
            live.arcs.push_back(a);
            live.union_set.set(u);
            live.union_set.set(v);
            live.union_set.set(elem);
            ElementSet ends{u, v};
            ends -= maker;
            const int need = ends.count() + 1;
            live.min_need = std::min(live.min_need, need);
            const double w = std::ldexp(1.0, -need);
            ends.for_each([&](int x) { live.score[x] += w; });
            live.score[elem] += w;
        }
        return live;
    }

    const RootedDigraph& d_;
    int nv_;
    int b_;
    Context& ctx_;
};

// Unbiased Waiter-Client. Offers of two dead elements only burn a round and
// are never generated; an offer pairing a live element with a dead one is
// represented by the lowest dead free element.
class WaiterClientSearch {
public:
    WaiterClientSearch(std::vector<ElementSet> edges, int n, Context& ctx)
        : edges_(std::move(edges)), board_(ElementSet::prefix(n)), ctx_(ctx) {}

    bool waiter_turn(const ElementSet& waiter, const ElementSet& client, int budget, bool root = false) {
        ctx_.count();
        const Live live = scan(waiter, client);
        if (live.won) return true;
        if (budget <= 0 || live.edges.empty()) return false;
        const ElementSet free = board_ - waiter - client;
        if (free.count() <= 1) return false;
        if (live.min_residual > budget) return false;
        if (live.last_elements.count() >= 2) return true;
        if (budget == 1) return false;

        const ElementSet free_live = live.union_set - waiter;
        const ElementSet dead = free - free_live;
        const Key key{waiter & live.union_set, live.union_set, dead.count()};
        if (auto hit = ctx_.memo.lookup(key, budget)) return *hit;

        const auto order = by_score(free_live, live.score);
        std::vector<ElementSet> offers = combinations(order, 2);
        if (dead.any()) {
            const int d = dead.first();
            for (int x : order) offers.push_back(ElementSet{x, d});
        }
        const int jobs = root ? ctx_.options.jobs : 1;
        const bool win = search_children(offers.size(), jobs, true, [&](std::size_t i) {
            return client_turn(waiter, client, offers[i], budget, live.score);
        });
        ctx_.memo.record(key, budget, win);
        return win;
    }

    /// Client picks from `offer`; true when Waiter wins either way. `budget`
    /// includes the current round.
    bool client_turn(const ElementSet& waiter, const ElementSet& client, const ElementSet& offer, int budget,
                     const std::array<double, kMaxElements>& score) {
        std::vector<int> picks = offer.to_vector();
        std::stable_sort(picks.begin(), picks.end(), [&](int x, int y) { return score[x] > score[y]; });
        for (int keep : picks) {
            ElementSet c = client;
            c.set(keep);
            ElementSet w = waiter | offer;
            w.reset(keep);
            if (!waiter_turn(w, c, budget - 1)) return false;
        }
        return true;
    }

    bool client_turn_root(const ElementSet& waiter, const ElementSet& client, const ElementSet& offer, int budget) {
        const Live live = scan(waiter, client);
        return client_turn(waiter, client, offer, budget, live.score);
    }

private:
    struct Live {
        std::vector<int> edges;
        ElementSet union_set;
        ElementSet last_elements;
        int min_residual = INT_MAX;
        bool won = false;
        std::array<double, kMaxElements> score{};
    };

    Live scan(const ElementSet& waiter, const ElementSet& client) const {
        Live live;
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            const ElementSet& e = edges_[i];
            if (e.intersects(client)) continue;
            const ElementSet rest = e - waiter;
            const int r = rest.count();
            if (r == 0) {
                live.won = true;
                return live;
            }
            if (r == 1) live.last_elements |= rest;
            live.edges.push_back(i);
            live.union_set |= e;
            live.min_residual = std::min(live.min_residual, r);
            const double w = std::ldexp(1.0, -r);
            rest.for_each([&](int x) { live.score[x] += w; });
        }
        return live;
    }

    std::vector<ElementSet> edges_;
    ElementSet board_;
    Context& ctx_;
};

std::vector<ElementSet> playable_edges(const Hypergraph& h, std::optional<int> max_size) {
    const Hypergraph limited = max_size ? h.restricted_to_size(*max_size) : h;
    return minimalize(limited).edges();
}

void check_objective(const Objective& obj) {
    if (obj.max_rounds && *obj.max_rounds < 1) throw InvalidArgument("round budget t must be >= 1");
    if (obj.max_size && *obj.max_size < 1) throw InvalidArgument("size bound s must be >= 1");
}

int unbounded_budget(const GameSpec& spec) { return spec.n() + 1; }

/// One solver instance per (spec, size bound); reusable across budgets so
/// iterative deepening shares the memo.
class Solver {
public:
    Solver(const GameSpec& spec, std::optional<int> max_size, const MoveRestriction* restriction,
           const SolverOptions& options)
        : spec_(spec), ctx_(options) {
        spec.validate();
        if (restriction && spec.kind != GameKind::MakerBreaker)
            throw InvalidArgument("move restriction applies to Maker-Breaker games only");
        if (restriction) validate_restriction(spec.hypergraph(), spec.maker_bias, spec.breaker_bias, *restriction);
        switch (spec.kind) {
            case GameKind::MakerBreaker:
                mb_ = std::make_unique<MakerBreakerSearch>(playable_edges(spec.hypergraph(), max_size),
                                                           spec.maker_bias, spec.breaker_bias,
                                                           restriction ? &restriction->sets : nullptr, ctx_);
                break;
            case GameKind::WaiterClient:
                wc_ = std::make_unique<WaiterClientSearch>(playable_edges(spec.hypergraph(), max_size), spec.n(),
                                                           ctx_);
                break;
            case GameKind::AuxEdgeGame:
                aux_ = std::make_unique<AuxSearch>(spec.digraph(), spec.breaker_bias, ctx_);
                break;
        }
    }

    /// Maker wins from `state` within `budget` further Maker moves.
    bool solve(const GameState& state, int budget) {
        if (budget < 0) return false;
        if (spec_.kind == GameKind::WaiterClient) {
            if (state.pending_offer) return wc_->client_turn_root(state.maker, state.breaker, *state.pending_offer, budget);
            return wc_->waiter_turn(state.maker, state.breaker, budget, true);
        }
        if (state.to_move == Player::Maker) {
            return mb_ ? mb_->maker_turn(state.maker, state.breaker, budget, true)
                       : aux_->maker_turn(state.maker, state.breaker, budget, true);
        }
        int bias = spec_.breaker_bias;
        if (spec_.first == Player::Breaker && state.breaker_moves == 0 && spec_.opening_bias) bias = *spec_.opening_bias;
        return mb_ ? mb_->breaker_turn(state.maker, state.breaker, budget, bias, true)
                   : aux_->breaker_turn(state.maker, state.breaker, budget, bias, true);
    }

    void fill(SolverStats* stats) const {
        if (!stats) return;
        stats->nodes += ctx_.nodes.load();
        stats->memo_entries += ctx_.memo.size();
    }

private:
    const GameSpec& spec_;
    Context ctx_;
    std::unique_ptr<MakerBreakerSearch> mb_;
    std::unique_ptr<WaiterClientSearch> wc_;
    std::unique_ptr<AuxSearch> aux_;
};

int remaining_budget(const GameSpec& spec, const GameState& state, const Objective& obj) {
    return obj.max_rounds ? *obj.max_rounds - state.maker_moves : unbounded_budget(spec);
}

/// Smallest number of Maker moves that can ever finish a game, used to start
/// iterative deepening.
int lower_bound_rounds(const GameSpec& spec, std::optional<int> max_size) {
    if (spec.kind == GameKind::AuxEdgeGame) return 1;
    const auto edges = playable_edges(spec.hypergraph(), max_size);
    int best = INT_MAX;
    for (const auto& e : edges) {
        const int r = (e - spec.preclaimed_maker).count();
        best = std::min(best, r);
    }
    if (best == INT_MAX) return 1;
    const int per_round = spec.kind == GameKind::WaiterClient ? 1 : spec.maker_bias;
    return std::max(1, (best + per_round - 1) / per_round);
}

std::optional<int> min_rounds_with(Solver& solver, const GameSpec& spec, std::optional<int> max_size) {
    const GameState start = initial_state(spec);
    const int cap = unbounded_budget(spec);
    if (!solver.solve(start, cap)) return std::nullopt;
    for (int t = lower_bound_rounds(spec, max_size); t < cap; ++t)
        if (solver.solve(start, t)) return t;
    return cap;
}

}  // namespace

void validate_restriction(const Hypergraph& h, int m, int b, const MoveRestriction& r) {
    if (m > b) throw InvalidArgument("restriction needs m <= b");
    ElementSet covered;
    for (const auto& v : r.sets) {
        if (v.count() != m) throw InvalidArgument("restriction set " + v.to_string() + " does not have size m");
        if (v.intersects(covered)) throw InvalidArgument("restriction sets are not disjoint");
        if (!v.is_subset_of(h.board())) throw InvalidArgument("restriction set outside the board");
        covered |= v;
    }
    std::vector<int> uses(static_cast<std::size_t>(h.n()), 0);
    for (const auto& f : h.edges()) {
        if (f.count() <= m) throw InvalidArgument("edge " + f.to_string() + " has at most m elements");
        for (const auto& v : r.sets)
            if (f.intersects(v) && !v.is_subset_of(f))
                throw InvalidArgument("edge " + f.to_string() + " splits restriction set " + v.to_string());
        (f - covered).for_each([&](int x) { ++uses[x]; });
    }
    for (int x = 0; x < h.n(); ++x)
        if (uses[x] > 1)
            throw InvalidArgument("element " + std::to_string(x) + " outside the restriction sets lies in " +
                                  std::to_string(uses[x]) + " edges");
}

bool decide_from(const GameSpec& spec, const GameState& state, const Objective& obj,
                 const MoveRestriction* restriction, const SolverOptions& options, SolverStats* stats) {
    check_objective(obj);
    Solver solver(spec, obj.max_size, restriction, options);
    const bool win = solver.solve(state, remaining_budget(spec, state, obj));
    solver.fill(stats);
    return win;
}

bool decide(const GameSpec& spec, const Objective& obj, const MoveRestriction* restriction,
            const SolverOptions& options, SolverStats* stats) {
    return decide_from(spec, initial_state(spec), obj, restriction, options, stats);
}

std::optional<int> min_rounds(const GameSpec& spec, std::optional<int> max_size,
                              const MoveRestriction* restriction, const SolverOptions& options,
                              SolverStats* stats) {
    if (max_size && *max_size < 1) throw InvalidArgument("size bound s must be >= 1");
    Solver solver(spec, max_size, restriction, options);
    auto result = min_rounds_with(solver, spec, max_size);
    solver.fill(stats);
    return result;
}

SolveResult game_values(const GameSpec& spec, const SolverOptions& options, const MoveRestriction* restriction,
                        SolverStats* stats) {
    SolveResult result;
    result.min_rounds = min_rounds(spec, std::nullopt, restriction, options, stats);
    result.maker_wins = result.min_rounds.has_value();
    if (!result.maker_wins) return result;
    if (spec.kind == GameKind::AuxEdgeGame) {
        result.min_size = 1;
        result.frontier.emplace_back(*result.min_rounds, 1);
        return result;
    }
    // H restricted to edges of size <= s, for each distinct size s: its fastest
    // win gives the frontier point at s.
    for (int s : spec.hypergraph().edge_sizes()) {
        auto t = min_rounds(spec, s, restriction, options, stats);
        if (!t) continue;
        if (!result.min_size) result.min_size = s;
        if (result.frontier.empty() || *t < result.frontier.back().first) result.frontier.emplace_back(*t, s);
        if (*t == *result.min_rounds) break;
    }
    return result;
}

bool decide_mb(const Hypergraph& h, int m, int b, Player first, const Objective& obj,
               const MoveRestriction* restriction, const SolverOptions& options) {
    return decide(GameSpec::maker_breaker(h, m, b, first), obj, restriction, options);
}

bool decide_wc(const Hypergraph& h, const Objective& obj, const SolverOptions& options) {
    return decide(GameSpec::waiter_client(h), obj, nullptr, options);
}

bool solve_aux_game(const RootedDigraph& d, int b, const ElementSet& maker_vertices, const Objective& obj,
                    const SolverOptions& options) {
    return decide(GameSpec::aux(d, b, maker_vertices), obj, nullptr, options);
}

SolveResult game_values(const Hypergraph& h, int m, int b, Player first, const SolverOptions& options) {
    return game_values(GameSpec::maker_breaker(h, m, b, first), options);
}

SolveResult wc_game_values(const Hypergraph& h, const SolverOptions& options) {
    return game_values(GameSpec::waiter_client(h), options);
}

}  // namespace posgames
