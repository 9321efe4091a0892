#include "posgames/strategies.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "posgames/constructions.hpp"
#include "posgames/domination.hpp"
#include "posgames/errors.hpp"

namespace posgames {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

int param_int(const json& params, const char* key, std::optional<int> fallback = std::nullopt) {
    if (!params.is_object() || !params.contains(key)) {
        if (fallback) return *fallback;
        throw InvalidArgument(std::string("missing parameter '") + key + "'");
    }
    const auto& v = params.at(key);
    if (!v.is_number_integer()) throw InvalidArgument(std::string("parameter '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> param_ints(const json& params, const char* key) {
    if (!params.is_object() || !params.contains(key) || !params.at(key).is_array())
        throw InvalidArgument(std::string("parameter '") + key + "' must be an integer array");
    std::vector<int> out;
    for (const auto& v : params.at(key)) {
        if (!v.is_number_integer()) throw InvalidArgument(std::string("parameter '") + key + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string set_key(const ElementSet& s) {
    std::string out;
    s.for_each([&](int e) { out += std::to_string(e) + ","; });
    return out;
}

/// Claims the wanted free elements in order, then the lowest free elements,
/// up to the exact bias.
Move claim_with_filler(const GameSpec& spec, const GameState& state, const std::vector<int>& wanted) {
    const int k = claim_size(spec, state);
    const ElementSet free = free_elements(spec, state);
    ElementSet pick;
    for (int e : wanted)
        if (pick.count() < k && free.contains(e)) pick.set(e);
    for (int e = free.first(); e >= 0 && pick.count() < k; e = free.next(e + 1)) pick.set(e);
    return Move::claim(pick);
}

/// Aux-game Maker move for one element, falling back to the first legal move.
Move aux_maker_claim(const GameSpec& spec, const GameState& state, int element) {
    if (element >= 0) {
        auto mv = Move::claim(ElementSet{element});
        if (is_legal(spec, state, mv)) return mv;
    }
    auto moves = legal_moves(spec, state);
    return moves.empty() ? Move::claim({}) : moves.front();
}

/// Maker's elements claimed since the last call.
class MakerTracker {
public:
    ElementSet fresh(const GameSpec& spec, const GameState& state) {
        if (!started_) {
            seen_ = spec.preclaimed_maker;
            started_ = true;
        }
        const ElementSet out = state.maker - seen_;
        seen_ = state.maker;
        return out;
    }
    [[nodiscard]] std::string key() const { return set_key(seen_); }

private:
    bool started_ = false;
    ElementSet seen_;
};

// ---------------------------------------------------------------------------
// Branched paths.

bool copy_touched(const GtbCopy& c, int nv, const std::function<bool(int)>& touched) {
    for (int v : c.inner_vertices)
        if (touched(v)) return true;
    for (int a : c.arcs)
        if (touched(nv + a)) return true;
    return false;
}

/// Maker's recursive play inside a copy whose endpoints she owns: claim the
/// middle, then move into a part Breaker has not touched.
struct Descent {
    std::vector<int> path;

    int step(const GtbCopy& root, int nv, const std::function<bool(int)>& owned,
             const std::function<bool(int)>& touched) {
        const GtbCopy* c = &root;
        for (int j : path) c = &c->parts[j];
        while (true) {
            if (c->level == 1) return nv + c->arc;
            if (!owned(c->middle)) return c->middle;
            int pick = 0;
            for (int j = 0; j < static_cast<int>(c->parts.size()); ++j)
                if (!copy_touched(c->parts[j], nv, touched)) {
                    pick = j;
                    break;
                }
            path.push_back(pick);
            c = &c->parts[pick];
        }
    }

    [[nodiscard]] std::string key() const {
        std::string out;
        for (int j : path) out += std::to_string(j) + ".";
        return out;
    }
};

/// Maker on the branched star: x_0, then an x_i with untouched copies, then
/// descent into an untouched copy.
struct StarPlay {
    int branch = -1;
    int copy = -1;
    Descent descent;

    int step(const HtbBuild& htb, const std::function<bool(int)>& owned, const std::function<bool(int)>& touched) {
        const int nv = htb.digraph.nv();
        const int x0 = htb.x[0];
        if (!owned(x0)) return x0;
        const int branches = static_cast<int>(htb.copies.size());
        if (branch < 0) {
            for (int pass = 0; pass < 2 && branch < 0; ++pass)
                for (int i = 1; i <= branches; ++i) {
                    if (touched(htb.x[i])) continue;
                    const bool clean = std::none_of(htb.copies[i - 1].begin(), htb.copies[i - 1].end(),
                                                    [&](const GtbCopy& c) { return copy_touched(c, nv, touched); });
                    if (clean || pass == 1) {
                        branch = i;
                        break;
                    }
                }
            if (branch < 0) branch = 1;
            return htb.x[branch];
        }
        if (!owned(htb.x[branch])) return htb.x[branch];
        const auto& copies = htb.copies[branch - 1];
        if (copy < 0) {
            copy = 0;
            for (int j = 0; j < static_cast<int>(copies.size()); ++j)
                if (!copy_touched(copies[j], nv, touched)) {
                    copy = j;
                    break;
                }
        }
        return descent.step(copies[copy], nv, owned, touched);
    }

    [[nodiscard]] std::string key() const {
        return std::to_string(branch) + "/" + std::to_string(copy) + "/" + descent.key();
    }
};

void require_digraph(const GameSpec& spec, const RootedDigraph& expected, const std::string& who) {
    if (spec.kind != GameKind::AuxEdgeGame || !(spec.digraph() == expected))
        throw InvalidArgument(who + " expects the aux game on its own digraph");
}

class MakerGtb : public Strategy {
public:
    MakerGtb(int t, int b) : t_(t), b_(b), build_(std::make_shared<GtbBuild>(build_gtb(t, b))) {}
    std::string id() const override { return "maker-gtb"; }
    Player role() const override { return Player::Maker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<MakerGtb>(*this); }
    std::string memory_key() const override { return descent_.key(); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require_digraph(spec, build_->digraph, id());
        const int nv = build_->digraph.nv();
        auto owned = [&](int e) { return state.maker.contains(e); };
        auto touched = [&](int e) { return state.breaker.contains(e); };
        return aux_maker_claim(spec, state, descent_.step(build_->layout, nv, owned, touched));
    }

private:
    int t_, b_;
    std::shared_ptr<const GtbBuild> build_;
    Descent descent_;
};

class MakerHtb : public Strategy {
public:
    MakerHtb(int t, int b) : build_(std::make_shared<HtbBuild>(build_htb(t, b))) {}
    std::string id() const override { return "maker-htb"; }
    Player role() const override { return Player::Maker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<MakerHtb>(*this); }
    std::string memory_key() const override { return play_.key(); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require_digraph(spec, build_->digraph, id());
        auto owned = [&](int e) { return state.maker.contains(e); };
        auto touched = [&](int e) { return state.breaker.contains(e); };
        return aux_maker_claim(spec, state, play_.step(*build_, owned, touched));
    }

private:
    std::shared_ptr<const HtbBuild> build_;
    StarPlay play_;
};

/// Digraph facts shared by the Breaker strategies.
struct Reach {
    std::vector<std::vector<int>> dist;
    explicit Reach(const RootedDigraph& d) : dist(d.distances()) {}
    [[nodiscard]] bool below(int x, int y) const { return dist[x][y] >= 0; }
};

/// A set of arcs together with the vertices they touch. Breaker reasons about
/// "free outgoing arcs" only inside the region.
struct Region {
    std::vector<int> vertices;
    std::vector<char> has_arc;

    std::vector<int> free_out(const RootedDigraph& d, const GameState& s, int v) const {
        std::vector<int> out;
        for (int a : d.out_arcs(v)) {
            const int e = d.nv() + a;
            if (has_arc[a] && !s.maker.contains(e) && !s.breaker.contains(e)) out.push_back(e);
        }
        return out;
    }
};

Region whole(const RootedDigraph& d) {
    Region r;
    for (int v = 0; v < d.nv(); ++v) r.vertices.push_back(v);
    r.has_arc.assign(static_cast<std::size_t>(d.arc_count()), 1);
    return r;
}

Region region_of(const RootedDigraph& d, const GtbCopy& c) {
    Region r;
    r.vertices = c.inner_vertices;
    r.vertices.push_back(c.start);
    r.vertices.push_back(c.end);
    std::sort(r.vertices.begin(), r.vertices.end());
    r.has_arc.assign(static_cast<std::size_t>(d.arc_count()), 0);
    for (int a : c.arcs) r.has_arc[a] = 1;
    return r;
}

/// Maker vertices of the region other than w that still have free outgoing arcs.
std::vector<int> open_vertices(const RootedDigraph& d, const Region& r, const GameState& s, const ElementSet& maker,
                               int w) {
    std::vector<int> out;
    for (int v : r.vertices)
        if (v != w && maker.contains(v) && !r.free_out(d, s, v).empty()) out.push_back(v);
    return out;
}

/// Response keeping "at most one Maker vertex with free outgoing arcs" and
/// "y ≼ z both Maker implies y fully blocked".
std::vector<int> block_response(const RootedDigraph& d, const Reach& reach, const Region& r, const GameState& s,
                                const ElementSet& maker, int w) {
    const auto open = open_vertices(d, r, s, maker, w);
    if (open.empty()) return w >= 0 ? r.free_out(d, s, w) : std::vector<int>{};
    const int prev = open.front();
    if (w < 0 || reach.below(prev, w)) return r.free_out(d, s, prev);
    return r.free_out(d, s, w);
}

/// Response keeping the distance-bounded variant for Maker's i-th move.
std::vector<int> slow_response(const RootedDigraph& d, const Reach& reach, const Region& r, const GameState& s,
                               const ElementSet& maker, int y, int i, int t) {
    const auto open = open_vertices(d, r, s, maker, y);
    if (y < 0) return open.empty() ? std::vector<int>{} : r.free_out(d, s, open.front());
    if (open.empty()) return r.free_out(d, s, y);
    const int x = open.front();
    if (!reach.below(x, y)) return r.free_out(d, s, y);
    const long long threshold = t - i - 1 >= 0 ? (1LL << (t - i - 1)) : 1;
    if (reach.dist[x][y] >= threshold) return r.free_out(d, s, y);
    return r.free_out(d, s, x);
}

int new_vertex(const ElementSet& fresh, int nv) {
    const int e = fresh.first();
    return e >= 0 && e < nv ? e : -1;
}

class BreakerGtbBlock : public Strategy {
public:
    explicit BreakerGtbBlock(int b) : b_(b) {}
    std::string id() const override { return "breaker-gtb-block"; }
    Player role() const override { return Player::Breaker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<BreakerGtbBlock>(*this); }
    std::string memory_key() const override { return tracker_.key(); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require(spec.kind == GameKind::AuxEdgeGame, id() + " plays the aux game");
        const auto& d = spec.digraph();
        if (!reach_) reach_ = std::make_shared<Reach>(d);
        const int w = new_vertex(tracker_.fresh(spec, state), d.nv());
        return claim_with_filler(spec, state, block_response(d, *reach_, whole(d), state, state.maker, w));
    }

private:
    int b_;
    std::shared_ptr<const Reach> reach_;
    MakerTracker tracker_;
};

class BreakerGtbSlow : public Strategy {
public:
    BreakerGtbSlow(int t, int b) : t_(t), b_(b) {}
    std::string id() const override { return "breaker-gtb-slow"; }
    Player role() const override { return Player::Breaker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<BreakerGtbSlow>(*this); }
    std::string memory_key() const override { return tracker_.key(); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require(spec.kind == GameKind::AuxEdgeGame, id() + " plays the aux game");
        const auto& d = spec.digraph();
        if (!reach_) reach_ = std::make_shared<Reach>(d);
        const int y = new_vertex(tracker_.fresh(spec, state), d.nv());
        return claim_with_filler(
            spec, state, slow_response(d, *reach_, whole(d), state, state.maker, y, state.maker_moves, t_));
    }

private:
    int t_, b_;
    std::shared_ptr<const Reach> reach_;
    MakerTracker tracker_;
};

/// Copy index of every inner vertex and arc of the branched star.
struct StarIndex {
    std::vector<const GtbCopy*> copies;
    std::vector<int> copy_of_vertex;
    std::vector<int> copy_of_arc;
    std::vector<Region> regions;

    explicit StarIndex(const HtbBuild& htb) {
        const auto& d = htb.digraph;
        copy_of_vertex.assign(static_cast<std::size_t>(d.nv()), -1);
        copy_of_arc.assign(static_cast<std::size_t>(d.arc_count()), -1);
        for (const auto& branch : htb.copies)
            for (const auto& c : branch) {
                const int k = static_cast<int>(copies.size());
                copies.push_back(&c);
                for (int v : c.inner_vertices) copy_of_vertex[v] = k;
                for (int a : c.arcs) copy_of_arc[a] = k;
                regions.push_back(region_of(d, c));
            }
    }
};

/// Both Breaker strategies for the branched star.
class BreakerHtb : public Strategy {
public:
    enum class Mode { Premove, Slow };

    BreakerHtb(int t, int b, Mode mode)
        : t_(t), mode_(mode), build_(std::make_shared<HtbBuild>(build_htb(t, b))),
          index_(std::make_shared<StarIndex>(*build_)), reach_(std::make_shared<Reach>(build_->digraph)) {}

    std::string id() const override { return mode_ == Mode::Premove ? "breaker-htb-premove" : "breaker-htb-slow"; }
    Player role() const override { return Player::Breaker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<BreakerHtb>(*this); }
    std::string memory_key() const override {
        std::string out = tracker_.key() + "|" + std::to_string(static_cast<int>(phase_)) + "|" +
                          std::to_string(home_copy_) + "|";
        for (const auto& [k, v] : moves_in_copy_) out += std::to_string(k) + ":" + std::to_string(v) + ",";
        return out;
    }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require_digraph(spec, build_->digraph, id());
        const auto& d = build_->digraph;
        const int x0 = build_->x[0];
        const int w = new_vertex(tracker_.fresh(spec, state), d.nv());
        if (mode_ == Mode::Premove) {
            if (state.breaker_moves == 0 && state.maker_moves == 0) return claim_with_filler(spec, state, {x0});
            return claim_with_filler(spec, state, premove_response(state, w));
        }
        if (state.breaker_moves == 0) {
            phase_ = w == x0 ? Phase::TookStart : Phase::MissedStart;
            return claim_with_filler(spec, state, phase_ == Phase::MissedStart ? std::vector<int>{x0} : std::vector<int>{});
        }
        if (phase_ == Phase::TookStart) {
            // Maker's second move decides between the two continuations.
            if (w >= 0 && index_->copy_of_vertex[w] < 0) {
                phase_ = Phase::TookBranch;
                return claim_with_filler(spec, state, {});
            }
            phase_ = Phase::EnteredCopy;
            home_copy_ = w >= 0 ? index_->copy_of_vertex[w] : -1;
        }
        return claim_with_filler(spec, state, slow_phase_response(state, w));
    }

private:
    enum class Phase { Unknown, MissedStart, TookStart, TookBranch, EnteredCopy };

    /// Breaker owns x_0 and treats every x_i as Maker's, so each copy is a
    /// blocking game: every new Maker vertex loses its outgoing arcs at once.
    std::vector<int> premove_response(const GameState& state, int w) const {
        if (w < 0 || index_->copy_of_vertex[w] < 0) return {};
        const auto& r = index_->regions[index_->copy_of_vertex[w]];
        return r.free_out(build_->digraph, state, w);
    }

    /// Union of the copies that contain vertex w.
    Region region_around(int w) const {
        const auto& d = build_->digraph;
        if (index_->copy_of_vertex[w] >= 0) return index_->regions[index_->copy_of_vertex[w]];
        Region r;
        r.has_arc.assign(static_cast<std::size_t>(d.arc_count()), 0);
        for (std::size_t k = 0; k < index_->copies.size(); ++k) {
            const auto* c = index_->copies[k];
            if (c->start != w && c->end != w) continue;
            for (int a : c->arcs) r.has_arc[a] = 1;
            for (int v : index_->regions[k].vertices) r.vertices.push_back(v);
        }
        std::sort(r.vertices.begin(), r.vertices.end());
        r.vertices.erase(std::unique(r.vertices.begin(), r.vertices.end()), r.vertices.end());
        return r;
    }

    ElementSet with_branch_ends(const GameState& state) const {
        ElementSet maker = state.maker;
        for (std::size_t i = 1; i < build_->x.size(); ++i) maker.set(build_->x[i]);
        return maker;
    }

    std::vector<int> slow_phase_response(const GameState& state, int w) {
        const auto& d = build_->digraph;
        if (w < 0) return {};
        const int k = index_->copy_of_vertex[w];
        switch (phase_) {
            case Phase::MissedStart:
                return block_response(d, *reach_, region_around(w), state, state.maker, w);
            case Phase::TookBranch:
                if (k < 0) return {};
                return slow_response(d, *reach_, index_->regions[k], state, with_branch_ends(state), w,
                                     ++moves_in_copy_[k], t_ - 2);
            case Phase::EnteredCopy: {
                const auto* home = home_copy_ >= 0 ? index_->copies[home_copy_] : nullptr;
                if (k == home_copy_ || (k < 0 && home && w == home->end))
                    return block_response(d, *reach_, index_->regions[home_copy_], state, state.maker, w);
                if (k < 0) return {};
                return slow_response(d, *reach_, index_->regions[k], state, with_branch_ends(state), w,
                                     ++moves_in_copy_[k], t_ - 2);
            }
            default:
                return {};
        }
    }

    int t_;
    Mode mode_;
    std::shared_ptr<const HtbBuild> build_;
    std::shared_ptr<const StarIndex> index_;
    std::shared_ptr<const Reach> reach_;
    MakerTracker tracker_;
    Phase phase_ = Phase::Unknown;
    int home_copy_ = -1;
    std::map<int, int> moves_in_copy_;
};

// ---------------------------------------------------------------------------
// H(m,b,s,t).

ElementSet layout_elements(const HmbstLayout& lay) {
    ElementSet out;
    if (lay.lifted) {
        for (const auto& v : lay.vertex_sets) out |= v;
        for (const auto& e : lay.arc_extras) out |= e;
    } else {
        out = lay.top;
        for (const auto& c : lay.children) out |= layout_elements(c);
    }
    return out;
}

class MakerHmbst : public Strategy {
public:
    MakerHmbst(int m, int b, int s, int t) : build_(std::make_shared<HmbstBuild>(build_hmbst(m, b, s, t))) {}
    std::string id() const override { return "maker-hmbst"; }
    Player role() const override { return Player::Maker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<MakerHmbst>(*this); }
    std::string memory_key() const override {
        std::string out;
        for (int j : children_) out += std::to_string(j) + ".";
        return out + "|" + play_.key();
    }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        if (spec.kind != GameKind::MakerBreaker || !(spec.hypergraph().edges() == build_->hypergraph.edges()))
            throw InvalidArgument(id() + " expects the Maker-Breaker game on H(m,b,s,t)");
        const HmbstLayout* lay = &build_->layout;
        for (int j : children_) lay = &lay->children[j];
        while (!lay->lifted) {
            if (!lay->top.is_subset_of(state.maker))
                return claim_with_filler(spec, state, (lay->top - state.maker).to_vector());
            int pick = 0;
            for (int j = 0; j < static_cast<int>(lay->children.size()); ++j)
                if (!layout_elements(lay->children[j]).intersects(state.breaker)) {
                    pick = j;
                    break;
                }
            children_.push_back(pick);
            lay = &lay->children[pick];
        }
        const auto& sets = lay->vertex_sets;
        const int nv = lay->htb.digraph.nv();
        auto owned = [&](int e) { return e < nv && sets[e].is_subset_of(state.maker); };
        auto touched = [&](int e) {
            return e < nv ? sets[e].intersects(state.breaker) : lay->arc_extras[e - nv].intersects(state.breaker);
        };
        const int e = play_.step(lay->htb, owned, touched);
        const ElementSet target = e < nv ? sets[e] : lay->arc_extras[e - nv];
        return claim_with_filler(spec, state, (target - state.maker).to_vector());
    }

private:
    std::shared_ptr<const HmbstBuild> build_;
    std::vector<int> children_;
    StarPlay play_;
};

// ---------------------------------------------------------------------------
// Non-monotone family and pairings.

void require_board(const GameSpec& spec, const Hypergraph& h, const std::string& who) {
    if (spec.kind == GameKind::AuxEdgeGame || spec.hypergraph().n() != h.n() ||
        spec.hypergraph().edges() != h.edges())
        throw InvalidArgument(who + " expects its own hypergraph");
}

class MakerNonmonotone : public Strategy {
public:
    MakerNonmonotone(std::vector<int> biases, int b)
        : b_(b), blocks_(nonmonotone_blocks(biases)),
          board_(std::make_shared<Hypergraph>(build_nonmonotone(biases))) {}
    std::string id() const override { return "maker-nonmonotone"; }
    Player role() const override { return Player::Maker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<MakerNonmonotone>(*this); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require_board(spec, *board_, id());
        const ElementSet free = free_elements(spec, state);
        std::vector<int> wanted;
        auto block_set = [&](int i) {
            ElementSet s;
            for (int k = 0; k < blocks_[i].second; ++k) s.set(blocks_[i].first + k);
            return s;
        };
        const int count = static_cast<int>(blocks_.size());
        if (state.maker_moves == 0) {
            for (int i = 0; i < count && i < b_; ++i) wanted.push_back((block_set(i) & free).first());
        } else {
            for (int pass = 0; pass < 2; ++pass)
                for (int i = 0; i < count; ++i) {
                    const ElementSet block = block_set(i);
                    if (block.intersects(state.maker)) continue;
                    if (pass == 0 && !block.intersects(state.breaker)) continue;
                    if (pass == 1 && block.intersects(state.breaker)) continue;
                    wanted.push_back((block & free).first());
                }
        }
        return claim_with_filler(spec, state, wanted);
    }

private:
    int b_;
    std::vector<std::pair<int, int>> blocks_;
    std::shared_ptr<const Hypergraph> board_;
};

class BreakerNonmonotone : public Strategy {
public:
    BreakerNonmonotone(std::vector<int> biases, int b)
        : b_(b), blocks_(nonmonotone_blocks(biases)),
          board_(std::make_shared<Hypergraph>(build_nonmonotone(biases))) {}
    std::string id() const override { return "breaker-nonmonotone"; }
    Player role() const override { return Player::Breaker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<BreakerNonmonotone>(*this); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require_board(spec, *board_, id());
        std::vector<int> wanted;
        for (int i = 0; i < static_cast<int>(blocks_.size()) && i <= b_; ++i) {
            ElementSet block;
            for (int k = 0; k < blocks_[i].second; ++k) block.set(blocks_[i].first + k);
            if (block.intersects(state.maker)) continue;
            if (block.is_subset_of(state.breaker)) return claim_with_filler(spec, state, {});
            if (wanted.empty()) wanted = (block - state.breaker).to_vector();
        }
        return claim_with_filler(spec, state, wanted);
    }

private:
    int b_;
    std::vector<std::pair<int, int>> blocks_;
    std::shared_ptr<const Hypergraph> board_;
};

class BreakerPairing : public Strategy {
public:
    explicit BreakerPairing(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {}
    std::string id() const override { return "breaker-pairing"; }
    Player role() const override { return Player::Breaker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<BreakerPairing>(*this); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require(spec.kind == GameKind::MakerBreaker, id() + " plays Maker-Breaker games");
        const ElementSet free = free_elements(spec, state);
        std::vector<int> wanted;
        for (auto [x, y] : pairs_) {
            if (state.maker.contains(x) && free.contains(y)) wanted.push_back(y);
            if (state.maker.contains(y) && free.contains(x)) wanted.push_back(x);
        }
        return claim_with_filler(spec, state, wanted);
    }

private:
    std::vector<std::pair<int, int>> pairs_;
};

// ---------------------------------------------------------------------------
// Waiter-Client domination on cycles and trees.

Move offer_pair(const GameSpec& spec, const GameState& state, const std::vector<std::pair<int, int>>& plan) {
    const ElementSet free = free_elements(spec, state);
    for (auto [x, y] : plan)
        if (free.contains(x) && free.contains(y)) return Move::offer(ElementSet{x, y});
    ElementSet pick;
    for (int e = free.first(); e >= 0 && pick.count() < 2; e = free.next(e + 1)) pick.set(e);
    return Move::offer(pick);
}

void require_domination(const GameSpec& spec, const SimpleGraph& g, GameKind kind, const std::string& who) {
    if (spec.kind != kind || spec.hypergraph().n() != g.n() ||
        spec.hypergraph().edges() != minimal_dominating_sets(g).edges())
        throw InvalidArgument(who + " expects the domination game on its graph");
}

class WaiterCycle : public Strategy {
public:
    explicit WaiterCycle(int n) : n_(n) { require(n >= 3, "cycle needs n >= 3"); }
    std::string id() const override { return "waiter-cycle"; }
    Player role() const override { return Player::Maker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<WaiterCycle>(*this); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        if (!checked_) {
            require_domination(spec, graphs::cycle(n_), GameKind::WaiterClient, id());
            checked_ = true;
        }
        // v_i is vertex i-1; the opening offer is {v_{n-1}, v_n}.
        if (state.maker_moves == 0) return Move::offer(ElementSet{n_ - 2, n_ - 1});
        const bool mirrored = !state.maker.contains(n_ - 2);
        auto at = [&](int i) {
            if (!mirrored) return i - 1;
            int r = (2 * n_ - 1 - i) % n_;
            if (r == 0) r = n_;
            return r - 1;
        };
        const int k = (n_ - 2) / 2 * 2;
        std::vector<std::pair<int, int>> plan;
        for (int j = 1; 2 * j <= k; ++j) plan.emplace_back(at(2 * j - 1), at(2 * j));
        return offer_pair(spec, state, plan);
    }

private:
    int n_;
    bool checked_ = false;
};

class ClientCycle : public Strategy {
public:
    explicit ClientCycle(int n) : n_(n) { require(n >= 3, "cycle needs n >= 3"); }
    std::string id() const override { return "client-cycle"; }
    Player role() const override { return Player::Breaker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<ClientCycle>(*this); }
    std::string memory_key() const override {
        return std::to_string(shift_) + (reflect_ ? "r" : "") + (adjacent_ ? "a" : "");
    }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require(spec.kind == GameKind::WaiterClient && state.pending_offer, id() + " answers Waiter offers");
        const auto offer = state.pending_offer->to_vector();
        if (offer.size() == 1) return Move::choose(offer[0]);
        if (shift_ < 0) return Move::choose(opening(offer[0], offer[1]));
        // Positions below are in the relabelled cycle, 0-based (v_i is i-1).
        const int p = to_local(offer[0]);
        const int q = to_local(offer[1]);
        const int lo = std::min(p, q);
        const int hi = std::max(p, q);
        int keep = lo;
        if (adjacent_) {
            if (lo % 2 == 0 && hi == lo + 1 && lo / 2 + 1 <= n_ / 2 - 1) keep = hi;
        } else {
            const int v2 = 1;
            const int vn = n_ - 1;
            const int vn1 = n_ - 2;
            if (lo == v2 && hi == vn) keep = vn;
            else if (lo == v2 || hi == v2) keep = v2;
            else if (lo == vn || hi == vn) keep = vn;
            else if (lo == vn1 || hi == vn1) keep = vn1;
        }
        return Move::choose(from_local(keep));
    }

private:
    int to_local(int a) const { return reflect_ ? ((shift_ - a) % n_ + n_) % n_ : (a + shift_) % n_; }
    int from_local(int x) const {
        for (int a = 0; a < n_; ++a)
            if (to_local(a) == x) return a;
        return x;
    }

    int opening(int p, int q) {
        const int gap = std::min((p - q + n_) % n_, (q - p + n_) % n_);
        adjacent_ = gap == 1;
        for (int reflect = 0; reflect < 2; ++reflect)
            for (int shift = 0; shift < n_; ++shift) {
                shift_ = shift;
                reflect_ = reflect == 1;
                const int lp = to_local(p);
                const int lq = to_local(q);
                if (adjacent_) {
                    if (std::min(lp, lq) == 0 && std::max(lp, lq) == 1) return from_local(1);
                } else {
                    // Keep v_1, hand over v_i with 3 <= i <= floor(n/2)+1.
                    if (lp == 0 && lq >= 2 && lq <= n_ / 2) return p;
                }
            }
        return p;
    }

    int n_;
    int shift_ = -1;
    bool reflect_ = false;
    bool adjacent_ = false;
};

class WaiterTree : public Strategy {
public:
    explicit WaiterTree(SimpleGraph tree) : tree_(std::move(tree)) {
        require(tree_.is_tree(), "waiter-tree needs a tree");
        const auto report = residue(tree_);
        plan_ = report.removed_pairs;
        for (auto [u, v] : report.residue.edges()) plan_.emplace_back(report.kept[u], report.kept[v]);
    }
    std::string id() const override { return "waiter-tree"; }
    Player role() const override { return Player::Maker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<WaiterTree>(*this); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        if (!checked_) {
            require_domination(spec, tree_, GameKind::WaiterClient, id());
            checked_ = true;
        }
        return offer_pair(spec, state, plan_);
    }

private:
    SimpleGraph tree_;
    std::vector<std::pair<int, int>> plan_;
    bool checked_ = false;
};

// ---------------------------------------------------------------------------
// Lifting a hypergraph Maker strategy to the transference gadget.

class DominatorLift : public Strategy {
public:
    DominatorLift(std::unique_ptr<Strategy> inner, Hypergraph h) : inner_(std::move(inner)), h_(std::move(h)) {
        require(inner_->role() == Player::Maker, "dominator-lift needs a Maker strategy");
    }
    DominatorLift(const DominatorLift& o) : inner_(o.inner_->clone()), h_(o.h_) {}
    std::string id() const override { return "dominator-lift"; }
    Player role() const override { return Player::Maker; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<DominatorLift>(*this); }
    std::string memory_key() const override { return inner_->memory_key(); }

    Move next_move(const GameSpec& spec, const GameState& state) override {
        require(spec.kind == GameKind::MakerBreaker, id() + " plays the Maker-Breaker domination game");
        const ElementSet x = ElementSet::prefix(h_.n());
        const GameSpec inner_spec = GameSpec::maker_breaker(h_, spec.maker_bias, spec.breaker_bias, spec.first);
        GameState inner_state = state;
        inner_state.maker &= x;
        inner_state.breaker &= x;
        std::vector<int> wanted;
        if (free_elements(inner_spec, inner_state).any())
            wanted = inner_->next_move(inner_spec, inner_state).elements.to_vector();
        const ElementSet free_x = free_elements(spec, state) & x;
        for (int e = free_x.first(); e >= 0; e = free_x.next(e + 1)) wanted.push_back(e);
        return claim_with_filler(spec, state, wanted);
    }

private:
    std::unique_ptr<Strategy> inner_;
    Hypergraph h_;
};

std::vector<std::pair<int, int>> pairs_param(const json& params) {
    if (params.is_object() && params.contains("pairs")) {
        std::vector<std::pair<int, int>> out;
        for (const auto& p : params.at("pairs")) {
            if (!p.is_array() || p.size() != 2) throw InvalidArgument("pairs must be [a, b] arrays");
            out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        }
        return out;
    }
    return wc_pairs(param_int(params, "t", 3));
}

SimpleGraph tree_param(const json& params) {
    if (params.is_object() && params.contains("tree")) return graph_from_json(params.at("tree"));
    return graphs::path(param_int(params, "n", 4));
}

}  // namespace

std::string to_string(const Guarantee& g) {
    switch (g.kind) {
        case Guarantee::Kind::WinWithin: return "win-within:" + std::to_string(g.rounds);
        case Guarantee::Kind::NeverLoses: return "never-loses";
        case Guarantee::Kind::OpponentNotWithin: return "opponent-not-within:" + std::to_string(g.rounds);
    }
    return "?";
}

Guarantee guarantee_from_string(const std::string& text) {
    if (text == "never-loses") return Guarantee::never_loses();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        int rounds = 0;
        try {
            rounds = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw InvalidArgument("bad guarantee '" + text + "'");
        }
        if (head == "win-within") return Guarantee::win_within(rounds);
        if (head == "opponent-not-within") return Guarantee::opponent_not_within(rounds);
    }
    throw InvalidArgument("bad guarantee '" + text + "'");
}

std::vector<std::string> strategy_ids() {
    return {"maker-gtb",         "breaker-gtb-block",  "breaker-gtb-slow",    "maker-htb",
            "breaker-htb-premove", "breaker-htb-slow", "maker-nonmonotone",   "breaker-nonmonotone",
            "breaker-pairing",   "waiter-cycle",       "client-cycle",        "waiter-tree",
            "maker-hmbst",       "dominator-lift"};
}

std::unique_ptr<Strategy> get_strategy(const std::string& id, const json& params) {
    if (id == "maker-gtb") return std::make_unique<MakerGtb>(param_int(params, "t"), param_int(params, "b"));
    if (id == "breaker-gtb-block") return std::make_unique<BreakerGtbBlock>(param_int(params, "b"));
    if (id == "breaker-gtb-slow")
        return std::make_unique<BreakerGtbSlow>(param_int(params, "t"), param_int(params, "b"));
    if (id == "maker-htb") return std::make_unique<MakerHtb>(param_int(params, "t"), param_int(params, "b"));
    if (id == "breaker-htb-premove")
        return std::make_unique<BreakerHtb>(param_int(params, "t"), param_int(params, "b"), BreakerHtb::Mode::Premove);
    if (id == "breaker-htb-slow")
        return std::make_unique<BreakerHtb>(param_int(params, "t"), param_int(params, "b"), BreakerHtb::Mode::Slow);
    if (id == "maker-nonmonotone")
        return std::make_unique<MakerNonmonotone>(param_ints(params, "B"), param_int(params, "b"));
    if (id == "breaker-nonmonotone")
        return std::make_unique<BreakerNonmonotone>(param_ints(params, "B"), param_int(params, "b"));
    if (id == "breaker-pairing") return std::make_unique<BreakerPairing>(pairs_param(params));
    if (id == "waiter-cycle") return std::make_unique<WaiterCycle>(param_int(params, "n"));
    if (id == "client-cycle") return std::make_unique<ClientCycle>(param_int(params, "n"));
    if (id == "waiter-tree") return std::make_unique<WaiterTree>(tree_param(params));
    if (id == "maker-hmbst")
        return std::make_unique<MakerHmbst>(param_int(params, "m"), param_int(params, "b"), param_int(params, "s"),
                                            param_int(params, "t"));
    if (id == "dominator-lift") {
        require(params.is_object() && params.contains("inner"), "dominator-lift needs an 'inner' strategy");
        const json& inner = params.at("inner");
        require(inner.contains("id"), "inner strategy needs an 'id'");
        const auto inner_instance = strategy_instance(inner.at("id").get<std::string>(), inner.value("params", json::object()));
        require(inner_instance.spec.kind == GameKind::MakerBreaker, "dominator-lift needs a hypergraph game");
        return std::make_unique<DominatorLift>(
            get_strategy(inner_instance.id, inner_instance.params), inner_instance.spec.hypergraph());
    }
    throw InvalidArgument("unknown strategy '" + id + "'");
}

StrategyInstance strategy_instance(const std::string& id, const json& params) {
    StrategyInstance inst{id, params, {}, {}};
    if (id == "maker-gtb" || id == "breaker-gtb-block" || id == "breaker-gtb-slow") {
        const int t = param_int(params, "t");
        const int b = param_int(params, "b");
        auto g = build_gtb(t, b).digraph;
        if (id == "breaker-gtb-block") {
            const int v = param_int(params, "v", 1 % g.nv());
            require(v >= 0 && v < g.nv(), "start vertex out of range");
            inst.spec = GameSpec::aux(g, b, ElementSet{v});
            inst.guarantee = Guarantee::never_loses();
        } else {
            inst.spec = GameSpec::aux(g, b, ElementSet{0, t});
            inst.guarantee = id == "maker-gtb" ? Guarantee::win_within(t) : Guarantee::opponent_not_within(t - 1);
        }
    } else if (id == "maker-htb" || id == "breaker-htb-premove" || id == "breaker-htb-slow") {
        const int t = param_int(params, "t");
        const int b = param_int(params, "b");
        inst.spec = GameSpec::aux(build_htb(t, b).digraph, b);
        if (id == "maker-htb") {
            inst.guarantee = Guarantee::win_within(t);
        } else if (id == "breaker-htb-premove") {
            inst.spec.first = Player::Breaker;
            inst.spec.opening_bias = 1;
            inst.guarantee = Guarantee::never_loses();
        } else {
            inst.guarantee = Guarantee::opponent_not_within(t - 1);
        }
    } else if (id == "maker-nonmonotone" || id == "breaker-nonmonotone") {
        const auto biases = param_ints(params, "B");
        const int b = param_int(params, "b");
        const bool in_set = std::find(biases.begin(), biases.end(), b) != biases.end();
        require(in_set == (id == "breaker-nonmonotone"),
                id == "maker-nonmonotone" ? "maker-nonmonotone needs b outside B" : "breaker-nonmonotone needs b in B");
        inst.spec = GameSpec::maker_breaker(build_nonmonotone(biases), b, b, Player::Maker);
        inst.guarantee = in_set ? Guarantee::never_loses()
                                : Guarantee::win_within(static_cast<int>(nonmonotone_blocks(biases).size()));
    } else if (id == "breaker-pairing") {
        Hypergraph h = params.is_object() && params.contains("hypergraph")
                           ? hypergraph_from_json(params.at("hypergraph"))
                           : build_wc_pairs_family(param_int(params, "t", 3));
        const Player first = params.is_object() && params.value("breaker_first", false) ? Player::Breaker : Player::Maker;
        inst.spec = GameSpec::maker_breaker(h, 1, 1, first);
        inst.guarantee = Guarantee::never_loses();
    } else if (id == "waiter-cycle" || id == "client-cycle") {
        const int n = param_int(params, "n");
        inst.spec = GameSpec::waiter_client(minimal_dominating_sets(graphs::cycle(n)));
        inst.guarantee = id == "waiter-cycle" ? Guarantee::win_within(n / 2) : Guarantee::opponent_not_within(n / 2 - 1);
    } else if (id == "waiter-tree") {
        const auto tree = tree_param(params);
        require(has_perfect_matching(tree), "waiter-tree needs a tree with a perfect matching");
        inst.spec = GameSpec::waiter_client(minimal_dominating_sets(tree));
        inst.guarantee = Guarantee::win_within(tree.n() / 2);
    } else if (id == "maker-hmbst") {
        const int m = param_int(params, "m");
        const int b = param_int(params, "b");
        const int t = param_int(params, "t");
        inst.spec = GameSpec::maker_breaker(build_hmbst(m, b, param_int(params, "s"), t).hypergraph, m, b);
        inst.guarantee = Guarantee::win_within(t);
    } else if (id == "dominator-lift") {
        require(params.is_object() && params.contains("inner"), "dominator-lift needs an 'inner' strategy");
        const json& inner = params.at("inner");
        const auto base = strategy_instance(inner.at("id").get<std::string>(), inner.value("params", json::object()));
        require(base.spec.kind == GameKind::MakerBreaker && base.guarantee.kind == Guarantee::Kind::WinWithin,
                "dominator-lift needs a winning Maker-Breaker strategy");
        const auto gadget = build_gadget(base.spec.hypergraph(), base.spec.maker_bias);
        inst.spec = GameSpec::maker_breaker(minimal_dominating_sets(gadget.graph), base.spec.maker_bias,
                                            base.spec.breaker_bias, base.spec.first);
        inst.guarantee = base.guarantee;
    } else {
        throw InvalidArgument("unknown strategy '" + id + "'");
    }
    return inst;
}

std::vector<StrategyInstance> catalog_instances() {
    const json p4 = {{"tree", to_json(graphs::path(4))}};
    return {
        strategy_instance("maker-gtb", {{"t", 2}, {"b", 2}}),
        strategy_instance("breaker-gtb-block", {{"t", 2}, {"b", 2}, {"v", 1}}),
        strategy_instance("breaker-gtb-slow", {{"t", 2}, {"b", 1}}),
        strategy_instance("maker-htb", {{"t", 3}, {"b", 1}}),
        strategy_instance("breaker-htb-premove", {{"t", 3}, {"b", 1}}),
        strategy_instance("breaker-htb-slow", {{"t", 3}, {"b", 1}}),
        strategy_instance("maker-nonmonotone", {{"B", {2}}, {"b", 1}}),
        strategy_instance("breaker-nonmonotone", {{"B", {2}}, {"b", 2}}),
        strategy_instance("breaker-pairing", {{"t", 3}}),
        strategy_instance("waiter-cycle", {{"n", 3}}),
        strategy_instance("client-cycle", {{"n", 6}}),
        strategy_instance("waiter-tree", p4),
        strategy_instance("maker-hmbst", {{"m", 1}, {"b", 1}, {"s", 3}, {"t", 3}}),
        strategy_instance("dominator-lift", {{"inner", {{"id", "maker-nonmonotone"}, {"params", {{"B", {1}}, {"b", 2}}}}}}),
    };
}

// ---------------------------------------------------------------------------
// Verifier.

namespace {

struct VerifyKey {
    ElementSet maker, breaker, offer;
    int maker_moves;
    bool to_maker, has_offer;
    std::string memory;
    friend bool operator==(const VerifyKey&, const VerifyKey&) = default;
};

struct VerifyKeyHash {
    std::size_t operator()(const VerifyKey& k) const {
        std::size_t h = k.maker.hash() * 31 + k.breaker.hash();
        h = h * 31 + k.offer.hash();
        h = h * 31 + static_cast<std::size_t>(k.maker_moves) * 4 + (k.to_maker ? 2 : 0) + (k.has_offer ? 1 : 0);
        return h * 31 + std::hash<std::string>{}(k.memory);
    }
};

class Verifier {
public:
    Verifier(const GameSpec& spec, const Guarantee& g, const VerifyOptions& options)
        : spec_(spec), g_(g), options_(options) {}

    /// Worst Maker round count on success (0 when irrelevant), nullopt on failure.
    std::optional<int> run(const GameState& state, Strategy& strat) {
        const Status st = status(spec_, state);
        const bool win = st.outcome == Outcome::MakerWin;
        switch (g_.kind) {
            case Guarantee::Kind::WinWithin:
                if (win) {
                    if (state.maker_moves <= g_.rounds) return state.maker_moves;
                    return fail("Maker won only after " + std::to_string(state.maker_moves) + " moves");
                }
                if (state.maker_moves >= g_.rounds) return fail("no win within " + std::to_string(g_.rounds));
                if (st.outcome == Outcome::MakerCannotWin) return fail("Maker can no longer win");
                break;
            case Guarantee::Kind::NeverLoses:
                if (win) return fail("Maker won");
                if (st.outcome == Outcome::MakerCannotWin) return 0;
                break;
            case Guarantee::Kind::OpponentNotWithin:
                if (win) {
                    if (state.maker_moves > g_.rounds) return 0;
                    return fail("Maker won in " + std::to_string(state.maker_moves) + " moves");
                }
                if (state.maker_moves >= g_.rounds || st.outcome == Outcome::MakerCannotWin) return 0;
                break;
        }
        if (free_elements(spec_, state).empty() && !state.pending_offer) {
            if (g_.kind == Guarantee::Kind::WinWithin) return fail("board exhausted without a win");
            return 0;
        }
        if (++nodes_ > options_.node_cap)
            throw GuardExceeded("strategy verification exceeded " + std::to_string(options_.node_cap) + " nodes");

        VerifyKey key{state.maker,
                      state.breaker,
                      state.pending_offer.value_or(ElementSet{}),
                      state.maker_moves,
                      state.to_move == Player::Maker,
                      state.pending_offer.has_value(),
                      strat.memory_key()};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::optional<int> result;
        if (state.to_move == strat.role()) {
            auto next = strat.clone();
            const Move mv = next->next_move(spec_, state);
            if (!is_legal(spec_, state, mv)) {
                trace_.push_back(mv);
                return fail("strategy proposed an illegal move");
            }
            trace_.push_back(mv);
            result = run(apply_move(spec_, state, mv), *next);
            if (!result) return std::nullopt;
            trace_.pop_back();
        } else {
            auto moves = legal_moves(spec_, state);
            if (moves.empty()) moves.push_back(Move::claim({}));
            int worst = 0;
            for (const auto& mv : moves) {
                auto next = strat.clone();
                trace_.push_back(mv);
                auto r = run(apply_move(spec_, state, mv), *next);
                if (!r) return std::nullopt;
                trace_.pop_back();
                worst = std::max(worst, *r);
            }
            result = worst;
        }
        memo_.emplace(std::move(key), *result);
        return result;
    }

    long long nodes() const { return nodes_; }
    const std::string& reason() const { return reason_; }
    const std::vector<Move>& trace() const { return trace_; }

private:
    std::optional<int> fail(std::string why) {
        reason_ = std::move(why);
        return std::nullopt;
    }

    const GameSpec& spec_;
    Guarantee g_;
    VerifyOptions options_;
    long long nodes_ = 0;
    std::string reason_;
    std::vector<Move> trace_;
    std::unordered_map<VerifyKey, int, VerifyKeyHash> memo_;
};

}  // namespace

VerifyResult verify_strategy(const GameSpec& spec, const Strategy& strategy, const Guarantee& guarantee,
                             const VerifyOptions& options) {
    spec.validate();
    Verifier verifier(spec, guarantee, options);
    auto strat = strategy.clone();
    const auto worst = verifier.run(initial_state(spec), *strat);
    VerifyResult out;
    out.ok = worst.has_value();
    out.nodes = verifier.nodes();
    if (out.ok) {
        if (guarantee.kind == Guarantee::Kind::WinWithin) out.worst_rounds = *worst;
    } else {
        out.reason = verifier.reason();
        out.counterexample = verifier.trace();
    }
    return out;
}

bool slow_invariants_hold(const RootedDigraph& d, const GameState& state, int round, int t) {
    const Region all = whole(d);
    const auto dist = d.distances();
    int open = 0;
    for (int v = 0; v < d.nv(); ++v)
        if (state.maker.contains(v) && !all.free_out(d, state, v).empty()) ++open;
    if (open > 1) return false;
    const long long limit = t - round - 1 >= 0 ? (1LL << (t - round - 1)) : 0;
    for (int y = 0; y < d.nv(); ++y) {
        if (!state.maker.contains(y)) continue;
        for (int z = 0; z < d.nv(); ++z) {
            if (z == y || !state.maker.contains(z) || dist[y][z] < 0 || dist[y][z] >= limit) continue;
            for (int a : d.out_arcs(y))
                if (!state.breaker.contains(d.nv() + a)) return false;
        }
    }
    return true;
}

}  // namespace posgames
