#include "posgames/game.hpp"

#include <algorithm>

#include "posgames/errors.hpp"

namespace posgames {

std::string to_string(GameKind k) {
    switch (k) {
        case GameKind::MakerBreaker: return "maker-breaker";
        case GameKind::WaiterClient: return "waiter-client";
        case GameKind::AuxEdgeGame: return "aux-edge";
    }
    return "?";
}

std::string to_string(Player p) { return p == Player::Maker ? "maker" : "breaker"; }

GameSpec GameSpec::maker_breaker(Hypergraph h, int m, int b, Player first) {
    GameSpec spec;
    spec.kind = GameKind::MakerBreaker;
    spec.board = std::move(h);
    spec.maker_bias = m;
    spec.breaker_bias = b;
    spec.first = first;
    spec.validate();
    return spec;
}

GameSpec GameSpec::waiter_client(Hypergraph h) {
    GameSpec spec;
    spec.kind = GameKind::WaiterClient;
    spec.board = std::move(h);
    spec.validate();
    return spec;
}

GameSpec GameSpec::aux(RootedDigraph d, int b, ElementSet maker_vertices) {
    GameSpec spec;
    spec.kind = GameKind::AuxEdgeGame;
    spec.board = std::move(d);
    spec.breaker_bias = b;
    spec.preclaimed_maker = maker_vertices;
    spec.validate();
    return spec;
}

const Hypergraph& GameSpec::hypergraph() const {
    if (const auto* h = std::get_if<Hypergraph>(&board)) return *h;
    throw InvalidArgument("game board is not a hypergraph");
}

const RootedDigraph& GameSpec::digraph() const {
    if (const auto* d = std::get_if<RootedDigraph>(&board)) return *d;
    throw InvalidArgument("game board is not a digraph");
}

int GameSpec::n() const {
    if (const auto* h = std::get_if<Hypergraph>(&board)) return h->n();
    const auto& d = std::get<RootedDigraph>(board);
    return d.nv() + d.arc_count();
}

void GameSpec::validate() const {
    if (kind == GameKind::AuxEdgeGame) {
        if (!std::holds_alternative<RootedDigraph>(board))
            throw InvalidArgument("aux edge game needs a digraph board");
        if (n() > kMaxElements)
            throw InvalidArgument("digraph has " + std::to_string(n()) + " elements, capacity is " +
                                  std::to_string(kMaxElements));
        if (maker_bias != 1) throw InvalidArgument("aux edge game has Maker bias 1");
        if (!preclaimed_maker.is_subset_of(ElementSet::prefix(digraph().nv())))
            throw InvalidArgument("preclaimed Maker elements must be vertices");
    } else {
        if (!std::holds_alternative<Hypergraph>(board))
            throw InvalidArgument(to_string(kind) + " game needs a hypergraph board");
        if (kind == GameKind::WaiterClient && (maker_bias != 1 || breaker_bias != 1 || first != Player::Maker))
            throw InvalidArgument("Waiter-Client games are unbiased with Waiter moving first");
    }
    if (maker_bias < 1 || breaker_bias < 1) throw InvalidArgument("biases must be >= 1");
    if (opening_bias && *opening_bias < 1) throw InvalidArgument("opening bias must be >= 1");
    const ElementSet board_set = ElementSet::prefix(n());
    if (!preclaimed_maker.is_subset_of(board_set) || !preclaimed_breaker.is_subset_of(board_set))
        throw InvalidArgument("preclaimed elements outside the board");
    if (preclaimed_maker.intersects(preclaimed_breaker))
        throw InvalidArgument("preclaimed Maker and Breaker sets overlap");
}

GameState initial_state(const GameSpec& spec) {
    GameState s;
    s.maker = spec.preclaimed_maker;
    s.breaker = spec.preclaimed_breaker;
    s.to_move = spec.first;
    return s;
}

ElementSet free_elements(const GameSpec& spec, const GameState& state) {
    return ElementSet::prefix(spec.n()) - state.maker - state.breaker;
}

int claim_size(const GameSpec& spec, const GameState& state) {
    int bias = state.to_move == Player::Maker ? spec.maker_bias : spec.breaker_bias;
    if (state.to_move == Player::Breaker && spec.first == Player::Breaker && state.breaker_moves == 0 &&
        spec.opening_bias)
        bias = *spec.opening_bias;
    return std::min(bias, free_elements(spec, state).count());
}

namespace {

ElementSet aux_maker_options(const GameSpec& spec, const GameState& state) {
    const auto& d = spec.digraph();
    const ElementSet free = free_elements(spec, state);
    ElementSet options = free & ElementSet::prefix(d.nv());
    for (int a = 0; a < d.arc_count(); ++a) {
        auto [u, v] = d.arcs()[a];
        if (free.test(d.nv() + a) && state.maker.test(u) && state.maker.test(v)) options.set(d.nv() + a);
    }
    return options;
}

}  // namespace

std::vector<Move> legal_moves(const GameSpec& spec, const GameState& state) {
    std::vector<Move> moves;
    const ElementSet free = free_elements(spec, state);
    if (spec.kind == GameKind::WaiterClient) {
        if (state.pending_offer) {
            state.pending_offer->for_each([&](int e) { moves.push_back(Move::choose(e)); });
            return moves;
        }
        const int k = std::min(2, free.count());
        if (k == 0) return moves;
        for_each_k_subset(free, k, [&](const ElementSet& s) {
            moves.push_back(Move::offer(s));
            return true;
        });
        return moves;
    }
    if (spec.kind == GameKind::AuxEdgeGame && state.to_move == Player::Maker) {
        aux_maker_options(spec, state).for_each([&](int e) { moves.push_back(Move::claim(ElementSet{e})); });
        return moves;
    }
    const int k = claim_size(spec, state);
    if (k == 0) return moves;
    for_each_k_subset(free, k, [&](const ElementSet& s) {
        moves.push_back(Move::claim(s));
        return true;
    });
    return moves;
}

bool is_legal(const GameSpec& spec, const GameState& state, const Move& move) {
    const ElementSet free = free_elements(spec, state);
    if (spec.kind == GameKind::WaiterClient) {
        if (state.pending_offer)
            return move.kind == MoveKind::Choose && state.to_move == Player::Breaker && move.elements.count() == 1 &&
                   move.elements.is_subset_of(*state.pending_offer);
        return move.kind == MoveKind::Offer && state.to_move == Player::Maker &&
               move.elements.count() == std::min(2, free.count()) && move.elements.any() &&
               move.elements.is_subset_of(free);
    }
    if (move.kind != MoveKind::Claim) return false;
    if (spec.kind == GameKind::AuxEdgeGame && state.to_move == Player::Maker) {
        const ElementSet options = aux_maker_options(spec, state);
        if (options.empty()) return move.elements.empty();
        return move.elements.count() == 1 && move.elements.is_subset_of(options);
    }
    return move.elements.count() == claim_size(spec, state) && move.elements.is_subset_of(free);
}

GameState apply_move(const GameSpec& spec, const GameState& state, const Move& move) {
    if (!is_legal(spec, state, move))
        throw IllegalMove(describe(move) + " is not legal for " + to_string(state.to_move));
    GameState next = state;
    if (spec.kind == GameKind::WaiterClient) {
        if (move.kind == MoveKind::Offer) {
            next.pending_offer = move.elements;
            next.to_move = Player::Breaker;
        } else {
            next.breaker |= move.elements;
            next.maker |= *state.pending_offer - move.elements;
            next.pending_offer.reset();
            next.to_move = Player::Maker;
            ++next.maker_moves;
            ++next.breaker_moves;
        }
        return next;
    }
    if (state.to_move == Player::Maker) {
        next.maker |= move.elements;
        ++next.maker_moves;
    } else {
        next.breaker |= move.elements;
        ++next.breaker_moves;
    }
    next.to_move = other(state.to_move);
    return next;
}

Status status(const GameSpec& spec, const GameState& state) {
    if (spec.kind == GameKind::AuxEdgeGame) {
        const auto& d = spec.digraph();
        const ElementSet arcs = ElementSet::prefix(spec.n()) - ElementSet::prefix(d.nv());
        const ElementSet owned = state.maker & arcs;
        if (owned.any()) return {Outcome::MakerWin, ElementSet{owned.first()}};
        if (arcs.is_subset_of(state.breaker) || free_elements(spec, state).empty())
            return {Outcome::MakerCannotWin, std::nullopt};
        return {Outcome::Ongoing, std::nullopt};
    }
    const auto& h = spec.hypergraph();
    std::optional<ElementSet> witness;
    bool all_blocked = true;
    for (const auto& e : h.edges()) {
        if (e.is_subset_of(state.maker)) {
            if (!witness || e.count() < witness->count()) witness = e;
        }
        if (!e.intersects(state.breaker)) all_blocked = false;
    }
    if (witness) return {Outcome::MakerWin, witness};
    if (all_blocked) return {Outcome::MakerCannotWin, std::nullopt};
    return {Outcome::Ongoing, std::nullopt};
}

std::string describe(const Move& move) {
    switch (move.kind) {
        case MoveKind::Claim: return "claim " + move.elements.to_string();
        case MoveKind::Offer: return "offer " + move.elements.to_string();
        case MoveKind::Choose: return "keep " + move.elements.to_string();
    }
    return "?";
}

}  // namespace posgames
