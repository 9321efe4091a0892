#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posgames/digraph.hpp"
#include "posgames/element_set.hpp"
#include "posgames/hypergraph.hpp"

namespace posgames {

enum class GameKind { MakerBreaker, WaiterClient, AuxEdgeGame };

/// Waiter plays the Maker role and Client the Breaker role.
enum class Player { Maker, Breaker };

inline Player other(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }

std::string to_string(GameKind k);
std::string to_string(Player p);

/// Rules bundle. For AuxEdgeGame the board is a RootedDigraph whose element
/// indices are the vertices 0..nv-1 followed by the arcs nv..nv+arcs-1.
struct GameSpec {
    GameKind kind = GameKind::MakerBreaker;
    std::variant<Hypergraph, RootedDigraph> board;
    int maker_bias = 1;
    int breaker_bias = 1;
    Player first = Player::Maker;
    /// Size of Breaker's opening move when Breaker moves first; defaults to
    /// breaker_bias. A one-element pre-move is `opening_bias = 1`.
    std::optional<int> opening_bias;
    ElementSet preclaimed_maker;
    ElementSet preclaimed_breaker;

    static GameSpec maker_breaker(Hypergraph h, int m, int b, Player first = Player::Maker);
    static GameSpec waiter_client(Hypergraph h);
    static GameSpec aux(RootedDigraph d, int b, ElementSet maker_vertices = {});

    [[nodiscard]] const Hypergraph& hypergraph() const;
    [[nodiscard]] const RootedDigraph& digraph() const;
    /// Board size in elements.
    [[nodiscard]] int n() const;
    [[nodiscard]] int arc_element(int arc) const { return digraph().nv() + arc; }

    /// Throws InvalidArgument on inconsistent rules.
    void validate() const;
};

struct GameState {
    ElementSet maker;
    ElementSet breaker;
    Player to_move = Player::Maker;
    int maker_moves = 0;
    int breaker_moves = 0;
    /// Waiter's offer awaiting Client's choice.
    std::optional<ElementSet> pending_offer;

    friend bool operator==(const GameState&, const GameState&) = default;
};

enum class MoveKind { Claim, Offer, Choose };

struct Move {
    MoveKind kind = MoveKind::Claim;
    ElementSet elements;

    static Move claim(ElementSet s) { return {MoveKind::Claim, s}; }
    static Move offer(ElementSet s) { return {MoveKind::Offer, s}; }
    static Move choose(int e) { return {MoveKind::Choose, ElementSet{e}}; }

    friend bool operator==(const Move&, const Move&) = default;
};

enum class Outcome { Ongoing, MakerWin, MakerCannotWin };

struct Status {
    Outcome outcome = Outcome::Ongoing;
    std::optional<ElementSet> witness;
};

GameState initial_state(const GameSpec& spec);
ElementSet free_elements(const GameSpec& spec, const GameState& state);

/// Number of elements the mover must claim in `state` (exact-bias rule).
int claim_size(const GameSpec& spec, const GameState& state);

std::vector<Move> legal_moves(const GameSpec& spec, const GameState& state);
bool is_legal(const GameSpec& spec, const GameState& state, const Move& move);
/// Throws IllegalMove when `move` is not legal.
GameState apply_move(const GameSpec& spec, const GameState& state, const Move& move);
Status status(const GameSpec& spec, const GameState& state);

std::string describe(const Move& move);

}  // namespace posgames
