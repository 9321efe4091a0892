#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "posgames/game.hpp"
#include "posgames/json_io.hpp"

namespace posgames {

/// A scripted player. next_move is only called when `role()` is to move and
/// may update the strategy's private memory; clone() copies that memory so a
/// verifier can branch.
class Strategy {
public:
    virtual ~Strategy() = default;
    [[nodiscard]] virtual std::string id() const = 0;
    [[nodiscard]] virtual Player role() const = 0;
    virtual Move next_move(const GameSpec& spec, const GameState& state) = 0;
    [[nodiscard]] virtual std::unique_ptr<Strategy> clone() const = 0;
    /// Serialized private memory; two strategies with equal keys behave alike.
    [[nodiscard]] virtual std::string memory_key() const { return {}; }
};

struct Guarantee {
    enum class Kind { WinWithin, NeverLoses, OpponentNotWithin };
    Kind kind = Kind::NeverLoses;
    /// WinWithin: Maker wins within this many of her moves.
    /// OpponentNotWithin: Maker does not win within this many moves.
    int rounds = 0;

    static Guarantee win_within(int t) { return {Kind::WinWithin, t}; }
    static Guarantee never_loses() { return {Kind::NeverLoses, 0}; }
    static Guarantee opponent_not_within(int t) { return {Kind::OpponentNotWithin, t}; }
};

std::string to_string(const Guarantee& g);
/// "win-within:3", "never-loses", "opponent-not-within:2".
Guarantee guarantee_from_string(const std::string& text);

std::vector<std::string> strategy_ids();

/// Throws InvalidArgument for unknown ids or bad parameters.
std::unique_ptr<Strategy> get_strategy(const std::string& id, const json& params);

/// The game a catalog strategy is meant for and the guarantee it carries.
struct StrategyInstance {
    std::string id;
    json params;
    GameSpec spec;
    Guarantee guarantee;
};

StrategyInstance strategy_instance(const std::string& id, const json& params);
/// One small instance per catalog entry.
std::vector<StrategyInstance> catalog_instances();

inline constexpr long long kDefaultVerifyNodes = 20'000'000;

struct VerifyOptions {
    long long node_cap = kDefaultVerifyNodes;
};

struct VerifyResult {
    bool ok = false;
    long long nodes = 0;
    /// WinWithin only: the most Maker moves any play needed.
    std::optional<int> worst_rounds;
    std::string reason;
    std::vector<Move> counterexample;
};

/// Plays `strategy` against every possible opponent reply sequence.
VerifyResult verify_strategy(const GameSpec& spec, const Strategy& strategy, const Guarantee& guarantee,
                             const VerifyOptions& options = {});

/// The two conditions kept after each move of "breaker-gtb-slow": at most one
/// Maker vertex has a free outgoing arc, and Maker vertices y ≼ z joined by a
/// path shorter than 2^(t-i-1) have all arcs out of y claimed by Breaker.
bool slow_invariants_hold(const RootedDigraph& d, const GameState& state, int round, int t);

}  // namespace posgames
