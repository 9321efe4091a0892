#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "posgames/game.hpp"

namespace posgames {

/// Round budget t and size bound s; nullopt means unbounded.
struct Objective {
    std::optional<int> max_rounds;
    std::optional<int> max_size;

    static Objective unbounded() { return {}; }
    static Objective within(int t, std::optional<int> s = std::nullopt) { return {t, s}; }
};

/// Family of disjoint m-sets Maker is restricted to (plus winning completions).
struct MoveRestriction {
    std::vector<ElementSet> sets;
};

inline constexpr std::size_t kDefaultMemoCap = std::size_t{1} << 27;

/// kDefaultMemoCap unless POSGAMES_MEMO_CAP is set to a positive integer.
std::size_t default_memo_cap();

struct SolverOptions {
    std::size_t memo_cap = default_memo_cap();
    bool use_memo = true;
    /// Worker threads for root-level moves. 1 = single-actor (default).
    int jobs = 1;
};

struct SolverStats {
    long long nodes = 0;
    std::size_t memo_entries = 0;
};

struct SolveResult {
    bool maker_wins = false;
    std::optional<int> min_rounds;
    std::optional<int> min_size;
    /// Pareto-minimal (rounds, size) pairs, rounds descending / size ascending.
    std::vector<std::pair<int, int>> frontier;

    friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// Checks the hypotheses under which restricting Maker to whole sets of the
/// family (or winning completions) preserves every game value. Throws
/// InvalidArgument naming the first violated condition.
void validate_restriction(const Hypergraph& h, int m, int b, const MoveRestriction& r);

/// Can Maker (Waiter) force a winning set of size <= s within <= t of her
/// moves from the initial position of `spec`?
bool decide(const GameSpec& spec, const Objective& obj, const MoveRestriction* restriction = nullptr,
            const SolverOptions& options = {}, SolverStats* stats = nullptr);

/// Same question asked from an arbitrary reachable state. The round budget
/// counts moves already made: t - state.maker_moves remain.
bool decide_from(const GameSpec& spec, const GameState& state, const Objective& obj,
                 const MoveRestriction* restriction = nullptr, const SolverOptions& options = {},
                 SolverStats* stats = nullptr);

/// Fewest Maker rounds needed to force a winning set of size <= s; nullopt
/// when Maker cannot win at all.
std::optional<int> min_rounds(const GameSpec& spec, std::optional<int> max_size = std::nullopt,
                              const MoveRestriction* restriction = nullptr, const SolverOptions& options = {},
                              SolverStats* stats = nullptr);

SolveResult game_values(const GameSpec& spec, const SolverOptions& options = {},
                        const MoveRestriction* restriction = nullptr, SolverStats* stats = nullptr);

bool decide_mb(const Hypergraph& h, int m, int b, Player first, const Objective& obj,
               const MoveRestriction* restriction = nullptr, const SolverOptions& options = {});
bool decide_wc(const Hypergraph& h, const Objective& obj, const SolverOptions& options = {});
bool solve_aux_game(const RootedDigraph& d, int b, const ElementSet& maker_vertices, const Objective& obj,
                    const SolverOptions& options = {});

SolveResult game_values(const Hypergraph& h, int m, int b, Player first, const SolverOptions& options = {});
SolveResult wc_game_values(const Hypergraph& h, const SolverOptions& options = {});

}  // namespace posgames
