#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coordsolve/digraph.hpp"
#include "coordsolve/game.hpp"

namespace coordsolve {

inline constexpr std::uint64_t kDefaultOracleNodeCap = 50'000'000;

// Move schedule: T synchronous stages, or one move per player in partition
// order.
struct Schedule {
  bool asynchronous = false;
  int horizon = 1;
  Partition partition;

  static Schedule sync(int horizon);
  static Schedule async(Partition p);
  int stages() const { return asynchronous ? partition.horizon() : horizon; }
};

enum class EquilibriumMode { kSpne, kMspne };

struct OracleOptions {
  std::uint64_t node_cap = kDefaultOracleNodeCap;
  // Synchronous only: nobody switches to 1 before the last stage.
  bool no_early_pledge = false;
};

struct OracleResult {
  std::vector<PlayerSet> outcomes;  // sorted by mask

  std::vector<PlayerSet> minimal() const;
  std::optional<PlayerSet> least() const;
};

OracleResult enumerate_equilibria(const StageGame& game, const Schedule& schedule,
                                  EquilibriumMode mode, OracleOptions options = {});

// actions[t][h] is the set of players choosing 1 at stage t after history h,
// among those still free there. Synchronous histories number (t+1)^n at stage
// t: digit i (base t+1) is the stage at which player i switched, or t if not
// yet. Asynchronous histories index the earlier cells' 1-players via extract.
struct StrategyProfile {
  Schedule schedule;
  std::vector<std::vector<PlayerSet>> actions;
};

// Outcome of the profile if it is monotone in history and admits no
// profitable one-shot deviation anywhere.
std::optional<PlayerSet> verify_mspne(const StageGame& game, const StrategyProfile& profile);

// The conservative witness for X ∈ outcomes(T): no pledges before the last
// stage, last-stage play given by the P recursion. Throws InternalError if the
// built profile fails verification.
StrategyProfile support_strategy(const StageGame& game, int horizon, PlayerSet x);

}  // namespace coordsolve
