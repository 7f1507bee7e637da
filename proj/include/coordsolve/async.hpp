#pragma once

#include <cstdint>
#include <vector>

#include "coordsolve/digraph.hpp"
#include "coordsolve/game.hpp"

namespace coordsolve {

inline constexpr std::uint64_t kDefaultHistoryBudget = 10'000'000;

struct IesedsOptions {
  // Σ_t 2^|N_1 ∪ … ∪ N_{t−1}| · |N_t| must stay within this cap.
  std::uint64_t budget = kDefaultHistoryBudget;
  bool require_assumptions = true;
};

// Backward-induction table of the asynchronous game. A history before stage t
// is the set of earlier-cell players who played 1, indexed by
// extract(h, prefix[t]).
struct IesedsTable {
  Partition partition;
  std::vector<PlayerSet> prefix;
  // least[t][h]: least surviving profile of cell t after history h.
  std::vector<std::vector<PlayerSet>> least;
  // continuation[t][h]: players of cells t.. who end up playing 1.
  std::vector<std::vector<PlayerSet>> continuation;
  PlayerSet profile;  // on-path least profile a*

  // Rebuilds a* forward from `least`.
  PlayerSet replay() const;
};

IesedsTable ieseds(const StageGame& game, const Partition& p, IesedsOptions options = {});

// Greatest set of players a T-cell partition can make play 1 in every MSPNE.
PlayerSet m_of_t(const StageGame& game, int horizon);

struct Design {
  Partition partition;
  PlayerSet achieved;
  Digraph graph;  // minimal sufficient graph restricted to `achieved`
};

// Optimal T-cell schedule; confirmed by ieseds before returning.
Design design(const StageGame& game, int horizon, IesedsOptions options = {});

// M-sufficiency of g plus the suffix strong-connectivity check of p on M.
bool check_sufficient_feasible(const StageGame& game, const Digraph& g, const Partition& p,
                               PlayerSet m);

}  // namespace coordsolve
