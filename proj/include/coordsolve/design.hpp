#pragma once

#include <optional>
#include <vector>

#include "coordsolve/game.hpp"

namespace coordsolve {

struct HorizonCandidate {
  int horizon = 0;
  PlayerSet phi;
  friend bool operator==(const HorizonCandidate&, const HorizonCandidate&) = default;
};

struct HorizonLedger {
  // Every T with φ(T) ⊋ φ(T−1), φ(0) = ∅.
  std::vector<HorizonCandidate> candidates;
  int bound = 0;

  // 1 + #{t ≥ 1 : φ(t+1) ⊋ φ(t)}, the count that meets `bound` on the
  // disjoint-clique family.
  int optimal_count() const;
};

// 1 + ⌊√(2n + 9/4) − 3/2⌋, in integer arithmetic.
int horizon_bound(int n);

// Throws InternalError if the count exceeds the bound.
HorizonLedger candidate_horizons(const StageGame& game);

struct CentralityClass {
  std::optional<int> tau;  // nullopt: the players never play 1
  PlayerSet players;
};

// Players grouped by τ({i}), ascending, "never" last.
std::vector<CentralityClass> weak_centrality(const StageGame& game);

// m[i][j]: in every Nash equilibrium, j plays 1 only if i does.
std::vector<std::vector<bool>> strong_centrality(const StageGame& game);

struct SubsidyBound {
  int player = -1;
  int lower = 0;  // τ of N \ {i} once i is forced to 1
  int tau_full = 0;
  bool holds() const { return lower <= tau_full && tau_full <= lower + 1; }
};

struct InterventionReport {
  PlayerSet gain;
  // Empty when τ(N) is undefined (some player never plays 1).
  std::vector<SubsidyBound> bounds;
  bool bounds_hold() const;
};

// φ at T with `subsidized` forced to 1, minus φ(T) and the subsidized players.
InterventionReport intervention(const StageGame& game, PlayerSet subsidized, int horizon);

}  // namespace coordsolve
