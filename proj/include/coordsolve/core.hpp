#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coordsolve/game.hpp"

namespace coordsolve {

inline constexpr const char* kSingleCrossing = "single-crossing";
inline constexpr const char* kCommonInterests = "common-interests";
inline constexpr const char* kTieBreak = "tie-break (interpreted)";
inline constexpr const char* kDeviationProof = "deviation-proof";
inline constexpr const char* kNondegenerate = "nondegenerate";

// A violating tuple: player i and opponent profiles lower ⊊ upper (both
// excluding i). For the nondegeneracy condition, lower = ∅ and upper = N \ {i}.
struct Witness {
  std::string condition;
  int player = -1;
  PlayerSet lower;
  PlayerSet upper;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AssumptionReport {
  bool single_crossing = true;
  bool common_interests = true;  // monotone indirect utility and the tie-break
  bool tie_break = true;         // the interpreted tie-break sub-check alone
  bool deviation_proof = true;
  bool nondegenerate = true;
  std::vector<Witness> witnesses;

  bool assumption1() const { return single_crossing && common_interests && deviation_proof; }
  bool all() const { return assumption1() && nondegenerate; }
};

AssumptionReport check_assumptions(const StageGame& game);

// True iff the witness exhibits a violation of its condition when replayed
// against the payoffs.
bool replays(const StageGame& game, const Witness& w);

// Is X (⊆ S) a Nash equilibrium of the contextual game?
bool is_ne(const StageGame& game, Context ctx, PlayerSet x);

// Least pure Nash equilibrium by upward best-response iteration from ∅.
PlayerSet least_ne(const StageGame& game, Context ctx);

// All pure Nash equilibria X ⊆ S, sorted by mask.
std::vector<PlayerSet> ne_set(const StageGame& game, Context ctx);
std::vector<PlayerSet> ne_set(const StageGame& game);

struct IesdsResult {
  PlayerSet least;     // players whose action 0 was eliminated (plus O)
  PlayerSet greatest;  // players whose action 1 survived (plus O)
};

// Iterated elimination of strictly dominated actions inside the context.
// Returned sets include the forced ones O.
IesdsResult iesds(const StageGame& game, Context ctx);

// Strictly sufficient sets: nonempty X ⊆ S whose members all strictly prefer
// 1 at X ∪ O; with require_ne, intersected with the equilibria. Sorted by
// cardinality, then lexicographically.
std::vector<PlayerSet> sss(const StageGame& game, Context ctx, bool require_ne);

// Throws PreconditionError unless the game satisfies Assumption 1.
void require_assumption1(const StageGame& game, const char* op);

}  // namespace coordsolve
