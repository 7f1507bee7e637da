#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "coordsolve/core.hpp"

namespace coordsolve {

struct PolicyNode {
  enum class Op { kLeaf, kDominate, kDelete, kDivide };
  Op op = Op::kLeaf;
  Context ctx;
  int value = 1;
  int player = -1;  // Dominate / Delete
  PlayerSet part;   // Divide: the lower set X
  // Dominate/Delete: one child; Divide: (X, O) then (S \ X, O ∪ X).
  std::vector<PolicyNode> children;

  // Recomputes the value from the children and the op semantics.
  int replay() const;
};

struct SyncOptions {
  // Divide over strictly sufficient equilibria (default) or over all strictly
  // sufficient sets.
  bool use_sse = true;
  // Off only for exploring games outside the assumptions; results then carry
  // no guarantee.
  bool require_assumptions = true;
};

// Context after folding in the players iesds forces.
struct ReducedContext {
  Context ctx;
  PlayerSet forced_one;   // moved into ctx.ones
  PlayerSet forced_zero;  // dropped from the active set
};

// Memoized solver for the synchronous game. One instance per game; not for
// concurrent use.
class SyncSolver {
 public:
  explicit SyncSolver(const StageGame& game, SyncOptions options = {});

  const StageGame& game() const { return game_; }

  // Folds iesds-forced players into the context and checks that every
  // remaining player strictly prefers 1 at the top of the context.
  ReducedContext reduce(Context ctx) const;

  // The recursion on an already reduced context.
  int tau_rec(Context ctx);
  PolicyNode policy(Context ctx);

  // τ of X in the context: smallest horizon at which X plays 1 in every
  // MSPNE; nullopt when some member of X never does.
  std::optional<int> tau(Context ctx, PlayerSet x);
  int tau(PlayerSet x);

  // τ({i}) for every i ∈ S (nullopt for players that never play 1).
  std::vector<std::optional<int>> tau_singletons(Context ctx);

  PlayerSet phi(Context ctx, int horizon);
  PlayerSet phi(int horizon);

  std::vector<PlayerSet> outcomes(Context ctx, int horizon);
  std::vector<PlayerSet> outcomes(int horizon);

  // Lookup into the memo filled by tau_rec (valid after tau_rec(ctx)).
  struct Entry {
    int value = 1;
    PolicyNode::Op op = PolicyNode::Op::kLeaf;
    int player = -1;
    PlayerSet part;
  };
  const Entry& entry(Context ctx);

 private:
  static std::uint64_t key(Context ctx) {
    return std::uint64_t{ctx.active.bits()} | (std::uint64_t{ctx.ones.bits()} << 32);
  }
  int rec(PlayerSet s, PlayerSet o);
  std::vector<PlayerSet> divide_candidates(Context ctx) const;
  // τ of singletons in a reduced context.
  std::vector<std::optional<int>> singles(const ReducedContext& r);

  const StageGame& game_;
  SyncOptions options_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

std::pair<int, PolicyNode> tau_rec(const StageGame& game, Context ctx, SyncOptions options = {});
int tau(const StageGame& game, PlayerSet x, SyncOptions options = {});
PlayerSet phi(const StageGame& game, int horizon);
std::vector<PlayerSet> outcomes(const StageGame& game, int horizon);

}  // namespace coordsolve
