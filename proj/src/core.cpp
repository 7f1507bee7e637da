#include "coordsolve/core.hpp"

#include <algorithm>

#include "coordsolve/errors.hpp"
#include "coordsolve/kernels.hpp"
#include "coordsolve/reference.hpp"

namespace coordsolve {

AssumptionReport check_assumptions(const StageGame& game) {
  return kernels::sweep_assumptions(game);
}

bool replays(const StageGame& game, const Witness& w) {
  const int i = w.player;
  if (i < 0 || i >= game.n()) return false;
  auto u0 = [&](PlayerSet y) { return game.payoff(i, y.without(i)); };
  auto u1 = [&](PlayerSet y) { return game.payoff(i, y.with(i)); };
  if (w.condition == kNondegenerate) {
    PlayerSet n = game.players();
    return game.payoff(i, n) <= game.payoff(i, n.without(i)) ||
           game.payoff(i, PlayerSet()) <= game.payoff(i, PlayerSet::single(i));
  }
  if (w.upper.contains(i) || !w.lower.proper_subset_of(w.upper)) return false;
  const PlayerSet a = w.lower;
  const PlayerSet b = w.upper;
  if (w.condition == kSingleCrossing) {
    Rational da = u1(a) - u0(a);
    Rational db = u1(b) - u0(b);
    return (da >= 0 && db < 0) || (da > 0 && db <= 0);
  }
  if (w.condition == kCommonInterests) {
    return std::max(u0(b), u1(b)) < std::max(u0(a), u1(a));
  }
  if (w.condition == kTieBreak) {
    return u0(a) >= u1(a) && u1(b) >= u0(b) && std::max(u0(b), u1(b)) <= std::max(u0(a), u1(a));
  }
  if (w.condition == kDeviationProof) {
    return (u1(b) >= u0(a) && u1(b) < u0(b)) || (u1(b) > u0(a) && u1(b) <= u0(b));
  }
  return false;
}

void require_assumption1(const StageGame& game, const char* op) {
  if (!game.assumption1()) {
    throw PreconditionError(std::string(op) + " requires single-crossing, common interests and the deviation-proof condition");
  }
}

bool is_ne(const StageGame& game, Context ctx, PlayerSet x) {
  PlayerSet profile = x | ctx.ones;
  for (int i : ctx.active) {
    int s = game.incentive(i, profile);
    if (x.contains(i) ? s < 0 : s > 0) return false;
  }
  return true;
}

PlayerSet least_ne(const StageGame& game, Context ctx) {
  ctx.validate(game.n());
  require_assumption1(game, "least_ne");
  PlayerSet x;
  for (int round = 0; round <= ctx.active.size(); ++round) {
    PlayerSet next;
    for (int i : ctx.active)
      if (game.incentive(i, x | ctx.ones) > 0) next = next.with(i);
    if (next == x) return x;
    x = next;
  }
  throw InternalError("best-response iteration did not settle");
}

std::vector<PlayerSet> ne_set(const StageGame& game, Context ctx) {
  ctx.validate(game.n());
  require_assumption1(game, "ne_set");
  return kernels::enumerate_ne(game, ctx);
}

std::vector<PlayerSet> ne_set(const StageGame& game) { return ne_set(game, Context::full(game.n())); }

IesdsResult iesds(const StageGame& game, Context ctx) {
  ctx.validate(game.n());
  if (!game.assumption1()) return reference::iesds(game, ctx);
  // Under single-crossing a strict dominance holds on the whole surviving box
  // iff it holds at the box's corner.
  PlayerSet alive0 = ctx.active;
  PlayerSet alive1 = ctx.active;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : alive0 & alive1) {
      PlayerSet lo = (ctx.ones | (ctx.active - alive0)).without(i);
      PlayerSet hi = (ctx.ones | alive1).without(i);
      if (game.incentive(i, hi) < 0) {
        alive1 = alive1.without(i);
        changed = true;
      } else if (game.incentive(i, lo) > 0) {
        alive0 = alive0.without(i);
        changed = true;
      }
    }
  }
  return {ctx.ones | (ctx.active - alive0), ctx.ones | alive1};
}

std::vector<PlayerSet> sss(const StageGame& game, Context ctx, bool require_ne) {
  ctx.validate(game.n());
  return kernels::enumerate_sss(game, ctx, require_ne);
}

}  // namespace coordsolve
