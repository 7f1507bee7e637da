#include "coordsolve/sync.hpp"

#include <algorithm>
#include <climits>

#include "coordsolve/errors.hpp"
#include "coordsolve/kernels.hpp"

namespace coordsolve {

int PolicyNode::replay() const {
  switch (op) {
    case Op::kLeaf:
      return 1;
    case Op::kDominate:
      return children.at(0).replay();
    case Op::kDelete:
      return 1 + children.at(0).replay();
    case Op::kDivide:
      return std::max(children.at(0).replay(), children.at(1).replay());
  }
  return 0;
}

SyncSolver::SyncSolver(const StageGame& game, SyncOptions options) : game_(game), options_(options) {}

ReducedContext SyncSolver::reduce(Context ctx) const {
  ctx.validate(game_.n());
  if (options_.require_assumptions) require_assumption1(game_, "the synchronous solver");
  IesdsResult r = iesds(game_, ctx);
  ReducedContext out;
  out.forced_one = r.least - ctx.ones;
  out.forced_zero = ctx.active - r.greatest;
  out.ctx.active = ctx.active - out.forced_one - out.forced_zero;
  out.ctx.ones = ctx.ones | out.forced_one;
  PlayerSet top = out.ctx.active | out.ctx.ones;
  for (int i : out.ctx.active) {
    if (game_.incentive(i, top) <= 0) {
      throw PreconditionError("player " + std::to_string(i + 1) +
                              " does not strictly prefer action 1 when all others play 1");
    }
  }
  return out;
}

std::vector<PlayerSet> SyncSolver::divide_candidates(Context ctx) const {
  return kernels::enumerate_sss(game_, ctx, options_.use_sse);
}

int SyncSolver::rec(PlayerSet s, PlayerSet o) {
  const std::uint64_t k = key({s, o});
  if (auto it = memo_.find(k); it != memo_.end()) return it->second.value;

  Entry e;
  for (int i : s) {
    if (game_.incentive(i, o) > 0) {
      e.value = rec(s.without(i), o.with(i));
      e.op = PolicyNode::Op::kDominate;
      e.player = i;
      memo_[k] = e;
      return e.value;
    }
  }
  if (s.empty()) {
    memo_[k] = e;
    return 1;
  }
  // With no dominant player and S nonempty the value is at least 2.
  e.value = INT_MAX;
  for (PlayerSet x : divide_candidates({s, o})) {
    if (x == s) continue;
    int v = std::max(rec(x, o), rec(s - x, o | x));
    if (v < e.value) {
      e.value = v;
      e.op = PolicyNode::Op::kDivide;
      e.part = x;
      e.player = -1;
    }
    if (e.value == 2) break;
  }
  for (int i : s) {
    if (e.value == 2) break;
    int v = 1 + rec(s.without(i), o.with(i));
    if (v < e.value) {
      e.value = v;
      e.op = PolicyNode::Op::kDelete;
      e.player = i;
      e.part = PlayerSet();
    }
  }
  memo_[k] = e;
  return e.value;
}

int SyncSolver::tau_rec(Context ctx) {
  ctx.validate(game_.n());
  return rec(ctx.active, ctx.ones);
}

const SyncSolver::Entry& SyncSolver::entry(Context ctx) {
  rec(ctx.active, ctx.ones);
  return memo_.at(key(ctx));
}

PolicyNode SyncSolver::policy(Context ctx) {
  Entry e = entry(ctx);
  PolicyNode node;
  node.op = e.op;
  node.ctx = ctx;
  node.value = e.value;
  node.player = e.player;
  node.part = e.part;
  switch (e.op) {
    case PolicyNode::Op::kLeaf:
      break;
    case PolicyNode::Op::kDominate:
    case PolicyNode::Op::kDelete:
      node.children.push_back(policy({ctx.active.without(e.player), ctx.ones.with(e.player)}));
      break;
    case PolicyNode::Op::kDivide:
      node.children.push_back(policy(ctx.lower(e.part)));
      node.children.push_back(policy(ctx.upper(e.part)));
      break;
  }
  return node;
}

std::optional<int> SyncSolver::tau(Context ctx, PlayerSet x) {
  ReducedContext r = reduce(ctx);
  if (!x.subset_of(ctx.active)) throw ArgumentError("target must lie in the active set");
  if (!(x & r.forced_zero).empty()) return std::nullopt;
  PlayerSet need = x - r.forced_one;
  if (need.empty()) return 1;
  std::optional<int> best;
  for (PlayerSet y : kernels::enumerate_sss(game_, r.ctx, false)) {
    if (!need.subset_of(y)) continue;
    int v = rec(y, r.ctx.ones);
    if (!best || v < *best) best = v;
  }
  return best;
}

int SyncSolver::tau(PlayerSet x) {
  auto v = tau(Context::full(game_.n()), x);
  if (!v) throw PreconditionError("some target player never plays 1 (iterated strictly dominated)");
  return *v;
}

std::vector<std::optional<int>> SyncSolver::singles(const ReducedContext& r) {
  std::vector<std::optional<int>> out(game_.n());
  for (int i : r.forced_one) out[i] = 1;
  for (PlayerSet y : kernels::enumerate_sss(game_, r.ctx, false)) {
    int v = rec(y, r.ctx.ones);
    for (int i : y)
      if (!out[i] || v < *out[i]) out[i] = v;
  }
  return out;
}

std::vector<std::optional<int>> SyncSolver::tau_singletons(Context ctx) { return singles(reduce(ctx)); }

PlayerSet SyncSolver::phi(Context ctx, int horizon) {
  if (horizon < 1) throw ArgumentError("horizon must be positive");
  auto t = tau_singletons(ctx);
  PlayerSet out;
  for (int i : ctx.active)
    if (t[i] && *t[i] <= horizon) out = out.with(i);
  return out;
}

PlayerSet SyncSolver::phi(int horizon) { return phi(Context::full(game_.n()), horizon); }

std::vector<PlayerSet> SyncSolver::outcomes(Context ctx, int horizon) {
  if (horizon < 1) throw ArgumentError("horizon must be positive");
  ReducedContext r = reduce(ctx);
  std::vector<PlayerSet> out;
  for (PlayerSet x : kernels::enumerate_ne(game_, r.ctx)) {
    Context rest = r.ctx.upper(x);
    bool joins = false;
    for (PlayerSet y : kernels::enumerate_sss(game_, rest, false)) {
      if (rec(y, rest.ones) <= horizon) {
        joins = true;
        break;
      }
    }
    if (!joins) out.push_back(x | r.forced_one);
  }
  canonicalize(out);
  return out;
}

std::vector<PlayerSet> SyncSolver::outcomes(int horizon) {
  return outcomes(Context::full(game_.n()), horizon);
}

std::pair<int, PolicyNode> tau_rec(const StageGame& game, Context ctx, SyncOptions options) {
  SyncSolver solver(game, options);
  Context reduced = solver.reduce(ctx).ctx;
  int v = solver.tau_rec(reduced);
  return {v, solver.policy(reduced)};
}

int tau(const StageGame& game, PlayerSet x, SyncOptions options) {
  SyncSolver solver(game, options);
  return solver.tau(x);
}

PlayerSet phi(const StageGame& game, int horizon) {
  SyncSolver solver(game);
  return solver.phi(horizon);
}

std::vector<PlayerSet> outcomes(const StageGame& game, int horizon) {
  SyncSolver solver(game);
  return solver.outcomes(horizon);
}

}  // namespace coordsolve
