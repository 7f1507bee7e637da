#include "coordsolve/ordered.hpp"

#include "coordsolve/core.hpp"
#include "coordsolve/errors.hpp"
#include "coordsolve/kernels.hpp"

namespace coordsolve {
namespace {

PlayerSet closure(const StageGame& game, PlayerSet c, PlayerSet pool) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int m : pool - c) {
      if (game.incentive(m, c) > 0) {
        c = c.with(m);
        grew = true;
      }
    }
  }
  return c;
}

// Ordered recursion on the sub-game with active set S and forced ones O.
int rec_ordered(const StageGame& game, PlayerSet s, PlayerSet o, bool strongly) {
  int stages = 1;
  while (true) {
    if (strongly) {
      while (!s.empty() && game.incentive(s.lowest(), o) > 0) {
        o = o.with(s.lowest());
        s = s.without(s.lowest());
      }
    } else {
      PlayerSet c = closure(game, o, o | s);
      s -= c;
      o = c;
    }
    if (s.empty()) return stages;
    int last = s.highest();
    s = s.without(last);
    o = o.with(last);
    ++stages;
  }
}

void require_budget(int n, std::uint64_t budget) {
  const std::uint64_t need = std::uint64_t(n) * n * n << n;
  if (n > 24 || need > budget) {
    throw ResourceError("classification needs about " + std::to_string(need) +
                        " evaluations, over the budget " + std::to_string(budget));
  }
}

}  // namespace

OrderedFlags classify(const StageGame& game, ClassifyOptions options) {
  const int n = game.n();
  require_budget(n, options.budget);
  const PlayerSet all = game.players();
  OrderedFlags f;
  const std::uint64_t count = std::uint64_t{1} << n;

  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const PlayerSet x(static_cast<PlayerSet::Mask>(bits));
    PlayerSet joins;
    for (int m : all - x)
      if (game.incentive(m, x) > 0) joins = joins.with(m);
    for (int j : joins) {
      PlayerSet below = (all - x) & PlayerSet((PlayerSet::Mask{1} << j) - 1);
      PlayerSet strong_miss = below - joins;
      if (f.strongly_cost_ordered && !strong_miss.empty()) {
        f.strongly_cost_ordered = false;
        f.witnesses.push_back({"strongly-cost-ordered", strong_miss.lowest(), j, -1, x});
      }
      if (f.cost_ordered) {
        PlayerSet reached = options.literal_chain ? joins : closure(game, x.with(j), all);
        PlayerSet miss = below - reached;
        if (!miss.empty()) {
          f.cost_ordered = false;
          f.witnesses.push_back({"cost-ordered", miss.lowest(), j, -1, x});
        }
      }
    }
  }

  for (int k = 0; k < n && (f.contribution_ordered || f.contribution_natural); ++k) {
    const PlayerSet others = all.without(k);
    const std::uint64_t sub = std::uint64_t{1} << (n - 1);
    for (std::uint64_t idx = 0; idx < sub; ++idx) {
      const PlayerSet x = deposit(idx, others);
      const PlayerSet free = others - x;
      PlayerSet helps;
      for (int i : free)
        if (game.incentive(k, x.with(i)) > 0) helps = helps.with(i);
      if (helps.empty()) continue;
      const PlayerSet idle = free - helps;
      if (idle.empty()) continue;
      if (f.contribution_natural) {
        f.contribution_natural = false;
        f.witnesses.push_back({"contribution-natural", helps.lowest(), idle.lowest(), k, x});
      }
      if (f.contribution_ordered && idle.highest() > helps.lowest()) {
        int i = helps.lowest();
        int j = idle.highest();
        f.contribution_ordered = false;
        f.witnesses.push_back({"contribution-ordered", i, j, k, x});
      }
    }
  }
  return f;
}

int tau_ordered(const StageGame& game, PlayerSet x) { return tau_ordered(game, x, classify(game)); }

int tau_ordered(const StageGame& game, PlayerSet x, const OrderedFlags& flags) {
  if (!flags.fast_path()) {
    throw PreconditionError("the ordered recursion needs a cost-ordered, contribution-ordered game");
  }
  if (!x.subset_of(game.players())) throw ArgumentError("target outside the player set");
  if (x.empty()) return 1;
  require_assumption1(game, "tau_ordered");
  Context full = Context::full(game.n());
  IesdsResult r = iesds(game, full);
  PlayerSet forced_zero = full.active - r.greatest;
  if (!(x & forced_zero).empty()) {
    throw PreconditionError("players " + to_string(x & forced_zero) + " never play 1");
  }
  Context ctx{full.active - r.least - forced_zero, r.least};
  PlayerSet need = x - r.least;
  if (need.empty()) return 1;
  int best = -1;
  for (PlayerSet y : kernels::enumerate_sss(game, ctx, true)) {
    if (!need.subset_of(y)) continue;
    int v = rec_ordered(game, y, ctx.ones, flags.strongly_cost_ordered);
    if (best < 0 || v < best) best = v;
  }
  if (best < 0) throw PreconditionError("no equilibrium coalition contains the target");
  return best;
}

int algorithm1(const std::vector<int>& c, int n) {
  if (n < 2 || static_cast<int>(c.size()) != n) {
    throw ArgumentError("algorithm1 needs n ≥ 2 thresholds");
  }
  for (int i = 0; i < n; ++i) {
    if (c[i] < 1 || c[i] > n - 1) throw ArgumentError("thresholds must lie in [1, n−1]");
    if (i > 0 && c[i] < c[i - 1]) throw ArgumentError("thresholds must be nondecreasing");
  }
  int t = 0, l = 1, d = 0, r = n;
  while (l < r) {
    if (c[l - 1] <= d) {
      ++l;
      ++d;
    } else {
      --r;
      ++t;
      ++d;
    }
  }
  return t + 1;
}

namespace {

Digraph nested_graph(const std::vector<int>& in_start) {
  const int n = static_cast<int>(in_start.size());
  if (n < 1 || n > kMaxPlayers) throw ArgumentError("player count out of range");
  Digraph g(n);
  for (int i = 0; i < n; ++i) {
    if (in_start[i] < 0 || in_start[i] > n) throw ArgumentError("in_start entries must lie in [0, n]");
    for (int j = in_start[i]; j < n; ++j)
      if (j != i) g.add_edge(j, i);
  }
  return g;
}

void check_out(const Digraph& g, const std::vector<int>& out_bound, bool aligned) {
  if (out_bound.empty()) return;
  const int n = g.n();
  if (static_cast<int>(out_bound.size()) != n) throw ArgumentError("out_bound needs one entry per player");
  for (int i = 0; i < n; ++i) {
    PlayerSet want;
    for (int j = 0; j < n; ++j) {
      bool in_range = aligned ? j >= out_bound[i] : j <= out_bound[i];
      if (in_range && j != i) want = want.with(j);
    }
    if (want != g.out(i)) {
      throw ArgumentError("out-neighbourhood of player " + std::to_string(i + 1) +
                          " does not match out_bound");
    }
  }
}

}  // namespace

StageGame generate_aggregative(std::vector<int> c) {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] < c[i - 1]) throw ArgumentError("aggregative thresholds must be nondecreasing");
  StageGame g = StageGame::aggregative(std::move(c));
  OrderedFlags f = classify(g);
  if (!(f.strongly_cost_ordered && f.contribution_natural)) {
    throw ArgumentError("aggregative game does not classify as strongly cost-ordered and contribution natural");
  }
  return g;
}

StageGame generate_aligned_nsg(const std::vector<int>& in_start, const std::vector<int>& out_bound) {
  Digraph g = nested_graph(in_start);
  check_out(g, out_bound, true);
  StageGame game = StageGame::weakest_link(g);
  OrderedFlags f = classify(game);
  if (!(f.cost_ordered && f.contribution_ordered)) {
    throw ArgumentError("parameters do not give a cost-ordered, contribution-ordered graph");
  }
  return game;
}

StageGame generate_opposed_nsg(const std::vector<int>& in_start, const std::vector<int>& k,
                               const std::vector<int>& out_bound) {
  Digraph g = nested_graph(in_start);
  check_out(g, out_bound, false);
  if (k.size() != in_start.size()) throw ArgumentError("k needs one entry per player");
  StageGame game = StageGame::threshold(g, k);
  OrderedFlags f = classify(game);
  if (!(f.strongly_cost_ordered && f.contribution_ordered)) {
    throw ArgumentError("parameters do not give a strongly cost-ordered, contribution-ordered game");
  }
  return game;
}

}  // namespace coordsolve
