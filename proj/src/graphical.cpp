#include "coordsolve/graphical.hpp"

#include <algorithm>

#include "coordsolve/errors.hpp"
#include "coordsolve/kernels.hpp"

namespace coordsolve {
namespace {

// Inclusion-minimal satisfying subsets of `pool` for player i.
std::vector<PlayerSet> minimal_within(const StageGame& game, int i, PlayerSet pool) {
  std::vector<PlayerSet> all;
  const std::uint64_t count = std::uint64_t{1} << pool.size();
  all.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) all.push_back(deposit(k, pool));
  std::sort(all.begin(), all.end(), card_lex_less);
  std::vector<PlayerSet> out;
  for (PlayerSet e : all) {
    if (game.incentive(i, e) <= 0) continue;
    bool covered = std::any_of(out.begin(), out.end(), [&](PlayerSet m) { return m.subset_of(e); });
    if (!covered) out.push_back(e);
  }
  return out;
}

class Builder {
 public:
  Builder(SyncSolver& solver, Digraph& g) : solver_(solver), game_(solver.game()), g_(g) {}

  void build(PlayerSet s, PlayerSet o) {
    for (int i : s) {
      if (game_.incentive(i, o) > 0) {
        for (int j : s.without(i)) g_.add_edge(i, j);
        build(s.without(i), o.with(i));
        return;
      }
    }
    if (s.empty()) return;

    auto t = solver_.tau_singletons({s, o});
    int t1 = -1;
    for (int i : s)
      if (t[i] && (t1 < 0 || *t[i] < t1)) t1 = *t[i];
    PlayerSet first;
    for (int i : s)
      if (t[i] && *t[i] == t1) first = first.with(i);
    if (first.empty()) throw InternalError("context without a player that ever joins");
    if (first != s) {
      divide(s, o, first);
      return;
    }
    const auto e = solver_.entry({s, o});
    if (e.op == PolicyNode::Op::kDivide) {
      divide(s, o, e.part);
    } else if (e.op == PolicyNode::Op::kDelete) {
      for (int j : s.without(e.player)) {
        g_.add_edge(e.player, j);
        g_.add_edge(j, e.player);
      }
      build(s.without(e.player), o.with(e.player));
    } else {
      throw InternalError("unexpected policy operation in graph construction");
    }
  }

 private:
  void divide(PlayerSet s, PlayerSet o, PlayerSet x) {
    for (int i : x)
      for (int j : s - x) g_.add_edge(i, j);
    build(x, o);
    build(s - x, o | x);
  }

  SyncSolver& solver_;
  const StageGame& game_;
  Digraph& g_;
};

}  // namespace

StageGame weakest_link_game(const Digraph& g) { return StageGame::weakest_link(g); }

int tau_weakest_link(const Digraph& g, PlayerSet x) {
  if (!x.subset_of(g.vertices())) throw ArgumentError("target outside the vertex set");
  if (x.empty()) return 1;
  return tree_depth_value(g, reach(g, x));
}

std::vector<PlayerSet> minimal_satisfying_sets(const StageGame& game, int i) {
  if (i < 0 || i >= game.n()) throw ArgumentError("player index out of range");
  return minimal_within(game, i, game.players().without(i));
}

bool is_sufficient(const StageGame& game, const Digraph& g, PlayerSet m) {
  for (int i : m)
    if (game.incentive(i, g.in(i)) <= 0) return false;
  return true;
}

bool is_minimal_sufficient(const StageGame& game, const Digraph& g, PlayerSet m) {
  if (!is_sufficient(game, g, m)) return false;
  for (int i : m)
    for (int j : g.in(i))
      if (game.incentive(i, g.in(i).without(j)) > 0) return false;
  return true;
}

SufficientGraph sufficient_graph_on_survivors(SyncSolver& solver) {
  const StageGame& game = solver.game();
  ReducedContext r = solver.reduce(Context::full(game.n()));
  PlayerSet live = game.players() - r.forced_zero;
  Digraph g(game.n());
  Builder(solver, g).build(live, PlayerSet());

  Digraph pruned(game.n());
  for (int i : live) {
    auto options = minimal_within(game, i, g.in(i));
    if (options.empty()) throw InternalError("constructed graph is not sufficient");
    PlayerSet pick = *std::min_element(options.begin(), options.end(), lex_less);
    for (int j : pick) pruned.add_edge(j, i);
  }
  SufficientGraph out;
  out.graph = std::move(pruned);
  out.minimal = is_minimal_sufficient(game, out.graph, live);
  return out;
}

SufficientGraph reduce_to_weakest_link(const StageGame& game) {
  SyncSolver solver(game);
  ReducedContext r = solver.reduce(Context::full(game.n()));
  if (!r.forced_zero.empty()) {
    throw PreconditionError("players " + to_string(r.forced_zero) +
                            " never play 1, so no weakest-link game matches");
  }
  return sufficient_graph_on_survivors(solver);
}

int tau_via_graphs(const StageGame& game, PlayerSet x, std::uint64_t cap) {
  if (!x.subset_of(game.players())) throw ArgumentError("target outside the player set");
  if (x.empty()) return 1;
  std::vector<std::vector<PlayerSet>> choices(game.n());
  std::uint64_t total = 1;
  for (int i = 0; i < game.n(); ++i) {
    choices[i] = minimal_satisfying_sets(game, i);
    if (choices[i].empty()) {
      throw PreconditionError("player " + std::to_string(i + 1) + " has no satisfying in-set");
    }
    total *= choices[i].size();
    if (total > cap) {
      throw ResourceError("minimal sufficient graph product exceeds cap " + std::to_string(cap) +
                          " (at least " + std::to_string(total) + " graphs)");
    }
  }
  return kernels::min_tree_depth_over_product(game.n(), choices, x);
}

}  // namespace coordsolve
