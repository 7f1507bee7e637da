#include "coordsolve/design.hpp"

#include <algorithm>

#include "coordsolve/errors.hpp"
#include "coordsolve/kernels.hpp"
#include "coordsolve/sync.hpp"

namespace coordsolve {

int HorizonLedger::optimal_count() const {
  return 1 + static_cast<int>(std::count_if(candidates.begin(), candidates.end(),
                                            [](const auto& c) { return c.horizon >= 2; }));
}

int horizon_bound(int n) {
  int k = 0;
  while ((k + 1) * (k + 4) <= 2 * n) ++k;
  return 1 + k;
}

HorizonLedger candidate_horizons(const StageGame& game) {
  SyncSolver solver(game);
  auto tau = solver.tau_singletons(Context::full(game.n()));
  HorizonLedger out;
  out.bound = horizon_bound(game.n());
  PlayerSet prev;
  for (int t = 1; t <= game.n(); ++t) {
    PlayerSet cur;
    for (int i = 0; i < game.n(); ++i)
      if (tau[i] && *tau[i] <= t) cur = cur.with(i);
    if (cur != prev) out.candidates.push_back({t, cur});
    prev = cur;
  }
  if (out.optimal_count() > out.bound) {
    throw InternalError("horizon count " + std::to_string(out.optimal_count()) +
                        " exceeds bound " + std::to_string(out.bound));
  }
  return out;
}

std::vector<CentralityClass> weak_centrality(const StageGame& game) {
  SyncSolver solver(game);
  auto tau = solver.tau_singletons(Context::full(game.n()));
  std::vector<CentralityClass> out;
  for (int i = 0; i < game.n(); ++i) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& c) { return c.tau == tau[i]; });
    if (it == out.end()) {
      out.push_back({tau[i], PlayerSet::single(i)});
    } else {
      it->players = it->players.with(i);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.tau.has_value() != b.tau.has_value()) return a.tau.has_value();
    return a.tau < b.tau;
  });
  return out;
}

std::vector<std::vector<bool>> strong_centrality(const StageGame& game) {
  const int n = game.n();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, true));
  for (PlayerSet x : kernels::enumerate_ne(game, Context::full(n)))
    for (int j : x)
      for (int i = 0; i < n; ++i)
        if (!x.contains(i)) m[i][j] = false;
  return m;
}

bool InterventionReport::bounds_hold() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.holds(); });
}

InterventionReport intervention(const StageGame& game, PlayerSet subsidized, int horizon) {
  if (!subsidized.subset_of(game.players())) throw ArgumentError("subsidized players out of range");
  SyncSolver solver(game);
  const PlayerSet all = game.players();
  InterventionReport out;
  out.gain = solver.phi({all - subsidized, subsidized}, horizon) - solver.phi(horizon);

  auto full = solver.tau({all, PlayerSet()}, all);
  if (!full) return out;
  for (int i = 0; i < game.n(); ++i) {
    PlayerSet rest = all.without(i);
    auto lower = solver.tau({rest, PlayerSet::single(i)}, rest);
    if (!lower) continue;
    out.bounds.push_back({i, *lower, *full});
  }
  return out;
}

}  // namespace coordsolve
