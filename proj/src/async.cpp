#include "coordsolve/async.hpp"

#include "coordsolve/core.hpp"
#include "coordsolve/errors.hpp"
#include "coordsolve/graphical.hpp"
#include "coordsolve/sync.hpp"

namespace coordsolve {
namespace {

constexpr int kMaxCell = 20;

// Literal iterated strict dominance among the players of `cell`, payoffs read
// from table[k][a] (k-th member of the cell, a = profile index within the
// cell). Returns the least survivor.
std::uint64_t least_survivor(int m, const std::vector<std::vector<Rational>>& table) {
  // alive[k] bit 0: action 0 alive, bit 1: action 1 alive.
  std::vector<int> alive(m, 3);
  const std::uint64_t count = std::uint64_t{1} << m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < m; ++k) {
      if (alive[k] != 3) continue;
      bool one_beats_zero = true;
      bool zero_beats_one = true;
      for (std::uint64_t a = 0; a < count && (one_beats_zero || zero_beats_one); ++a) {
        if (a >> k & 1) continue;
        bool ok = true;
        for (int l = 0; l < m && ok; ++l) {
          if (l == k) continue;
          int bit = (a >> l & 1) ? 2 : 1;
          ok = (alive[l] & bit) != 0;
        }
        if (!ok) continue;
        const Rational& u0 = table[k][a];
        const Rational& u1 = table[k][a | (std::uint64_t{1} << k)];
        if (!(u1 > u0)) one_beats_zero = false;
        if (!(u0 > u1)) zero_beats_one = false;
      }
      if (one_beats_zero) {
        alive[k] = 2;
        changed = true;
      } else if (zero_beats_one) {
        alive[k] = 1;
        changed = true;
      }
    }
  }
  std::uint64_t least = 0;
  for (int k = 0; k < m; ++k)
    if (!(alive[k] & 1)) least |= std::uint64_t{1} << k;
  return least;
}

}  // namespace

PlayerSet IesedsTable::replay() const {
  PlayerSet h;
  for (int t = 0; t < partition.horizon(); ++t) h |= least[t][extract(h, prefix[t])];
  return h;
}

IesedsTable ieseds(const StageGame& game, const Partition& p, IesedsOptions options) {
  p.validate(game.n());
  if (options.require_assumptions) require_assumption1(game, "ieseds");
  const int horizon = p.horizon();
  IesedsTable out;
  out.partition = p;
  out.prefix.resize(horizon);
  std::uint64_t cost = 0;
  PlayerSet before;
  for (int t = 0; t < horizon; ++t) {
    if (p.cells[t].size() > kMaxCell) {
      throw ResourceError("cell of " + std::to_string(p.cells[t].size()) + " players exceeds " +
                          std::to_string(kMaxCell));
    }
    out.prefix[t] = before;
    before |= p.cells[t];
    if (out.prefix[t].size() >= 40) throw ResourceError("history count overflows");
    cost += (std::uint64_t{1} << out.prefix[t].size()) * std::max(1, p.cells[t].size());
    if (cost > options.budget) {
      throw ResourceError("ieseds needs more than " + std::to_string(options.budget) +
                          " history evaluations");
    }
  }
  out.least.resize(horizon);
  out.continuation.resize(horizon);
  for (int t = horizon - 1; t >= 0; --t) {
    const PlayerSet cell = p.cells[t];
    const PlayerSet pre = out.prefix[t];
    const int m = cell.size();
    const std::vector<int> members = cell.members();
    const std::int64_t histories = std::int64_t{1} << pre.size();
    auto& least = out.least[t];
    auto& cont = out.continuation[t];
    least.assign(histories, PlayerSet());
    cont.assign(histories, PlayerSet());
    const std::vector<PlayerSet>* next = t + 1 < horizon ? &out.continuation[t + 1] : nullptr;
    const PlayerSet next_pre = pre | cell;
    auto later = [&](PlayerSet h) { return next ? (*next)[extract(h, next_pre)] : PlayerSet(); };

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t hi = 0; hi < histories; ++hi) {
      const PlayerSet h = deposit(static_cast<std::uint64_t>(hi), pre);
      const std::uint64_t profiles = std::uint64_t{1} << m;
      std::vector<std::vector<Rational>> table(m, std::vector<Rational>(profiles));
      for (std::uint64_t a = 0; a < profiles; ++a) {
        PlayerSet played = h | deposit(a, cell);
        PlayerSet outcome = played | later(played);
        for (int k = 0; k < m; ++k) table[k][a] = game.payoff(members[k], outcome);
      }
      PlayerSet pick = deposit(least_survivor(m, table), cell);
      least[hi] = pick;
      cont[hi] = pick | later(h | pick);
    }
  }
  out.profile = out.continuation[0][0];
  return out;
}

PlayerSet m_of_t(const StageGame& game, int horizon) { return phi(game, horizon); }

Design design(const StageGame& game, int horizon, IesedsOptions options) {
  if (horizon < 1) throw ArgumentError("horizon must be positive");
  SyncOptions sync;
  sync.require_assumptions = options.require_assumptions;
  SyncSolver solver(game, sync);
  Design out;
  out.achieved = solver.phi(horizon);
  out.graph = sufficient_graph_on_survivors(solver).graph.restricted(out.achieved);
  out.partition = partition_from_treedepth(out.graph, horizon, out.achieved);
  out.partition.cells.back() |= game.players() - out.achieved;
  PlayerSet confirmed = ieseds(game, out.partition, options).profile;
  if (confirmed != out.achieved) {
    throw InternalError("designed partition yields " + to_string(confirmed) + " instead of " +
                        to_string(out.achieved));
  }
  return out;
}

bool check_sufficient_feasible(const StageGame& game, const Digraph& g, const Partition& p,
                               PlayerSet m) {
  for (int i : m)
    if (game.incentive(i, g.in(i) & m) <= 0) return false;
  return check_feasible_partition(g, p, m);
}

}  // namespace coordsolve
