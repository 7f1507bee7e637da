#include "coordsolve/reference.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

#include "coordsolve/errors.hpp"

namespace coordsolve::reference {

std::vector<PlayerSet> ne_set(const StageGame& game, Context ctx) {
  ctx.validate(game.n());
  std::vector<PlayerSet> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << ctx.active.size()); ++k) {
    PlayerSet x = deposit(k, ctx.active);
    bool ok = true;
    for (int i : ctx.active) {
      Rational stay = game.payoff(i, x | ctx.ones);
      Rational flip = game.payoff(i, (x ^ PlayerSet::single(i)) | ctx.ones);
      if (flip > stay) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<PlayerSet> sss(const StageGame& game, Context ctx, bool require_ne) {
  ctx.validate(game.n());
  std::vector<PlayerSet> ne;
  if (require_ne) ne = reference::ne_set(game, ctx);
  std::vector<PlayerSet> out;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << ctx.active.size()); ++k) {
    PlayerSet x = deposit(k, ctx.active);
    PlayerSet y = x | ctx.ones;
    bool ok = true;
    for (int i : x)
      if (!(game.payoff(i, y) > game.payoff(i, y.without(i)))) ok = false;
    if (ok && require_ne) ok = std::find(ne.begin(), ne.end(), x) != ne.end();
    if (ok) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), card_lex_less);
  return out;
}

AssumptionReport check_assumptions(const StageGame& game) {
  const int n = game.n();
  AssumptionReport r;
  for (int i = 0; i < n; ++i) {
    const PlayerSet others = game.players().without(i);
    auto u0 = [&](PlayerSet y) { return game.payoff(i, y); };
    auto u1 = [&](PlayerSet y) { return game.payoff(i, y.with(i)); };
    bool sc = true, mono = true, tie = true, dev = true;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t ka = 0; ka < count; ++ka) {
      PlayerSet a = deposit(ka, others);
      for (std::uint64_t kb = 0; kb < count; ++kb) {
        PlayerSet b = deposit(kb, others);
        if (!a.proper_subset_of(b)) continue;
        Rational da = u1(a) - u0(a), db = u1(b) - u0(b);
        Rational sa = std::max(u0(a), u1(a)), sb = std::max(u0(b), u1(b));
        if (sc && ((da >= 0 && db < 0) || (da > 0 && db <= 0))) {
          sc = false;
          r.witnesses.push_back({kSingleCrossing, i, a, b});
        }
        if (mono && sb < sa) {
          mono = false;
          r.witnesses.push_back({kCommonInterests, i, a, b});
        }
        if (tie && u0(a) >= u1(a) && u1(b) >= u0(b) && !(sb > sa)) {
          tie = false;
          r.witnesses.push_back({kTieBreak, i, a, b});
        }
        if (dev && ((u1(b) >= u0(a) && u1(b) < u0(b)) || (u1(b) > u0(a) && u1(b) <= u0(b)))) {
          dev = false;
          r.witnesses.push_back({kDeviationProof, i, a, b});
        }
      }
    }
    if (!(u1(others) > u0(others)) || !(u0(PlayerSet()) > u1(PlayerSet()))) {
      r.nondegenerate = false;
      r.witnesses.push_back({kNondegenerate, i, PlayerSet(), others});
    }
    r.single_crossing &= sc;
    r.tie_break &= tie;
    r.common_interests &= mono && tie;
    r.deviation_proof &= dev;
  }
  return r;
}

IesdsResult iesds(const StageGame& game, Context ctx) {
  ctx.validate(game.n());
  PlayerSet alive0 = ctx.active, alive1 = ctx.active;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : ctx.active) {
      if (!alive0.contains(i) || !alive1.contains(i)) continue;
      // Opponents with both actions alive vary; the rest sit at their survivor.
      PlayerSet varying = (alive0 & alive1).without(i);
      PlayerSet fixed_one = (ctx.active - alive0).without(i);
      bool one_wins = true, zero_wins = true;
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << varying.size()); ++k) {
        PlayerSet y = ctx.ones | fixed_one | deposit(k, varying);
        Rational d = game.payoff(i, y.with(i)) - game.payoff(i, y);
        if (!(d > 0)) one_wins = false;
        if (!(d < 0)) zero_wins = false;
      }
      if (one_wins) {
        alive0 = alive0.without(i);
        changed = true;
      } else if (zero_wins) {
        alive1 = alive1.without(i);
        changed = true;
      }
    }
  }
  return {ctx.ones | (ctx.active - alive0), ctx.ones | alive1};
}

int min_tree_depth_over_product(int n, const std::vector<std::vector<PlayerSet>>& choices,
                                PlayerSet x) {
  int best = INT_MAX;
  std::vector<size_t> pick(n, 0);
  while (true) {
    Digraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j : choices[i][pick[i]]) g.add_edge(j, i);
    best = std::min(best, tree_depth_value(g, reach(g, x)));
    int i = 0;
    while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return best;
}

namespace {

PlayerSet least_survivor(const StageGame& game, PlayerSet cell,
                         const std::function<PlayerSet(PlayerSet)>& outcome) {
  PlayerSet alive0 = cell, alive1 = cell;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : cell) {
      if (!alive0.contains(i) || !alive1.contains(i)) continue;
      PlayerSet varying = (alive0 & alive1).without(i);
      PlayerSet fixed_one = (cell - alive0).without(i);
      bool one_wins = true, zero_wins = true;
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << varying.size()); ++k) {
        PlayerSet a = fixed_one | deposit(k, varying);
        Rational d = game.payoff(i, outcome(a.with(i))) - game.payoff(i, outcome(a));
        if (!(d > 0)) one_wins = false;
        if (!(d < 0)) zero_wins = false;
      }
      if (one_wins) {
        alive0 = alive0.without(i);
        changed = true;
      } else if (zero_wins) {
        alive1 = alive1.without(i);
        changed = true;
      }
    }
  }
  return cell - alive0;
}

}  // namespace

PlayerSet ieseds_profile(const StageGame& game, const Partition& p) {
  p.validate(game.n());
  std::map<std::pair<int, PlayerSet::Mask>, PlayerSet> memo;
  std::function<PlayerSet(int, PlayerSet)> cont = [&](int t, PlayerSet h) -> PlayerSet {
    if (t == p.horizon()) return PlayerSet();
    auto key = std::make_pair(t, h.bits());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto outcome = [&](PlayerSet a) { return h | a | cont(t + 1, h | a); };
    PlayerSet pick = least_survivor(game, p.cells[t], outcome);
    PlayerSet v = pick | cont(t + 1, h | pick);
    memo[key] = v;
    return v;
  };
  return cont(0, PlayerSet());
}

}  // namespace coordsolve::reference
