#include "coordsolve/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <climits>

#include "coordsolve/errors.hpp"

namespace coordsolve::kernels {
namespace {

constexpr int kMaxSweepPlayers = 20;

struct PlayerFindings {
  bool single_crossing = true;
  bool monotone = true;
  bool tie_break = true;
  bool deviation_proof = true;
  bool nondegenerate = true;
  std::vector<Witness> witnesses;
};

PlayerFindings sweep_player(const StageGame& game, int i) {
  const int n = game.n();
  const PlayerSet others = game.players().without(i);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  PlayerFindings f;

  std::vector<Rational> u0(count), u1(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    PlayerSet y = deposit(k, others);
    u0[k] = game.payoff(i, y);
    u1[k] = game.payoff(i, y.with(i));
  }
  auto record = [&](const char* cond, std::uint64_t lo, std::uint64_t hi) {
    f.witnesses.push_back({cond, i, deposit(lo, others), deposit(hi, others)});
  };

  // Covering pairs suffice for single-crossing, the monotone indirect utility
  // and the tie-break: each composes along a chain a ⊂ ... ⊂ a'.
  for (std::uint64_t a = 0; a < count; ++a) {
    for (int bit = 0; bit < n - 1; ++bit) {
      std::uint64_t b = a | (std::uint64_t{1} << bit);
      if (b == a) continue;
      Rational da = u1[a] - u0[a];
      Rational db = u1[b] - u0[b];
      if (f.single_crossing && ((da >= 0 && db < 0) || (da > 0 && db <= 0))) {
        f.single_crossing = false;
        record(kSingleCrossing, a, b);
      }
      Rational sa = std::max(u0[a], u1[a]);
      Rational sb = std::max(u0[b], u1[b]);
      if (f.monotone && sb < sa) {
        f.monotone = false;
        record(kCommonInterests, a, b);
      }
      if (f.tie_break && u0[a] >= u1[a] && u1[b] >= u0[b] && sb <= sa) {
        f.tie_break = false;
        record(kTieBreak, a, b);
      }
    }
  }

  // Deviation-proof: compare u_i(1,a') with the smallest u_i(0,a) over a ⊊ a'.
  std::vector<std::uint64_t> arg(count);
  std::vector<Rational> best(u0);
  for (std::uint64_t k = 0; k < count; ++k) arg[k] = k;
  for (int bit = 0; bit < n - 1; ++bit) {
    for (std::uint64_t k = 0; k < count; ++k) {
      if (!(k >> bit & 1)) continue;
      std::uint64_t sub = k & ~(std::uint64_t{1} << bit);
      if (best[sub] < best[k]) {
        best[k] = best[sub];
        arg[k] = arg[sub];
      }
    }
  }
  for (std::uint64_t b = 1; b < count && f.deviation_proof; ++b) {
    std::uint64_t rest = b;
    std::uint64_t low_arg = 0;
    Rational low;
    bool have = false;
    while (rest != 0) {
      std::uint64_t bit = rest & (~rest + 1);
      rest &= rest - 1;
      std::uint64_t sub = b & ~bit;
      if (!have || best[sub] < low) {
        low = best[sub];
        low_arg = arg[sub];
        have = true;
      }
    }
    if ((u1[b] >= low && u1[b] < u0[b]) || (u1[b] > low && u1[b] <= u0[b])) {
      f.deviation_proof = false;
      record(kDeviationProof, low_arg, b);
    }
  }

  const std::uint64_t top = count - 1;
  if (u1[top] <= u0[top] || u0[0] <= u1[0]) {
    f.nondegenerate = false;
    record(kNondegenerate, 0, top);
  }
  return f;
}

}  // namespace

AssumptionReport sweep_assumptions(const StageGame& game) {
  const int n = game.n();
  if (n > kMaxSweepPlayers) {
    throw ResourceError("assumption sweep limited to " + std::to_string(kMaxSweepPlayers) + " players");
  }
  std::vector<PlayerFindings> findings(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) findings[i] = sweep_player(game, i);

  AssumptionReport r;
  for (const auto& f : findings) {
    r.single_crossing &= f.single_crossing;
    r.tie_break &= f.tie_break;
    r.common_interests &= f.monotone && f.tie_break;
    r.deviation_proof &= f.deviation_proof;
    r.nondegenerate &= f.nondegenerate;
    r.witnesses.insert(r.witnesses.end(), f.witnesses.begin(), f.witnesses.end());
  }
  return r;
}

std::vector<PlayerSet> enumerate_ne(const StageGame& game, Context ctx) {
  const std::uint64_t count = std::uint64_t{1} << ctx.active.size();
  std::vector<PlayerSet> out;
#pragma omp parallel
  {
    std::vector<PlayerSet> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
      PlayerSet x = deposit(static_cast<std::uint64_t>(k), ctx.active);
      PlayerSet profile = x | ctx.ones;
      bool ok = true;
      for (int i : ctx.active) {
        int s = game.incentive(i, profile);
        if (x.contains(i) ? s < 0 : s > 0) {
          ok = false;
          break;
        }
      }
      if (ok) local.push_back(x);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PlayerSet> enumerate_sss(const StageGame& game, Context ctx, bool require_ne) {
  const std::uint64_t count = std::uint64_t{1} << ctx.active.size();
  std::vector<PlayerSet> out;
#pragma omp parallel
  {
    std::vector<PlayerSet> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(count); ++k) {
      PlayerSet x = deposit(static_cast<std::uint64_t>(k), ctx.active);
      PlayerSet profile = x | ctx.ones;
      bool ok = true;
      for (int i : x) {
        if (game.incentive(i, profile) <= 0) {
          ok = false;
          break;
        }
      }
      if (ok && require_ne) {
        for (int i : ctx.active - x) {
          if (game.incentive(i, profile) > 0) {
            ok = false;
            break;
          }
        }
      }
      if (ok) local.push_back(x);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(), card_lex_less);
  return out;
}

int min_tree_depth_over_product(int n, const std::vector<std::vector<PlayerSet>>& choices,
                                PlayerSet x) {
  std::uint64_t total = 1;
  for (const auto& c : choices) total *= c.size();
  int best = INT_MAX;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
    std::uint64_t rest = static_cast<std::uint64_t>(idx);
    Digraph g(n);
    for (int i = 0; i < n; ++i) {
      const auto& c = choices[i];
      PlayerSet in = c[rest % c.size()];
      rest /= c.size();
      for (int j : in) g.add_edge(j, i);
    }
    int v = tree_depth_value(g, reach(g, x));
    best = std::min(best, v);
  }
  return best;
}

}  // namespace coordsolve::kernels
