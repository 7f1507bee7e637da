#include "coordsolve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "coordsolve/core.hpp"
#include "coordsolve/errors.hpp"
#include "coordsolve/sync.hpp"

namespace coordsolve {
namespace {

// Histories of either schedule, stage by stage; stage `stages()` is terminal.
class HistoryTree {
 public:
  HistoryTree(int n, const Schedule& s, std::uint64_t cap) : n_(n), s_(s) {
    if (s.asynchronous) {
      s.partition.validate(n);
      PlayerSet before;
      for (PlayerSet c : s.partition.cells) {
        prefix_.push_back(before);
        before |= c;
      }
      prefix_.push_back(before);
    } else if (s.horizon < 1) {
      throw ArgumentError("horizon must be positive");
    }
    std::uint64_t total = 0;
    std::uint64_t decisions = 0;
    for (int t = 0; t <= stages(); ++t) {
      std::uint64_t c = 1;
      if (s.asynchronous) {
        if (prefix_[t].size() > 40) c = cap + 1;
        else c = std::uint64_t{1} << prefix_[t].size();
      } else {
        for (int i = 0; i < n && c <= cap; ++i) c *= static_cast<std::uint64_t>(t + 1);
      }
      count_.push_back(c);
      total += c;
      if (t < stages()) {
        int width = s.asynchronous ? s.partition.cells[t].size() : n;
        decisions += c * static_cast<std::uint64_t>(width);
      }
      if (total > cap) {
        throw ResourceError("history tree exceeds the node cap " + std::to_string(cap) +
                            " (strategy space 2^" + std::to_string(decisions) + ")");
      }
    }
    decisions_ = decisions;
  }

  int stages() const { return s_.stages(); }
  std::uint64_t count(int t) const { return count_[t]; }
  std::uint64_t decisions() const { return decisions_; }

  PlayerSet base(int t, std::uint64_t h) const {
    if (s_.asynchronous) return deposit(h, prefix_[t]);
    PlayerSet out;
    for (int i = 0; i < n_; ++i) {
      if (static_cast<int>(h % (t + 1)) < t) out = out.with(i);
      h /= (t + 1);
    }
    return out;
  }

  PlayerSet free(int t, std::uint64_t h) const {
    if (s_.asynchronous) return s_.partition.cells[t];
    return PlayerSet::all(n_) - base(t, h);
  }

  std::uint64_t child(int t, std::uint64_t h, PlayerSet a) const {
    if (s_.asynchronous) return extract(base(t, h) | a, prefix_[t + 1]);
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (int i = 0; i < n_; ++i) {
      std::uint64_t code = h % (t + 1);
      h /= (t + 1);
      if (static_cast<int>(code) == t) code = a.contains(i) ? t : t + 1;
      out += code * scale;
      scale *= (t + 2);
    }
    return out;
  }

  // h1 ≥ h2: every player switched weakly earlier (sync) or a superset played
  // 1 (async).
  bool geq(int t, std::uint64_t h1, std::uint64_t h2) const {
    if (s_.asynchronous) return base(t, h2).subset_of(base(t, h1));
    for (int i = 0; i < n_; ++i) {
      if (h1 % (t + 1) > h2 % (t + 1)) return false;
      h1 /= (t + 1);
      h2 /= (t + 1);
    }
    return true;
  }

  // The quantity that must grow with the history under monotone play.
  PlayerSet prof(int t, std::uint64_t h, PlayerSet a) const {
    return s_.asynchronous ? a : base(t, h) | a;
  }

  bool pledge_locked(int t, const OracleOptions& o) const {
    return o.no_early_pledge && !s_.asynchronous && t + 1 < stages();
  }

 private:
  int n_;
  const Schedule& s_;
  std::vector<PlayerSet> prefix_;
  std::vector<std::uint64_t> count_;
  std::uint64_t decisions_ = 0;
};

using Map = std::vector<PlayerSet::Mask>;

// Is A a one-shot-deviation-proof choice at (t, h), given the continuation
// outcome of every child?
template <class Cont>
bool deviation_proof(const StageGame& game, const HistoryTree& tree, int t, std::uint64_t h,
                     PlayerSet a, const Cont& cont) {
  PlayerSet o = cont(tree.child(t, h, a));
  for (int i : tree.free(t, h)) {
    PlayerSet o2 = cont(tree.child(t, h, a ^ PlayerSet::single(i)));
    if (game.payoff(i, o2) > game.payoff(i, o)) return false;
  }
  return true;
}

OracleResult spne(const StageGame& game, const HistoryTree& tree, const OracleOptions& opts) {
  const int stages = tree.stages();
  std::vector<std::vector<PlayerSet>> next(tree.count(stages));
  for (std::uint64_t h = 0; h < tree.count(stages); ++h) next[h] = {tree.base(stages, h)};

  for (int t = stages - 1; t >= 0; --t) {
    std::vector<std::vector<PlayerSet>> cur(tree.count(t));
    for (std::uint64_t h = 0; h < tree.count(t); ++h) {
      const PlayerSet fr = tree.free(t, h);
      const std::uint64_t choices = tree.pledge_locked(t, opts) ? 1 : std::uint64_t{1} << fr.size();
      // Worst continuation payoff for i in each deviation subgame.
      auto worst = [&](int i, std::uint64_t c) {
        Rational w = game.payoff(i, next[c].front());
        for (PlayerSet o : next[c]) w = std::min(w, game.payoff(i, o));
        return w;
      };
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << fr.size()); ++k) {
        std::uint64_t c = tree.child(t, h, deposit(k, fr));
        if (next[c].empty()) return {};
      }
      for (std::uint64_t k = 0; k < choices; ++k) {
        PlayerSet a = deposit(k, fr);
        const auto& here = next[tree.child(t, h, a)];
        for (PlayerSet o : here) {
          bool ok = true;
          for (int i : fr) {
            if (worst(i, tree.child(t, h, a ^ PlayerSet::single(i))) > game.payoff(i, o)) {
              ok = false;
              break;
            }
          }
          if (ok) cur[h].push_back(o);
        }
      }
      canonicalize(cur[h]);
    }
    next = std::move(cur);
  }
  return {next[0]};
}

OracleResult mspne(const StageGame& game, const HistoryTree& tree, const OracleOptions& opts) {
  const int stages = tree.stages();
  std::set<Map> maps;
  {
    Map terminal(tree.count(stages));
    for (std::uint64_t h = 0; h < terminal.size(); ++h) terminal[h] = tree.base(stages, h).bits();
    maps.insert(std::move(terminal));
  }
  std::uint64_t nodes = 0;

  for (int t = stages - 1; t >= 0; --t) {
    const std::uint64_t count = tree.count(t);
    // Comparable earlier histories, in index order.
    std::vector<std::vector<std::uint64_t>> above(count), below(count);
    for (std::uint64_t h = 0; h < count; ++h) {
      for (std::uint64_t g = 0; g < h; ++g) {
        if (tree.geq(t, h, g)) below[h].push_back(g);
        if (tree.geq(t, g, h)) above[h].push_back(g);
      }
    }
    std::set<Map> produced;
    for (const Map& m : maps) {
      auto cont = [&](std::uint64_t c) { return PlayerSet(m[c]); };
      std::vector<std::vector<PlayerSet>> valid(count);
      bool dead = false;
      for (std::uint64_t h = 0; h < count && !dead; ++h) {
        const PlayerSet fr = tree.free(t, h);
        const std::uint64_t choices = tree.pledge_locked(t, opts) ? 1 : std::uint64_t{1} << fr.size();
        for (std::uint64_t k = 0; k < choices; ++k) {
          PlayerSet a = deposit(k, fr);
          if (deviation_proof(game, tree, t, h, a, cont)) valid[h].push_back(a);
        }
        dead = valid[h].empty();
      }
      if (dead) continue;

      std::vector<PlayerSet> prof(count);
      Map out(count);
      std::function<void(std::uint64_t)> dfs = [&](std::uint64_t h) {
        if (++nodes > opts.node_cap) {
          throw ResourceError("monotone strategy search exceeds the node cap " +
                              std::to_string(opts.node_cap) + " (strategy space 2^" +
                              std::to_string(tree.decisions()) + ")");
        }
        if (h == count) {
          produced.insert(out);
          return;
        }
        for (PlayerSet a : valid[h]) {
          PlayerSet p = tree.prof(t, h, a);
          bool ok = std::all_of(below[h].begin(), below[h].end(),
                                [&](std::uint64_t g) { return prof[g].subset_of(p); }) &&
                    std::all_of(above[h].begin(), above[h].end(),
                                [&](std::uint64_t g) { return p.subset_of(prof[g]); });
          if (!ok) continue;
          prof[h] = p;
          out[h] = m[tree.child(t, h, a)];
          dfs(h + 1);
        }
      };
      dfs(0);
    }
    maps = std::move(produced);
    if (maps.empty()) break;
  }
  OracleResult r;
  for (const Map& m : maps) r.outcomes.push_back(PlayerSet(m[0]));
  canonicalize(r.outcomes);
  return r;
}

}  // namespace

Schedule Schedule::sync(int horizon) {
  Schedule s;
  s.horizon = horizon;
  return s;
}

Schedule Schedule::async(Partition p) {
  Schedule s;
  s.asynchronous = true;
  s.horizon = p.horizon();
  s.partition = std::move(p);
  return s;
}

std::vector<PlayerSet> OracleResult::minimal() const {
  std::vector<PlayerSet> out;
  for (PlayerSet x : outcomes) {
    bool has_below = std::any_of(outcomes.begin(), outcomes.end(),
                                 [&](PlayerSet y) { return y.proper_subset_of(x); });
    if (!has_below) out.push_back(x);
  }
  return out;
}

std::optional<PlayerSet> OracleResult::least() const {
  auto m = minimal();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

OracleResult enumerate_equilibria(const StageGame& game, const Schedule& schedule,
                                  EquilibriumMode mode, OracleOptions options) {
  HistoryTree tree(game.n(), schedule, options.node_cap);
  return mode == EquilibriumMode::kSpne ? spne(game, tree, options) : mspne(game, tree, options);
}

std::optional<PlayerSet> verify_mspne(const StageGame& game, const StrategyProfile& profile) {
  HistoryTree tree(game.n(), profile.schedule, kDefaultOracleNodeCap);
  const int stages = tree.stages();
  if (static_cast<int>(profile.actions.size()) != stages) return std::nullopt;
  std::vector<PlayerSet> next(tree.count(stages));
  for (std::uint64_t h = 0; h < next.size(); ++h) next[h] = tree.base(stages, h);
  for (int t = stages - 1; t >= 0; --t) {
    const auto& act = profile.actions[t];
    if (act.size() != tree.count(t)) return std::nullopt;
    std::vector<PlayerSet> cur(tree.count(t));
    auto cont = [&](std::uint64_t c) { return next[c]; };
    for (std::uint64_t h = 0; h < cur.size(); ++h) {
      if (!act[h].subset_of(tree.free(t, h))) return std::nullopt;
      if (!deviation_proof(game, tree, t, h, act[h], cont)) return std::nullopt;
      for (std::uint64_t g = 0; g < cur.size(); ++g) {
        if (tree.geq(t, h, g) && !tree.prof(t, g, act[g]).subset_of(tree.prof(t, h, act[h]))) {
          return std::nullopt;
        }
      }
      cur[h] = next[tree.child(t, h, act[h])];
    }
    next = std::move(cur);
  }
  return next[0];
}

StrategyProfile support_strategy(const StageGame& game, int horizon, PlayerSet x) {
  if (horizon < 1) throw ArgumentError("horizon must be positive");
  SyncSolver solver(game);
  auto outs = solver.outcomes(horizon);
  if (!std::binary_search(outs.begin(), outs.end(), x)) {
    throw PreconditionError(to_string(x) + " is not an equilibrium outcome at horizon " +
                            std::to_string(horizon));
  }
  StrategyProfile p;
  p.schedule = Schedule::sync(horizon);
  HistoryTree tree(game.n(), p.schedule, kDefaultOracleNodeCap);
  const PlayerSet all = game.players();
  p.actions.resize(horizon);
  for (int t = 0; t < horizon; ++t) p.actions[t].assign(tree.count(t), PlayerSet());

  const int last = horizon - 1;
  for (std::uint64_t h = 0; h < tree.count(last); ++h) {
    // Stage k's switchers, k = 0..last-1.
    std::vector<PlayerSet> switched(last);
    std::uint64_t rest = h;
    for (int i = 0; i < game.n(); ++i) {
      int code = static_cast<int>(rest % (last + 1));
      rest /= (last + 1);
      if (code < last) switched[code] = switched[code].with(i);
    }
    PlayerSet acc = x;
    for (int k = 1; k <= last; ++k) {
      PlayerSet q = acc | switched[k - 1];
      acc = q | solver.phi({all - q, q}, horizon - k);
    }
    p.actions[last][h] = acc & tree.free(last, h);
  }
  auto got = verify_mspne(game, p);
  if (!got || *got != x) {
    throw InternalError("conservative strategy for " + to_string(x) + " failed verification");
  }
  return p;
}

}  // namespace coordsolve
