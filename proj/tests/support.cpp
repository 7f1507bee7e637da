#include "support.hpp"

#include <algorithm>
#include <unordered_map>

#include "coordsolve/core.hpp"
#include "coordsolve/oracle.hpp"

namespace coordsolve::testing {
namespace {

int bit(PlayerSet y, int i) { return y.contains(i) ? 1 : 0; }

Rational two_min(PlayerSet y, std::initializer_list<int> ids) {
  for (int i : ids)
    if (!y.contains(i)) return 0;
  return 2;
}

// A few random generators inside `ground`; the family is their upward closure.
std::vector<PlayerSet> random_generators(Rng& rng, PlayerSet ground, bool allow_empty, double density) {
  std::vector<int> members = ground.members();
  std::bernoulli_distribution pick(density);
  std::vector<PlayerSet> gens;
  for (int k = 1 + static_cast<int>(rng() % 2); k > 0; --k) {
    PlayerSet g;
    for (int v : members)
      if (pick(rng)) g = g.with(v);
    if (g.empty() && !allow_empty && !members.empty())
      g = PlayerSet::single(members[rng() % members.size()]);
    gens.push_back(g);
  }
  return gens;
}

bool covers(const std::vector<PlayerSet>& gens, PlayerSet y) {
  return std::any_of(gens.begin(), gens.end(), [&](PlayerSet g) { return g.subset_of(y); });
}

}  // namespace

StageGame mixed_pair_game() {
  // mask bit 0 is player 1
  return StageGame::table(2, {{1, 0, 3, 2}, {1, 2, 0, 3}});
}

StageGame free_rider_game() {
  return StageGame::tabulate(3, [](int i, PlayerSet y) -> Rational {
    if (i < 2) return 2 * bit(y, 2) - bit(y, i);
    return bit(y, 2) * (2 * std::max(bit(y, 0), bit(y, 1)) - 1);
  });
}

StageGame linked_pairs_game() {
  return StageGame::tabulate(4, [](int i, PlayerSet y) -> Rational {
    int a = bit(y, i);
    switch (i) {
      case 0: return a * (2 * bit(y, 1) - 1);
      case 1: return a * (2 * bit(y, 0) - 1);
      case 2: return a * (2 * bit(y, 1) * bit(y, 3) - 1);
      default: return a * (2 * bit(y, 0) * bit(y, 2) - 1);
    }
  });
}

StageGame tie_break_game() {
  return StageGame::tabulate(8, [](int i, PlayerSet y) -> Rational {
    auto a = [&](int k) { return bit(y, k); };
    int left = a(2) * a(3) * a(4), right = a(5) * a(6) * a(7);
    switch (i) {
      case 0: return std::max(a(0) * (4 * a(1) - 3 + left + right), 2 * left);
      case 1: return std::max(a(1) * (4 * a(0) - 3 + left + right), 2 * left);
      case 2: return a(2) * (2 * a(3) * a(4) - 1);
      case 3: return a(3) * (2 * a(2) * a(4) - 1);
      case 4: return a(4) * (2 * a(2) * a(3) - 1);
      case 5: return a(5) * (2 * a(6) * a(7) - 1);
      case 6: return a(6) * (2 * a(5) * a(7) - 1);
      default: return a(7) * (2 * a(5) * a(6) - 1);
    }
  });
}

StageGame hub_design_game() {
  return StageGame::tabulate(7, [](int i, PlayerSet y) -> Rational {
    auto a = [&](int k) { return bit(y, k); };
    switch (i) {
      case 0: return a(0) * (2 * a(1) * a(2) - 1) + 2 * a(4);
      case 1: return a(1) * (2 * a(0) - 1);
      case 2: return a(2) * (2 * a(0) - 1);
      case 3: return a(3) * (2 * a(0) * a(4) * a(5) * a(6) - 1);
      case 4: return a(4) * (2 * std::max(a(3), a(5) * a(6)) - 1);
      case 5: return a(5) * (2 * std::max(a(3), a(4) * a(6)) - 1);
      default: return a(6) * (2 * std::max(a(3), a(4) * a(5)) - 1);
    }
  });
}

StageGame spillover_base_game() {
  return StageGame::tabulate(5, [](int i, PlayerSet y) -> Rational {
    if (i < 3) return two_min(y, {0, 1, 2}) - bit(y, i);
    if (i == 3) return two_min(y, {0, 3, 4}) - bit(y, 3);
    return two_min(y, {3, 4}) - bit(y, 4);
  });
}

StageGame spillover_perturbed_game() {
  StageGame base = spillover_base_game();
  return StageGame::tabulate(5, [&](int i, PlayerSet y) -> Rational {
    Rational u = base.payoff(i, y);
    return i == 0 ? u + Rational(bit(y, 3), 2) : u;
  });
}

Digraph bidirected(int n, const std::vector<std::pair<int, int>>& pairs) {
  Digraph g(n);
  for (auto [a, b] : pairs) {
    g.add_edge(a, b);
    g.add_edge(b, a);
  }
  return g;
}

Digraph triangles_graph() {
  Digraph g = bidirected(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}});
  g.add_edge(2, 6);
  g.add_edge(5, 6);
  return g;
}

Digraph clique_fan_graph() {
  Digraph g = bidirected(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (int v = 4; v < 9; ++v) g.add_edge(0, v);
  return g;
}

Digraph star_graph(int leaves) {
  std::vector<std::pair<int, int>> spokes;
  for (int v = 1; v <= leaves; ++v) spokes.emplace_back(0, v);
  return bidirected(leaves + 1, spokes);
}

Digraph cycle_graph(int n) {
  Digraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Digraph disjoint_cliques(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  Digraph g(n);
  int base = 0;
  for (int s : sizes) {
    for (int a = base; a < base + s; ++a)
      for (int b = base; b < base + s; ++b)
        if (a != b) g.add_edge(a, b);
    base += s;
  }
  return g;
}

StageGame random_monotone_game(Rng& rng, int n, GameShape shape) {
  std::vector<std::vector<std::vector<PlayerSet>>> families(n);
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) {
    PlayerSet others = PlayerSet::all(n).without(i);
    int k = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < k; ++f) families[i].push_back(random_generators(rng, others, false, shape.density));
    s[i] = static_cast<int>(rng() % k);
    if (shape.allow_dominant && rng() % 4 == 0) {
      families[i][0] = {PlayerSet()};
      s[i] = 0;
    } else if (shape.allow_stubborn && rng() % 5 == 0) {
      s[i] = k;
    }
  }
  return StageGame::tabulate(n, [&](int i, PlayerSet y) -> Rational {
    if (!y.contains(i)) return 0;
    int hit = 0;
    for (const auto& gens : families[i]) hit += covers(gens, y.without(i));
    return 2 * hit - (2 * s[i] + 1);
  });
}

StageGame random_filtered_game(Rng& rng, int n, GameShape shape, int tries) {
  for (int t = 0; t < tries; ++t) {
    StageGame base = random_monotone_game(rng, n, shape);
    std::vector<std::vector<PlayerSet>> spill(n);
    for (int i = 0; i < n; ++i)
      spill[i] = random_generators(rng, PlayerSet::all(n).without(i), false, 0.5);
    StageGame g = StageGame::tabulate(n, [&](int i, PlayerSet y) -> Rational {
      return base.payoff(i, y) + (covers(spill[i], y.without(i)) ? 1 : 0);
    });
    if (check_assumptions(g).assumption1()) return g;
  }
  return random_monotone_game(rng, n, shape);
}

Digraph random_digraph(Rng& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Digraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && edge(rng)) g.add_edge(a, b);
  return g;
}

std::vector<int> random_thresholds(Rng& rng, int n) {
  std::uniform_int_distribution<int> c(1, n - 1);
  std::vector<int> out(n);
  for (int& x : out) x = c(rng);
  std::sort(out.begin(), out.end());
  return out;
}

int cycle_rank(const Digraph& g, PlayerSet within) {
  std::unordered_map<PlayerSet::Mask, int> memo;
  auto closure = [&](PlayerSet w) {
    // reach[v]: vertices reachable from v inside w (Floyd-Warshall on bits)
    std::vector<PlayerSet> r(g.n());
    for (int v : w) r[v] = g.out(v) & w;
    for (int k : w)
      for (int v : w)
        if (r[v].contains(k)) r[v] |= r[k];
    return r;
  };
  auto rank = [&](auto&& self, PlayerSet w) -> int {
    if (w.empty()) return 0;
    if (auto it = memo.find(w.bits()); it != memo.end()) return it->second;
    auto r = closure(w);
    int best = 0;
    PlayerSet seen;
    for (int v : w) {
      if (seen.contains(v)) continue;
      PlayerSet comp = PlayerSet::single(v);
      for (int u : w)
        if (r[v].contains(u) && r[u].contains(v)) comp = comp.with(u);
      seen |= comp;
      if (comp.size() == 1) continue;
      if (comp == w) {
        int m = INT32_MAX;
        for (int u : comp) m = std::min(m, self(self, w.without(u)));
        best = std::max(best, 1 + m);
      } else {
        best = std::max(best, self(self, comp));
      }
    }
    memo[w.bits()] = best;
    return best;
  };
  return rank(rank, within);
}

int oracle_tau(const StageGame& game, PlayerSet x, int max_t) {
  for (int t = 1; t <= max_t; ++t) {
    auto r = enumerate_equilibria(game, Schedule::sync(t), EquilibriumMode::kMspne);
    bool all = std::all_of(r.outcomes.begin(), r.outcomes.end(),
                           [&](PlayerSet o) { return x.subset_of(o); });
    if (all) return t;
  }
  return -1;
}

}  // namespace coordsolve::testing
