#include <cmath>

#include "coordsolve/design.hpp"
#include "coordsolve/errors.hpp"
#include "coordsolve/sync.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coordsolve;
using namespace coordsolve::testing;

namespace {
PlayerSet P(std::initializer_list<int> one_based) {
  PlayerSet s;
  for (int i : one_based) s = s.with(i - 1);
  return s;
}
}  // namespace

TEST_CASE("horizon bound formula") {
  // 1 + floor(sqrt(2n + 9/4) - 3/2), checked against floating point
  for (int n = 1; n <= 200; ++n) {
    int want = 1 + static_cast<int>(std::floor(std::sqrt(2.0 * n + 2.25) - 1.5 + 1e-12));
    CHECK(horizon_bound(n) == want);
  }
  CHECK(horizon_bound(5) == 3);
  CHECK(horizon_bound(9) == 4);
}

TEST_CASE("candidate horizons") {
  HorizonLedger c = candidate_horizons(StageGame::weakest_link(disjoint_cliques({2, 3})));
  REQUIRE(c.candidates.size() == 2);
  CHECK(c.candidates[0] == HorizonCandidate{2, P({1, 2})});
  CHECK(c.candidates[1] == HorizonCandidate{3, PlayerSet::all(5)});
  CHECK(c.bound == 3);
  CHECK(c.optimal_count() == 3);

  HorizonLedger big = candidate_horizons(StageGame::weakest_link(disjoint_cliques({2, 3, 4})));
  CHECK(big.candidates.size() == 3);
  CHECK(big.optimal_count() == big.bound);

  for (int k = 1; k <= 4; ++k) {
    HorizonLedger h = candidate_horizons(StageGame::aggregative(std::vector<int>(6, k)));
    REQUIRE(h.candidates.size() == 1);
    CHECK(h.candidates[0].horizon == k + 1);
  }
  HorizonLedger flat = candidate_horizons(StageGame::weakest_link(Digraph(3)));
  REQUIRE(flat.candidates.size() == 1);
  CHECK(flat.candidates[0].horizon == 1);

  Rng rng(22);
  for (int run = 0; run < 100; ++run) {
    int n = 1 + static_cast<int>(rng() % 8);
    StageGame g = random_monotone_game(rng, n, {run % 3 == 0, run % 4 == 0, 0.85});
    HorizonLedger h = candidate_horizons(g);
    CHECK(static_cast<int>(h.candidates.size()) <= h.bound);
    for (const auto& x : h.candidates) CHECK(phi(g, x.horizon) == x.phi);
  }
}

TEST_CASE("weak centrality") {
  auto fan = weak_centrality(StageGame::weakest_link(clique_fan_graph()));
  REQUIRE(fan.size() == 1);
  CHECK(fan[0].tau == 4);
  CHECK(fan[0].players == PlayerSet::all(9));

  auto two = weak_centrality(StageGame::weakest_link(disjoint_cliques({2, 3})));
  REQUIRE(two.size() == 2);
  CHECK(two[0].tau == 2);
  CHECK(two[0].players == P({1, 2}));
  CHECK(two[1].tau == 3);

  auto lone = weak_centrality(StageGame::weakest_link(Digraph(1)));
  CHECK(lone.size() == 1);
}

TEST_CASE("strong centrality") {
  auto e = strong_centrality(linked_pairs_game());
  CHECK(e[0][2]);
  CHECK(e[1][3]);
  CHECK_FALSE(e[2][0]);

  auto tri = strong_centrality(StageGame::weakest_link(triangles_graph()));
  CHECK_FALSE(tri[0][3]);
  CHECK_FALSE(tri[3][0]);
  CHECK(tri[0][6]);
  CHECK(tri[3][7]);
  CHECK_FALSE(tri[6][0]);

  auto k = strong_centrality(StageGame::weakest_link(disjoint_cliques({4})));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(k[i][j]);
}

TEST_CASE("strong centrality implies weak") {
  Rng rng(23);
  for (int run = 0; run < 60; ++run) {
    int n = 2 + static_cast<int>(rng() % 5);
    StageGame g = random_monotone_game(rng, n, {run % 3 == 0, false, 0.8});
    auto s = strong_centrality(g);
    SyncSolver solver(g);
    auto t = solver.tau_singletons(Context::full(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && s[i][j]) CHECK(t[i].value() <= t[j].value());
  }
}

TEST_CASE("interventions") {
  StageGame fan = StageGame::weakest_link(clique_fan_graph());
  InterventionReport r = intervention(fan, P({1}), 1);
  CHECK(r.gain == P({5, 6, 7, 8, 9}));
  CHECK(r.bounds_hold());
  CHECK(intervention(fan, PlayerSet(), 2).gain.empty());
  // subsidized players are not counted as gained
  CHECK(intervention(fan, fan.players(), 2).gain.empty());

  Rng rng(24);
  for (int run = 0; run < 60; ++run) {
    int n = 2 + static_cast<int>(rng() % 5);
    StageGame g = random_monotone_game(rng, n, {false, false, 0.5 + 0.1 * (run % 5)});
    InterventionReport rep = intervention(g, PlayerSet::single(static_cast<int>(rng() % n)), 1 + run % 3);
    CHECK(rep.bounds.size() == static_cast<size_t>(n));
    CHECK(rep.bounds_hold());
  }
}
