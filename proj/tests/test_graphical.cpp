#include <algorithm>

#include "coordsolve/core.hpp"
#include "coordsolve/errors.hpp"
#include "coordsolve/graphical.hpp"
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

TEST_CASE("weakest-link equilibria are the in-closed sets") {
  Rng rng(14);
  for (int run = 0; run < 40; ++run) {
    int n = 1 + static_cast<int>(rng() % 7);
    Digraph g = random_digraph(rng, n, 0.3);
    StageGame game = weakest_link_game(g);
    auto ne = ne_set(game);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      PlayerSet x(m);
      bool closed = true;
      for (int i = 0; i < n; ++i)
        if (x.contains(i) != g.in(i).subset_of(x)) closed = false;
      CHECK(closed == (std::find(ne.begin(), ne.end(), x) != ne.end()));
    }
  }
  CHECK(ne_set(weakest_link_game(star_graph(6))).front().empty());
  CHECK(ne_set(weakest_link_game(star_graph(6))).back() == PlayerSet::all(7));
}

TEST_CASE("tau on weakest-link graphs") {
  CHECK(tau_weakest_link(clique_fan_graph(), P({5, 6, 7, 8, 9})) == 4);
  CHECK(tau_weakest_link(star_graph(6), PlayerSet::all(7)) == 2);
  CHECK(tau_weakest_link(star_graph(6), PlayerSet()) == 1);
}

TEST_CASE("minimal satisfying sets") {
  StageGame e = linked_pairs_game();
  CHECK(minimal_satisfying_sets(e, 0) == std::vector<PlayerSet>{P({2})});
  CHECK(minimal_satisfying_sets(e, 2) == std::vector<PlayerSet>{P({2, 4})});
  StageGame agg = StageGame::aggregative({2, 2, 2, 2});
  CHECK(minimal_satisfying_sets(agg, 0) == std::vector<PlayerSet>{P({2, 3}), P({2, 4}), P({3, 4})});
  StageGame free = StageGame::weakest_link(Digraph(2));
  CHECK(minimal_satisfying_sets(free, 0) == std::vector<PlayerSet>{PlayerSet()});
}

TEST_CASE("reduction to a weakest-link game") {
  SufficientGraph tri = reduce_to_weakest_link(StageGame::weakest_link(triangles_graph()));
  CHECK(tri.minimal);
  CHECK(tau_weakest_link(tri.graph, PlayerSet::all(8)) == 3);

  SufficientGraph one = reduce_to_weakest_link(StageGame::aggregative({1, 1}));
  CHECK(tau_weakest_link(one.graph, PlayerSet::all(2)) == tau(StageGame::aggregative({1, 1}), PlayerSet::all(2)));

  Rng rng(15);
  for (int run = 0; run < 40; ++run) {
    int n = 1 + static_cast<int>(rng() % 6);
    Digraph g = random_digraph(rng, n, 0.35);
    SufficientGraph r = reduce_to_weakest_link(weakest_link_game(g));
    for (int i = 0; i < n; ++i)
      CHECK(tau_weakest_link(r.graph, PlayerSet::single(i)) == tau_weakest_link(g, PlayerSet::single(i)));
  }
}

TEST_CASE("tau equals the weakest-link value of the reduced graph") {
  Rng rng(16);
  for (int run = 0; run < 80; ++run) {
    int n = 1 + static_cast<int>(rng() % 5);
    StageGame g = random_monotone_game(rng, n, {run % 3 == 0, false, 0.5 + 0.1 * (run % 5)});
    SufficientGraph r = reduce_to_weakest_link(g);
    CHECK(is_sufficient(g, r.graph, g.players()));
    CHECK(r.minimal == is_minimal_sufficient(g, r.graph, g.players()));
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      PlayerSet x(m);
      CHECK(tau(g, x) == tau_weakest_link(r.graph, x));
    }
  }
}

TEST_CASE("every sufficient graph bounds tau from above") {
  Rng rng(17);
  for (int run = 0; run < 40; ++run) {
    int n = 2 + static_cast<int>(rng() % 4);
    StageGame g = random_monotone_game(rng, n, {false, false, 0.7});
    // a random sufficient graph: each in-set is a random satisfying set
    Digraph s(n);
    for (int i = 0; i < n; ++i) {
      auto opts = minimal_satisfying_sets(g, i);
      PlayerSet in = opts[rng() % opts.size()];
      for (int j = 0; j < n; ++j)
        if (j != i && rng() % 4 == 0) in = in.with(j);
      for (int j : in) s.add_edge(j, i);
    }
    REQUIRE(is_sufficient(g, s, g.players()));
    for (int i = 0; i < n; ++i) {
      PlayerSet x = PlayerSet::single(i);
      CHECK(tau(g, x) <= tau_weakest_link(s, x));
      CHECK(tau_via_graphs(g, x) == tau(g, x));
    }
  }
}

TEST_CASE("graph minimum on small cases") {
  StageGame agg = StageGame::aggregative({1, 1, 2});
  CHECK(tau_via_graphs(agg, PlayerSet::all(3)) == 2);
  StageGame tri = StageGame::weakest_link(triangles_graph());
  CHECK(tau_via_graphs(tri, PlayerSet::all(8)) == 3);
  StageGame big = StageGame::aggregative(std::vector<int>(12, 5));
  CHECK_THROWS_AS(tau_via_graphs(big, PlayerSet::all(12), 1000), ResourceError);
}

TEST_CASE("players who never join block the reduction") {
  StageGame stubborn = StageGame::tabulate(2, [](int i, PlayerSet y) -> Rational {
    if (!y.contains(i)) return 0;
    return i == 0 ? -1 : (y.contains(0) ? 1 : -1);
  });
  CHECK_THROWS_AS(reduce_to_weakest_link(stubborn), PreconditionError);
  SyncSolver s(stubborn);
  SufficientGraph g = sufficient_graph_on_survivors(s);
  CHECK(g.graph.in(0).empty());
  CHECK(g.graph.out(0).empty());
}
