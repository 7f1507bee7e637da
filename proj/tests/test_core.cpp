#include <algorithm>

#include "coordsolve/core.hpp"
#include "coordsolve/errors.hpp"
#include "coordsolve/kernels.hpp"
#include "coordsolve/reference.hpp"
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

TEST_CASE("player sets and exact rationals") {
  PlayerSet s = PlayerSet::of({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.lowest() == 0);
  CHECK(s.highest() == 5);
  CHECK(to_string(s) == "{1,3,6}");
  CHECK(deposit(extract(PlayerSet::of({2, 5}), s), s) == PlayerSet::of({2, 5}));
  CHECK(card_lex_less(PlayerSet::of({3}), PlayerSet::of({0, 1})));

  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("payoffs of the worked examples") {
  StageGame t1 = mixed_pair_game();
  CHECK(t1.payoff(0, P({1, 2})) == Rational(2));
  CHECK(t1.payoff(1, P({1, 2})) == Rational(3));
  CHECK(t1.payoff(0, PlayerSet()) == Rational(1));

  StageGame star = StageGame::weakest_link(star_graph(6));
  CHECK(star.n() == 7);
  CHECK(star.payoff(0, star.players()) == Rational(1));
  CHECK_THROWS_AS(star.payoff(7, PlayerSet()), ArgumentError);
}

TEST_CASE("assumption flags on the examples") {
  CHECK_FALSE(check_assumptions(mixed_pair_game()).deviation_proof);
  AssumptionReport ci = check_assumptions(tie_break_game());
  CHECK_FALSE(ci.tie_break);
  CHECK_FALSE(ci.common_interests);
  // As written, player 1's incentive falls from 1 to 0 when {3,4,5} join {2},
  // so single-crossing fails as well.
  CHECK_FALSE(ci.single_crossing);
  AssumptionReport wl = check_assumptions(StageGame::weakest_link(triangles_graph()));
  CHECK(wl.all());
  CHECK(wl.witnesses.empty());
}

TEST_CASE("every witness replays as a violation") {
  for (const StageGame& g : {mixed_pair_game(), free_rider_game(), tie_break_game(), hub_design_game()}) {
    AssumptionReport r = check_assumptions(g);
    for (const Witness& w : r.witnesses) CHECK(replays(g, w));
  }
  Rng rng(7);
  for (int run = 0; run < 40; ++run) {
    int n = 2 + static_cast<int>(rng() % 3);
    StageGame g = StageGame::tabulate(n, [&](int, PlayerSet) { return Rational(static_cast<int>(rng() % 5) - 2); });
    AssumptionReport r = check_assumptions(g);
    CHECK(r.single_crossing == (std::none_of(r.witnesses.begin(), r.witnesses.end(),
                                             [](const Witness& w) { return w.condition == kSingleCrossing; })));
    for (const Witness& w : r.witnesses) CHECK(replays(g, w));
  }
}

TEST_CASE("weakest-link games satisfy the assumptions") {
  Rng rng(11);
  for (int run = 0; run < 60; ++run) {
    int n = 1 + static_cast<int>(rng() % 7);
    StageGame g = StageGame::weakest_link(random_digraph(rng, n, 0.35));
    CHECK(check_assumptions(g).assumption1());
  }
}

TEST_CASE("equilibria of the examples") {
  StageGame tri = StageGame::weakest_link(triangles_graph());
  CHECK(least_ne(tri, Context::full(8)).empty());
  std::vector<PlayerSet> want{PlayerSet(), P({1, 2, 3}), P({4, 5, 6}), P({1, 2, 3, 4, 5, 6}), tri.players()};
  canonicalize(want);
  CHECK(ne_set(tri) == want);

  std::vector<PlayerSet> sse = sss(tri, Context::full(8), true);
  std::vector<PlayerSet> want_sse{P({1, 2, 3}), P({4, 5, 6}), P({1, 2, 3, 4, 5, 6}), tri.players()};
  std::sort(want_sse.begin(), want_sse.end(), card_lex_less);
  CHECK(sse == want_sse);

  StageGame e = linked_pairs_game();
  std::vector<PlayerSet> e_ne{PlayerSet(), P({1, 2}), e.players()};
  canonicalize(e_ne);
  CHECK(ne_set(e) == e_ne);
  CHECK(least_ne(e, {P({2, 3, 4}), P({1})}) == P({2}));
  IesdsResult r = iesds(e, Context::full(4));
  CHECK(r.least.empty());
  CHECK(r.greatest == e.players());

  StageGame agg = StageGame::aggregative({1, 1});
  CHECK(iesds(agg, Context::full(2)).least.empty());
  CHECK(iesds(agg, Context::full(2)).greatest == agg.players());

  StageGame cyc = StageGame::weakest_link(cycle_graph(8));
  CHECK(sss(cyc, Context::full(8), false) == std::vector<PlayerSet>{cyc.players()});

  StageGame lone = StageGame::tabulate(1, [](int, PlayerSet y) { return Rational(y.empty() ? 1 : 0); });
  CHECK(ne_set(lone) == std::vector<PlayerSet>{PlayerSet()});
  CHECK(least_ne(tri, {PlayerSet(), PlayerSet()}).empty());
  CHECK(sss(tri, {PlayerSet(), PlayerSet()}, false).empty());
}

TEST_CASE("dominant players are fixed by iesds") {
  StageGame g = StageGame::weakest_link(Digraph(3, {{0, 1}, {1, 0}}));  // player 3 has no in-neighbour
  IesdsResult r = iesds(g, Context::full(3));
  CHECK(r.least == P({3}));
  CHECK(r.greatest == g.players());
}

TEST_CASE("lattice and Pareto properties on random games") {
  Rng rng(3);
  for (int run = 0; run < 80; ++run) {
    int n = 1 + static_cast<int>(rng() % 6);
    StageGame g = random_filtered_game(rng, n, {run % 3 == 0, run % 4 == 0, 0.7});
    auto ne = ne_set(g);
    Context full = Context::full(n);
    CHECK(least_ne(g, full) == *std::min_element(ne.begin(), ne.end(), [](PlayerSet a, PlayerSet b) {
      return a.size() < b.size();
    }));
    for (PlayerSet x : ne) CHECK(least_ne(g, full).subset_of(x));
    for (PlayerSet x : ne)
      for (PlayerSet y : ne) {
        // join: the least equilibrium above X ∪ Y
        PlayerSet up = x | y;
        PlayerSet join = up | least_ne(g, {g.players() - up, up});
        CHECK(std::find(ne.begin(), ne.end(), join) != ne.end());
        if (x.proper_subset_of(y))
          for (int i = 0; i < n; ++i) CHECK(g.payoff(i, x) <= g.payoff(i, y));
      }
    if (n <= 5) {
      IesdsResult r = iesds(g, full);
      CHECK(r.least == least_ne(g, full));
      PlayerSet top;
      for (PlayerSet x : ne) top |= x;
      CHECK(r.greatest == top);
      CHECK(std::find(ne.begin(), ne.end(), top) != ne.end());
    }
  }
}

TEST_CASE("kernels agree with the serial reference") {
  Rng rng(5);
  for (int run = 0; run < 60; ++run) {
    int n = 1 + static_cast<int>(rng() % 7);
    StageGame g = run % 2 ? random_monotone_game(rng, n, {true, true, 0.6})
                          : StageGame::tabulate(n, [&](int, PlayerSet) { return Rational(static_cast<int>(rng() % 7) - 3); });
    PlayerSet ones;
    for (int i = 0; i < n; ++i)
      if (rng() % 4 == 0) ones = ones.with(i);
    Context ctx{g.players() - ones, ones};
    auto a = kernels::enumerate_ne(g, ctx);
    auto b = reference::ne_set(g, ctx);
    canonicalize(a);
    canonicalize(b);
    CHECK(a == b);
    CHECK(kernels::enumerate_sss(g, ctx, false) == reference::sss(g, ctx, false));
    CHECK(kernels::enumerate_sss(g, ctx, true) == reference::sss(g, ctx, true));
    IesdsResult x = iesds(g, ctx), y = reference::iesds(g, ctx);
    CHECK(x.least == y.least);
    CHECK(x.greatest == y.greatest);
    AssumptionReport p = kernels::sweep_assumptions(g), q = reference::check_assumptions(g);
    CHECK(p.single_crossing == q.single_crossing);
    CHECK(p.common_interests == q.common_interests);
    CHECK(p.tie_break == q.tie_break);
    CHECK(p.deviation_proof == q.deviation_proof);
    CHECK(p.nondegenerate == q.nondegenerate);
  }
}

TEST_CASE("contexts are validated") {
  StageGame g = mixed_pair_game();
  CHECK_THROWS_AS(ne_set(g, {P({1}), P({1})}), ArgumentError);
  CHECK_THROWS_AS(ne_set(g, {P({3}), PlayerSet()}), ArgumentError);
}
