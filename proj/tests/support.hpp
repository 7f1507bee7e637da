#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coordsolve/digraph.hpp"
#include "coordsolve/game.hpp"

namespace coordsolve::testing {

using Rng = std::mt19937_64;

// Games from the worked examples, 0-based.
StageGame mixed_pair_game();        // the two-player mixed game
StageGame free_rider_game();        // free-riding pair plus a follower
StageGame linked_pairs_game();      // four players, two K2 pairs with a one-way link
StageGame tie_break_game();         // eight players, tie-break violated
StageGame hub_design_game();        // seven players, async design example
StageGame spillover_base_game();    // five-player weakest link
StageGame spillover_perturbed_game();  // the same with a small spillover into player 1

Digraph bidirected(int n, const std::vector<std::pair<int, int>>& pairs);
Digraph triangles_graph();
Digraph clique_fan_graph();
Digraph star_graph(int leaves);  // centre 0, bidirected spokes
Digraph cycle_graph(int n);
Digraph disjoint_cliques(const std::vector<int>& sizes);

// u_i = 0 while i plays 0; when i plays 1, 2·#{families covering Y} − (2s+1)
// with each family upward closed over N \ {i}. Odd incentives, so the
// assumptions always hold. `density` is the chance a player enters a random
// generator (higher means larger coalitions are needed). With allow_dominant
// some players have 1 dominant; with allow_stubborn some never gain from 1.
struct GameShape {
  bool allow_dominant = false;
  bool allow_stubborn = false;
  double density = 0.5;
};
StageGame random_monotone_game(Rng& rng, int n, GameShape shape = {});

// Random tables built around random_monotone_game with an added spillover term
// on the 0-payoff, kept only if check_assumptions accepts them. Falls back to
// the plain construction after `tries` rejections.
StageGame random_filtered_game(Rng& rng, int n, GameShape shape = {}, int tries = 200);

Digraph random_digraph(Rng& rng, int n, double p);

// Nondecreasing thresholds in [1, n−1].
std::vector<int> random_thresholds(Rng& rng, int n);

// Cycle rank by the textbook recursion, independent of the library:
// 0 on acyclic graphs, max over SCCs, 1 + min over vertex deletions otherwise.
int cycle_rank(const Digraph& g, PlayerSet within);

// Brute-force τ(X) for tiny synchronous games from the oracle: smallest T with
// X inside every MSPNE outcome, or -1 up to max_t.
int oracle_tau(const StageGame& game, PlayerSet x, int max_t);

}  // namespace coordsolve::testing
