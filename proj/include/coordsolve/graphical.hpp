#pragma once

#include <cstdint>
#include <vector>

#include "coordsolve/digraph.hpp"
#include "coordsolve/game.hpp"
#include "coordsolve/sync.hpp"

namespace coordsolve {

inline constexpr std::uint64_t kDefaultGraphProductCap = 1'000'000;

// A digraph whose in-neighbourhoods strictly incentivize each player.
struct SufficientGraph {
  Digraph graph;
  bool minimal = false;
};

StageGame weakest_link_game(const Digraph& g);

// td(G|reach(X)); 1 for X = ∅.
int tau_weakest_link(const Digraph& g, PlayerSet x);

// Inclusion-minimal E ⊆ N \ {i} with u_i(E ∪ {i}) > u_i(E), sorted by
// cardinality then lexicographically.
std::vector<PlayerSet> minimal_satisfying_sets(const StageGame& game, int i);

// Is every player's in-set strictly incentivizing, restricted to `m`?
bool is_sufficient(const StageGame& game, const Digraph& g, PlayerSet m);
bool is_minimal_sufficient(const StageGame& game, const Digraph& g, PlayerSet m);

// Weakest-link game with the same τ on every target. Throws PreconditionError
// when some player never plays 1.
SufficientGraph reduce_to_weakest_link(const StageGame& game);

// The same construction over the players that survive elimination; players
// that never play 1 are left isolated.
SufficientGraph sufficient_graph_on_survivors(SyncSolver& solver);

// min over minimal sufficient graphs S of td(S|reach(X)).
int tau_via_graphs(const StageGame& game, PlayerSet x,
                   std::uint64_t cap = kDefaultGraphProductCap);

}  // namespace coordsolve
