#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coordsolve/game.hpp"

namespace coordsolve {

inline constexpr std::uint64_t kDefaultClassifyBudget = 100'000'000;

// Δ_k(Y) > 0 below means u_k(Y ∪ {k}) > u_k(Y \ {k}).
struct OrderedWitness {
  std::string clause;
  int i = -1;
  int j = -1;
  int k = -1;  // contribution clauses only
  PlayerSet x;
};

struct OrderedFlags {
  bool cost_ordered = true;
  bool strongly_cost_ordered = true;
  bool contribution_ordered = true;
  bool contribution_natural = true;
  std::vector<OrderedWitness> witnesses;

  bool fast_path() const { return cost_ordered && contribution_ordered; }
};

struct ClassifyOptions {
  std::uint64_t budget = kDefaultClassifyBudget;
  // Read the cost chain clause literally (each link joins X on its own), which
  // collapses it to the strong clause.
  bool literal_chain = false;
};

// Clauses, for i < j and X avoiding the named players:
//   cost:          Δ_j(X) > 0 ⇒ i joins the closure of X ∪ {j} under
//                  repeatedly adding players with Δ > 0
//   strongly cost: Δ_j(X) > 0 ⇒ Δ_i(X) > 0
//   contribution:  Δ_k(X ∪ {i}) > 0 ⇒ Δ_k(X ∪ {j}) > 0 (natural: all i ≠ j)
OrderedFlags classify(const StageGame& game, ClassifyOptions options = {});

// τ(X) by the ordered recursion; throws PreconditionError unless the game is
// cost-ordered and contribution-ordered.
int tau_ordered(const StageGame& game, PlayerSet x);
int tau_ordered(const StageGame& game, PlayerSet x, const OrderedFlags& flags);

// The accelerated loop for nondecreasing thresholds 1 ≤ c_i ≤ n − 1.
int algorithm1(const std::vector<int>& c, int n);

// Generators. Indices are 0-based: in_start[i] = I_i gives
// in(i) = {I_i, …, n−1} \ {i}. An out_bound, when given, is checked against the
// resulting out-neighbourhoods ({O_i, …, n−1} for aligned, {0, …, O_i} for
// opposed). Each generated game must classify as its family claims, else
// ArgumentError.
StageGame generate_aggregative(std::vector<int> c);
StageGame generate_aligned_nsg(const std::vector<int>& in_start,
                               const std::vector<int>& out_bound = {});
StageGame generate_opposed_nsg(const std::vector<int>& in_start, const std::vector<int>& k,
                               const std::vector<int>& out_bound = {});

}  // namespace coordsolve
