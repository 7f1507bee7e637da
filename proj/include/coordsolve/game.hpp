#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coordsolve/digraph.hpp"
#include "coordsolve/player_set.hpp"
#include "coordsolve/rational.hpp"

namespace coordsolve {

inline constexpr int kMaxTablePlayers = 16;

// Active players S and forced-one players O. A player of S choosing X ⊆ S
// receives u_i(X ∪ O); players outside S ∪ O are fixed at 0.
struct Context {
  PlayerSet active;
  PlayerSet ones;

  static Context full(int n) { return {PlayerSet::all(n), PlayerSet()}; }
  // Drops X from the active set and forces it to 1.
  Context upper(PlayerSet x) const { return {active - x, ones | x}; }
  // Keeps only X active; the rest of S is fixed at 0.
  Context lower(PlayerSet x) const { return {x, ones}; }
  void validate(int n) const;
  friend bool operator==(const Context&, const Context&) = default;
};

enum class GameKind { kTable, kWeakestLink, kThreshold, kAggregative };

std::string to_string(GameKind kind);

class StageGame {
 public:
  // payoffs[i][mask] = u_i(mask), bit j of mask set iff player j plays 1.
  static StageGame table(int n, std::vector<std::vector<Rational>> payoffs);
  static StageGame tabulate(int n, const std::function<Rational(int, PlayerSet)>& u);
  static StageGame weakest_link(Digraph g);
  static StageGame threshold(Digraph g, std::vector<int> k);
  static StageGame aggregative(std::vector<int> c);

  int n() const { return n_; }
  GameKind kind() const { return kind_; }
  PlayerSet players() const { return PlayerSet::all(n_); }

  Rational payoff(int i, PlayerSet x) const;

  // Sign of u_i(Y ∪ {i}) − u_i(Y \ {i}); +1 means i strictly prefers action 1.
  int incentive(int i, PlayerSet y) const;

  // Single-crossing, common interests and deviation-proofness all hold.
  // Structured kinds satisfy them by construction; tables are checked
  // exhaustively when built.
  bool assumption1() const { return assumption1_; }

  // Graph of a weakest-link or threshold game.
  const Digraph& graph() const { return graph_; }
  // k-vector of a threshold game or c-vector of an aggregative game.
  const std::vector<int>& thresholds() const { return thresholds_; }

  friend bool operator==(const StageGame& a, const StageGame& b);

 private:
  StageGame() = default;

  int n_ = 0;
  GameKind kind_ = GameKind::kTable;
  std::vector<std::vector<Rational>> table_;
  std::vector<std::int8_t> sign_;  // table kind: n blocks of 2^n signs
  Digraph graph_;
  std::vector<int> thresholds_;
  bool assumption1_ = true;
};

}  // namespace coordsolve
