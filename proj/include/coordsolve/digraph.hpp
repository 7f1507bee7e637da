#pragma once

#include <utility>
#include <vector>

#include "coordsolve/player_set.hpp"

namespace coordsolve {

// Directed graph on vertices 0..n-1 without self-loops; (i, j) means i → j.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  PlayerSet vertices() const { return PlayerSet::all(n_); }

  void add_edge(int from, int to);
  void remove_edge(int from, int to);
  bool has_edge(int from, int to) const { return out_[from].contains(to); }

  // E_i, the in-neighbours of i.
  PlayerSet in(int i) const { return in_[i]; }
  PlayerSet out(int i) const { return out_[i]; }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  // Subgraph keeping only edges with both endpoints in `keep`; vertex ids are
  // unchanged.
  Digraph restricted(PlayerSet keep) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<PlayerSet> in_;
  std::vector<PlayerSet> out_;
};

// Ordered list of disjoint cells covering the players; cells[t] moves at stage
// t+1 of the asynchronous game.
struct Partition {
  std::vector<PlayerSet> cells;

  int horizon() const { return static_cast<int>(cells.size()); }
  PlayerSet support() const;
  // Disjoint cover of {0..n-1}, empty cells only as trailing padding.
  void validate(int n) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Certificate for tree_depth. Split nodes hold the strongly connected
// components of their vertex set as children, Remove nodes drop one vertex of a
// strongly connected set, leaves are single vertices.
struct EliminationTree {
  enum class Kind { kLeaf, kRemove, kSplit };
  struct Node {
    Kind kind = Kind::kLeaf;
    PlayerSet vertices;
    int removed = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = -1;

  int depth() const;
  // Re-checks every node against `g`; returns the certified depth or -1.
  int replay(const Digraph& g) const;
};

struct TreeDepthResult {
  int value = 0;
  EliminationTree cert;
};

// Strongly connected components of g restricted to `within`, in a topological
// order of the condensation (ties broken by smallest member).
std::vector<PlayerSet> scc(const Digraph& g, PlayerSet within);
std::vector<PlayerSet> scc(const Digraph& g);

// Vertices that reach some vertex of X, X included.
PlayerSet reach(const Digraph& g, PlayerSet x);

TreeDepthResult tree_depth(const Digraph& g);
TreeDepthResult tree_depth(const Digraph& g, PlayerSet within);
int tree_depth_value(const Digraph& g, PlayerSet within);

// Cells N_1..N_T, possibly with empty tail cells, such that no two vertices of
// one cell are strongly connected in the suffix subgraph. Throws
// InfeasibleError when T is below the tree-depth.
Partition partition_from_treedepth(const Digraph& g, int horizon);
Partition partition_from_treedepth(const Digraph& g, int horizon, PlayerSet within);

bool check_feasible_partition(const Digraph& g, const Partition& p, PlayerSet m);

}  // namespace coordsolve
