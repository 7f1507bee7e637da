#include "coordsolve/digraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>

#include "coordsolve/errors.hpp"

namespace coordsolve {

Digraph::Digraph(int n) : n_(n), in_(n), out_(n) {
  if (n < 0 || n > kMaxPlayers) throw ArgumentError("vertex count out of range");
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& edges) : Digraph(n) {
  for (auto [a, b] : edges) add_edge(a, b);
}

void Digraph::add_edge(int from, int to) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) throw ArgumentError("edge endpoint out of range");
  if (from == to) throw ArgumentError("self-loop at vertex " + std::to_string(from));
  out_[from] = out_[from].with(to);
  in_[to] = in_[to].with(from);
}

void Digraph::remove_edge(int from, int to) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) throw ArgumentError("edge endpoint out of range");
  out_[from] = out_[from].without(to);
  in_[to] = in_[to].without(from);
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j : out_[i]) out.emplace_back(i, j);
  return out;
}

int Digraph::edge_count() const {
  int m = 0;
  for (int i = 0; i < n_; ++i) m += out_[i].size();
  return m;
}

Digraph Digraph::restricted(PlayerSet keep) const {
  Digraph g(n_);
  for (int i : keep) {
    g.out_[i] = out_[i] & keep;
    g.in_[i] = in_[i] & keep;
  }
  return g;
}

PlayerSet Partition::support() const {
  PlayerSet s;
  for (PlayerSet c : cells) s |= c;
  return s;
}

void Partition::validate(int n) const {
  if (cells.empty()) throw ArgumentError("partition has no cells");
  PlayerSet seen;
  for (PlayerSet c : cells) {
    if (!(c & seen).empty()) throw ArgumentError("partition cells overlap");
    seen |= c;
  }
  if (seen != PlayerSet::all(n)) throw ArgumentError("partition does not cover all players");
}

std::vector<PlayerSet> scc(const Digraph& g, PlayerSet within) {
  const int n = g.n();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<PlayerSet> comps;
  int counter = 0;

  struct Frame {
    int v;
    PlayerSet rest;
  };
  std::vector<Frame> call;
  for (int s : within) {
    if (index[s] >= 0) continue;
    call.push_back({s, g.out(s) & within});
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (!f.rest.empty()) {
        int w = f.rest.lowest();
        f.rest = f.rest.without(w);
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, g.out(w) & within});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      int v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        PlayerSet c;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          c = c.with(w);
          comp[w] = static_cast<int>(comps.size());
        } while (w != v);
        comps.push_back(c);
      }
    }
  }

  // Kahn's algorithm on the condensation, smallest member first.
  const int k = static_cast<int>(comps.size());
  std::vector<int> indeg(k, 0);
  std::vector<std::vector<int>> succ(k);
  for (int c = 0; c < k; ++c) {
    PlayerSet targets;
    for (int v : comps[c]) targets |= g.out(v) & within;
    std::vector<bool> seen(k, false);
    for (int w : targets) {
      int d = comp[w];
      if (d != c && !seen[d]) {
        seen[d] = true;
        succ[c].push_back(d);
        ++indeg[d];
      }
    }
  }
  auto later = [&](int a, int b) { return comps[a].lowest() > comps[b].lowest(); };
  std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);
  for (int c = 0; c < k; ++c)
    if (indeg[c] == 0) ready.push(c);
  std::vector<PlayerSet> ordered;
  ordered.reserve(k);
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    ordered.push_back(comps[c]);
    for (int d : succ[c])
      if (--indeg[d] == 0) ready.push(d);
  }
  return ordered;
}

std::vector<PlayerSet> scc(const Digraph& g) { return scc(g, g.vertices()); }

PlayerSet reach(const Digraph& g, PlayerSet x) {
  PlayerSet closure = x;
  PlayerSet frontier = x;
  while (!frontier.empty()) {
    PlayerSet next;
    for (int v : frontier) next |= g.in(v);
    frontier = next - closure;
    closure |= next;
  }
  return closure;
}

namespace {

class TreeDepthSolver {
 public:
  explicit TreeDepthSolver(const Digraph& g) : g_(g) {}

  int td(PlayerSet s) {
    if (s.empty()) return 0;
    auto comps = scc(g_, s);
    if (comps.size() == 1) return s.size() == 1 ? 1 : strong(s).depth;
    int best = 0;
    for (PlayerSet c : comps) best = std::max(best, c.size() == 1 ? 1 : strong(c).depth);
    return best;
  }

  int build(PlayerSet s, EliminationTree& tree) {
    int id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[id].vertices = s;
    if (s.size() == 1) {
      tree.nodes[id].kind = EliminationTree::Kind::kLeaf;
      return id;
    }
    auto comps = scc(g_, s);
    if (comps.size() > 1) {
      tree.nodes[id].kind = EliminationTree::Kind::kSplit;
      for (PlayerSet c : comps) {
        int child = build(c, tree);
        tree.nodes[id].children.push_back(child);
      }
      return id;
    }
    int v = strong(s).removed;
    tree.nodes[id].kind = EliminationTree::Kind::kRemove;
    tree.nodes[id].removed = v;
    int child = build(s.without(v), tree);
    tree.nodes[id].children.push_back(child);
    return id;
  }

 private:
  struct Entry {
    int depth;
    int removed;
  };

  // s is strongly connected with at least two vertices.
  Entry strong(PlayerSet s) {
    auto it = memo_.find(s.bits());
    if (it != memo_.end()) return it->second;
    Entry best{std::numeric_limits<int>::max(), -1};
    for (int v : s) {
      PlayerSet rest = s.without(v);
      auto comps = scc(g_, rest);
      int lower = 1;
      for (PlayerSet c : comps) lower = std::max(lower, c.size() > 1 ? 2 : 1);
      if (1 + lower >= best.depth) continue;
      int value = 0;
      for (PlayerSet c : comps) value = std::max(value, c.size() == 1 ? 1 : strong(c).depth);
      if (1 + value < best.depth) best = {1 + value, v};
      if (best.depth == 2) break;
    }
    memo_.emplace(s.bits(), best);
    return best;
  }

  const Digraph& g_;
  std::unordered_map<PlayerSet::Mask, Entry> memo_;
};

}  // namespace

int EliminationTree::depth() const {
  if (root < 0) return 0;
  std::function<int(int)> rec = [&](int id) -> int {
    const Node& node = nodes[id];
    switch (node.kind) {
      case Kind::kLeaf:
        return 1;
      case Kind::kRemove:
        return 1 + rec(node.children.at(0));
      case Kind::kSplit: {
        int best = 0;
        for (int c : node.children) best = std::max(best, rec(c));
        return best;
      }
    }
    return 0;
  };
  return rec(root);
}

int EliminationTree::replay(const Digraph& g) const {
  if (root < 0) return 0;
  for (const Node& node : nodes) {
    switch (node.kind) {
      case Kind::kLeaf:
        if (node.vertices.size() != 1 || !node.children.empty()) return -1;
        break;
      case Kind::kRemove: {
        if (node.vertices.size() < 2 || !node.vertices.contains(node.removed)) return -1;
        if (scc(g, node.vertices).size() != 1 || node.children.size() != 1) return -1;
        if (nodes[node.children[0]].vertices != node.vertices.without(node.removed)) return -1;
        break;
      }
      case Kind::kSplit: {
        auto comps = scc(g, node.vertices);
        if (comps.size() < 2 || comps.size() != node.children.size()) return -1;
        for (size_t k = 0; k < comps.size(); ++k)
          if (nodes[node.children[k]].vertices != comps[k]) return -1;
        break;
      }
    }
  }
  return depth();
}

TreeDepthResult tree_depth(const Digraph& g, PlayerSet within) {
  TreeDepthSolver solver(g);
  TreeDepthResult result;
  if (within.empty()) return result;
  result.cert.root = solver.build(within, result.cert);
  result.value = result.cert.depth();
  return result;
}

TreeDepthResult tree_depth(const Digraph& g) { return tree_depth(g, g.vertices()); }

int tree_depth_value(const Digraph& g, PlayerSet within) {
  TreeDepthSolver solver(g);
  return solver.td(within);
}

Partition partition_from_treedepth(const Digraph& g, int horizon, PlayerSet within) {
  if (horizon < 1) throw ArgumentError("horizon must be positive");
  TreeDepthResult td = tree_depth(g, within);
  if (td.value > horizon) {
    throw InfeasibleError("horizon " + std::to_string(horizon) + " is below tree-depth " +
                          std::to_string(td.value));
  }
  Partition p;
  p.cells.assign(horizon, PlayerSet());
  if (td.cert.root < 0) return p;
  std::function<void(int, int)> place = [&](int id, int slot) {
    const auto& node = td.cert.nodes[id];
    switch (node.kind) {
      case EliminationTree::Kind::kLeaf:
        p.cells[slot] |= node.vertices;
        break;
      case EliminationTree::Kind::kRemove:
        p.cells[slot] = p.cells[slot].with(node.removed);
        place(node.children[0], slot + 1);
        break;
      case EliminationTree::Kind::kSplit:
        for (int c : node.children) place(c, slot);
        break;
    }
  };
  place(td.cert.root, 0);
  return p;
}

Partition partition_from_treedepth(const Digraph& g, int horizon) {
  return partition_from_treedepth(g, horizon, g.vertices());
}

bool check_feasible_partition(const Digraph& g, const Partition& p, PlayerSet m) {
  p.validate(g.n());
  PlayerSet suffix;
  std::vector<int> comp_of(g.n(), -1);
  for (int t = p.horizon() - 1; t >= 0; --t) {
    suffix |= p.cells[t] & m;
    PlayerSet cell = p.cells[t] & m;
    if (cell.size() < 2) continue;
    auto comps = scc(g, suffix);
    for (size_t k = 0; k < comps.size(); ++k)
      for (int v : comps[k]) comp_of[v] = static_cast<int>(k);
    PlayerSet seen_comps;
    for (int v : cell) {
      if (seen_comps.contains(comp_of[v])) return false;
      seen_comps = seen_comps.with(comp_of[v]);
    }
  }
  return true;
}

}  // namespace coordsolve
