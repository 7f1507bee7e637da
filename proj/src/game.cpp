#include "coordsolve/game.hpp"

#include "coordsolve/core.hpp"
#include "coordsolve/errors.hpp"

namespace coordsolve {

void Context::validate(int n) const {
  PlayerSet all = PlayerSet::all(n);
  if (!active.subset_of(all) || !ones.subset_of(all)) throw ArgumentError("context exceeds player set");
  if (!(active & ones).empty()) throw ArgumentError("context active and forced sets overlap");
}

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::kTable:
      return "table";
    case GameKind::kWeakestLink:
      return "weakest_link";
    case GameKind::kThreshold:
      return "threshold";
    case GameKind::kAggregative:
      return "aggregative";
  }
  return "unknown";
}

StageGame StageGame::table(int n, std::vector<std::vector<Rational>> payoffs) {
  if (n < 1 || n > kMaxTablePlayers) {
    throw ArgumentError("table games support 1.." + std::to_string(kMaxTablePlayers) + " players");
  }
  if (static_cast<int>(payoffs.size()) != n) throw ArgumentError("need one payoff row per player");
  const size_t size = size_t{1} << n;
  for (const auto& row : payoffs)
    if (row.size() != size) throw ArgumentError("payoff row must have 2^n entries");
  StageGame g;
  g.n_ = n;
  g.kind_ = GameKind::kTable;
  g.table_ = std::move(payoffs);
  g.sign_.resize(size * n);
  for (int i = 0; i < n; ++i) {
    PlayerSet::Mask bit = PlayerSet::Mask{1} << i;
    for (PlayerSet::Mask y = 0; y < size; ++y) {
      auto c = g.table_[i][y | bit] <=> g.table_[i][y & ~bit];
      g.sign_[i * size + y] = c > 0 ? 1 : (c < 0 ? -1 : 0);
    }
  }
  g.assumption1_ = check_assumptions(g).assumption1();
  return g;
}

StageGame StageGame::tabulate(int n, const std::function<Rational(int, PlayerSet)>& u) {
  if (n < 1 || n > kMaxTablePlayers) throw ArgumentError("player count out of range for a table");
  std::vector<std::vector<Rational>> payoffs(n, std::vector<Rational>(size_t{1} << n));
  for (int i = 0; i < n; ++i)
    for (PlayerSet::Mask x = 0; x < (PlayerSet::Mask{1} << n); ++x) payoffs[i][x] = u(i, PlayerSet(x));
  return table(n, std::move(payoffs));
}

StageGame StageGame::weakest_link(Digraph g) {
  if (g.n() < 1) throw ArgumentError("weakest-link game needs at least one player");
  StageGame s;
  s.n_ = g.n();
  s.kind_ = GameKind::kWeakestLink;
  s.graph_ = std::move(g);
  return s;
}

StageGame StageGame::threshold(Digraph g, std::vector<int> k) {
  if (g.n() < 1) throw ArgumentError("threshold game needs at least one player");
  if (static_cast<int>(k.size()) != g.n()) throw ArgumentError("need one threshold per player");
  for (int i = 0; i < g.n(); ++i) {
    if (k[i] < 1 || k[i] > g.in(i).size()) {
      throw ArgumentError("threshold k_" + std::to_string(i) + " must lie in [1, |E_i|]");
    }
  }
  StageGame s;
  s.n_ = g.n();
  s.kind_ = GameKind::kThreshold;
  s.graph_ = std::move(g);
  s.thresholds_ = std::move(k);
  return s;
}

StageGame StageGame::aggregative(std::vector<int> c) {
  const int n = static_cast<int>(c.size());
  if (n < 2 || n > kMaxPlayers) throw ArgumentError("aggregative game needs 2.." + std::to_string(kMaxPlayers) + " players");
  for (int i = 0; i < n; ++i)
    if (c[i] < 1 || c[i] > n - 1) throw ArgumentError("c_" + std::to_string(i) + " must lie in [1, n-1]");
  StageGame s;
  s.n_ = n;
  s.kind_ = GameKind::kAggregative;
  s.thresholds_ = std::move(c);
  return s;
}

Rational StageGame::payoff(int i, PlayerSet x) const {
  if (i < 0 || i >= n_) throw ArgumentError("player index out of range");
  if (!x.subset_of(players())) throw ArgumentError("coalition exceeds player set");
  if (kind_ == GameKind::kTable) return table_[i][x.bits()];
  if (!x.contains(i)) return 0;
  return incentive(i, x) > 0 ? 1 : -1;
}

int StageGame::incentive(int i, PlayerSet y) const {
  switch (kind_) {
    case GameKind::kTable:
      return sign_[(size_t{static_cast<size_t>(i)} << n_) + y.bits()];
    case GameKind::kWeakestLink:
      return graph_.in(i).subset_of(y) ? 1 : -1;
    case GameKind::kThreshold:
      return (graph_.in(i) & y).size() >= thresholds_[i] ? 1 : -1;
    case GameKind::kAggregative:
      return y.without(i).size() >= thresholds_[i] ? 1 : -1;
  }
  return 0;
}

bool operator==(const StageGame& a, const StageGame& b) {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i)
    for (PlayerSet::Mask x = 0; x < (PlayerSet::Mask{1} << a.n_); ++x)
      if (a.payoff(i, PlayerSet(x)) != b.payoff(i, PlayerSet(x))) return false;
  return true;
}

}  // namespace coordsolve
