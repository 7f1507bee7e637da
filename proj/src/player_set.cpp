#include "coordsolve/player_set.hpp"

#include <algorithm>

#include "coordsolve/errors.hpp"

namespace coordsolve {

PlayerSet PlayerSet::all(int n) {
  if (n < 0 || n > kMaxPlayers) throw ArgumentError("player count out of range");
  return PlayerSet(n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
}

PlayerSet PlayerSet::single(int i) {
  if (i < 0 || i >= kMaxPlayers) throw ArgumentError("player index out of range");
  return PlayerSet(Mask{1} << i);
}

PlayerSet PlayerSet::of(std::initializer_list<int> members) {
  PlayerSet s;
  for (int i : members) s |= single(i);
  return s;
}

PlayerSet PlayerSet::from_vector(const std::vector<int>& members) {
  PlayerSet s;
  for (int i : members) s |= single(i);
  return s;
}

std::vector<int> PlayerSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i : *this) out.push_back(i);
  return out;
}

bool lex_less(PlayerSet a, PlayerSet b) {
  PlayerSet::Mask d = a.bits() ^ b.bits();
  if (d == 0) return false;
  PlayerSet::Mask low = d & (~d + 1);
  PlayerSet::Mask above = ~((low << 1) - 1);
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

bool card_lex_less(PlayerSet a, PlayerSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

PlayerSet deposit(std::uint64_t index, PlayerSet within) {
  PlayerSet::Mask out = 0;
  PlayerSet::Mask rest = within.bits();
  while (rest != 0 && index != 0) {
    PlayerSet::Mask low = rest & (~rest + 1);
    if (index & 1u) out |= low;
    index >>= 1;
    rest &= rest - 1;
  }
  return PlayerSet(out);
}

std::uint64_t extract(PlayerSet x, PlayerSet within) {
  std::uint64_t out = 0;
  int k = 0;
  for (int i : within) {
    if (x.contains(i)) out |= std::uint64_t{1} << k;
    ++k;
  }
  return out;
}

std::string to_string(PlayerSet s, int base) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += std::to_string(i + base);
    first = false;
  }
  return out + "}";
}

void canonicalize(std::vector<PlayerSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace coordsolve
