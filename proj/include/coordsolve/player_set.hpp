#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coordsolve {

inline constexpr int kMaxPlayers = 30;

// A coalition of players, read as an action profile: bit i set means player i
// plays action 1.
class PlayerSet {
 public:
  using Mask = std::uint32_t;

  class Iterator {
   public:
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Mask rest_;
  };

  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(Mask bits) : bits_(bits) {}

  static PlayerSet all(int n);
  static PlayerSet single(int i);
  static PlayerSet of(std::initializer_list<int> members);
  static PlayerSet from_vector(const std::vector<int>& members);

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(PlayerSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(PlayerSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr PlayerSet with(int i) const { return PlayerSet(bits_ | (Mask{1} << i)); }
  constexpr PlayerSet without(int i) const {
    return PlayerSet(bits_ & ~(Mask{1} << i));
  }
  constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }
  constexpr int highest() const { return bits_ ? 31 - std::countl_zero(bits_) : -1; }
  std::vector<int> members() const;

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  friend constexpr PlayerSet operator|(PlayerSet a, PlayerSet b) {
    return PlayerSet(a.bits_ | b.bits_);
  }
  friend constexpr PlayerSet operator&(PlayerSet a, PlayerSet b) {
    return PlayerSet(a.bits_ & b.bits_);
  }
  friend constexpr PlayerSet operator-(PlayerSet a, PlayerSet b) {
    return PlayerSet(a.bits_ & ~b.bits_);
  }
  friend constexpr PlayerSet operator^(PlayerSet a, PlayerSet b) {
    return PlayerSet(a.bits_ ^ b.bits_);
  }
  PlayerSet& operator|=(PlayerSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  PlayerSet& operator&=(PlayerSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  PlayerSet& operator-=(PlayerSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(PlayerSet, PlayerSet) = default;
  // Numeric order on the bitmask; used for canonical sorting of set families.
  friend constexpr auto operator<=>(PlayerSet a, PlayerSet b) { return a.bits_ <=> b.bits_; }

 private:
  Mask bits_ = 0;
};

// Lexicographic order on the ascending member lists ({1} < {1,5} < {2}).
bool lex_less(PlayerSet a, PlayerSet b);

// Orders by cardinality first, then lexicographically.
bool card_lex_less(PlayerSet a, PlayerSet b);

// The index-th subset of `within`, bits of `index` deposited in member order.
PlayerSet deposit(std::uint64_t index, PlayerSet within);

// Inverse of deposit for x ⊆ within.
std::uint64_t extract(PlayerSet x, PlayerSet within);

// "{1,2,3}" with the given index base.
std::string to_string(PlayerSet s, int base = 1);

// Sorts and deduplicates a family of sets in numeric mask order.
void canonicalize(std::vector<PlayerSet>& family);

}  // namespace coordsolve
