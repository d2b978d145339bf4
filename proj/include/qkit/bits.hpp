#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qkit {

/// Subset of a finite, ordered carrier. Bit i is set iff carrier element i
/// belongs to the subset. Carriers are capped at 64 elements.
using Bits = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

constexpr Bits bit(int i) { return Bits{1} << i; }
constexpr bool has(Bits s, int i) { return (s >> i) & 1U; }
constexpr Bits full_set(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }
constexpr bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }
inline int count(Bits s) { return std::popcount(s); }

/// Indices of the set bits, increasing.
inline std::vector<int> members(Bits s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

}  // namespace qkit
