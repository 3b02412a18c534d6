#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace setopt {

using Mask = std::uint64_t;

struct HittingSet {
  int size = 0;
  Mask members = 0;
};

/// Smallest subset of {0..universe-1} meeting every mask in `family`
/// (universe <= 64). Branch and bound with a greedy incumbent and a
/// disjoint-packing lower bound. nullopt when some member of the family is
/// empty.
std::optional<HittingSet> min_hitting_set(int universe, std::span<const Mask> family);

/// Greedy hitting set (largest coverage first, highest index on ties).
std::optional<HittingSet> greedy_hitting_set(int universe, std::span<const Mask> family);

inline int popcount(Mask m) { return __builtin_popcountll(m); }

}  // namespace setopt
