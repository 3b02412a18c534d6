#include "setopt/hitting_set.hpp"

#include <vector>

#include "setopt/error.hpp"

namespace setopt {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(std::span<const Mask> family, HittingSet incumbent)
      : family_(family.begin(), family.end()), best_(incumbent) {}

  HittingSet solve() {
    search(0, 0, 0);
    return best_;
  }

 private:
  // Lower bound: pairwise disjoint unhit sets each need their own element.
  int packing_bound(Mask chosen, Mask forbidden) const {
    Mask used = 0;
    int count = 0;
    for (Mask s : family_) {
      if (s & chosen) continue;
      const Mask live = s & ~forbidden;
      if ((live & used) == 0) {
        used |= live;
        ++count;
      }
    }
    return count;
  }

  void search(Mask chosen, Mask forbidden, int depth) {
    // Most constrained unhit set.
    int pick = -1;
    int pick_size = 65;
    for (std::size_t i = 0; i < family_.size(); ++i) {
      if (family_[i] & chosen) continue;
      const int live = popcount(family_[i] & ~forbidden);
      if (live == 0) return;
      if (live < pick_size) {
        pick_size = live;
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0) {
      if (depth < best_.size) best_ = {depth, chosen};
      return;
    }
    if (depth + packing_bound(chosen, forbidden) >= best_.size) return;
    // Highest element first, matching the greedy tie rule.
    Mask options = family_[pick] & ~forbidden;
    while (options) {
      const Mask bit = Mask(1) << (63 - __builtin_clzll(options));
      options &= ~bit;
      search(chosen | bit, forbidden, depth + 1);
      forbidden |= bit;
    }
  }

  std::vector<Mask> family_;
  HittingSet best_;
};

}  // namespace

std::optional<HittingSet> greedy_hitting_set(int universe, std::span<const Mask> family) {
  if (universe < 0 || universe > 64) {
    throw Error(ErrorCode::CapExceeded, "hitting-set universe above 64 elements");
  }
  for (Mask s : family)
    if (s == 0) return std::nullopt;
  HittingSet out;
  for (;;) {
    int best_elem = -1, best_hits = 0;
    for (int e = 0; e < universe; ++e) {
      const Mask bit = Mask(1) << e;
      if (out.members & bit) continue;
      int hits = 0;
      for (Mask s : family)
        if (!(s & out.members) && (s & bit)) ++hits;
      if (hits > 0 && hits >= best_hits) {
        best_hits = hits;
        best_elem = e;
      }
    }
    if (best_elem < 0) break;
    out.members |= Mask(1) << best_elem;
    ++out.size;
  }
  return out;
}

std::optional<HittingSet> min_hitting_set(int universe, std::span<const Mask> family) {
  auto greedy = greedy_hitting_set(universe, family);
  if (!greedy) return std::nullopt;
  if (greedy->size <= 1) return greedy;
  return BranchAndBound(family, *greedy).solve();
}

}  // namespace setopt
