#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace stanley {

/// Set of variable (or vertex) indices stored as a bitmask.
/// Index i is 1-based and occupies bit i-1; at most 64 indices.
using VarSet = std::uint64_t;

inline constexpr int kMaxVariables = 64;

inline constexpr VarSet var_bit(int i) { return VarSet{1} << (i - 1); }

inline constexpr bool has_var(VarSet s, int i) { return (s >> (i - 1)) & VarSet{1}; }

inline constexpr VarSet full_set(int n) {
  return n >= kMaxVariables ? ~VarSet{0} : (VarSet{1} << n) - 1;
}

inline int set_size(VarSet s) { return std::popcount(s); }

inline constexpr bool subset_of(VarSet a, VarSet b) { return (a & ~b) == 0; }

/// Ascending 1-based indices of the set bits.
std::vector<int> to_indices(VarSet s);

/// Builds a set from 1-based indices; duplicates collapse.
VarSet from_indices(const std::vector<int>& indices);

/// Calls f on every subset of mask (mask itself and the empty set included).
template <typename F>
void for_each_subset(VarSet mask, F&& f) {
  VarSet s = mask;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

/// All k-element subsets of mask, ascending as integers.
std::vector<VarSet> k_subsets(VarSet mask, int k);

/// Orders sets by cardinality, then by integer value.
inline bool canonical_less(VarSet a, VarSet b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

}  // namespace stanley
