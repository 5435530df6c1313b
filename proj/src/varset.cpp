#include "stanley/varset.hpp"

namespace stanley {

std::vector<int> to_indices(VarSet s) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(set_size(s)));
  while (s) {
    const int bit = std::countr_zero(s);
    out.push_back(bit + 1);
    s &= s - 1;
  }
  return out;
}

VarSet from_indices(const std::vector<int>& indices) {
  VarSet s = 0;
  for (int i : indices) s |= var_bit(i);
  return s;
}

std::vector<VarSet> k_subsets(VarSet mask, int k) {
  std::vector<VarSet> out;
  if (k < 0) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const std::vector<int> elems = to_indices(mask);
  const int n = static_cast<int>(elems.size());
  if (k > n) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    VarSet s = 0;
    for (int i = 0; i < k; ++i) s |= var_bit(elems[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace stanley
