#include "stanley/sdepth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace stanley {

CharPoset char_poset(const SqfIdeal& ideal, PosetKind kind, VarSet active,
                     int max_active) {
  if (!ideal.is_proper())
    throw std::invalid_argument("char_poset: unit ideal");
  if (kind == PosetKind::ideal && ideal.is_zero())
    throw std::invalid_argument("char_poset: ideal poset of the zero ideal");
  if (!subset_of(ideal.support_union(), active))
    throw std::invalid_argument("char_poset: generators use inactive variables");
  const int m = set_size(active);
  if (m > max_active)
    throw std::invalid_argument("char_poset: " + std::to_string(m) +
                                " active variables exceeds the cap of " +
                                std::to_string(max_active));
  CharPoset poset;
  poset.ambient_n = ideal.ambient_n;
  poset.active = active;
  poset.kind = kind;
  for_each_subset(active, [&](VarSet sigma) {
    const bool inside = ideal.contains_monomial(sigma);
    if (inside == (kind == PosetKind::ideal)) poset.ground.push_back(sigma);
  });
  std::sort(poset.ground.begin(), poset.ground.end(), canonical_less);
  return poset;
}

namespace {

// Dynamic bitset over ground indices; ground size is 2^|active| at most.
struct ElemBits {
  std::vector<std::uint64_t> words;

  explicit ElemBits(size_t n) : words((n + 63) / 64, 0) {}
  void set(size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool disjoint(const ElemBits& other) const {
    for (size_t w = 0; w < words.size(); ++w)
      if (words[w] & other.words[w]) return false;
    return true;
  }
  void add(const ElemBits& other) {
    for (size_t w = 0; w < words.size(); ++w) words[w] |= other.words[w];
  }
  void remove(const ElemBits& other) {
    for (size_t w = 0; w < words.size(); ++w) words[w] &= ~other.words[w];
  }
  bool test(size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
};

struct Interval {
  VarSet lo = 0;
  VarSet hi = 0;
  ElemBits covers{0};
};

struct CoverSearch {
  const std::vector<VarSet>* ground = nullptr;
  const std::unordered_map<VarSet, size_t>* index_of = nullptr;
  VarSet active = 0;
  std::vector<Interval> intervals;
  std::vector<std::vector<int>> intervals_at_bottom;  // element index -> ids with lo == element
  int k = 0;
  ElemBits covered{0};
  size_t covered_count = 0;
  std::vector<int> chosen;

  // Hall-style relaxation: a minimal uncovered element below rank k heads
  // an interval that must consume some uncovered element one level up
  // inside it, and different minimal elements consume different ones. If
  // that bipartite graph has no matching saturating the minimal elements,
  // the node is dead. Catches the middle-layer matching dead ends that
  // plain backtracking only discovers exponentially late.
  bool successor_matching_exists(const std::vector<size_t>& mins) {
    std::vector<std::vector<size_t>> adjacency;
    for (size_t e : mins) {
      if (set_size((*ground)[e]) >= k) continue;
      std::vector<size_t> next;
      const VarSet elem = (*ground)[e];
      for (int v : to_indices(active & ~elem)) {
        const auto it = index_of->find(elem | var_bit(v));
        if (it != index_of->end() && !covered.test(it->second)) next.push_back(it->second);
      }
      if (next.empty()) return false;
      adjacency.push_back(std::move(next));
    }
    std::vector<int> match_right(ground->size(), -1);
    std::vector<char> seen;
    auto augment = [&](auto&& self, size_t left) -> bool {
      for (size_t r : adjacency[left]) {
        if (seen[r]) continue;
        seen[r] = 1;
        if (match_right[r] < 0 || self(self, static_cast<size_t>(match_right[r]))) {
          match_right[r] = static_cast<int>(left);
          return true;
        }
      }
      return false;
    };
    for (size_t left = 0; left < adjacency.size(); ++left) {
      seen.assign(ground->size(), 0);
      if (!augment(augment, left)) return false;
    }
    return true;
  }

  // A minimal uncovered element must be the bottom of its interval in any
  // completion: the interval's lo is uncovered too and lies below it. So it
  // suffices to branch on the bottom intervals of one minimal uncovered
  // element; the one with the fewest usable intervals is branched first.
  // Two refutations fall out of the same fact: a minimal element with no
  // usable bottom interval, and the counting bound that the (pairwise
  // disjoint) intervals headed by the minimal elements need at least
  // 2^(k - |lo|) uncovered elements each.
  bool solve() {
    if (covered_count == ground->size()) return true;
    int best_elem = -1;
    size_t best_count = SIZE_MAX;
    size_t needed = 0;
    std::vector<size_t> minimal_elements;
    for (size_t e = 0; e < ground->size(); ++e) {
      if (covered.test(e)) continue;
      bool minimal = true;
      for (size_t lower = 0; lower < e; ++lower) {
        if (!covered.test(lower) && subset_of((*ground)[lower], (*ground)[e])) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      minimal_elements.push_back(e);
      const int gap = k - set_size((*ground)[e]);
      needed += static_cast<size_t>(VarSet{1} << (gap > 0 ? gap : 0));
      if (needed > ground->size() - covered_count) return false;
      size_t count = 0;
      for (int id : intervals_at_bottom[e])
        if (intervals[static_cast<size_t>(id)].covers.disjoint(covered)) ++count;
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best_elem = static_cast<int>(e);
      }
    }
    if (!successor_matching_exists(minimal_elements)) return false;
    for (int id : intervals_at_bottom[static_cast<size_t>(best_elem)]) {
      const Interval& ivl = intervals[static_cast<size_t>(id)];
      if (!ivl.covers.disjoint(covered)) continue;
      covered.add(ivl.covers);
      covered_count += static_cast<size_t>(VarSet{1} << set_size(ivl.hi & ~ivl.lo));
      chosen.push_back(id);
      if (solve()) return true;
      chosen.pop_back();
      covered_count -= static_cast<size_t>(VarSet{1} << set_size(ivl.hi & ~ivl.lo));
      covered.remove(ivl.covers);
    }
    return false;
  }
};

}  // namespace

std::optional<IntervalPartition> decide_sdepth(const CharPoset& poset, int k) {
  const int m = set_size(poset.active);
  if (k > m) return poset.ground.empty() ? std::make_optional(IntervalPartition{})
                                         : std::nullopt;

  std::unordered_map<VarSet, size_t> index_of;
  index_of.reserve(poset.ground.size() * 2);
  for (size_t i = 0; i < poset.ground.size(); ++i) index_of.emplace(poset.ground[i], i);

  CoverSearch search;
  search.ground = &poset.ground;
  search.index_of = &index_of;
  search.active = poset.active;
  search.k = k;
  search.covered = ElemBits(poset.ground.size());
  search.intervals_at_bottom.assign(poset.ground.size(), {});

  auto add_interval = [&](VarSet lo, VarSet hi) {
    Interval ivl;
    ivl.lo = lo;
    ivl.hi = hi;
    ivl.covers = ElemBits(poset.ground.size());
    for_each_subset(hi & ~lo, [&](VarSet extra) {
      const auto it = index_of.find(lo | extra);
      if (it == index_of.end())
        throw std::logic_error("decide_sdepth: interval leaves the ground set");
      ivl.covers.set(it->second);
    });
    const int id = static_cast<int>(search.intervals.size());
    search.intervals.push_back(std::move(ivl));
    search.intervals_at_bottom[index_of.at(lo)].push_back(id);
  };

  // Admissible intervals: |hi| >= k and the closure endpoint in the ground
  // set (hi for the downward-closed quotient poset, lo for the
  // upward-closed ideal poset).
  if (poset.kind == PosetKind::quotient) {
    for (VarSet hi : poset.ground) {
      if (set_size(hi) < k) continue;
      for_each_subset(hi, [&](VarSet lo) { add_interval(lo, hi); });
    }
  } else {
    for (VarSet lo : poset.ground) {
      for_each_subset(poset.active & ~lo, [&](VarSet extra) {
        const VarSet hi = lo | extra;
        if (set_size(hi) >= k) add_interval(lo, hi);
      });
    }
  }

  // Try small tops first: large intervals are the most constraining choice
  // and only pay off when the poset is nearly a full cube.
  for (auto& ids : search.intervals_at_bottom) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      const Interval& ia = search.intervals[static_cast<size_t>(a)];
      const Interval& ib = search.intervals[static_cast<size_t>(b)];
      return canonical_less(ia.hi, ib.hi);
    });
  }

  if (!search.solve()) return std::nullopt;

  IntervalPartition partition;
  partition.intervals.reserve(search.chosen.size());
  for (int id : search.chosen)
    partition.intervals.emplace_back(search.intervals[static_cast<size_t>(id)].lo,
                                     search.intervals[static_cast<size_t>(id)].hi);
  std::sort(partition.intervals.begin(), partition.intervals.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return canonical_less(a.first, b.first);
              return canonical_less(a.second, b.second);
            });
  return partition;
}

bool validate_interval_partition(const CharPoset& poset,
                                 const IntervalPartition& partition) {
  std::unordered_map<VarSet, int> hits;
  for (VarSet g : poset.ground) hits.emplace(g, 0);
  for (const auto& [lo, hi] : partition.intervals) {
    if (!subset_of(lo, hi) || !subset_of(hi, poset.active)) return false;
    bool inside = true;
    for_each_subset(hi & ~lo, [&](VarSet extra) {
      const auto it = hits.find(lo | extra);
      if (it == hits.end())
        inside = false;
      else
        ++it->second;
    });
    if (!inside) return false;
  }
  for (const auto& [g, count] : hits)
    if (count != 1) return false;
  return true;
}

SdepthResult sdepth(const SqfIdeal& ideal, PosetKind kind, VarSet active,
                    int max_active) {
  const CharPoset poset = char_poset(ideal, kind, active, max_active);
  const int m = set_size(active);
  for (int k = m; k >= 0; --k) {
    auto partition = decide_sdepth(poset, k);
    if (!partition) continue;
    if (k < m && decide_sdepth(poset, k + 1))
      throw std::logic_error("sdepth: descent missed a satisfiable k");
    if (!validate_interval_partition(poset, *partition))
      throw std::logic_error("sdepth: solver returned an invalid partition");
    return SdepthResult{k, *std::move(partition)};
  }
  throw std::logic_error("sdepth: no partition found at k = 0");
}

}  // namespace stanley
