#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/limits.hpp"

namespace stanley {

enum class PosetKind { ideal, quotient };

/// Characteristic poset of a squarefree module. For kind=ideal the ground
/// set is the upward-closed family {sigma : x_sigma in I}; for
/// kind=quotient the downward-closed family {sigma : x_sigma not in I},
/// i.e. the faces of the Stanley-Reisner complex. Ground elements are
/// subsets of the active set, listed in canonical order.
struct CharPoset {
  int ambient_n = 0;
  VarSet active = 0;
  PosetKind kind = PosetKind::quotient;
  std::vector<VarSet> ground;
};

/// Partition of the ground set into intervals [lo, hi]. Interval [lo, hi]
/// encodes the Stanley space x_lo * K[x_j : j in hi].
struct IntervalPartition {
  std::vector<std::pair<VarSet, VarSet>> intervals;
};

struct SdepthResult {
  int value = 0;
  IntervalPartition certificate;
};

CharPoset char_poset(const SqfIdeal& ideal, PosetKind kind, VarSet active,
                     int max_active = kSdepthCap);

/// Complete exact-cover search: is there an interval partition of the
/// ground set with every |hi| >= k? Admissible intervals are pruned by
/// |hi| >= k and the closure test (hi in ground for the quotient poset,
/// lo in ground for the ideal poset). Branching exploits that a minimal
/// uncovered element is forced to be the bottom of its interval, and picks
/// the minimal element with the fewest usable bottom intervals.
std::optional<IntervalPartition> decide_sdepth(const CharPoset& poset, int k);

/// Stanley depth with certificate: k descends from |active| and the first
/// satisfiable k wins, so the certificate's minimum |hi| equals the value.
/// Unsatisfiability at value+1 is re-checked once.
SdepthResult sdepth(const SqfIdeal& ideal, PosetKind kind, VarSet active,
                    int max_active = kSdepthCap);

/// Independent certificate validation: pairwise disjoint intervals inside
/// the ground set covering it exactly.
bool validate_interval_partition(const CharPoset& poset,
                                 const IntervalPartition& partition);

}  // namespace stanley
