#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stanley/clutter.hpp"
#include "stanley/ideal.hpp"

namespace stanley {

struct GeneratedClutter {
  Clutter clutter;
  ChordalityCertificate certificate;
  std::string stream;  // "graph" or "random"
};

/// Deterministically seeded chordal clutters with minimum edge cardinality
/// at least d. For d = 2 half the output comes from chordal graphs built by
/// iterated simplicial-vertex attachment (so each instance's d-complement
/// is the edge ideal of a graph with chordal complement); the rest are
/// random clutters, each edge candidate of size >= d kept with probability
/// 1/2, antichain-reduced and filtered through is_chordal. May emit fewer
/// than count when the filter rejects too many candidates.
std::vector<GeneratedClutter> generate_chordal_clutters(int n, int d, int count,
                                                        std::uint64_t seed);

/// Random squarefree ideals: up to max_generators random nonempty supports,
/// minimalized.
std::vector<SqfIdeal> generate_random_ideals(int n, int max_generators, int count,
                                             std::uint64_t seed);

}  // namespace stanley
