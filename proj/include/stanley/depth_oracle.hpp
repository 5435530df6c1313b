#pragma once

#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/limits.hpp"

namespace stanley {

/// Coefficient field for homology ranks. Rational ranks are computed by
/// fraction-free integer elimination (exact, deterministic); the prime
/// field is a faster alternative whose ranks agree in the absence of
/// torsion.
enum class Field { rationals, prime_field };

struct DepthOptions {
  Field field = Field::rationals;
  long prime = 32003;
  int max_active = kDepthCap;
};

/// Stanley-Reisner complex of a proper squarefree ideal: sigma is a face
/// iff x_sigma is not in the ideal. Stored as the predicate data (the
/// minimal non-faces), not a face list.
struct SimplicialComplex {
  int ambient_n = 0;
  VarSet active = 0;
  std::vector<VarSet> minimal_non_faces;

  bool is_face(VarSet sigma) const;
};

SimplicialComplex stanley_reisner(const SqfIdeal& ideal, VarSet active);

/// Ranks of reduced simplicial homology of the induced subcomplex on
/// sigma. Entry [k+1] is the rank in dimension k, for k = -1 .. |sigma|-1.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& delta,
                                        VarSet sigma, Field field,
                                        long prime = 32003);

/// The full Hochster sweep data: homology ranks of every induced
/// subcomplex, indexed by the subset of active variables.
struct HomologyProfile {
  std::vector<std::pair<VarSet, std::vector<int>>> by_subset;
};

HomologyProfile homology_profile(const SimplicialComplex& delta, Field field,
                                 long prime = 32003);

/// pd(S/I) by Hochster's formula: the largest j such that some sigma has
/// nonzero reduced homology in dimension |sigma| - j - 1. Sweeps all
/// subsets of the active set.
int projective_dimension(const SqfIdeal& ideal, VarSet active,
                         const DepthOptions& opts = {});

/// |active| - pd(S/I); requires a proper ideal (zero ideal gives |active|).
int depth_quotient(const SqfIdeal& ideal, VarSet active,
                   const DepthOptions& opts = {});

/// depth_quotient + 1; requires a nonzero proper ideal.
int depth_ideal(const SqfIdeal& ideal, VarSet active,
                const DepthOptions& opts = {});

}  // namespace stanley
