#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/limits.hpp"

namespace stanley {

/// Layered family P_1,...,P_r of monomials of an ideal. A valid witness
/// has |P_1| = 1, every pair u != u'' in P_l divisible-certified by some
/// u' in a strictly earlier level (u' | u*u''), and the union generating
/// the ideal. Levels hold squarefree monomials; only the pair products are
/// non-squarefree, and since u' is squarefree, u' | u*u'' is exactly
/// support(u') being contained in support(u) ∪ support(u'').
struct SvWitness {
  std::vector<std::vector<SqfMonomial>> levels;

  int level_count() const { return static_cast<int>(levels.size()); }
};

enum class SvStatus {
  valid,
  first_level_size,        // condition (i): |P_1| != 1
  pair_condition,          // condition (ii) violated at (level, u, u2)
  generation,              // condition (iii): union does not generate
  monomial_outside_ideal,  // invalid witness, distinct from a plain failure
};

struct SvCheck {
  SvStatus status = SvStatus::valid;
  int level = 0;      // 1-based level of the violation, when applicable
  SqfMonomial u, u2;  // offending pair (or single monomial)

  bool ok() const { return status == SvStatus::valid; }
  std::string describe() const;
};

/// Checks the three witness conditions and pinpoints the first violation.
/// A monomial outside the ideal is reported as monomial_outside_ideal
/// rather than a condition failure. The empty witness is valid exactly for
/// the zero ideal.
SvCheck check_sv_witness(const SqfIdeal& ideal, const SvWitness& witness);

struct SvResult {
  int r = 0;
  SvWitness witness;
};

/// Smallest r admitting a witness whose levels partition the minimal
/// generators (each generator in exactly one level, no other monomials).
/// The search is complete within that class, so the result is an upper
/// bound for the unrestricted minimum: levels are assigned to generators
/// in degree-descending order by backtracking, with the pair condition
/// checked incrementally and certified exactly at the leaves.
SvResult sv_number(const SqfIdeal& ideal, int max_generators = kSvGeneratorCap);

/// Applies x_i -> 1 (i in prime) to every level of a valid witness; the
/// result is a witness for the localized ideal with at most as many levels.
SvWitness transport_localize(const SqfIdeal& ideal, const SvWitness& witness,
                             const MonomialPrime& prime);

/// Picks the lowest variable x_i dividing the unique first-level monomial,
/// restricts every level to the monomials not divisible by x_i and drops
/// empty levels. Returns i and a witness for eliminate_variable(ideal, i)
/// with at most r-1 levels.
std::pair<int, SvWitness> transport_eliminate(const SqfIdeal& ideal,
                                              const SvWitness& witness);

}  // namespace stanley
