#pragma once

#include <string>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

/// Squarefree monomial ideal given by its minimal generators.
///
/// Generators form a divisibility antichain kept in canonical order
/// (degree, then support as an integer). The zero ideal has no generators;
/// the unit ideal has the single generator 1 (empty support). Variable
/// elimination and localization keep the ambient index space, so an ideal
/// may use only a subset of the ambient variables; operations that need to
/// know which variables count take an explicit active set.
struct SqfIdeal {
  int ambient_n = 0;
  std::vector<SqfMonomial> generators;

  bool is_zero() const { return generators.empty(); }
  bool is_unit() const {
    return generators.size() == 1 && generators.front().support == 0;
  }
  bool is_proper() const { return !is_unit(); }

  std::vector<VarSet> generator_masks() const;
  VarSet support_union() const;

  /// x_sigma lies in the ideal, i.e. some generator divides it.
  bool contains_monomial(VarSet sigma) const;

  /// Canonical constructor: minimalizes, dedups and sorts.
  static SqfIdeal make(int ambient_n, std::vector<VarSet> monomials);

  friend bool operator==(const SqfIdeal&, const SqfIdeal&) = default;
};

/// Divisibility-minimal elements of the input; the generated ideal is
/// unchanged. Throws on mixed ambients or an empty input (no ambient to
/// infer); use the two-argument overload for possibly-empty sets.
SqfIdeal minimalize(const std::vector<SqfMonomial>& monomials);
SqfIdeal minimalize(int ambient_n, const std::vector<SqfMonomial>& monomials);

/// (I : x_i).
SqfIdeal colon_by_variable(const SqfIdeal& ideal, int var);

/// Ideal generated by the generators not divisible by x_i, in the same
/// index space (variable i simply becomes unused).
SqfIdeal eliminate_variable(const SqfIdeal& ideal, int var);

/// Sends x_i -> 1 for every i in the prime, then minimalizes.
SqfIdeal monomial_localization(const SqfIdeal& ideal, const MonomialPrime& prime);

/// Standard polarization. Each x_i^k expands over fresh slots
/// (i,1),...,(i,k); slots are numbered by flattening the pairs (i,j)
/// lexicographically, so the output is deterministic. The output ambient is
/// the sum over i of the maximal exponent of x_i (at least 1).
SqfIdeal polarize(const std::vector<GenMonomial>& minimal_generators);

VarSet support(const SqfMonomial& u);

/// Every generator of inner is a multiple of some generator of outer.
bool is_subideal(const SqfIdeal& inner, const SqfIdeal& outer);

std::string to_string(const SqfIdeal& ideal);
std::string to_string(const SqfMonomial& u);

}  // namespace stanley
