#pragma once

#include <compare>
#include <vector>

#include "stanley/varset.hpp"

namespace stanley {

/// Squarefree monomial x_sigma living in a ring with ambient_n variables.
struct SqfMonomial {
  int ambient_n = 0;
  VarSet support = 0;

  int degree() const { return set_size(support); }
  bool divides(const SqfMonomial& other) const {
    return subset_of(support, other.support);
  }
  bool is_one() const { return support == 0; }

  friend auto operator<=>(const SqfMonomial&, const SqfMonomial&) = default;
};

/// Validates 1-based variable indices and builds x_{vars}.
SqfMonomial make_sqf(int ambient_n, const std::vector<int>& vars);

/// Monomial with arbitrary nonnegative exponents; polarization input.
struct GenMonomial {
  int ambient_n = 0;
  std::vector<int> exponents;  // length ambient_n

  bool squarefree() const;
  int degree() const;
  bool divides(const GenMonomial& other) const;

  friend bool operator==(const GenMonomial&, const GenMonomial&) = default;
};

GenMonomial make_gen(int ambient_n, const std::vector<int>& exponents);

/// Monomial prime ideal generated by a set of variables.
/// The empty set is the zero prime; localizing at it is the identity.
struct MonomialPrime {
  int ambient_n = 0;
  VarSet variables = 0;
};

}  // namespace stanley
