#include "stanley/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stanley {

std::vector<VarSet> SqfIdeal::generator_masks() const {
  std::vector<VarSet> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.support);
  return out;
}

VarSet SqfIdeal::support_union() const {
  VarSet s = 0;
  for (const auto& g : generators) s |= g.support;
  return s;
}

bool SqfIdeal::contains_monomial(VarSet sigma) const {
  for (const auto& g : generators)
    if (subset_of(g.support, sigma)) return true;
  return false;
}

SqfIdeal SqfIdeal::make(int ambient_n, std::vector<VarSet> monomials) {
  if (ambient_n < 1 || ambient_n > kMaxVariables)
    throw std::invalid_argument("SqfIdeal::make: ambient_n must be in [1, 64]");
  const VarSet full = full_set(ambient_n);
  for (VarSet m : monomials)
    if (!subset_of(m, full))
      throw std::invalid_argument("SqfIdeal::make: monomial support outside the ambient ring");
  std::sort(monomials.begin(), monomials.end(), canonical_less);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<VarSet> minimal;
  for (VarSet m : monomials) {
    bool divisible = false;
    for (VarSet kept : minimal) {
      if (subset_of(kept, m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) minimal.push_back(m);  // sorted by size, so divisors come first
  }
  SqfIdeal ideal;
  ideal.ambient_n = ambient_n;
  ideal.generators.reserve(minimal.size());
  for (VarSet m : minimal) ideal.generators.push_back(SqfMonomial{ambient_n, m});
  return ideal;
}

SqfIdeal minimalize(const std::vector<SqfMonomial>& monomials) {
  if (monomials.empty())
    throw std::invalid_argument("minimalize: cannot infer the ambient ring from an empty set");
  return minimalize(monomials.front().ambient_n, monomials);
}

SqfIdeal minimalize(int ambient_n, const std::vector<SqfMonomial>& monomials) {
  std::vector<VarSet> masks;
  masks.reserve(monomials.size());
  for (const auto& m : monomials) {
    if (m.ambient_n != ambient_n)
      throw std::invalid_argument("minimalize: mixed ambient rings");
    masks.push_back(m.support);
  }
  return SqfIdeal::make(ambient_n, std::move(masks));
}

SqfIdeal colon_by_variable(const SqfIdeal& ideal, int var) {
  if (var < 1 || var > ideal.ambient_n)
    throw std::invalid_argument("colon_by_variable: variable index out of range");
  std::vector<VarSet> masks;
  masks.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) masks.push_back(g.support & ~var_bit(var));
  return SqfIdeal::make(ideal.ambient_n, std::move(masks));
}

SqfIdeal eliminate_variable(const SqfIdeal& ideal, int var) {
  if (var < 1 || var > ideal.ambient_n)
    throw std::invalid_argument("eliminate_variable: variable index out of range");
  std::vector<VarSet> masks;
  for (const auto& g : ideal.generators)
    if (!has_var(g.support, var)) masks.push_back(g.support);
  return SqfIdeal::make(ideal.ambient_n, std::move(masks));
}

SqfIdeal monomial_localization(const SqfIdeal& ideal, const MonomialPrime& prime) {
  if (prime.ambient_n != ideal.ambient_n)
    throw std::invalid_argument("monomial_localization: mixed ambient rings");
  std::vector<VarSet> masks;
  masks.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) masks.push_back(g.support & ~prime.variables);
  return SqfIdeal::make(ideal.ambient_n, std::move(masks));
}

SqfIdeal polarize(const std::vector<GenMonomial>& minimal_generators) {
  if (minimal_generators.empty()) return SqfIdeal{1, {}};
  const int n = minimal_generators.front().ambient_n;
  for (const auto& g : minimal_generators) {
    if (g.ambient_n != n) throw std::invalid_argument("polarize: mixed ambient rings");
    if (g.degree() == 0)
      throw std::invalid_argument("polarize: the unit monomial is not a minimal generator");
  }
  for (size_t i = 0; i < minimal_generators.size(); ++i)
    for (size_t j = 0; j < minimal_generators.size(); ++j)
      if (i != j && minimal_generators[i].divides(minimal_generators[j]))
        throw std::invalid_argument("polarize: input generators are not minimal");

  std::vector<int> max_exp(static_cast<size_t>(n), 0);
  for (const auto& g : minimal_generators)
    for (int i = 0; i < n; ++i)
      max_exp[static_cast<size_t>(i)] =
          std::max(max_exp[static_cast<size_t>(i)], g.exponents[static_cast<size_t>(i)]);

  // slot_base[i] = first 1-based slot index for variable i+1
  std::vector<int> slot_base(static_cast<size_t>(n), 0);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    slot_base[static_cast<size_t>(i)] = total + 1;
    total += max_exp[static_cast<size_t>(i)];
  }
  const int out_n = std::max(total, 1);
  if (out_n > kMaxVariables)
    throw std::invalid_argument("polarize: polarized ring needs more than 64 variables");

  std::vector<VarSet> masks;
  masks.reserve(minimal_generators.size());
  for (const auto& g : minimal_generators) {
    VarSet m = 0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < g.exponents[static_cast<size_t>(i)]; ++k)
        m |= var_bit(slot_base[static_cast<size_t>(i)] + k);
    masks.push_back(m);
  }
  return SqfIdeal::make(out_n, std::move(masks));
}

VarSet support(const SqfMonomial& u) { return u.support; }

bool is_subideal(const SqfIdeal& inner, const SqfIdeal& outer) {
  if (inner.ambient_n != outer.ambient_n)
    throw std::invalid_argument("is_subideal: mixed ambient rings");
  for (const auto& g : inner.generators)
    if (!outer.contains_monomial(g.support)) return false;
  return true;
}

std::string to_string(const SqfMonomial& u) {
  if (u.support == 0) return "1";
  std::ostringstream os;
  for (int i : to_indices(u.support)) os << 'x' << i;
  return os.str();
}

std::string to_string(const SqfIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < ideal.generators.size(); ++i) {
    if (i) os << ", ";
    os << to_string(ideal.generators[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace stanley
