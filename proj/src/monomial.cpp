#include "stanley/monomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace stanley {

SqfMonomial make_sqf(int ambient_n, const std::vector<int>& vars) {
  if (ambient_n < 1 || ambient_n > kMaxVariables)
    throw std::invalid_argument("make_sqf: ambient_n must be in [1, 64]");
  VarSet s = 0;
  for (int v : vars) {
    if (v < 1 || v > ambient_n)
      throw std::invalid_argument("make_sqf: variable index " + std::to_string(v) +
                                  " outside [1, " + std::to_string(ambient_n) + "]");
    s |= var_bit(v);
  }
  return SqfMonomial{ambient_n, s};
}

bool GenMonomial::squarefree() const {
  for (int e : exponents)
    if (e > 1) return false;
  return true;
}

int GenMonomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool GenMonomial::divides(const GenMonomial& other) const {
  if (ambient_n != other.ambient_n) return false;
  for (size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

GenMonomial make_gen(int ambient_n, const std::vector<int>& exponents) {
  if (ambient_n < 1)
    throw std::invalid_argument("make_gen: ambient_n must be positive");
  if (static_cast<int>(exponents.size()) != ambient_n)
    throw std::invalid_argument("make_gen: exponent vector length must equal ambient_n");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("make_gen: exponents must be nonnegative");
  return GenMonomial{ambient_n, exponents};
}

}  // namespace stanley
