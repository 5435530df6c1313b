#include "stanley/schmitt_vogel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stanley {

namespace {

std::vector<std::vector<SqfMonomial>> normalized_levels(const SvWitness& witness) {
  std::vector<std::vector<SqfMonomial>> levels = witness.levels;
  for (auto& level : levels) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return levels;
}

// u' (squarefree) divides u * u'' iff its support lies in the union.
bool divides_pair_product(VarSet certifier, VarSet u, VarSet u2) {
  return subset_of(certifier, u | u2);
}

}  // namespace

std::string SvCheck::describe() const {
  std::ostringstream os;
  switch (status) {
    case SvStatus::valid:
      return "valid";
    case SvStatus::first_level_size:
      return "condition (i) fails: the first level is not a singleton";
    case SvStatus::pair_condition:
      os << "condition (ii) fails at level " << level << " for the pair "
         << to_string(u) << ", " << to_string(u2);
      return os.str();
    case SvStatus::generation:
      os << "condition (iii) fails: " << to_string(u) << " is not in the union";
      return os.str();
    case SvStatus::monomial_outside_ideal:
      os << "invalid witness: " << to_string(u) << " at level " << level
         << " lies outside the ideal";
      return os.str();
  }
  return "unknown";
}

SvCheck check_sv_witness(const SqfIdeal& ideal, const SvWitness& witness) {
  const auto levels = normalized_levels(witness);
  for (size_t l = 0; l < levels.size(); ++l) {
    for (const auto& u : levels[l]) {
      if (u.ambient_n != ideal.ambient_n)
        throw std::invalid_argument("check_sv_witness: mixed ambient rings");
      if (!ideal.contains_monomial(u.support))
        return SvCheck{SvStatus::monomial_outside_ideal, static_cast<int>(l + 1), u, {}};
    }
  }
  if (!levels.empty() && levels.front().size() != 1)
    return SvCheck{SvStatus::first_level_size, 1, {}, {}};
  for (size_t l = 1; l < levels.size(); ++l) {
    for (size_t a = 0; a < levels[l].size(); ++a) {
      for (size_t b = a + 1; b < levels[l].size(); ++b) {
        const VarSet u = levels[l][a].support;
        const VarSet u2 = levels[l][b].support;
        bool certified = false;
        for (size_t prior = 0; prior < l && !certified; ++prior)
          for (const auto& cand : levels[prior])
            if (divides_pair_product(cand.support, u, u2)) {
              certified = true;
              break;
            }
        if (!certified)
          return SvCheck{SvStatus::pair_condition, static_cast<int>(l + 1), levels[l][a],
                         levels[l][b]};
      }
    }
  }
  // Generation: the witness monomials all lie in the ideal, so the union
  // generates iff every minimal generator appears verbatim.
  for (const auto& g : ideal.generators) {
    bool present = false;
    for (const auto& level : levels) {
      if (std::binary_search(level.begin(), level.end(), g)) {
        present = true;
        break;
      }
    }
    if (!present) return SvCheck{SvStatus::generation, 0, g, {}};
  }
  return SvCheck{};
}

namespace {

struct SvSearch {
  std::vector<VarSet> gens;  // degree descending, then ascending as integers
  int r = 0;
  std::vector<int> level_of;           // 0 = unassigned
  std::vector<int> level_population;   // [1..r]

  bool pair_feasible(size_t pos, int level) const {
    for (size_t j = 0; j < gens.size(); ++j) {
      if (level_of[j] != level || j == pos) continue;
      const VarSet target = gens[pos] | gens[j];
      bool possible = false;
      for (size_t w = 0; w < gens.size() && !possible; ++w) {
        if (w == pos || w == j) continue;
        if (level_of[w] != 0 && level_of[w] >= level) continue;
        if (subset_of(gens[w], target)) possible = true;
      }
      if (!possible) return false;
    }
    return true;
  }

  int empty_levels() const {
    int count = 0;
    for (int l = 1; l <= r; ++l)
      if (level_population[static_cast<size_t>(l)] == 0) ++count;
    return count;
  }

  bool assign(size_t pos) {
    if (pos == gens.size()) return empty_levels() == 0 && final_check();
    const int remaining = static_cast<int>(gens.size() - pos);
    for (int level = 1; level <= r; ++level) {
      if (level == 1 && level_population[1] == 1) continue;
      if (!pair_feasible(pos, level)) continue;
      level_of[pos] = level;
      ++level_population[static_cast<size_t>(level)];
      if (remaining - 1 >= empty_levels() && assign(pos + 1)) return true;
      --level_population[static_cast<size_t>(level)];
      level_of[pos] = 0;
    }
    return false;
  }

  // The incremental feasibility counts unassigned generators as potential
  // certifiers, so a full pass settles every pair exactly.
  bool final_check() const {
    for (size_t a = 0; a < gens.size(); ++a) {
      for (size_t b = a + 1; b < gens.size(); ++b) {
        if (level_of[a] != level_of[b]) continue;
        const VarSet target = gens[a] | gens[b];
        bool certified = false;
        for (size_t w = 0; w < gens.size() && !certified; ++w)
          if (level_of[w] < level_of[a] && level_of[w] >= 1 &&
              subset_of(gens[w], target))
            certified = true;
        if (!certified) return false;
      }
    }
    return true;
  }
};

}  // namespace

SvResult sv_number(const SqfIdeal& ideal, int max_generators) {
  if (ideal.is_zero())
    throw std::invalid_argument("sv_number: zero ideal");
  const int t = static_cast<int>(ideal.generators.size());
  if (t > max_generators)
    throw std::invalid_argument("sv_number: " + std::to_string(t) +
                                " generators exceeds the cap of " +
                                std::to_string(max_generators));

  SvSearch search;
  search.gens = ideal.generator_masks();
  std::sort(search.gens.begin(), search.gens.end(), [](VarSet a, VarSet b) {
    const int da = set_size(a), db = set_size(b);
    if (da != db) return da > db;
    return a < b;
  });

  for (int r = 1; r <= t; ++r) {
    search.r = r;
    search.level_of.assign(search.gens.size(), 0);
    search.level_population.assign(static_cast<size_t>(r) + 1, 0);
    if (!search.assign(0)) continue;
    SvWitness witness;
    witness.levels.resize(static_cast<size_t>(r));
    for (size_t j = 0; j < search.gens.size(); ++j)
      witness.levels[static_cast<size_t>(search.level_of[j] - 1)].push_back(
          SqfMonomial{ideal.ambient_n, search.gens[j]});
    for (auto& level : witness.levels)
      std::sort(level.begin(), level.end());
    if (!check_sv_witness(ideal, witness).ok())
      throw std::logic_error("sv_number: search emitted an invalid witness");
    return SvResult{r, std::move(witness)};
  }
  throw std::logic_error("sv_number: no witness found within t levels");
}

SvWitness transport_localize(const SqfIdeal& ideal, const SvWitness& witness,
                             const MonomialPrime& prime) {
  const SvCheck check = check_sv_witness(ideal, witness);
  if (!check.ok())
    throw std::invalid_argument("transport_localize: " + check.describe());
  SvWitness out;
  for (const auto& level : witness.levels) {
    std::vector<SqfMonomial> mapped;
    mapped.reserve(level.size());
    for (const auto& u : level)
      mapped.push_back(SqfMonomial{u.ambient_n, u.support & ~prime.variables});
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    if (!mapped.empty()) out.levels.push_back(std::move(mapped));
  }
  return out;
}

std::pair<int, SvWitness> transport_eliminate(const SqfIdeal& ideal,
                                              const SvWitness& witness) {
  if (ideal.is_zero())
    throw std::invalid_argument("transport_eliminate: zero ideal");
  const SvCheck check = check_sv_witness(ideal, witness);
  if (!check.ok())
    throw std::invalid_argument("transport_eliminate: " + check.describe());
  const auto levels = normalized_levels(witness);
  if (levels.empty() || levels.front().empty())
    throw std::invalid_argument("transport_eliminate: witness has no first level");
  const VarSet first = levels.front().front().support;
  if (first == 0)
    throw std::invalid_argument("transport_eliminate: first-level monomial is a unit");
  const int var = to_indices(first).front();

  SvWitness out;
  for (const auto& level : levels) {
    std::vector<SqfMonomial> kept;
    for (const auto& u : level)
      if (!has_var(u.support, var)) kept.push_back(u);
    if (!kept.empty()) out.levels.push_back(std::move(kept));
  }
  return {var, std::move(out)};
}

}  // namespace stanley
