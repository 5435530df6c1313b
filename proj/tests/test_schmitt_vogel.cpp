#include <random>
#include <stdexcept>

#include "doctest.h"
#include "stanley/schmitt_vogel.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/verify.hpp"
#include "test_util.hpp"

using namespace stanley;
using testutil::mask;

namespace {

SqfIdeal ideal(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<VarSet> masks;
  for (const auto& g : gens) masks.push_back(mask(g));
  return SqfIdeal::make(n, std::move(masks));
}

SvWitness witness(int n, std::initializer_list<std::initializer_list<std::initializer_list<int>>> levels) {
  SvWitness w;
  for (const auto& level : levels) {
    std::vector<SqfMonomial> mons;
    for (const auto& m : level) mons.push_back(SqfMonomial{n, mask(m)});
    w.levels.push_back(std::move(mons));
  }
  return w;
}

}  // namespace

TEST_CASE("witness checking") {
  const SqfIdeal I = worked_example_1();
  SUBCASE("the two-level witness for the first worked example") {
    CHECK(check_sv_witness(I, witness(4, {{{1, 2}}, {{1, 3}, {2, 3, 4}}})).ok());
  }
  SUBCASE("the reference three-level witness for the second example") {
    CHECK(check_sv_witness(worked_example_2(), worked_example_2_witness()).ok());
  }
  SUBCASE("first level must be a singleton") {
    const SvCheck c = check_sv_witness(I, witness(4, {{{1, 2}, {1, 3}}, {{2, 3, 4}}}));
    CHECK(c.status == SvStatus::first_level_size);
  }
  SUBCASE("pair condition pinpoints the offending pair") {
    // x1x2 does not divide x3x4 * x1x3x4, and nothing else sits below level 2
    const SvCheck c = check_sv_witness(ideal(4, {{1, 2}, {3, 4}}),
                                       witness(4, {{{1, 2}}, {{3, 4}, {1, 3, 4}}}));
    CHECK(c.status == SvStatus::pair_condition);
    CHECK(c.level == 2);
    CHECK(c.u.support == mask({3, 4}));
    CHECK(c.u2.support == mask({1, 3, 4}));
  }
  SUBCASE("monomials outside the ideal are an error, not a failure") {
    const SvCheck c = check_sv_witness(I, witness(4, {{{4}}}));
    CHECK(c.status == SvStatus::monomial_outside_ideal);
  }
  SUBCASE("union must generate") {
    const SvCheck c = check_sv_witness(I, witness(4, {{{1, 2}}, {{1, 3}}}));
    CHECK(c.status == SvStatus::generation);
  }
  SUBCASE("witness monomials may sit above the generators") {
    // x1x2x3 lies in the ideal without being a generator
    CHECK(check_sv_witness(I, witness(4, {{{1, 2}}, {{1, 3}, {2, 3, 4}}, {{1, 2, 3}}})).ok());
  }
  SUBCASE("empty witness is valid exactly for the zero ideal") {
    CHECK(check_sv_witness(SqfIdeal{3, {}}, SvWitness{}).ok());
    CHECK(check_sv_witness(ideal(3, {{1}}), SvWitness{}).status == SvStatus::generation);
  }
}

TEST_CASE("restricted solver reproduces the known values") {
  CHECK(sv_number(ideal(5, {{1, 2, 3}})).r == 1);
  CHECK(sv_number(worked_example_1()).r == 2);
  CHECK(sv_number(worked_example_2()).r == 3);
  CHECK_THROWS_AS(sv_number(SqfIdeal{3, {}}), std::invalid_argument);
  CHECK_THROWS_AS(sv_number(worked_example_2(), 5), std::invalid_argument);
}

TEST_CASE("solver witnesses validate and partition the generators") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<VarSet> masks;
    for (int i = 0; i < 5; ++i) {
      const VarSet m = rng() & full_set(n);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    const SqfIdeal I = SqfIdeal::make(n, masks);
    const SvResult result = sv_number(I);
    CHECK(check_sv_witness(I, result.witness).ok());
    size_t total = 0;
    for (const auto& level : result.witness.levels) total += level.size();
    CHECK(total == I.generators.size());
    CHECK(result.r >= 1);
  }
}

namespace {

// Brute force over every assignment of generators to levels 1..r with a
// singleton first level, validated through the public checker only.
int naive_sv(const SqfIdeal& I) {
  const int t = static_cast<int>(I.generators.size());
  for (int r = 1; r <= t; ++r) {
    std::vector<int> level(static_cast<size_t>(t), 1);
    while (true) {
      SvWitness w;
      w.levels.assign(static_cast<size_t>(r), {});
      for (int i = 0; i < t; ++i)
        w.levels[static_cast<size_t>(level[static_cast<size_t>(i)] - 1)].push_back(
            I.generators[static_cast<size_t>(i)]);
      bool shaped = w.levels.front().size() == 1;
      for (const auto& l : w.levels) shaped = shaped && !l.empty();
      if (shaped && check_sv_witness(I, w).ok()) return r;
      int pos = t - 1;
      while (pos >= 0 && level[static_cast<size_t>(pos)] == r) {
        level[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++level[static_cast<size_t>(pos)];
    }
  }
  return t;
}

}  // namespace

TEST_CASE("restricted solver is minimal over all level assignments") {
  std::mt19937_64 rng(89);
  int compared = 0;
  for (int trial = 0; trial < 200 && compared < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<VarSet> masks;
    for (int i = 0; i < 4; ++i) {
      const VarSet m = rng() & full_set(n);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    const SqfIdeal I = SqfIdeal::make(n, masks);
    if (I.generators.size() > 5) continue;
    CHECK(sv_number(I).r == naive_sv(I));
    ++compared;
  }
  CHECK(compared >= 60);
  CHECK(naive_sv(worked_example_1()) == 2);
}

TEST_CASE("localization transport") {
  const SqfIdeal I = worked_example_1();
  const SvResult sv = sv_number(I);
  SUBCASE("principal prime") {
    const MonomialPrime p{4, mask({1})};
    const SvWitness moved = transport_localize(I, sv.witness, p);
    CHECK(check_sv_witness(monomial_localization(I, p), moved).ok());
    CHECK(moved.level_count() <= sv.r);
  }
  SUBCASE("empty prime is the identity") {
    const SvWitness moved = transport_localize(I, sv.witness, MonomialPrime{4, 0});
    CHECK(check_sv_witness(I, moved).ok());
    CHECK(moved.level_count() == sv.r);
  }
  SUBCASE("localizing away every generator reaches the unit ideal") {
    const MonomialPrime p{4, mask({1, 2, 3, 4})};
    const SvWitness moved = transport_localize(I, sv.witness, p);
    const SqfIdeal localized = monomial_localization(I, p);
    CHECK(localized.is_unit());
    CHECK(check_sv_witness(localized, moved).ok());
  }
  SUBCASE("invalid witnesses are rejected") {
    CHECK_THROWS_AS(transport_localize(I, witness(4, {{{4}}}), MonomialPrime{4, 0}),
                    std::invalid_argument);
  }
}

TEST_CASE("elimination transport") {
  const SqfIdeal I = worked_example_1();
  SUBCASE("worked example, lowest dividing variable") {
    const SvWitness w = witness(4, {{{1, 2}}, {{1, 3}, {2, 3, 4}}});
    const auto [var, moved] = transport_eliminate(I, w);
    CHECK(var == 1);
    REQUIRE(moved.level_count() == 1);
    CHECK(moved.levels.front() == std::vector<SqfMonomial>{SqfMonomial{4, mask({2, 3, 4})}});
    CHECK(check_sv_witness(eliminate_variable(I, var), moved).ok());
  }
  SUBCASE("principal ideal eliminates to the zero ideal") {
    const SqfIdeal principal = ideal(3, {{1, 2}});
    const auto [var, moved] = transport_eliminate(principal, sv_number(principal).witness);
    CHECK(var == 1);
    CHECK(moved.level_count() == 0);
    CHECK(eliminate_variable(principal, var).is_zero());
    CHECK(check_sv_witness(eliminate_variable(principal, var), moved).ok());
  }
  SUBCASE("second worked example drops to two levels") {
    const auto [var, moved] = transport_eliminate(worked_example_2(), worked_example_2_witness());
    CHECK(var == 1);
    CHECK(moved.level_count() <= 2);
    CHECK(check_sv_witness(eliminate_variable(worked_example_2(), var), moved).ok());
  }
}

TEST_CASE("transports shrink the level count across random ideals") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<VarSet> masks;
    for (int i = 0; i < 4; ++i) {
      const VarSet m = rng() & full_set(n);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    const SqfIdeal I = SqfIdeal::make(n, masks);
    if (I.is_unit()) continue;
    const SvResult sv = sv_number(I);
    for (int v = 1; v <= n; ++v) {
      const MonomialPrime p{n, var_bit(v)};
      const SvWitness moved = transport_localize(I, sv.witness, p);
      CHECK(check_sv_witness(monomial_localization(I, p), moved).ok());
      CHECK(moved.level_count() <= sv.r);
    }
    const auto [var, moved] = transport_eliminate(I, sv.witness);
    CHECK(check_sv_witness(eliminate_variable(I, var), moved).ok());
    CHECK(moved.level_count() <= sv.r - 1);
  }
}

TEST_CASE("Stanley depth dominates the Schmitt-Vogel bounds on random ideals") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);  // up to 5 here; the sweep goes to 6
    std::vector<VarSet> masks;
    for (int i = 0; i < 4; ++i) {
      const VarSet m = rng() & full_set(n);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    const SqfIdeal I = SqfIdeal::make(n, masks);
    if (I.is_unit() || I.is_zero()) continue;
    const int r = sv_number(I).r;
    CHECK(sdepth(I, PosetKind::ideal, full_set(n)).value >= n - r + 1);
    CHECK(sdepth(I, PosetKind::quotient, full_set(n)).value >= n - r);
  }
}
