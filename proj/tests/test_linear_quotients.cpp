#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "stanley/depth_oracle.hpp"
#include "stanley/generate.hpp"
#include "stanley/linear_quotients.hpp"
#include "test_util.hpp"

using namespace stanley;
using testutil::mask;

namespace {

SqfIdeal ideal(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<VarSet> masks;
  for (const auto& g : gens) masks.push_back(mask(g));
  return SqfIdeal::make(n, std::move(masks));
}

std::vector<SqfMonomial> mons(int n, std::initializer_list<std::initializer_list<int>> supports) {
  std::vector<SqfMonomial> out;
  for (const auto& s : supports) out.push_back(SqfMonomial{n, mask(s)});
  return out;
}

}  // namespace

TEST_CASE("colon against a prefix") {
  CHECK(colon_prev(mons(3, {{1, 2}, {1, 3}}), 2) == ideal(3, {{2}}));
  CHECK(colon_prev(mons(3, {{1, 2}, {1, 3}, {2, 3}}), 3) == ideal(3, {{1}}));
  CHECK(colon_prev(mons(4, {{1, 2}, {3, 4}}), 2) == ideal(4, {{1, 2}}));
  CHECK_THROWS_AS(colon_prev(mons(3, {{1, 2}}), 1), std::invalid_argument);
  CHECK_THROWS_AS(colon_prev(mons(3, {{1, 2}}), 2), std::invalid_argument);
}

TEST_CASE("checking a linear-quotient order") {
  const SqfIdeal triangle = ideal(3, {{1, 2}, {1, 3}, {2, 3}});
  const auto good = check_lq_order(triangle, mons(3, {{1, 2}, {1, 3}, {2, 3}}));
  REQUIRE(good.ok());
  CHECK(good.order->colon_counts == std::vector<int>{1, 1});

  const SqfIdeal pairs = ideal(4, {{1, 2}, {3, 4}});
  const auto bad = check_lq_order(pairs, mons(4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(bad.ok());
  CHECK(bad.failing_position == 2);
  const auto bad2 = check_lq_order(pairs, mons(4, {{3, 4}, {1, 2}}));
  CHECK(bad2.failing_position == 2);

  const auto principal = check_lq_order(ideal(3, {{1, 2}}), mons(3, {{1, 2}}));
  REQUIRE(principal.ok());
  CHECK(principal.order->colon_counts.empty());

  CHECK_THROWS_AS(check_lq_order(triangle, mons(3, {{1, 2}, {1, 3}})), std::invalid_argument);
}

TEST_CASE("finding a linear-quotient order") {
  CHECK(find_lq_order(ideal(3, {{1, 2}, {1, 3}, {2, 3}})).has_value());
  CHECK_FALSE(find_lq_order(ideal(4, {{1, 2}, {3, 4}})).has_value());
  CHECK_THROWS_AS(find_lq_order(SqfIdeal{3, {}}), std::invalid_argument);

  // all degree-2 monomials in 4 variables: the lexicographic order works
  const SqfIdeal full2 = SqfIdeal::make(4, k_subsets(full_set(4), 2));
  std::vector<SqfMonomial> lex = full2.generators;
  std::sort(lex.begin(), lex.end(),
            [](const SqfMonomial& a, const SqfMonomial& b) { return a.support < b.support; });
  CHECK(check_lq_order(full2, lex).ok());
  CHECK(find_lq_order(full2).has_value());
}

TEST_CASE("pd and depth from colon counts") {
  const SqfIdeal triangle = ideal(3, {{1, 2}, {1, 3}, {2, 3}});
  const LqOrder lq = *find_lq_order(triangle);
  CHECK(pd_from_lq(lq) == 2);
  CHECK(depth_from_lq(lq, 3) == 1);

  const LqOrder principal = *find_lq_order(ideal(5, {{1, 2, 3}}));
  CHECK(pd_from_lq(principal) == 1);
  CHECK(depth_from_lq(principal, 5) == 4);

  // maximal ideal in the natural order: n_i = i - 1, so pd = n
  for (int n = 2; n <= 5; ++n) {
    const SqfIdeal maximal = SqfIdeal::make(n, k_subsets(full_set(n), 1));
    std::vector<SqfMonomial> natural = maximal.generators;
    const auto check = check_lq_order(maximal, natural);
    REQUIRE(check.ok());
    for (int i = 2; i <= n; ++i)
      CHECK(check.order->colon_counts[static_cast<size_t>(i - 2)] == i - 1);
    CHECK(pd_from_lq(*check.order) == n);
    CHECK(depth_from_lq(*check.order, n) == 0);
  }

  CHECK(pd_from_lq(LqOrder{}) == 0);
}

TEST_CASE("search agrees with the full permutation scan") {
  std::mt19937_64 rng(43);
  int with_order = 0, without = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<VarSet> masks;
    for (int i = 0; i < 4; ++i) {
      const VarSet m = rng() & full_set(n);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    const SqfIdeal I = SqfIdeal::make(n, masks);
    if (I.generators.size() > 5) continue;
    std::vector<SqfMonomial> perm = I.generators;
    std::sort(perm.begin(), perm.end());
    bool any = false;
    do {
      any = any || check_lq_order(I, perm).ok();
    } while (!any && std::next_permutation(perm.begin(), perm.end()));
    CHECK(find_lq_order(I).has_value() == any);
    (any ? with_order : without) += 1;
  }
  CHECK(with_order >= 40);
  CHECK(without >= 5);
}

TEST_CASE("pd is the same for every valid order") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<VarSet> masks;
    for (int i = 0; i < 4; ++i) {
      const VarSet m = rng() & full_set(n);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    const SqfIdeal I = SqfIdeal::make(n, masks);
    if (I.generators.size() > 6) continue;
    std::vector<SqfMonomial> perm = I.generators;
    std::sort(perm.begin(), perm.end());
    int seen_pd = -1;
    do {
      const auto check = check_lq_order(I, perm);
      if (!check.ok()) continue;
      const int pd = pd_from_lq(*check.order);
      if (seen_pd < 0) seen_pd = pd;
      CHECK(pd == seen_pd);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("constructive order for chordal d-complements") {
  SUBCASE("single 3-edge, d = 2") {
    const Clutter c = Clutter::make(3, {mask({1, 2, 3})});
    const LqOrder lq = chordal_lq_order(c, 2);
    CHECK(lq.order.size() == 3);
    CHECK(check_lq_order(edge_ideal(d_complement(c, 2)), lq.order).ok());
    CHECK(depth_from_lq(lq, 3) == 1);
  }
  SUBCASE("empty complement gives the empty order") {
    const Clutter k3 = Clutter::make(3, {mask({1, 2}), mask({1, 3}), mask({2, 3})});
    CHECK(chordal_lq_order(k3, 2).order.empty());
  }
  SUBCASE("d = 1 orders the missing vertices") {
    const Clutter c = Clutter::make(3, {mask({1})});
    const LqOrder lq = chordal_lq_order(c, 1);
    CHECK(lq.order.size() == 2);
    CHECK(check_lq_order(edge_ideal(d_complement(c, 1)), lq.order).ok());
  }
  SUBCASE("rejects non-chordal input") {
    const Clutter c4 = Clutter::make(4, {mask({1, 2}), mask({2, 3}), mask({3, 4}), mask({1, 4})});
    CHECK_THROWS_AS(chordal_lq_order(c4, 2), std::invalid_argument);
  }
  SUBCASE("rejects d above the minimum edge cardinality") {
    const Clutter c = Clutter::make(3, {mask({1, 2})});
    CHECK_THROWS_AS(chordal_lq_order(c, 3), std::invalid_argument);
  }
}

TEST_CASE("chordal orders validate across a generated sweep") {
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (const auto& gen : generate_chordal_clutters(n, d, 6, 99)) {
        const LqOrder lq = chordal_lq_order(gen.clutter, d, false);
        const SqfIdeal I = edge_ideal(d_complement(gen.clutter, d));
        if (I.is_zero()) {
          CHECK(lq.order.empty());
          continue;
        }
        CHECK(check_lq_order(I, lq.order).ok());
        CHECK(depth_from_lq(lq, n) == depth_quotient(I, full_set(n)));
      }
    }
  }
}

TEST_CASE("depth from linear quotients matches the oracle on random ideals") {
  std::mt19937_64 rng(41);
  int agreed = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    std::vector<VarSet> masks;
    for (int i = 0; i < 4; ++i) {
      const VarSet m = rng() & full_set(n);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    const SqfIdeal I = SqfIdeal::make(n, masks);
    if (I.is_unit()) continue;
    const auto lq = find_lq_order(I);
    if (!lq) continue;
    CHECK(depth_from_lq(*lq, n) == depth_quotient(I, full_set(n)));
    ++agreed;
  }
  CHECK(agreed >= 40);
}
