#include "stanley/linear_quotients.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace stanley {

SqfIdeal colon_prev(const std::vector<SqfMonomial>& order, int position) {
  const int t = static_cast<int>(order.size());
  if (position < 2 || position > t)
    throw std::invalid_argument("colon_prev: position must be in [2, t]");
  const int n = order.front().ambient_n;
  const VarSet target = order[static_cast<size_t>(position - 1)].support;
  std::vector<VarSet> residues;
  residues.reserve(static_cast<size_t>(position - 1));
  for (int j = 0; j < position - 1; ++j)
    residues.push_back(order[static_cast<size_t>(j)].support & ~target);
  return SqfIdeal::make(n, std::move(residues));
}

namespace {

bool variable_generated(const SqfIdeal& ideal) {
  for (const auto& g : ideal.generators)
    if (g.degree() != 1) return false;
  return true;
}

}  // namespace

LqCheck check_lq_order(const SqfIdeal& ideal, const std::vector<SqfMonomial>& order) {
  std::vector<SqfMonomial> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<SqfMonomial> gens = ideal.generators;
  std::sort(gens.begin(), gens.end());
  if (sorted != gens)
    throw std::invalid_argument("check_lq_order: order is not a permutation of the generators");

  LqOrder lq;
  lq.order = order;
  const int t = static_cast<int>(order.size());
  for (int i = 2; i <= t; ++i) {
    const SqfIdeal colon = colon_prev(order, i);
    if (!variable_generated(colon)) return LqCheck{std::nullopt, i};
    lq.colon_counts.push_back(static_cast<int>(colon.generators.size()));
  }
  return LqCheck{std::move(lq), 0};
}

namespace {

// The colon of a generator set against g is variable-generated iff every
// residue u \ g contains some one-variable residue.
bool extension_ok(const std::vector<VarSet>& used, VarSet g) {
  VarSet singles = 0;
  for (VarSet u : used) {
    const VarSet r = u & ~g;
    if (set_size(r) == 1) singles |= r;
  }
  for (VarSet u : used) {
    const VarSet r = u & ~g;
    if (set_size(r) != 1 && (r & singles) == 0) return false;
  }
  return true;
}

struct LqSearch {
  std::vector<VarSet> gens;
  std::vector<int> prefix;
  std::vector<VarSet> prefix_masks;
  std::unordered_set<std::uint64_t> dead;

  bool extend(std::uint64_t used_bits) {
    if (prefix.size() == gens.size()) return true;
    if (dead.count(used_bits)) return false;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (used_bits & (std::uint64_t{1} << i)) continue;
      if (!extension_ok(prefix_masks, gens[i])) continue;
      prefix.push_back(static_cast<int>(i));
      prefix_masks.push_back(gens[i]);
      if (extend(used_bits | (std::uint64_t{1} << i))) return true;
      prefix.pop_back();
      prefix_masks.pop_back();
    }
    dead.insert(used_bits);
    return false;
  }
};

}  // namespace

std::optional<LqOrder> find_lq_order(const SqfIdeal& ideal) {
  if (ideal.is_zero())
    throw std::invalid_argument("find_lq_order: zero ideal");
  if (ideal.generators.size() > 63)
    throw std::invalid_argument("find_lq_order: too many generators");
  LqSearch search;
  search.gens = ideal.generator_masks();
  if (!search.extend(0)) return std::nullopt;
  std::vector<SqfMonomial> order;
  order.reserve(search.prefix.size());
  for (int i : search.prefix)
    order.push_back(ideal.generators[static_cast<size_t>(i)]);
  LqCheck check = check_lq_order(ideal, order);
  if (!check.ok())
    throw std::logic_error("find_lq_order: search produced an invalid order");
  return std::move(check.order);
}

namespace {

// Generator order of the proposition's recursion: the block divisible by
// the chosen simplicial vertex first, ties at the base cases broken
// lexicographically by support.
std::vector<VarSet> chordal_order_rec(const Clutter& c, int d) {
  std::vector<VarSet> gens = d_complement(c, d).edges;
  if (gens.empty()) return gens;
  if (c.active_count() == 1 || d == 1) {
    std::sort(gens.begin(), gens.end());
    return gens;
  }
  int v = 0;
  for (int w : to_indices(c.active)) {
    if (is_simplicial(c, w)) {
      v = w;
      break;
    }
  }
  if (v == 0)
    throw std::invalid_argument("chordal_lq_order: clutter has no simplicial vertex");
  std::vector<VarSet> head = chordal_order_rec(contraction(c, v), d - 1);
  for (VarSet& m : head) m |= var_bit(v);
  std::vector<VarSet> tail = chordal_order_rec(deletion(c, v), d);
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

LqOrder chordal_lq_order(const Clutter& c, int d, bool verify_chordal) {
  if (d < 1) throw std::invalid_argument("chordal_lq_order: d must be positive");
  if (c.has_edges() && c.min_edge_cardinality() < d)
    throw std::invalid_argument("chordal_lq_order: minimum edge cardinality below d");
  if (verify_chordal && !is_chordal(c).chordal)
    throw std::invalid_argument("chordal_lq_order: clutter is not chordal");

  const SqfIdeal ideal = edge_ideal(d_complement(c, d));
  const std::vector<VarSet> masks = chordal_order_rec(c, d);
  std::vector<SqfMonomial> order;
  order.reserve(masks.size());
  for (VarSet m : masks) order.push_back(SqfMonomial{c.n_vertices, m});
  LqCheck check = check_lq_order(ideal, order);
  if (!check.ok())
    throw std::logic_error("chordal_lq_order: constructed order fails the colon checks");
  return *std::move(check.order);
}

int pd_from_lq(const LqOrder& lq) {
  if (lq.order.empty()) return 0;
  if (lq.order.size() == 1) return 1;
  return *std::max_element(lq.colon_counts.begin(), lq.colon_counts.end()) + 1;
}

int depth_from_lq(const LqOrder& lq, int active_variable_count) {
  return active_variable_count - pd_from_lq(lq);
}

}  // namespace stanley
