#pragma once

#include <optional>
#include <vector>

#include "stanley/clutter.hpp"
#include "stanley/ideal.hpp"

namespace stanley {

/// A linear order u_1 > ... > u_t on the generators of an ideal together
/// with the colon counts n_i = number of variables generating
/// (u_1,...,u_{i-1}) : u_i, for i = 2..t.
struct LqOrder {
  std::vector<SqfMonomial> order;
  std::vector<int> colon_counts;  // size max(t-1, 0)
};

struct LqCheck {
  std::optional<LqOrder> order;
  int failing_position = 0;  // first i (1-based, >= 2) whose colon is not variable-generated
  bool ok() const { return order.has_value(); }
};

/// (u_1,...,u_{i-1}) : u_i for a generator sequence; position is 1-based.
SqfIdeal colon_prev(const std::vector<SqfMonomial>& order, int position);

/// Checks whether the ideal has linear quotients with respect to the given
/// order (which must permute the minimal generators).
LqCheck check_lq_order(const SqfIdeal& ideal, const std::vector<SqfMonomial>& order);

/// Complete backtracking search for a linear-quotient order; a prefix is
/// extended only by generators whose colon against it is variable-generated,
/// and dead prefixes are memoized by their generator set.
std::optional<LqOrder> find_lq_order(const SqfIdeal& ideal);

/// Constructive order for the edge ideal of the d-complement of a chordal
/// clutter: recursively order the block divisible by a lowest simplicial
/// vertex (via the (d-1)-complement of the contraction) ahead of the block
/// avoiding it (via the d-complement of the deletion). Throws if the clutter
/// is not chordal or its minimum edge cardinality is below d.
LqOrder chordal_lq_order(const Clutter& c, int d, bool verify_chordal = true);

/// max n_i + 1 for t >= 2; 1 for a principal ideal; 0 for the zero ideal.
int pd_from_lq(const LqOrder& lq);

/// active_variable_count - pd_from_lq: depth of S/I by Auslander-Buchsbaum.
int depth_from_lq(const LqOrder& lq, int active_variable_count);

}  // namespace stanley
