#pragma once

#include <map>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/limits.hpp"
#include "stanley/varset.hpp"

namespace stanley {

/// Clutter: an antichain of nonempty vertex subsets on 1..n_vertices.
/// Minor operations shrink active_vertices instead of reindexing.
/// Contraction can create the empty edge; such a degenerate clutter is
/// representable (its edge set is then exactly {empty}).
struct Clutter {
  int n_vertices = 0;
  VarSet active = 0;
  std::vector<VarSet> edges;  // canonical order, antichain, each subset of active

  bool has_empty_edge() const { return !edges.empty() && edges.front() == 0; }
  bool has_edges() const { return !edges.empty(); }
  int active_count() const { return set_size(active); }

  /// Smallest edge cardinality, or 0 when there are no edges.
  int min_edge_cardinality() const;

  /// Validates the antichain property (throws) and sorts canonically.
  static Clutter make(int n_vertices, std::vector<VarSet> edges);
  static Clutter make(int n_vertices, VarSet active, std::vector<VarSet> edges);

  friend bool operator==(const Clutter&, const Clutter&) = default;
};

/// Identifies a minor: the vertex sets removed by deletion and by
/// contraction. The two sets are disjoint; operations on distinct vertices
/// commute, so the pair determines the minor.
struct MinorKey {
  VarSet deleted = 0;
  VarSet contracted = 0;

  friend auto operator<=>(const MinorKey&, const MinorKey&) = default;
};

/// Output of the chordality decision. For a chordal clutter,
/// simplicial_choice records one simplicial vertex per visited
/// non-degenerate minor (degenerate minors, i.e. with an empty edge, no
/// edges or no vertices, pass vacuously and carry no entry). For a
/// non-chordal clutter, witness names a minor with no simplicial vertex.
struct ChordalityCertificate {
  bool chordal = false;
  MinorKey witness;
  std::map<MinorKey, int> simplicial_choice;
};

Clutter deletion(const Clutter& c, int v);
Clutter contraction(const Clutter& c, int v);

/// True iff for every two distinct edges e1, e2 through v some edge lies
/// inside (e1 ∪ e2) \ {v}.
bool is_simplicial(const Clutter& c, int v);

/// Decides whether every minor has a simplicial vertex, by memoized
/// traversal over MinorKeys (at most 3^n states).
ChordalityCertificate is_chordal(const Clutter& c, int max_vertices = kChordalityCap);

/// Clutter of all d-subsets of the active vertices that are not edges of c.
Clutter d_complement(const Clutter& c, int d);

/// Ideal generated by x_e over the edges. Throws on an empty edge.
SqfIdeal edge_ideal(const Clutter& c);

/// Dirac chordality for 2-uniform clutters via perfect elimination.
bool graph_is_chordal(const Clutter& g);

/// 2-subsets of the active vertices that are not edges of g.
Clutter complement_graph(const Clutter& g);

/// Applies the key's deletions then contractions, ascending by index.
Clutter reconstruct_minor(const Clutter& c, const MinorKey& key);

/// Empty edge present, no edges, or no active vertices.
bool is_degenerate(const Clutter& c);

}  // namespace stanley
