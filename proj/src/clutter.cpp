#include "stanley/clutter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace stanley {

namespace {

std::vector<VarSet> sorted_unique(std::vector<VarSet> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<VarSet> minimal_elements(std::vector<VarSet> v) {
  v = sorted_unique(std::move(v));
  std::vector<VarSet> minimal;
  for (VarSet e : v) {
    bool dominated = false;
    for (VarSet kept : minimal) {
      if (subset_of(kept, e)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(e);
  }
  return minimal;
}

void require_active(const Clutter& c, int v, const char* op) {
  if (v < 1 || v > c.n_vertices || !has_var(c.active, v))
    throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(v) +
                                " is not active");
}

}  // namespace

int Clutter::min_edge_cardinality() const {
  if (edges.empty()) return 0;
  return set_size(edges.front());  // canonical order puts a smallest edge first
}

Clutter Clutter::make(int n_vertices, std::vector<VarSet> edges) {
  return make(n_vertices, full_set(n_vertices), std::move(edges));
}

Clutter Clutter::make(int n_vertices, VarSet active, std::vector<VarSet> edges) {
  if (n_vertices < 1 || n_vertices > kMaxVariables)
    throw std::invalid_argument("Clutter::make: vertex count must be in [1, 64]");
  if (!subset_of(active, full_set(n_vertices)))
    throw std::invalid_argument("Clutter::make: active vertices outside the vertex set");
  edges = sorted_unique(std::move(edges));
  for (VarSet e : edges) {
    if (e == 0) throw std::invalid_argument("Clutter::make: empty edge");
    if (!subset_of(e, active))
      throw std::invalid_argument("Clutter::make: edge leaves the active vertex set");
  }
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = 0; j < edges.size(); ++j)
      if (i != j && subset_of(edges[i], edges[j]))
        throw std::invalid_argument("Clutter::make: edge set is not an antichain");
  Clutter c;
  c.n_vertices = n_vertices;
  c.active = active;
  c.edges = std::move(edges);
  return c;
}

Clutter deletion(const Clutter& c, int v) {
  require_active(c, v, "deletion");
  Clutter out;
  out.n_vertices = c.n_vertices;
  out.active = c.active & ~var_bit(v);
  for (VarSet e : c.edges)
    if (!has_var(e, v)) out.edges.push_back(e);
  return out;
}

Clutter contraction(const Clutter& c, int v) {
  require_active(c, v, "contraction");
  std::vector<VarSet> residues;
  residues.reserve(c.edges.size());
  for (VarSet e : c.edges) residues.push_back(e & ~var_bit(v));
  Clutter out;
  out.n_vertices = c.n_vertices;
  out.active = c.active & ~var_bit(v);
  out.edges = minimal_elements(std::move(residues));
  return out;
}

bool is_simplicial(const Clutter& c, int v) {
  require_active(c, v, "is_simplicial");
  std::vector<VarSet> through;
  for (VarSet e : c.edges)
    if (has_var(e, v)) through.push_back(e);
  for (size_t i = 0; i < through.size(); ++i) {
    for (size_t j = i + 1; j < through.size(); ++j) {
      const VarSet target = (through[i] | through[j]) & ~var_bit(v);
      bool found = false;
      for (VarSet e : c.edges) {
        if (subset_of(e, target)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_degenerate(const Clutter& c) {
  return c.active == 0 || !c.has_edges() || c.has_empty_edge();
}

namespace {

// Lowest active simplicial vertex, or 0 when none exists.
int find_simplicial(const Clutter& c) {
  for (int v : to_indices(c.active))
    if (is_simplicial(c, v)) return v;
  return 0;
}

struct ChordalSearch {
  ChordalityCertificate cert;
  std::set<MinorKey> visited;

  // Returns false as soon as a minor with no simplicial vertex is found.
  // Degenerate minors pass vacuously, and since all their minors stay
  // degenerate, their subtrees are skipped.
  bool run(const Clutter& c, MinorKey key) {
    if (!visited.insert(key).second) return true;
    if (is_degenerate(c)) return true;
    const int v = find_simplicial(c);
    if (v == 0) {
      cert.witness = key;
      return false;
    }
    cert.simplicial_choice.emplace(key, v);
    for (int w : to_indices(c.active)) {
      if (!run(deletion(c, w), MinorKey{key.deleted | var_bit(w), key.contracted}))
        return false;
      if (!run(contraction(c, w), MinorKey{key.deleted, key.contracted | var_bit(w)}))
        return false;
    }
    return true;
  }
};

}  // namespace

ChordalityCertificate is_chordal(const Clutter& c, int max_vertices) {
  if (c.active_count() > max_vertices)
    throw std::invalid_argument("is_chordal: " + std::to_string(c.active_count()) +
                                " active vertices exceeds the cap of " +
                                std::to_string(max_vertices));
  ChordalSearch search;
  search.cert.chordal = search.run(c, MinorKey{});
  if (!search.cert.chordal) search.cert.simplicial_choice.clear();
  return search.cert;
}

Clutter d_complement(const Clutter& c, int d) {
  if (d < 1) throw std::invalid_argument("d_complement: d must be positive");
  std::set<VarSet> edge_set(c.edges.begin(), c.edges.end());
  Clutter out;
  out.n_vertices = c.n_vertices;
  out.active = c.active;
  for (VarSet e : k_subsets(c.active, d))
    if (!edge_set.count(e)) out.edges.push_back(e);
  std::sort(out.edges.begin(), out.edges.end(), canonical_less);
  return out;
}

SqfIdeal edge_ideal(const Clutter& c) {
  if (c.has_empty_edge())
    throw std::invalid_argument("edge_ideal: clutter has an empty edge");
  return SqfIdeal::make(c.n_vertices, c.edges);
}

namespace {

void require_graph(const Clutter& g, const char* op) {
  for (VarSet e : g.edges)
    if (set_size(e) != 2)
      throw std::invalid_argument(std::string(op) + ": clutter is not 2-uniform");
}

}  // namespace

bool graph_is_chordal(const Clutter& g) {
  require_graph(g, "graph_is_chordal");
  std::vector<VarSet> adj(static_cast<size_t>(g.n_vertices) + 1, 0);
  for (VarSet e : g.edges) {
    const auto idx = to_indices(e);
    adj[static_cast<size_t>(idx[0])] |= var_bit(idx[1]);
    adj[static_cast<size_t>(idx[1])] |= var_bit(idx[0]);
  }
  VarSet remaining = g.active;
  while (remaining) {
    int pick = 0;
    for (int v : to_indices(remaining)) {
      const VarSet nb = adj[static_cast<size_t>(v)] & remaining;
      bool clique = true;
      for (int a : to_indices(nb)) {
        if ((adj[static_cast<size_t>(a)] & nb & ~var_bit(a)) != (nb & ~var_bit(a))) {
          clique = false;
          break;
        }
      }
      if (clique) {
        pick = v;
        break;
      }
    }
    if (pick == 0) return false;
    remaining &= ~var_bit(pick);
  }
  return true;
}

Clutter complement_graph(const Clutter& g) {
  require_graph(g, "complement_graph");
  std::set<VarSet> edge_set(g.edges.begin(), g.edges.end());
  Clutter out;
  out.n_vertices = g.n_vertices;
  out.active = g.active;
  for (VarSet e : k_subsets(g.active, 2))
    if (!edge_set.count(e)) out.edges.push_back(e);
  std::sort(out.edges.begin(), out.edges.end(), canonical_less);
  return out;
}

Clutter reconstruct_minor(const Clutter& c, const MinorKey& key) {
  if ((key.deleted & key.contracted) != 0)
    throw std::invalid_argument("reconstruct_minor: deleted and contracted sets overlap");
  if (!subset_of(key.deleted | key.contracted, c.active))
    throw std::invalid_argument("reconstruct_minor: key touches inactive vertices");
  Clutter out = c;
  for (int v : to_indices(key.deleted)) out = deletion(out, v);
  for (int v : to_indices(key.contracted)) out = contraction(out, v);
  return out;
}

}  // namespace stanley
