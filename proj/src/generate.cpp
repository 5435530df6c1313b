#include "stanley/generate.hpp"

#include <random>
#include <stdexcept>

namespace stanley {

namespace {

std::mt19937_64 seeded_rng(std::uint64_t seed, int n, int d) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)};
  return std::mt19937_64(seq);
}

// Chordal graph on 1..n: each new vertex attaches to a clique of the
// current graph (possibly empty).
Clutter random_chordal_graph(int n, std::mt19937_64& rng) {
  std::vector<VarSet> adj(static_cast<size_t>(n) + 1, 0);
  std::vector<VarSet> edges;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> isolated(0, v - 1);
    if (isolated(rng) == 0) continue;
    std::uniform_int_distribution<int> pick(1, v - 1);
    const int w = pick(rng);
    VarSet clique = var_bit(w);
    for (int u : to_indices(adj[static_cast<size_t>(w)] & full_set(v - 1))) {
      if (!subset_of(clique, adj[static_cast<size_t>(u)] | var_bit(u))) continue;
      std::uniform_int_distribution<int> coin(0, 1);
      if (coin(rng)) clique |= var_bit(u);
    }
    for (int u : to_indices(clique)) {
      edges.push_back(var_bit(u) | var_bit(v));
      adj[static_cast<size_t>(u)] |= var_bit(v);
      adj[static_cast<size_t>(v)] |= var_bit(u);
    }
  }
  return Clutter::make(n, std::move(edges));
}

Clutter random_clutter(int n, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<VarSet> picked;
  for (VarSet e = 1; e <= full_set(n); ++e) {
    if (set_size(e) < d) continue;
    if (coin(rng)) picked.push_back(e);
  }
  // antichain reduction: inclusion-minimal candidates survive
  std::sort(picked.begin(), picked.end(), canonical_less);
  std::vector<VarSet> edges;
  for (VarSet e : picked) {
    bool dominated = false;
    for (VarSet kept : edges)
      if (subset_of(kept, e)) {
        dominated = true;
        break;
      }
    if (!dominated) edges.push_back(e);
  }
  return Clutter::make(n, std::move(edges));
}

// Fallback candidates when random filtering runs short: complete d-uniform
// clutters on random vertex subsets. Still filtered through is_chordal.
Clutter uniform_block_clutter(int n, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(d, n);
  const int w = size(rng);
  VarSet vertices = 0;
  while (set_size(vertices) < w) {
    std::uniform_int_distribution<int> pick(1, n);
    vertices |= var_bit(pick(rng));
  }
  return Clutter::make(n, k_subsets(vertices, d));
}

}  // namespace

std::vector<GeneratedClutter> generate_chordal_clutters(int n, int d, int count,
                                                        std::uint64_t seed) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("generate_chordal_clutters: n must be in [1, 7]");
  if (d < 1) throw std::invalid_argument("generate_chordal_clutters: d must be positive");
  std::mt19937_64 rng = seeded_rng(seed, n, d);
  std::vector<GeneratedClutter> out;
  if (count <= 0) return out;

  const int graph_count = (d == 2) ? count / 2 : 0;
  for (int i = 0; i < graph_count; ++i) {
    Clutter c = random_chordal_graph(n, rng);
    ChordalityCertificate cert = is_chordal(c);
    if (!cert.chordal)
      throw std::logic_error("generate_chordal_clutters: simplicial attachment broke");
    out.push_back(GeneratedClutter{std::move(c), std::move(cert), "graph"});
  }

  const int random_count = count - graph_count;
  int attempts = 0;
  const int attempt_cap = 80 * random_count;
  int emitted = 0;
  while (emitted < random_count && attempts < attempt_cap) {
    ++attempts;
    Clutter c = attempts % 4 == 0 ? uniform_block_clutter(n, d, rng)
                                  : random_clutter(n, d, rng);
    ChordalityCertificate cert = is_chordal(c);
    if (!cert.chordal) continue;
    out.push_back(GeneratedClutter{std::move(c), std::move(cert), "random"});
    ++emitted;
  }
  return out;
}

std::vector<SqfIdeal> generate_random_ideals(int n, int max_generators, int count,
                                             std::uint64_t seed) {
  if (n < 1 || n > kMaxVariables)
    throw std::invalid_argument("generate_random_ideals: n must be in [1, 64]");
  if (max_generators < 1)
    throw std::invalid_argument("generate_random_ideals: max_generators must be positive");
  std::mt19937_64 rng = seeded_rng(seed, n, max_generators);
  std::uniform_int_distribution<int> gen_count(1, max_generators);
  std::uniform_int_distribution<std::uint64_t> mask(1, full_set(n));
  std::vector<SqfIdeal> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int g = gen_count(rng);
    std::vector<VarSet> masks;
    masks.reserve(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j) masks.push_back(mask(rng));
    out.push_back(SqfIdeal::make(n, std::move(masks)));
  }
  return out;
}

}  // namespace stanley
