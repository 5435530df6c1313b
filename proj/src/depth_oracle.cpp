#include "stanley/depth_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace stanley {

namespace {

using Matrix = std::vector<std::vector<long long>>;

// Fraction-free (Bareiss) elimination over the integers. Intermediate
// entries are exact minors of the input; products are taken in 128-bit
// and checked back into 64-bit so an overflow fails loudly instead of
// corrupting a rank.
int rank_rational(Matrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (rows == 0 || cols == 0) return 0;
  long long prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot_row = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot_row)]);
    const long long pivot = m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    for (int r = rank + 1; r < rows; ++r) {
      const long long lead = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      for (int c = col; c < cols; ++c) {
        const __int128 num =
            static_cast<__int128>(m[static_cast<size_t>(r)][static_cast<size_t>(c)]) * pivot -
            static_cast<__int128>(lead) *
                m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        const __int128 q = num / prev;  // exact by the Bareiss identity
        if (q > std::numeric_limits<long long>::max() ||
            q < std::numeric_limits<long long>::min())
          throw std::overflow_error("rank_rational: entry exceeds 64 bits");
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<long long>(q);
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

int rank_mod_p(Matrix m, long p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (rows == 0 || cols == 0) return 0;
  auto norm = [p](long long x) {
    long long r = x % p;
    return r < 0 ? r + p : r;
  };
  for (auto& row : m)
    for (auto& x : row) x = norm(x);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot_row = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot_row)]);
    const long long pivot = m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    // pivot^(p-2) mod p
    long long inv = 1, base = pivot, e = p - 2;
    while (e) {
      if (e & 1) inv = static_cast<long long>(static_cast<__int128>(inv) * base % p);
      base = static_cast<long long>(static_cast<__int128>(base) * base % p);
      e >>= 1;
    }
    for (int r = rank + 1; r < rows; ++r) {
      const long long lead = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (lead == 0) continue;
      const long long factor =
          static_cast<long long>(static_cast<__int128>(lead) * inv % p);
      for (int c = col; c < cols; ++c) {
        const long long sub = static_cast<long long>(
            static_cast<__int128>(factor) *
            m[static_cast<size_t>(rank)][static_cast<size_t>(c)] % p);
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            norm(m[static_cast<size_t>(r)][static_cast<size_t>(c)] - sub);
      }
    }
    ++rank;
  }
  return rank;
}

int matrix_rank(Matrix m, Field field, long prime) {
  return field == Field::rationals ? rank_rational(std::move(m))
                                   : rank_mod_p(std::move(m), prime);
}

}  // namespace

bool SimplicialComplex::is_face(VarSet sigma) const {
  if (!subset_of(sigma, active)) return false;
  for (VarSet g : minimal_non_faces)
    if (subset_of(g, sigma)) return false;
  return true;
}

SimplicialComplex stanley_reisner(const SqfIdeal& ideal, VarSet active) {
  if (ideal.is_unit())
    throw std::invalid_argument("stanley_reisner: the unit ideal has no complex");
  if (!subset_of(ideal.support_union(), active))
    throw std::invalid_argument("stanley_reisner: generators use inactive variables");
  SimplicialComplex delta;
  delta.ambient_n = ideal.ambient_n;
  delta.active = active;
  delta.minimal_non_faces = ideal.generator_masks();
  return delta;
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex& delta, VarSet sigma,
                                        Field field, long prime) {
  if (!subset_of(sigma, delta.active))
    throw std::invalid_argument("reduced_homology_ranks: sigma is not active");
  const int s = set_size(sigma);

  // faces_by_size[c] = faces of the induced subcomplex with c vertices
  std::vector<std::vector<VarSet>> faces_by_size(static_cast<size_t>(s) + 1);
  for_each_subset(sigma, [&](VarSet rho) {
    if (delta.is_face(rho)) faces_by_size[static_cast<size_t>(set_size(rho))].push_back(rho);
  });
  for (auto& level : faces_by_size) std::sort(level.begin(), level.end());

  // boundary_rank[c] = rank of the map from c-vertex faces to (c-1)-vertex faces
  std::vector<int> boundary_rank(static_cast<size_t>(s) + 2, 0);
  for (int c = 1; c <= s; ++c) {
    const auto& rows_faces = faces_by_size[static_cast<size_t>(c - 1)];
    const auto& cols_faces = faces_by_size[static_cast<size_t>(c)];
    if (rows_faces.empty() || cols_faces.empty()) continue;
    Matrix m(rows_faces.size(), std::vector<long long>(cols_faces.size(), 0));
    for (size_t j = 0; j < cols_faces.size(); ++j) {
      int position = 0;
      for (int v : to_indices(cols_faces[j])) {
        const VarSet row_face = cols_faces[j] & ~var_bit(v);
        const auto it =
            std::lower_bound(rows_faces.begin(), rows_faces.end(), row_face);
        m[static_cast<size_t>(it - rows_faces.begin())][j] = (position % 2 == 0) ? 1 : -1;
        ++position;
      }
    }
    boundary_rank[static_cast<size_t>(c)] = matrix_rank(std::move(m), field, prime);
  }

  // ranks[k+1] = dim C_k - rank d_k - rank d_{k+1}, C_k spanned by (k+1)-vertex faces
  std::vector<int> ranks(static_cast<size_t>(s) + 1, 0);
  for (int k = -1; k < s; ++k) {
    const int dim = static_cast<int>(faces_by_size[static_cast<size_t>(k + 1)].size());
    ranks[static_cast<size_t>(k + 1)] = dim - boundary_rank[static_cast<size_t>(k + 1)] -
                                        boundary_rank[static_cast<size_t>(k + 2)];
  }
  return ranks;
}

HomologyProfile homology_profile(const SimplicialComplex& delta, Field field,
                                 long prime) {
  HomologyProfile profile;
  for_each_subset(delta.active, [&](VarSet sigma) {
    profile.by_subset.emplace_back(sigma,
                                   reduced_homology_ranks(delta, sigma, field, prime));
  });
  return profile;
}

int projective_dimension(const SqfIdeal& ideal, VarSet active, const DepthOptions& opts) {
  if (!ideal.is_proper())
    throw std::invalid_argument("projective_dimension: unit ideal");
  const int m = set_size(active);
  if (m > opts.max_active)
    throw std::invalid_argument("projective_dimension: " + std::to_string(m) +
                                " active variables exceeds the cap of " +
                                std::to_string(opts.max_active));
  const SimplicialComplex delta = stanley_reisner(ideal, active);
  const HomologyProfile profile = homology_profile(delta, opts.field, opts.prime);
  int pd = 0;
  for (const auto& [sigma, ranks] : profile.by_subset) {
    const int size = set_size(sigma);
    for (int k = -1; k < size; ++k)
      if (ranks[static_cast<size_t>(k + 1)] != 0) pd = std::max(pd, size - k - 1);
  }
  return pd;
}

int depth_quotient(const SqfIdeal& ideal, VarSet active, const DepthOptions& opts) {
  return set_size(active) - projective_dimension(ideal, active, opts);
}

int depth_ideal(const SqfIdeal& ideal, VarSet active, const DepthOptions& opts) {
  if (ideal.is_zero())
    throw std::invalid_argument("depth_ideal: zero ideal");
  return depth_quotient(ideal, active, opts) + 1;
}

}  // namespace stanley
