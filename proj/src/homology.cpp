#include "splinedim/homology.hpp"

#include <algorithm>
#include <map>

#include "splinedim/bounds.hpp"
#include "splinedim/ideals.hpp"

namespace splinedim {

namespace {

std::vector<SparseRow> span_basis(const std::vector<LinearForm>& forms, int d, int k) {
  return ideal_basis(distinct_forms(forms), d, k).rows();
}

}  // namespace

GradedChainSlice assemble_slice(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k) {
  GradedChainSlice slice;
  slice.k = k;
  slice.r = r;
  slice.block = static_cast<std::size_t>(binom(k + 3, 3));
  slice.triangles = tables.interior_triangles;
  slice.edges = tables.interior_edges;
  slice.vertices = tables.interior_vertices;

  std::map<std::size_t, std::size_t> edge_local;
  for (std::size_t i = 0; i < slice.edges.size(); ++i) edge_local[slice.edges[i]] = i;
  std::map<VertexId, std::size_t> vertex_local;
  for (std::size_t i = 0; i < slice.vertices.size(); ++i) vertex_local[slice.vertices[i]] = i;

  const int d = r + 1;
  for (std::size_t s : slice.triangles) {
    slice.triangle_basis.push_back(span_basis({forms[s]}, d, k));
    std::vector<std::pair<std::size_t, int>> faces;
    static constexpr int signs[3] = {1, -1, 1};
    for (int j = 0; j < 3; ++j) {
      auto it = edge_local.find(tables.triangle_edges[s][j]);
      if (it != edge_local.end()) faces.emplace_back(it->second, signs[j]);
    }
    slice.d2.push_back(std::move(faces));
  }
  for (std::size_t e : slice.edges) {
    std::vector<LinearForm> gens;
    for (std::size_t s : tables.edge_triangles[e])
      if (tables.triangle_interior[s]) gens.push_back(forms[s]);
    slice.edge_basis.push_back(span_basis(gens, d, k));
    // [a,b] -> [b] - [a]
    std::vector<std::pair<std::size_t, int>> faces;
    if (auto it = vertex_local.find(tables.edges[e][1]); it != vertex_local.end()) faces.emplace_back(it->second, 1);
    if (auto it = vertex_local.find(tables.edges[e][0]); it != vertex_local.end()) faces.emplace_back(it->second, -1);
    std::sort(faces.begin(), faces.end());
    slice.d1.push_back(std::move(faces));
  }
  for (VertexId v : slice.vertices) {
    std::vector<LinearForm> gens;
    for (std::size_t s : tables.vertex_triangles[v])
      if (tables.triangle_interior[s]) gens.push_back(forms[s]);
    slice.vertex_basis.push_back(span_basis(gens, d, k));
  }
  return slice;
}

namespace {

std::vector<SparseRow> spread_rows(const std::vector<std::vector<SparseRow>>& bases,
                                   const std::vector<std::vector<std::pair<std::size_t, int>>>& incidence,
                                   std::size_t block) {
  std::vector<SparseRow> rows;
  for (std::size_t f = 0; f < bases.size(); ++f) {
    auto targets = incidence[f];
    std::sort(targets.begin(), targets.end());
    for (const auto& b : bases[f]) {
      SparseRow row;
      row.reserve(b.size() * targets.size());
      for (const auto& [target, sign] : targets)
        for (const auto& entry : b)
          row.push_back({static_cast<std::uint32_t>(target * block + entry.col), sign < 0 ? Integer(-entry.value)
                                                                                          : entry.value});
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::vector<SparseRow> boundary2_rows(const GradedChainSlice& slice) {
  return spread_rows(slice.triangle_basis, slice.d2, slice.block);
}

std::vector<SparseRow> boundary1_rows(const GradedChainSlice& slice) {
  return spread_rows(slice.edge_basis, slice.d1, slice.block);
}

HomologyDims homology_dims(const GradedChainSlice& slice) {
  HomologyDims h;
  for (const auto& b : slice.triangle_basis) h.sum_triangle += static_cast<std::int64_t>(b.size());
  for (const auto& b : slice.edge_basis) h.sum_edge += static_cast<std::int64_t>(b.size());
  for (const auto& b : slice.vertex_basis) h.sum_vertex += static_cast<std::int64_t>(b.size());
  h.rank_d2 = static_cast<std::int64_t>(sparse_rank(slice.edges.size() * slice.block, boundary2_rows(slice)));
  h.rank_d1 = static_cast<std::int64_t>(sparse_rank(slice.vertices.size() * slice.block, boundary1_rows(slice)));
  h.h0 = h.sum_vertex - h.rank_d1;
  h.h1 = h.sum_edge - h.rank_d1 - h.rank_d2;
  h.h2 = h.sum_triangle - h.rank_d2;
  return h;
}

bool boundary_composition_vanishes(const GradedChainSlice& slice) {
  const std::size_t block = slice.block;
  for (const auto& row : boundary2_rows(slice)) {
    std::map<std::uint64_t, Integer> image;
    for (const auto& entry : row) {
      const std::size_t edge = entry.col / block;
      const std::size_t mono = entry.col % block;
      for (const auto& [vertex, sign] : slice.d1[edge]) {
        Integer& acc = image[static_cast<std::uint64_t>(vertex) * block + mono];
        if (sign > 0)
          acc += entry.value;
        else
          acc -= entry.value;
      }
    }
    for (const auto& [col, value] : image)
      if (value != 0) return false;
  }
  return true;
}

std::int64_t spline_dim_via_h2(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k) {
  return binom(k + 3, 3) + homology_dims(assemble_slice(tables, forms, r, k)).h2;
}

std::int64_t euler_identity_value(const FaceTables& tables, const HomologyDims& dims, int k) {
  const std::int64_t full = binom(k + 3, 3);
  const auto count = [&](int i) { return static_cast<std::int64_t>(tables.f_interior[i]); };
  std::int64_t value = count(3) * full;
  value -= count(2) * full - dims.sum_triangle;
  value += count(1) * full - dims.sum_edge;
  value -= count(0) * full - dims.sum_vertex;
  return value + dims.h1 - dims.h0;
}

EulerCheck euler_identity_check(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                                std::int64_t oracle_dim) {
  const HomologyDims dims = homology_dims(assemble_slice(tables, forms, r, k));
  EulerCheck check;
  check.identity_value = euler_identity_value(tables, dims, k);
  check.residual = oracle_dim - check.identity_value;
  check.pass = check.residual == 0;
  return check;
}

std::int64_t h0_upper_estimate(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                               const std::vector<VertexId>& vertex_ordering) {
  std::int64_t estimate = 0;
  for (const auto& p : vertex_profiles(tables, forms, vertex_ordering)) {
    std::vector<LinearForm> all;
    for (std::size_t s : tables.vertex_triangles[p.vertex])
      if (tables.triangle_interior[s]) all.push_back(forms[s]);
    estimate += static_cast<std::int64_t>(ideal_dim_rank(distinct_forms(all), r + 1, k));
    estimate -= static_cast<std::int64_t>(ideal_dim_rank(restricted_vertex_forms(tables, forms, p), r + 1, k));
  }
  return estimate;
}

}  // namespace splinedim
