#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "splinedim/forms.hpp"
#include "splinedim/matrix.hpp"
#include "splinedim/mesh.hpp"

namespace splinedim {

/// Degree-k piece of the ideal complex on the interior faces. Every ideal
/// piece is stored as an echelon basis inside the degree-k monomial space of
/// four variables (`block` columns).
struct GradedChainSlice {
  int k = 0;
  int r = 0;
  std::size_t block = 0;

  std::vector<std::size_t> triangles;  // interior triangle ids
  std::vector<std::size_t> edges;      // interior edge ids
  std::vector<VertexId> vertices;      // interior vertices

  std::vector<std::vector<SparseRow>> triangle_basis;
  std::vector<std::vector<SparseRow>> edge_basis;
  std::vector<std::vector<SparseRow>> vertex_basis;

  /// (local interior edge index, sign) per interior triangle, boundary edges dropped.
  std::vector<std::vector<std::pair<std::size_t, int>>> d2;
  /// (local interior vertex index, sign) per interior edge, boundary vertices dropped.
  std::vector<std::vector<std::pair<std::size_t, int>>> d1;
};

GradedChainSlice assemble_slice(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k);

struct HomologyDims {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  std::int64_t rank_d1 = 0;
  std::int64_t rank_d2 = 0;
  std::int64_t sum_triangle = 0;  // sum of dim J(sigma)_k
  std::int64_t sum_edge = 0;      // sum of dim J(tau)_k
  std::int64_t sum_vertex = 0;    // sum of dim J(gamma)_k
};

/// Rows of the second / first boundary map: one per basis vector of the source
/// ideal, with the vector copied (signed) into each target face block.
std::vector<SparseRow> boundary2_rows(const GradedChainSlice& slice);
std::vector<SparseRow> boundary1_rows(const GradedChainSlice& slice);

HomologyDims homology_dims(const GradedChainSlice& slice);

/// True when the composite of the two assembled boundary maps is zero.
bool boundary_composition_vanishes(const GradedChainSlice& slice);

/// binom(k+3,3) + h2
std::int64_t spline_dim_via_h2(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k);

struct EulerCheck {
  bool pass = false;
  std::int64_t residual = 0;        // oracle_dim - identity_value
  std::int64_t identity_value = 0;  // alternating quotient sum + h1 - h0
};

EulerCheck euler_identity_check(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                                std::int64_t oracle_dim);

/// Alternating sum of dim R/J(beta)_k over interior faces plus h1 - h0.
std::int64_t euler_identity_value(const FaceTables& tables, const HomologyDims& dims, int k);

/// Upper estimate of h0 for a numbering of the interior vertices.
std::int64_t h0_upper_estimate(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                               const std::vector<VertexId>& vertex_ordering);

}  // namespace splinedim
