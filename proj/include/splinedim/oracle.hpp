#pragma once

#include <cstdint>
#include <vector>

#include "splinedim/forms.hpp"
#include "splinedim/matrix.hpp"
#include "splinedim/mesh.hpp"

namespace splinedim {

/// Linear system whose solutions are the C^r splines of degree <= k, written
/// on the affine side (w = 1). Unknowns: one cofactor block per interior
/// triangle (degree <= k-r-1), followed by one polynomial block per tet
/// (degree <= k). For every interior triangle with tets T0 < T1 and every
/// monomial of degree <= k there is one row of f_T0 - f_T1 - l^(r+1) g = 0.
struct SmoothnessSystem {
  int r = 0;
  int k = 0;
  std::size_t poly_block = 0;
  std::size_t cofactor_block = 0;
  std::size_t triangle_count = 0;
  std::size_t tet_count = 0;
  std::size_t cols = 0;
  std::vector<SparseRow> rows;

  std::size_t cofactor_offset(std::size_t interior_triangle) const { return interior_triangle * cofactor_block; }
  std::size_t tet_offset(std::size_t tet) const { return triangle_count * cofactor_block + tet * poly_block; }
};

SmoothnessSystem build_system(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k);

/// True when the cofactor columns have full column rank, i.e. a solution with
/// all polynomial blocks zero has all cofactors zero.
bool cofactor_columns_independent(const SmoothnessSystem& system);

/// Nullity of the system.
std::int64_t solution_dim(const SmoothnessSystem& system);

/// dim C^r_k of the partition.
std::int64_t spline_dim(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k);

}  // namespace splinedim
