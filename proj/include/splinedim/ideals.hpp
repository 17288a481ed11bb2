#pragma once

#include <cstdint>
#include <vector>

#include "splinedim/forms.hpp"
#include "splinedim/matrix.hpp"

namespace splinedim {

/// Twist and multiplicities of the resolution of an ideal generated by the
/// (r+1)-st powers of s distinct forms in two variables.
struct ResolutionData {
  int s = 0;
  int r = 0;
  int omega = 0;
  int a = 0;
  int b = 0;
};

/// Throws std::invalid_argument for s < 1 or r < 0.
ResolutionData resolution_data(int s, int r);

/// Degree-k dimension of an edge ideal with s distinct forms, via its resolution.
std::int64_t edge_ideal_dim_closed(int s, int r, int k);

/// Spanning rows form^d * m (m over degree k-d monomials) reduced to an
/// echelon basis of the degree-k piece. With nvars == 3 the forms must not
/// involve w.
EchelonBasis ideal_basis(const std::vector<LinearForm>& forms, int d, int k, int nvars = 4);

/// dim of the degree-k piece of the ideal generated by the d-th powers of `forms`.
std::size_t ideal_dim_rank(const std::vector<LinearForm>& forms, int d, int k, int nvars = 4);

/// Fröberg sequence in three variables for t forms of degree d. t == 0 gives
/// the Hilbert function of the polynomial ring.
std::int64_t froberg_F(int t, int d, int i);

/// sum_{j <= k} froberg_F(t, d, j)
std::int64_t froberg_sum(int t, int d, int k);

/// Expected Hilbert function value: max(0, ((k+1)(k+2) - t(k-r)(k-r+1)) / 2),
/// the product taken as 0 when k <= r.
std::int64_t expected_E(int t, int r, int k);

/// Fröberg values and prefix sums for indices 0..max_index.
struct FrobergSeq {
  int t = 0;
  int d = 0;
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> prefix;
};

FrobergSeq froberg_sequence(int t, int d, int max_index);

}  // namespace splinedim
