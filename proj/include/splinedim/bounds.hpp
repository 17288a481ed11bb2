#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splinedim/forms.hpp"
#include "splinedim/ideals.hpp"
#include "splinedim/mesh.hpp"

namespace splinedim {

struct EdgeProfile {
  std::size_t edge = 0;   // id in FaceTables::edges
  std::size_t index = 0;  // position in the numbering
  int s = 0;
  int s_tilde = 0;
  ResolutionData full;
  ResolutionData restricted;  // all zero when s_tilde == 0
};

struct VertexProfile {
  VertexId vertex = 0;
  std::size_t index = 0;
  int t = 0;
  int t_tilde = 0;
  /// min(3, t_tilde, rank of the restricted forms). The rank cap only matters
  /// when every restricted plane passes through one line.
  int zeta = 0;
  std::vector<std::size_t> restricted_edges;  // edges of M~(vertex)
};

enum class FreeStatus { Unverified, FreeThroughK, NotFree };

const char* to_string(FreeStatus status);

struct BoundResult {
  int k = 0;
  int r = 0;
  std::int64_t lower = 0;
  std::int64_t upper_ordered = 0;
  std::int64_t upper_free = 0;
  FreeStatus free_status = FreeStatus::Unverified;
  std::vector<std::size_t> edge_ordering;    // interior edge ids, first numbered first
  std::vector<VertexId> vertex_ordering;     // interior vertices
  bool exhaustive_edges = false;
  bool exhaustive_vertices = false;
};

/// Interior edges in lexicographic key order / interior vertices ascending.
std::vector<std::size_t> lex_edge_ordering(const FaceTables& tables);
std::vector<VertexId> lex_vertex_ordering(const FaceTables& tables);

/// Interior edges / vertices in order of first appearance in the input tets.
std::vector<std::size_t> input_edge_ordering(const SimplicialComplex3& complex, const FaceTables& tables);
std::vector<VertexId> input_vertex_ordering(const SimplicialComplex3& complex, const FaceTables& tables);

/// `ordering` lists interior edge ids; throws std::invalid_argument unless it
/// is a permutation of the interior edges.
std::vector<EdgeProfile> edge_profiles(const FaceTables& tables, const std::vector<LinearForm>& forms,
                                       const std::vector<std::size_t>& ordering, int r = 0);

std::int64_t upper_bound(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                         const std::vector<std::size_t>& ordering);

/// Valid only when the spline module is free; the caller tracks that.
std::int64_t upper_bound_free(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k);

/// Distinct planes of the interior triangles through each interior vertex.
int vertex_plane_count(const FaceTables& tables, const std::vector<LinearForm>& forms, VertexId v);

std::vector<VertexProfile> vertex_profiles(const FaceTables& tables, const std::vector<LinearForm>& forms,
                                           const std::vector<VertexId>& ordering);

/// Forms generating the restricted vertex ideal of `profile`.
std::vector<LinearForm> restricted_vertex_forms(const FaceTables& tables, const std::vector<LinearForm>& forms,
                                                const VertexProfile& profile);

std::int64_t lower_bound(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                         const std::vector<VertexId>& ordering);

/// Tightest upper_bound over edge orderings and tightest lower_bound over
/// vertex orderings. Exhaustive when the count is at most 8 and its factorial
/// fits the budget; otherwise greedy plus seeded random restarts, `budget`
/// evaluations in total. Ties go to the lexicographically smallest ordering.
BoundResult search_orderings(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                             std::size_t budget);

/// All three bounds under fixed orderings.
BoundResult evaluate_bounds(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                            const std::vector<std::size_t>& edge_ordering,
                            const std::vector<VertexId>& vertex_ordering);

}  // namespace splinedim
