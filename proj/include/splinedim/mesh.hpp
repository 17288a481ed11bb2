#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

using VertexId = std::uint32_t;
using Tet = std::array<VertexId, 4>;
using Triangle = std::array<VertexId, 3>;
using Edge = std::array<VertexId, 2>;

class MeshError : public std::runtime_error {
 public:
  enum class Kind { Syntax, IndexOutOfRange, DegenerateTet, DuplicateTet, UnusedVertex, NonPseudomanifold };

  MeshError(Kind kind, std::string message, std::size_t line = 0);

  Kind kind() const { return kind_; }
  /// 1-based line of the mesh text, or 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

const char* to_string(MeshError::Kind kind);

/// Tetrahedral partition with exact vertex coordinates. Construction validates
/// the tets; an instance is always a valid complex.
class SimplicialComplex3 {
 public:
  /// `tet_lines` optionally maps each tet to the mesh-text line it came from,
  /// used only for error messages.
  SimplicialComplex3(std::vector<Point3> vertices, std::vector<Tet> tets,
                     const std::vector<std::size_t>& tet_lines = {});

  const std::vector<Point3>& vertices() const { return vertices_; }
  /// Tets in input order, vertex order as given.
  const std::vector<Tet>& tets() const { return tets_; }

 private:
  std::vector<Point3> vertices_;
  std::vector<Tet> tets_;
};

/// Parses TETMESH text:
///   tetmesh 1
///   vertices N   (then N lines "x y z", each int or int/int)
///   tets M       (then M lines of 4 zero-based vertex indices)
/// '#' starts a comment; blank lines are ignored.
SimplicialComplex3 parse_mesh(std::string_view text);

/// Serializes back to TETMESH text (exact coordinates).
std::string format_mesh(const SimplicialComplex3& complex, std::string_view comment = {});

/// Face lattice of a complex. Faces are keyed by sorted vertex tuples and
/// numbered in lexicographic key order; tet ids follow input order.
struct FaceTables {
  std::vector<Tet> tets;  // sorted vertex tuples, input order
  std::vector<Triangle> triangles;
  std::vector<Edge> edges;
  std::size_t vertex_count = 0;

  std::vector<std::vector<std::size_t>> triangle_tets;
  std::vector<std::vector<std::size_t>> edge_triangles;
  std::vector<std::vector<std::size_t>> vertex_edges;
  std::vector<std::vector<std::size_t>> vertex_triangles;
  // For [a,b,c]: ids of [b,c], [a,c], [a,b] (boundary signs +, -, +).
  std::vector<std::array<std::size_t, 3>> triangle_edges;

  std::vector<bool> triangle_interior;
  std::vector<bool> edge_interior;
  std::vector<bool> vertex_interior;

  std::vector<std::size_t> interior_triangles;
  std::vector<std::size_t> interior_edges;
  std::vector<VertexId> interior_vertices;

  /// f[i]: number of i-faces; f_interior[i]: interior ones (f_interior[3] == f[3]).
  std::array<std::size_t, 4> f{};
  std::array<std::size_t, 4> f_interior{};

  std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;
  std::optional<std::size_t> find_triangle(VertexId a, VertexId b, VertexId c) const;
};

/// Throws MeshError(NonPseudomanifold) when a triangle lies in more than two tets.
FaceTables build_face_tables(const SimplicialComplex3& complex);

/// Necessary conditions for |Δ| being a 3-ball. Failing checks are warnings.
struct BallDiagnostics {
  long long euler_characteristic = 0;
  long long boundary_euler_characteristic = 0;
  bool euler_ok = false;             // f0 - f1 + f2 - f3 == 1
  bool boundary_closed = false;      // each boundary edge in exactly 2 boundary triangles
  bool boundary_vertex_links = false; // each boundary vertex link is one cycle
  bool boundary_sphere = false;      // boundary Euler characteristic == 2
  bool connected = false;            // tets connected through triangles
  std::vector<std::string> warnings;

  bool passed() const {
    return euler_ok && boundary_closed && boundary_vertex_links && boundary_sphere && connected;
  }
};

BallDiagnostics check_ball_hypothesis(const FaceTables& tables);

}  // namespace splinedim
