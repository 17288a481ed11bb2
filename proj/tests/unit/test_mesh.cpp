#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "splinedim/builtin.hpp"
#include "splinedim/forms.hpp"
#include "splinedim/mesh.hpp"

using namespace splinedim;
using testing_support::builtin;

namespace {

MeshError::Kind error_kind(const std::string& text, std::size_t* line = nullptr) {
  try {
    parse_mesh(text);
  } catch (const MeshError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return MeshError::Kind::Syntax;
}

// Distinct sorted (i+1)-subsets of the tets.
std::array<std::size_t, 4> brute_force_counts(const SimplicialComplex3& c) {
  std::array<std::set<std::vector<VertexId>>, 4> faces;
  for (Tet t : c.tets()) {
    std::sort(t.begin(), t.end());
    for (int mask = 1; mask < 16; ++mask) {
      std::vector<VertexId> f;
      for (int j = 0; j < 4; ++j)
        if (mask & (1 << j)) f.push_back(t[j]);
      faces[f.size() - 1].insert(f);
    }
  }
  return {faces[0].size(), faces[1].size(), faces[2].size(), faces[3].size()};
}

}  // namespace

TEST(Mesh, ParsesCloughTocher) {
  const auto c = parse_mesh(builtin_mesh_text("clough-tocher"));
  EXPECT_EQ(c.vertices().size(), 5u);
  EXPECT_EQ(c.tets().size(), 4u);
  EXPECT_EQ(c.vertices()[4][0], Rational(1, 4));
}

TEST(Mesh, ParsesSingleTetWithCommentsAndBlankLines) {
  const auto c = parse_mesh("# unit\n\ntetmesh 1\nvertices 4   # four\n0 0 0\n1 0 0\n\n0 1 0\n0 0 1\ntets 1\n0 1 2 3\n");
  EXPECT_EQ(c.vertices().size(), 4u);
  EXPECT_EQ(c.tets().size(), 1u);
}

TEST(Mesh, RejectsDegenerateTet) {
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n1 1 0\ntets 1\n0 1 2 3\n"),
            MeshError::Kind::DegenerateTet);
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2 2\n"),
            MeshError::Kind::DegenerateTet);
}

TEST(Mesh, ReportsSyntaxErrorLine) {
  std::size_t line = 0;
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 x\n0 1 0\n0 0 1\ntets 1\n0 1 2 3\n", &line),
            MeshError::Kind::Syntax);
  EXPECT_EQ(line, 4u);
  EXPECT_EQ(error_kind("tetmesh 2\n", &line), MeshError::Kind::Syntax);
  EXPECT_EQ(line, 1u);
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 1\n1/0 0 0\n", &line), MeshError::Kind::Syntax);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2\n", &line),
            MeshError::Kind::Syntax);
  EXPECT_EQ(line, 8u);
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 2\n0 1 2 3\n"),
            MeshError::Kind::Syntax);
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2 3\nextra\n"),
            MeshError::Kind::Syntax);
}

TEST(Mesh, RejectsIndexDuplicateAndUnused) {
  std::size_t line = 0;
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2 4\n", &line),
            MeshError::Kind::IndexOutOfRange);
  EXPECT_EQ(line, 8u);
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 2\n0 1 2 3\n3 2 1 0\n", &line),
            MeshError::Kind::DuplicateTet);
  EXPECT_EQ(line, 9u);
  EXPECT_EQ(error_kind("tetmesh 1\nvertices 5\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n5 5 5\ntets 1\n0 1 2 3\n"),
            MeshError::Kind::UnusedVertex);
}

TEST(Mesh, FormatRoundTrips) {
  for (const auto& name : builtin_names()) {
    const auto c = parse_mesh(builtin_mesh_text(name));
    const auto again = parse_mesh(format_mesh(c, name));
    EXPECT_EQ(again.vertices(), c.vertices());
    EXPECT_EQ(again.tets(), c.tets());
  }
}

TEST(FaceTables, SpecCounts) {
  const auto ct = builtin("clough-tocher").tables;
  EXPECT_EQ(ct.f_interior, (std::array<std::size_t, 4>{1, 4, 6, 4}));
  const auto oct = builtin("octahedron-regular").tables;
  EXPECT_EQ(oct.f_interior, (std::array<std::size_t, 4>{1, 6, 12, 8}));
  const auto one = testing_support::single_tet().tables;
  EXPECT_EQ(one.f_interior, (std::array<std::size_t, 4>{0, 0, 0, 1}));
}

TEST(FaceTables, CountsMatchBruteForceAndPartition) {
  std::vector<SimplicialComplex3> meshes;
  for (const auto& name : builtin_names()) meshes.push_back(parse_mesh(builtin_mesh_text(name)));
  meshes.push_back(testing_support::split_tet(meshes[0], 3));
  for (const auto& c : meshes) {
    const auto t = build_face_tables(c);
    const auto expected = brute_force_counts(c);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(t.f[i], expected[i]);
    std::size_t boundary_tris = 0;
    for (bool b : t.triangle_interior) boundary_tris += !b;
    EXPECT_EQ(t.interior_triangles.size() + boundary_tris, t.f[2]);
    EXPECT_EQ(t.f_interior[3], t.f[3]);
    for (std::size_t s = 0; s < t.triangles.size(); ++s) {
      EXPECT_EQ(t.triangle_interior[s], t.triangle_tets[s].size() == 2);
      const auto [a, b, cc] = t.triangles[s];
      EXPECT_EQ(t.triangle_edges[s][0], *t.find_edge(b, cc));
      EXPECT_EQ(t.triangle_edges[s][1], *t.find_edge(a, cc));
      EXPECT_EQ(t.triangle_edges[s][2], *t.find_edge(a, b));
      EXPECT_EQ(*t.find_triangle(cc, a, b), s);
    }
  }
}

TEST(FaceTables, IsDeterministic) {
  const auto text = builtin_mesh_text("octahedron-generic");
  const auto a = build_face_tables(parse_mesh(text));
  const auto b = build_face_tables(parse_mesh(text));
  EXPECT_EQ(a.triangles, b.triangles);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.interior_edges, b.interior_edges);
}

TEST(FaceTables, RejectsTriangleInThreeTets) {
  const auto c = parse_mesh(
      "tetmesh 1\nvertices 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 0 -1\n1 1 1\ntets 3\n0 1 2 3\n0 1 2 4\n0 1 2 5\n");
  EXPECT_THROW(build_face_tables(c), MeshError);
}

TEST(BallCheck, BuiltinsPass) {
  for (const auto& name : builtin_names()) {
    const auto d = check_ball_hypothesis(builtin(name).tables);
    EXPECT_TRUE(d.passed()) << name;
    EXPECT_EQ(d.euler_characteristic, 1);
  }
}

TEST(BallCheck, PinchedVertexFails) {
  const auto c = parse_mesh(
      "tetmesh 1\nvertices 7\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n-1 0 0\n0 -1 0\n0 0 -1\ntets 2\n0 1 2 3\n0 4 5 6\n");
  const auto d = check_ball_hypothesis(build_face_tables(c));
  EXPECT_FALSE(d.passed());
  EXPECT_FALSE(d.boundary_vertex_links);
  EXPECT_FALSE(d.connected);
  EXPECT_FALSE(d.warnings.empty());
}

TEST(BallCheck, SingleTetPasses) {
  EXPECT_TRUE(check_ball_hypothesis(testing_support::single_tet().tables).passed());
}

TEST(Builtins, GenericOctahedronIsConvexWithInteriorCenter) {
  const auto m = builtin("octahedron-generic");
  const auto& v = m.complex.vertices();
  for (std::size_t s = 0; s < m.tables.triangles.size(); ++s) {
    if (m.tables.triangle_interior[s]) continue;
    const auto& f = m.forms[s];
    int sign = 0;
    for (VertexId q = 0; q < v.size(); ++q) {
      const auto& tri = m.tables.triangles[s];
      if (std::find(tri.begin(), tri.end(), q) != tri.end()) continue;
      const Rational value = f[0] * v[q][0] + f[1] * v[q][1] + f[2] * v[q][2] + f[3];
      ASSERT_NE(value, 0);
      const int side = value > 0 ? 1 : -1;
      if (sign == 0) sign = side;
      EXPECT_EQ(side, sign) << "boundary face " << s << " vertex " << q;
    }
  }
}

TEST(Builtins, GenericOctahedronHasNoFourCoplanarPoints) {
  const auto m = builtin("octahedron-generic");
  const auto& v = m.complex.vertices();
  const std::size_t n = v.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto f = plane_of_triangle(v[a], v[b], v[c]);
        for (std::size_t d = c + 1; d < n; ++d)
          EXPECT_NE(Rational(f[0] * v[d][0] + f[1] * v[d][1] + f[2] * v[d][2] + f[3]), 0)
              << a << b << c << d;
      }
}
