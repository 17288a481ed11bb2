#pragma once

#include <string>
#include <vector>

#include "splinedim/builtin.hpp"
#include "splinedim/forms.hpp"
#include "splinedim/mesh.hpp"

namespace testing_support {

struct Mesh {
  splinedim::SimplicialComplex3 complex;
  splinedim::FaceTables tables;
  std::vector<splinedim::LinearForm> forms;
};

inline Mesh make_mesh(splinedim::SimplicialComplex3 complex) {
  auto tables = splinedim::build_face_tables(complex);
  auto forms = splinedim::triangle_forms(complex, tables);
  return {std::move(complex), std::move(tables), std::move(forms)};
}

inline Mesh from_text(const std::string& text) { return make_mesh(splinedim::parse_mesh(text)); }

inline Mesh builtin(const std::string& name) { return from_text(splinedim::builtin_mesh_text(name)); }

inline Mesh single_tet() {
  return from_text("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2 3\n");
}

// Two tets glued along the triangle z = 0.
inline Mesh two_tets() {
  return from_text(
      "tetmesh 1\nvertices 5\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n1/3 1/3 -1\ntets 2\n0 1 2 3\n0 1 2 4\n");
}

// Replaces tet `t` by its split about the centroid.
inline splinedim::SimplicialComplex3 split_tet(const splinedim::SimplicialComplex3& c, std::size_t t) {
  auto vertices = c.vertices();
  auto tets = c.tets();
  const auto q = tets[t];
  splinedim::Point3 centroid;
  for (int j = 0; j < 3; ++j) {
    splinedim::Rational sum = 0;
    for (auto v : q) sum += vertices[v][j];
    centroid[j] = sum / 4;
  }
  const auto center = static_cast<splinedim::VertexId>(vertices.size());
  vertices.push_back(centroid);
  tets.erase(tets.begin() + static_cast<std::ptrdiff_t>(t));
  for (int skip = 0; skip < 4; ++skip) {
    splinedim::Tet n{};
    int i = 0;
    for (int j = 0; j < 4; ++j)
      if (j != skip) n[i++] = q[j];
    n[3] = center;
    tets.push_back(n);
  }
  return splinedim::SimplicialComplex3(std::move(vertices), std::move(tets));
}

}  // namespace testing_support
