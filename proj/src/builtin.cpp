#include "splinedim/builtin.hpp"

#include <stdexcept>

namespace splinedim {

namespace {

// Octahedra: vertices +x, +y, +z, -x, -y, -z, then the interior point 6.
// Each tet takes the interior point and one vertex of every antipodal pair.
constexpr const char* kOctahedronTets =
    "tets 8\n"
    "0 1 2 6\n"
    "0 1 5 6\n"
    "0 4 2 6\n"
    "0 4 5 6\n"
    "3 1 2 6\n"
    "3 1 5 6\n"
    "3 4 2 6\n"
    "3 4 5 6\n";

constexpr const char* kOctahedronRegular =
    "# regular octahedron split about its center\n"
    "tetmesh 1\n"
    "vertices 7\n"
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "-1 0 0\n"
    "0 -1 0\n"
    "0 0 -1\n"
    "0 0 0\n";

// No four of the seven points are coplanar; the 12 interior triangles lie on
// 12 distinct planes.
constexpr const char* kOctahedronGeneric =
    "# perturbed octahedron split about an interior point\n"
    "tetmesh 1\n"
    "vertices 7\n"
    "6 1 -1\n"
    "1 6 -2\n"
    "2 -1 7\n"
    "-6 2 1\n"
    "-1 -5 2\n"
    "-1 2 -6\n"
    "0 0 0\n";

constexpr const char* kCloughTocher =
    "# unit tetrahedron split about (1/4,1/4,1/4)\n"
    "tetmesh 1\n"
    "vertices 5\n"
    "0 0 0\n"
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "1/4 1/4 1/4\n"
    "tets 4\n"
    "0 1 2 4\n"
    "0 1 3 4\n"
    "0 2 3 4\n"
    "1 2 3 4\n";

}  // namespace

std::string builtin_mesh_text(std::string_view name) {
  if (name == "octahedron-regular") return std::string(kOctahedronRegular) + kOctahedronTets;
  if (name == "octahedron-generic") return std::string(kOctahedronGeneric) + kOctahedronTets;
  if (name == "clough-tocher") return kCloughTocher;
  throw std::invalid_argument("unknown built-in mesh '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"octahedron-regular", "octahedron-generic", "clough-tocher"}; }

}  // namespace splinedim
