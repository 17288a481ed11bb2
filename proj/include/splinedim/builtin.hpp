#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace splinedim {

/// TETMESH text of a built-in mesh; throws std::invalid_argument for unknown names.
std::string builtin_mesh_text(std::string_view name);

/// octahedron-regular, octahedron-generic, clough-tocher
std::vector<std::string> builtin_names();

}  // namespace splinedim
