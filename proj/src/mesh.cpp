#include "splinedim/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace splinedim {

MeshError::MeshError(Kind kind, std::string message, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

const char* to_string(MeshError::Kind kind) {
  switch (kind) {
    case MeshError::Kind::Syntax: return "syntax";
    case MeshError::Kind::IndexOutOfRange: return "index-out-of-range";
    case MeshError::Kind::DegenerateTet: return "degenerate-tet";
    case MeshError::Kind::DuplicateTet: return "duplicate-tet";
    case MeshError::Kind::UnusedVertex: return "unused-vertex";
    case MeshError::Kind::NonPseudomanifold: return "non-pseudomanifold";
  }
  return "unknown";
}

namespace {

Rational det3(const Point3& u, const Point3& v, const Point3& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

Point3 minus(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

}  // namespace

SimplicialComplex3::SimplicialComplex3(std::vector<Point3> vertices, std::vector<Tet> tets,
                                       const std::vector<std::size_t>& tet_lines)
    : vertices_(std::move(vertices)), tets_(std::move(tets)) {
  auto line_of = [&](std::size_t t) { return t < tet_lines.size() ? tet_lines[t] : 0; };
  std::vector<bool> used(vertices_.size(), false);
  std::set<Tet> seen;
  for (std::size_t t = 0; t < tets_.size(); ++t) {
    const Tet& tet = tets_[t];
    for (VertexId v : tet) {
      if (v >= vertices_.size())
        throw MeshError(MeshError::Kind::IndexOutOfRange,
                        "tet " + std::to_string(t) + " references vertex " + std::to_string(v) +
                            " but only " + std::to_string(vertices_.size()) + " vertices exist",
                        line_of(t));
      used[v] = true;
    }
    Tet key = tet;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      throw MeshError(MeshError::Kind::DegenerateTet,
                      "tet " + std::to_string(t) + " repeats a vertex", line_of(t));
    const Point3& p0 = vertices_[tet[0]];
    if (det3(minus(vertices_[tet[1]], p0), minus(vertices_[tet[2]], p0), minus(vertices_[tet[3]], p0)) == 0)
      throw MeshError(MeshError::Kind::DegenerateTet,
                      "tet " + std::to_string(t) + " has coplanar vertices", line_of(t));
    if (!seen.insert(key).second)
      throw MeshError(MeshError::Kind::DuplicateTet,
                      "tet " + std::to_string(t) + " duplicates an earlier tet", line_of(t));
  }
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v])
      throw MeshError(MeshError::Kind::UnusedVertex,
                      "vertex " + std::to_string(v) + " is not used by any tet");
}

namespace {

struct LineReader {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;

  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view line = text.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      std::istringstream in{std::string(line)};
      std::vector<std::string> tokens;
      for (std::string tok; in >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) lines.emplace_back(number, std::move(tokens));
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
};

std::size_t parse_count(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw MeshError(MeshError::Kind::Syntax, "expected a nonnegative integer, got '" + token + "'", line);
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw MeshError(MeshError::Kind::Syntax, "count out of range '" + token + "'", line);
  }
}

}  // namespace

SimplicialComplex3 parse_mesh(std::string_view text) {
  LineReader reader(text);
  auto& lines = reader.lines;
  std::size_t cursor = 0;
  auto next = [&](const char* what) -> const std::pair<std::size_t, std::vector<std::string>>& {
    if (cursor >= lines.size())
      throw MeshError(MeshError::Kind::Syntax, std::string("unexpected end of input, expected ") + what,
                      lines.empty() ? 1 : lines.back().first);
    return lines[cursor++];
  };

  const auto& header = next("header 'tetmesh 1'");
  if (header.second.size() != 2 || header.second[0] != "tetmesh" || header.second[1] != "1")
    throw MeshError(MeshError::Kind::Syntax, "expected header 'tetmesh 1'", header.first);

  const auto& vhead = next("'vertices N'");
  if (vhead.second.size() != 2 || vhead.second[0] != "vertices")
    throw MeshError(MeshError::Kind::Syntax, "expected 'vertices N'", vhead.first);
  const std::size_t n = parse_count(vhead.second[1], vhead.first);

  std::vector<Point3> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [line, tokens] = next("vertex coordinates");
    if (tokens.size() != 3)
      throw MeshError(MeshError::Kind::Syntax, "expected 3 coordinates, got " + std::to_string(tokens.size()), line);
    Point3 p;
    for (int j = 0; j < 3; ++j) {
      try {
        p[j] = parse_rational(tokens[j]);
      } catch (const std::invalid_argument& e) {
        throw MeshError(MeshError::Kind::Syntax, e.what(), line);
      }
    }
    vertices.push_back(std::move(p));
  }

  const auto& thead = next("'tets M'");
  if (thead.second.size() != 2 || thead.second[0] != "tets")
    throw MeshError(MeshError::Kind::Syntax, "expected 'tets M'", thead.first);
  const std::size_t m = parse_count(thead.second[1], thead.first);

  std::vector<Tet> tets;
  std::vector<std::size_t> tet_lines;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [line, tokens] = next("tet indices");
    if (tokens.size() != 4)
      throw MeshError(MeshError::Kind::Syntax, "expected 4 vertex indices, got " + std::to_string(tokens.size()), line);
    Tet tet;
    for (int j = 0; j < 4; ++j) {
      const std::size_t v = parse_count(tokens[j], line);
      if (v >= n)
        throw MeshError(MeshError::Kind::IndexOutOfRange,
                        "vertex index " + tokens[j] + " out of range (" + std::to_string(n) + " vertices)", line);
      tet[j] = static_cast<VertexId>(v);
    }
    tets.push_back(tet);
    tet_lines.push_back(line);
  }
  if (cursor != lines.size())
    throw MeshError(MeshError::Kind::Syntax, "trailing content after tets", lines[cursor].first);

  return SimplicialComplex3(std::move(vertices), std::move(tets), tet_lines);
}

std::string format_mesh(const SimplicialComplex3& complex, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "tetmesh 1\n";
  out << "vertices " << complex.vertices().size() << '\n';
  for (const auto& p : complex.vertices()) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  out << "tets " << complex.tets().size() << '\n';
  for (const auto& t : complex.tets()) out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  return out.str();
}

std::optional<std::size_t> FaceTables::find_edge(VertexId a, VertexId b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

std::optional<std::size_t> FaceTables::find_triangle(VertexId a, VertexId b, VertexId c) const {
  Triangle key{a, b, c};
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(triangles.begin(), triangles.end(), key);
  if (it == triangles.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - triangles.begin());
}

FaceTables build_face_tables(const SimplicialComplex3& complex) {
  FaceTables t;
  t.vertex_count = complex.vertices().size();
  for (Tet tet : complex.tets()) {
    std::sort(tet.begin(), tet.end());
    t.tets.push_back(tet);
  }

  std::map<Triangle, std::vector<std::size_t>> tri_tets;
  std::set<Edge> edge_set;
  for (std::size_t i = 0; i < t.tets.size(); ++i) {
    const Tet& q = t.tets[i];
    for (int skip = 0; skip < 4; ++skip) {
      Triangle tri;
      int n = 0;
      for (int j = 0; j < 4; ++j)
        if (j != skip) tri[n++] = q[j];
      tri_tets[tri].push_back(i);
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edge_set.insert({q[a], q[b]});
  }

  for (auto& [tri, tets] : tri_tets) {
    if (tets.size() > 2)
      throw MeshError(MeshError::Kind::NonPseudomanifold,
                      "triangle (" + std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                          std::to_string(tri[2]) + ") lies in " + std::to_string(tets.size()) + " tets");
    t.triangles.push_back(tri);
    t.triangle_tets.push_back(tets);
  }
  t.edges.assign(edge_set.begin(), edge_set.end());

  t.edge_triangles.resize(t.edges.size());
  t.vertex_edges.resize(t.vertex_count);
  t.vertex_triangles.resize(t.vertex_count);
  t.triangle_edges.resize(t.triangles.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    t.vertex_edges[t.edges[e][0]].push_back(e);
    t.vertex_edges[t.edges[e][1]].push_back(e);
  }
  for (std::size_t s = 0; s < t.triangles.size(); ++s) {
    const auto& [a, b, c] = t.triangles[s];
    t.triangle_edges[s] = {*t.find_edge(b, c), *t.find_edge(a, c), *t.find_edge(a, b)};
    for (std::size_t e : t.triangle_edges[s]) t.edge_triangles[e].push_back(s);
    for (VertexId v : t.triangles[s]) t.vertex_triangles[v].push_back(s);
  }
  for (auto& list : t.edge_triangles) std::sort(list.begin(), list.end());

  t.triangle_interior.assign(t.triangles.size(), false);
  t.edge_interior.assign(t.edges.size(), true);
  t.vertex_interior.assign(t.vertex_count, true);
  for (std::size_t s = 0; s < t.triangles.size(); ++s) {
    if (t.triangle_tets[s].size() == 2) {
      t.triangle_interior[s] = true;
      continue;
    }
    for (std::size_t e : t.triangle_edges[s]) t.edge_interior[e] = false;
    for (VertexId v : t.triangles[s]) t.vertex_interior[v] = false;
  }

  for (std::size_t s = 0; s < t.triangles.size(); ++s)
    if (t.triangle_interior[s]) t.interior_triangles.push_back(s);
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    if (t.edge_interior[e]) t.interior_edges.push_back(e);
  for (VertexId v = 0; v < t.vertex_count; ++v)
    if (t.vertex_interior[v]) t.interior_vertices.push_back(v);

  t.f = {t.vertex_count, t.edges.size(), t.triangles.size(), t.tets.size()};
  t.f_interior = {t.interior_vertices.size(), t.interior_edges.size(), t.interior_triangles.size(),
                  t.tets.size()};
  return t;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

BallDiagnostics check_ball_hypothesis(const FaceTables& t) {
  BallDiagnostics d;
  d.euler_characteristic = static_cast<long long>(t.f[0]) - static_cast<long long>(t.f[1]) +
                           static_cast<long long>(t.f[2]) - static_cast<long long>(t.f[3]);
  d.euler_ok = d.euler_characteristic == 1;
  if (!d.euler_ok)
    d.warnings.push_back("Euler characteristic is " + std::to_string(d.euler_characteristic) + ", expected 1");

  std::vector<std::size_t> boundary;
  for (std::size_t s = 0; s < t.triangles.size(); ++s)
    if (!t.triangle_interior[s]) boundary.push_back(s);

  std::vector<int> edge_uses(t.edges.size(), 0);
  std::set<VertexId> bverts;
  for (std::size_t s : boundary) {
    for (std::size_t e : t.triangle_edges[s]) ++edge_uses[e];
    for (VertexId v : t.triangles[s]) bverts.insert(v);
  }
  std::size_t bedges = 0;
  d.boundary_closed = true;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (edge_uses[e] == 0) continue;
    ++bedges;
    if (edge_uses[e] != 2) d.boundary_closed = false;
  }
  if (!d.boundary_closed) d.warnings.push_back("boundary surface is not closed");

  d.boundary_euler_characteristic = static_cast<long long>(bverts.size()) - static_cast<long long>(bedges) +
                                    static_cast<long long>(boundary.size());
  d.boundary_sphere = d.boundary_euler_characteristic == 2;
  if (!d.boundary_sphere)
    d.warnings.push_back("boundary Euler characteristic is " + std::to_string(d.boundary_euler_characteristic) +
                         ", expected 2");

  // Link of a boundary vertex inside the boundary surface must be one cycle.
  d.boundary_vertex_links = true;
  for (VertexId v : bverts) {
    std::map<VertexId, std::size_t> local;
    std::vector<Edge> link;
    for (std::size_t s : t.vertex_triangles[v]) {
      if (t.triangle_interior[s]) continue;
      Edge e{};
      int n = 0;
      for (VertexId w : t.triangles[s])
        if (w != v) e[n++] = w;
      link.push_back(e);
      for (VertexId w : e) local.emplace(w, local.size());
    }
    DisjointSets sets(local.size());
    std::vector<int> degree(local.size(), 0);
    for (const auto& e : link) {
      sets.unite(local[e[0]], local[e[1]]);
      ++degree[local[e[0]]];
      ++degree[local[e[1]]];
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < local.size(); ++i) roots.insert(sets.find(i));
    const bool cycle = roots.size() == 1 && std::all_of(degree.begin(), degree.end(), [](int x) { return x == 2; });
    if (!cycle) {
      d.boundary_vertex_links = false;
      d.warnings.push_back("boundary is not a surface at vertex " + std::to_string(v));
    }
  }

  DisjointSets tets(t.tets.size());
  for (std::size_t s = 0; s < t.triangles.size(); ++s)
    if (t.triangle_tets[s].size() == 2) tets.unite(t.triangle_tets[s][0], t.triangle_tets[s][1]);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < t.tets.size(); ++i) roots.insert(tets.find(i));
  d.connected = roots.size() <= 1;
  if (!d.connected) d.warnings.push_back("tets are not connected through interior triangles");
  return d;
}

}  // namespace splinedim
