#include "splinedim/bounds.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "splinedim/matrix.hpp"

namespace splinedim {

const char* to_string(FreeStatus status) {
  switch (status) {
    case FreeStatus::Unverified: return "unverified";
    case FreeStatus::FreeThroughK: return "free-through-k";
    case FreeStatus::NotFree: return "not-free";
  }
  return "unknown";
}

std::vector<std::size_t> lex_edge_ordering(const FaceTables& tables) { return tables.interior_edges; }

std::vector<VertexId> lex_vertex_ordering(const FaceTables& tables) { return tables.interior_vertices; }

std::vector<std::size_t> input_edge_ordering(const SimplicialComplex3& complex, const FaceTables& tables) {
  std::vector<std::size_t> out;
  std::vector<bool> seen(tables.edges.size(), false);
  for (const Tet& tet : complex.tets())
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        const std::size_t e = *tables.find_edge(tet[a], tet[b]);
        if (tables.edge_interior[e] && !seen[e]) {
          seen[e] = true;
          out.push_back(e);
        }
      }
  return out;
}

std::vector<VertexId> input_vertex_ordering(const SimplicialComplex3& complex, const FaceTables& tables) {
  std::vector<VertexId> out;
  std::vector<bool> seen(tables.vertex_count, false);
  for (const Tet& tet : complex.tets())
    for (VertexId v : tet)
      if (tables.vertex_interior[v] && !seen[v]) {
        seen[v] = true;
        out.push_back(v);
      }
  return out;
}

namespace {

template <typename Id>
std::vector<std::size_t> positions_of(const std::vector<Id>& ordering, const std::vector<Id>& interior,
                                      std::size_t universe, const char* what) {
  std::vector<std::size_t> pos(universe, std::numeric_limits<std::size_t>::max());
  if (ordering.size() != interior.size())
    throw std::invalid_argument(std::string(what) + " ordering has the wrong length");
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const auto id = static_cast<std::size_t>(ordering[i]);
    if (id >= universe || pos[id] != std::numeric_limits<std::size_t>::max())
      throw std::invalid_argument(std::string(what) + " ordering repeats or exceeds an id");
    pos[id] = i;
  }
  for (const auto& id : interior)
    if (pos[static_cast<std::size_t>(id)] == std::numeric_limits<std::size_t>::max())
      throw std::invalid_argument(std::string(what) + " ordering misses an interior face");
  return pos;
}

std::vector<LinearForm> interior_forms_of_edge(const FaceTables& tables, const std::vector<LinearForm>& forms,
                                               std::size_t e) {
  std::vector<LinearForm> out;
  for (std::size_t s : tables.edge_triangles[e])
    if (tables.triangle_interior[s]) out.push_back(forms[s]);
  return distinct_forms(out);
}

// Distinct planes of interior triangles through e whose other edges are on
// the boundary or already numbered (`numbered(edge)`).
int qualifying_planes(const FaceTables& tables, const std::vector<LinearForm>& forms, std::size_t e,
                      const std::function<bool(std::size_t)>& numbered) {
  std::vector<LinearForm> qualifying;
  for (std::size_t s : tables.edge_triangles[e]) {
    if (!tables.triangle_interior[s]) continue;
    bool ok = true;
    for (std::size_t other : tables.triangle_edges[s])
      if (other != e && tables.edge_interior[other] && !numbered(other)) ok = false;
    if (ok) qualifying.push_back(forms[s]);
  }
  return static_cast<int>(distinct_forms(qualifying).size());
}

std::int64_t edge_term(int s, int r, int k) { return s == 0 ? 0 : edge_ideal_dim_closed(s, r, k); }

std::int64_t upper_head(const FaceTables& tables, int r, int k) {
  return binom(k + 3, 3) + static_cast<std::int64_t>(tables.f_interior[2]) * binom(k + 2 - r, 3);
}

int form_rank(const std::vector<LinearForm>& forms) {
  if (forms.empty()) return 0;
  RationalMatrix m(forms.size(), 4);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Rational(forms[i][j]);
  return static_cast<int>(rank(m));
}

}  // namespace

std::vector<EdgeProfile> edge_profiles(const FaceTables& tables, const std::vector<LinearForm>& forms,
                                       const std::vector<std::size_t>& ordering, int r) {
  const auto pos = positions_of(ordering, tables.interior_edges, tables.edges.size(), "edge");
  std::vector<EdgeProfile> out;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    EdgeProfile p;
    p.edge = ordering[i];
    p.index = i;
    p.s = static_cast<int>(interior_forms_of_edge(tables, forms, p.edge).size());
    p.s_tilde = qualifying_planes(tables, forms, p.edge, [&](std::size_t other) { return pos[other] < i; });
    if (p.s > 0) p.full = resolution_data(p.s, r);
    if (p.s_tilde > 0) p.restricted = resolution_data(p.s_tilde, r);
    out.push_back(p);
  }
  return out;
}

std::int64_t upper_bound(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                         const std::vector<std::size_t>& ordering) {
  std::int64_t bound = upper_head(tables, r, k);
  for (const auto& p : edge_profiles(tables, forms, ordering, r)) bound -= edge_term(p.s_tilde, r, k);
  return bound;
}

int vertex_plane_count(const FaceTables& tables, const std::vector<LinearForm>& forms, VertexId v) {
  std::vector<LinearForm> through;
  for (std::size_t s : tables.vertex_triangles[v])
    if (tables.triangle_interior[s]) through.push_back(forms[s]);
  return static_cast<int>(distinct_forms(through).size());
}

std::int64_t upper_bound_free(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k) {
  std::int64_t bound = upper_head(tables, r, k);
  for (std::size_t e : tables.interior_edges)
    bound -= edge_term(static_cast<int>(interior_forms_of_edge(tables, forms, e).size()), r, k);
  for (VertexId v : tables.interior_vertices)
    bound += binom(k + 3, 3) - froberg_sum(vertex_plane_count(tables, forms, v), r + 1, k);
  return bound;
}

std::vector<LinearForm> restricted_vertex_forms(const FaceTables& tables, const std::vector<LinearForm>& forms,
                                                const VertexProfile& profile) {
  std::vector<LinearForm> out;
  for (std::size_t e : profile.restricted_edges)
    for (std::size_t s : tables.edge_triangles[e])
      if (tables.triangle_interior[s]) out.push_back(forms[s]);
  return distinct_forms(out);
}

namespace {

VertexProfile make_vertex_profile(const FaceTables& tables, const std::vector<LinearForm>& forms, VertexId v,
                                  std::size_t index, const std::function<bool(VertexId)>& earlier) {
  VertexProfile p;
  p.vertex = v;
  p.index = index;
  p.t = vertex_plane_count(tables, forms, v);
  for (std::size_t e : tables.vertex_edges[v]) {
    if (!tables.edge_interior[e]) continue;
    const VertexId other = tables.edges[e][0] == v ? tables.edges[e][1] : tables.edges[e][0];
    if (!tables.vertex_interior[other] || earlier(other)) p.restricted_edges.push_back(e);
  }
  const auto restricted = restricted_vertex_forms(tables, forms, p);
  p.t_tilde = static_cast<int>(restricted.size());
  p.zeta = std::min({3, p.t_tilde, form_rank(restricted)});
  return p;
}

}  // namespace

std::vector<VertexProfile> vertex_profiles(const FaceTables& tables, const std::vector<LinearForm>& forms,
                                           const std::vector<VertexId>& ordering) {
  const auto pos = positions_of(ordering, tables.interior_vertices, tables.vertex_count, "vertex");
  std::vector<VertexProfile> out;
  for (std::size_t i = 0; i < ordering.size(); ++i)
    out.push_back(make_vertex_profile(tables, forms, ordering[i], i, [&](VertexId w) { return pos[w] < i; }));
  return out;
}

namespace {

std::int64_t lower_from_zetas(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                              std::int64_t zeta_sum) {
  std::int64_t tail = static_cast<std::int64_t>(tables.f_interior[2]) * binom(k + 2 - r, 3);
  for (std::size_t e : tables.interior_edges)
    tail -= edge_term(static_cast<int>(interior_forms_of_edge(tables, forms, e).size()), r, k);
  tail += static_cast<std::int64_t>(tables.f_interior[0]) * binom(k + 3, 3) - zeta_sum;
  return binom(k + 3, 3) + std::max<std::int64_t>(0, tail);
}

}  // namespace

std::int64_t lower_bound(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                         const std::vector<VertexId>& ordering) {
  std::int64_t zeta_sum = 0;
  for (const auto& p : vertex_profiles(tables, forms, ordering)) zeta_sum += froberg_sum(p.zeta, r + 1, k);
  return lower_from_zetas(tables, forms, r, k, zeta_sum);
}

BoundResult evaluate_bounds(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                            const std::vector<std::size_t>& edge_ordering,
                            const std::vector<VertexId>& vertex_ordering) {
  BoundResult b;
  b.k = k;
  b.r = r;
  b.edge_ordering = edge_ordering;
  b.vertex_ordering = vertex_ordering;
  b.upper_ordered = upper_bound(tables, forms, r, k, edge_ordering);
  b.lower = lower_bound(tables, forms, r, k, vertex_ordering);
  b.upper_free = upper_bound_free(tables, forms, r, k);
  return b;
}

namespace {

// Minimizes cost(ordering) over permutations of `items`; ties keep the
// lexicographically smallest ordering.
template <typename Id, typename Cost>
std::pair<std::vector<Id>, bool> minimize_ordering(std::vector<Id> items, std::size_t budget, Cost cost,
                                                   const std::function<std::int64_t(const std::vector<Id>&, Id)>&
                                                       step_cost) {
  std::sort(items.begin(), items.end());
  const std::size_t n = items.size();
  std::size_t factorial = 1;
  bool fits = n <= 8;
  for (std::size_t i = 2; fits && i <= n; ++i) factorial *= i;
  fits = fits && factorial <= budget;

  std::vector<Id> best = items;
  std::int64_t best_cost = cost(best);
  auto consider = [&](const std::vector<Id>& cand) {
    const std::int64_t c = cost(cand);
    if (c < best_cost || (c == best_cost && cand < best)) {
      best = cand;
      best_cost = c;
    }
  };

  if (fits) {
    std::vector<Id> perm = items;
    while (std::next_permutation(perm.begin(), perm.end())) consider(perm);
    return {best, true};
  }

  std::size_t evaluations = 1;
  // Greedy: repeatedly append the item with the smallest incremental cost.
  std::vector<Id> greedy;
  std::vector<Id> remaining = items;
  while (!remaining.empty()) {
    auto pick = remaining.begin();
    std::int64_t pick_cost = step_cost(greedy, *pick);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const std::int64_t c = step_cost(greedy, *it);
      if (c < pick_cost) {
        pick = it;
        pick_cost = c;
      }
    }
    greedy.push_back(*pick);
    remaining.erase(pick);
  }
  if (evaluations < budget) {
    consider(greedy);
    ++evaluations;
  }

  std::mt19937_64 rng(0x5eedULL + n);
  std::vector<Id> perm = items;
  while (evaluations < budget) {
    std::shuffle(perm.begin(), perm.end(), rng);
    consider(perm);
    ++evaluations;
  }
  return {best, false};
}

}  // namespace

BoundResult search_orderings(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k,
                             std::size_t budget) {
  if (budget < 1) throw std::invalid_argument("search_orderings: budget must be at least 1");

  // Upper bound: maximize the subtracted edge terms.
  auto edge_cost = [&](const std::vector<std::size_t>& ordering) {
    return -(upper_head(tables, r, k) - upper_bound(tables, forms, r, k, ordering));
  };
  auto edge_step = [&](const std::vector<std::size_t>& prefix, std::size_t e) -> std::int64_t {
    const std::set<std::size_t> done(prefix.begin(), prefix.end());
    const int st = qualifying_planes(tables, forms, e, [&](std::size_t other) { return done.count(other) > 0; });
    return -edge_term(st, r, k);
  };
  auto [edges, edges_exhaustive] =
      minimize_ordering<std::size_t>(tables.interior_edges, budget, edge_cost, edge_step);

  // Lower bound: minimize the Fröberg sums.
  auto vertex_cost = [&](const std::vector<VertexId>& ordering) {
    return -lower_bound(tables, forms, r, k, ordering);
  };
  auto vertex_step = [&](const std::vector<VertexId>& prefix, VertexId v) -> std::int64_t {
    const std::set<VertexId> done(prefix.begin(), prefix.end());
    const auto p = make_vertex_profile(tables, forms, v, prefix.size(),
                                       [&](VertexId w) { return done.count(w) > 0; });
    return froberg_sum(p.zeta, r + 1, k);
  };
  auto [vertices, vertices_exhaustive] =
      minimize_ordering<VertexId>(tables.interior_vertices, budget, vertex_cost, vertex_step);

  BoundResult b = evaluate_bounds(tables, forms, r, k, edges, vertices);
  b.exhaustive_edges = edges_exhaustive;
  b.exhaustive_vertices = vertices_exhaustive;
  return b;
}

}  // namespace splinedim
