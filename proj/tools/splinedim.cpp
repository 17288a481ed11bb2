#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "splinedim/bounds.hpp"
#include "splinedim/builtin.hpp"
#include "splinedim/forms.hpp"
#include "splinedim/homology.hpp"
#include "splinedim/mesh.hpp"
#include "splinedim/oracle.hpp"
#include "splinedim/report.hpp"

using namespace splinedim;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kInput = 3, kValidation = 4, kCompute = 5 };

struct CliError : std::runtime_error {
  CliError(ExitCode code, std::string category, const std::string& message)
      : std::runtime_error(message), code(code), category(std::move(category)) {}
  ExitCode code;
  std::string category;
};

struct Loaded {
  std::string source;
  SimplicialComplex3 complex;
  FaceTables tables;
  std::vector<LinearForm> forms;
};

std::string read_source(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) {
    try {
      return builtin_mesh_text(source.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw CliError(kInput, "input", e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw CliError(kInput, "io", "cannot read '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Loaded load(const std::string& source) {
  const std::string text = read_source(source);
  try {
    SimplicialComplex3 complex = parse_mesh(text);
    FaceTables tables = build_face_tables(complex);
    auto forms = triangle_forms(complex, tables);
    const auto ball = check_ball_hypothesis(tables);
    for (const auto& w : ball.warnings) std::cerr << "warning: " << w << '\n';
    return {source, std::move(complex), std::move(tables), std::move(forms)};
  } catch (const MeshError& e) {
    const bool syntax = e.kind() == MeshError::Kind::Syntax;
    throw CliError(syntax ? kInput : kValidation, syntax ? "parse" : to_string(e.kind()), e.what());
  }
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw CliError(kUsage, "usage", std::string("invalid ") + what + " '" + std::string(text) + "'");
  return value;
}

std::pair<int, int> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int k = parse_int(text, "degree");
    return {k, k};
  }
  const int a = parse_int(std::string_view(text).substr(0, dots), "degree");
  const int b = parse_int(std::string_view(text).substr(dots + 2), "degree");
  if (b < a) throw CliError(kUsage, "usage", "empty degree range '" + text + "'");
  return {a, b};
}

template <typename Seq>
std::string join(const Seq& seq) {
  std::string out;
  for (const auto& v : seq) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

int cmd_analyze(const Loaded& m) {
  const auto& t = m.tables;
  std::cout << "mesh: " << m.source << '\n';
  std::cout << "faces: f0=" << t.f[0] << " f1=" << t.f[1] << " f2=" << t.f[2] << " f3=" << t.f[3] << '\n';
  std::cout << "interior: f0=" << t.f_interior[0] << " f1=" << t.f_interior[1] << " f2=" << t.f_interior[2]
            << " f3=" << t.f_interior[3] << '\n';
  const auto edges = edge_profiles(t, m.forms, lex_edge_ordering(t));
  for (const auto& p : edges)
    std::cout << "edge " << t.edges[p.edge][0] << "-" << t.edges[p.edge][1] << ": s=" << p.s
              << " s~=" << p.s_tilde << '\n';
  for (const auto& p : vertex_profiles(t, m.forms, lex_vertex_ordering(t)))
    std::cout << "vertex " << p.vertex << ": t=" << p.t << " t~=" << p.t_tilde << " zeta=" << p.zeta << '\n';
  const auto ball = check_ball_hypothesis(t);
  std::cout << "euler: " << ball.euler_characteristic << (ball.euler_ok ? " ok" : " FAIL") << '\n';
  std::cout << "boundary: closed=" << (ball.boundary_closed ? "yes" : "no")
            << " vertex-links=" << (ball.boundary_vertex_links ? "yes" : "no")
            << " euler=" << ball.boundary_euler_characteristic << '\n';
  std::cout << "ball-check: " << (ball.passed() ? "pass" : "fail") << '\n';
  return kOk;
}

int cmd_bounds(const Loaded& m, int r, std::pair<int, int> ks, const ReportOptions& options) {
  for (int k = ks.first; k <= ks.second; ++k) {
    const auto b = bounds_for(m.complex, m.tables, m.forms, r, k, options);
    std::cout << "k=" << k << " lower=" << b.lower << " upper=" << b.upper_ordered << " upper_free=" << b.upper_free
              << " (valid only if free)\n";
    std::string edges;
    for (std::size_t e : b.edge_ordering)
      edges += (edges.empty() ? "" : " ") + std::to_string(m.tables.edges[e][0]) + "-" +
               std::to_string(m.tables.edges[e][1]);
    std::cout << "  edge-ordering: " << edges << '\n';
    std::cout << "  vertex-ordering: " << join(b.vertex_ordering) << '\n';
  }
  return kOk;
}

int cmd_homology(const Loaded& m, int r, std::pair<int, int> ks) {
  for (int k = ks.first; k <= ks.second; ++k) {
    const auto slice = assemble_slice(m.tables, m.forms, r, k);
    const auto h = homology_dims(slice);
    std::cout << "k=" << k << " h0=" << h.h0 << " h1=" << h.h1 << " h2=" << h.h2 << " rank_d1=" << h.rank_d1
              << " rank_d2=" << h.rank_d2 << " dim=" << binom(k + 3, 3) + h.h2
              << " d1d2=" << (boundary_composition_vanishes(slice) ? "0" : "NONZERO")
              << " h0_estimate=" << h0_upper_estimate(m.tables, m.forms, r, k, lex_vertex_ordering(m.tables))
              << '\n';
  }
  return kOk;
}

int cmd_dim(const Loaded& m, int r, std::pair<int, int> ks) {
  for (int k = ks.first; k <= ks.second; ++k)
    std::cout << "k=" << k << " dim=" << spline_dim(m.tables, m.forms, r, k) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension bounds, homology and exact dimension of trivariate spline spaces"};
  app.require_subcommand(1);

  std::string mesh, name, k_text = "0", ordering = "lex", format = "text";
  int r = 1;
  std::size_t budget = 40320;
  bool with_oracle = false;
  unsigned jobs = 1;

  auto* example = app.add_subcommand("example", "Print a built-in mesh");
  example->add_option("name", name, "octahedron-regular | octahedron-generic | clough-tocher")->required();

  auto add_mesh = [&](CLI::App* cmd) { cmd->add_option("mesh", mesh, "mesh file or builtin:<name>")->required(); };
  auto add_rk = [&](CLI::App* cmd) {
    cmd->add_option("--r", r, "smoothness order")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--k", k_text, "degree K or range A..B")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Face counts, plane counts and ball diagnostics");
  add_mesh(analyze);
  auto* bounds = app.add_subcommand("bounds", "Lower, upper and free-case upper bounds");
  add_mesh(bounds);
  add_rk(bounds);
  bounds->add_option("--ordering", ordering, "input | lex | search");
  bounds->add_option("--budget", budget, "orderings evaluated by search")->check(CLI::PositiveNumber);
  auto* homology = app.add_subcommand("homology", "Homology of the ideal complex");
  add_mesh(homology);
  add_rk(homology);
  auto* dim = app.add_subcommand("dim", "Exact dimension from the smoothness conditions");
  add_mesh(dim);
  add_rk(dim);
  auto* table = app.add_subcommand("table", "Per-degree table");
  add_mesh(table);
  add_rk(table);
  table->add_option("--ordering", ordering, "input | lex | search");
  table->add_option("--budget", budget, "orderings evaluated by search")->check(CLI::PositiveNumber);
  table->add_flag("--oracle", with_oracle, "include the exact dimension (slow)");
  table->add_option("--format", format, "text | csv | json");
  table->add_option("--jobs", jobs, "degrees computed concurrently")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (example->parsed()) {
      try {
        std::cout << builtin_mesh_text(name);
      } catch (const std::invalid_argument& e) {
        throw CliError(kUsage, "usage", e.what());
      }
      return kOk;
    }
    ReportOptions options;
    try {
      options.ordering = parse_ordering(ordering);
    } catch (const std::invalid_argument& e) {
      throw CliError(kUsage, "usage", e.what());
    }
    if (format != "text" && format != "csv" && format != "json")
      throw CliError(kUsage, "usage", "unknown format '" + format + "'");
    options.budget = budget;
    options.oracle = with_oracle;
    options.jobs = jobs;

    const auto ks = parse_k_range(k_text);
    const Loaded m = load(mesh);
    try {
      if (analyze->parsed()) return cmd_analyze(m);
      if (bounds->parsed()) return cmd_bounds(m, r, ks, options);
      if (homology->parsed()) return cmd_homology(m, r, ks);
      if (dim->parsed()) return cmd_dim(m, r, ks);
      const auto report = compute_table(m.complex, r, ks.first, ks.second, options, m.source);
      if (format == "csv")
        std::cout << format_csv(report);
      else if (format == "json")
        std::cout << format_json(report);
      else
        std::cout << format_text(report);
      return kOk;
    } catch (const std::exception& e) {
      throw CliError(kCompute, "compute", e.what());
    }
  } catch (const CliError& e) {
    std::cerr << "error[" << e.category << "]: " << e.what() << '\n';
    return e.code;
  }
}
