#include "splinedim/report.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "splinedim/oracle.hpp"

namespace splinedim {

OrderingStrategy parse_ordering(std::string_view text) {
  if (text == "input") return OrderingStrategy::Input;
  if (text == "lex") return OrderingStrategy::Lex;
  if (text == "search") return OrderingStrategy::Search;
  throw std::invalid_argument("unknown ordering '" + std::string(text) + "'");
}

const char* to_string(OrderingStrategy strategy) {
  switch (strategy) {
    case OrderingStrategy::Input: return "input";
    case OrderingStrategy::Lex: return "lex";
    case OrderingStrategy::Search: return "search";
  }
  return "unknown";
}

BoundResult bounds_for(const SimplicialComplex3& complex, const FaceTables& tables,
                       const std::vector<LinearForm>& forms, int r, int k, const ReportOptions& options) {
  switch (options.ordering) {
    case OrderingStrategy::Search: return search_orderings(tables, forms, r, k, options.budget);
    case OrderingStrategy::Input:
      return evaluate_bounds(tables, forms, r, k, input_edge_ordering(complex, tables),
                             input_vertex_ordering(complex, tables));
    case OrderingStrategy::Lex: break;
  }
  return evaluate_bounds(tables, forms, r, k, lex_edge_ordering(tables), lex_vertex_ordering(tables));
}

namespace {

template <typename T, typename F>
std::vector<T> map_degrees(int first, int last, unsigned jobs, F fn) {
  std::vector<T> out;
  if (last < first) return out;
  if (jobs <= 1) {
    for (int k = first; k <= last; ++k) out.push_back(fn(k));
    return out;
  }
  for (int start = first; start <= last; start += static_cast<int>(jobs)) {
    std::vector<std::future<T>> batch;
    for (int k = start; k <= last && k < start + static_cast<int>(jobs); ++k)
      batch.push_back(std::async(std::launch::async, fn, k));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace

GradedReport compute_table(const SimplicialComplex3& complex, int r, int k_first, int k_last,
                           const ReportOptions& options, std::string source) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  if (k_first < 0 || k_last < k_first) throw std::invalid_argument("empty or negative degree range");
  const FaceTables tables = build_face_tables(complex);
  const auto forms = triangle_forms(complex, tables);

  GradedReport report;
  report.source = std::move(source);
  report.r = r;
  report.ordering = options.ordering;

  std::vector<HomologyDims> homology;
  if (options.homology) {
    homology = map_degrees<HomologyDims>(0, k_last, options.jobs, [&](int k) {
      return homology_dims(assemble_slice(tables, forms, r, k));
    });
    for (int k = 0; k <= k_last && homology[k].h0 == 0 && homology[k].h1 == 0; ++k) report.free_through = k;
  }
  std::vector<std::int64_t> oracle;
  if (options.oracle)
    oracle = map_degrees<std::int64_t>(k_first, k_last, options.jobs,
                                       [&](int k) { return spline_dim(tables, forms, r, k); });

  report.records = map_degrees<DegreeRecord>(k_first, k_last, options.jobs, [&](int k) {
    DegreeRecord rec;
    rec.k = k;
    rec.bounds = bounds_for(complex, tables, forms, r, k, options);
    if (options.homology) {
      rec.homology = homology[k];
      rec.bounds.free_status = report.free_through >= k ? FreeStatus::FreeThroughK : FreeStatus::NotFree;
    }
    if (options.oracle) rec.oracle = oracle[k - k_first];
    return rec;
  });
  return report;
}

namespace {

const char* free_mark(FreeStatus status) {
  switch (status) {
    case FreeStatus::FreeThroughK: return "yes";
    case FreeStatus::NotFree: return "no";
    case FreeStatus::Unverified: return "?";
  }
  return "?";
}

std::vector<std::string> cells(const DegreeRecord& rec) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  std::optional<std::int64_t> h0, h1, h2;
  if (rec.homology) {
    h0 = rec.homology->h0;
    h1 = rec.homology->h1;
    h2 = rec.homology->h2;
  }
  return {std::to_string(rec.k),
          std::to_string(rec.bounds.lower),
          std::to_string(rec.bounds.upper_ordered),
          std::to_string(rec.bounds.upper_free),
          free_mark(rec.bounds.free_status),
          opt(h0),
          opt(h1),
          opt(h2),
          opt(rec.oracle)};
}

const std::vector<std::string> kColumns = {"k", "lower", "upper", "upper_free", "free", "h0", "h1", "h2", "oracle"};

}  // namespace

std::string format_text(const GradedReport& report) {
  std::vector<std::vector<std::string>> rows{kColumns};
  for (const auto& rec : report.records) rows.push_back(cells(rec));
  std::vector<std::size_t> width(kColumns.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], std::max<std::size_t>(row[c].size(), 1));

  std::ostringstream out;
  if (!report.source.empty()) out << "mesh: " << report.source << '\n';
  out << "r: " << report.r << "  ordering: " << to_string(report.ordering) << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << (row[c].empty() ? "-" : row[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_csv(const GradedReport& report) {
  std::ostringstream out;
  for (std::size_t c = 0; c < kColumns.size(); ++c) out << (c ? "," : "") << kColumns[c];
  out << '\n';
  for (const auto& rec : report.records) {
    const auto row = cells(rec);
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
  return out.str();
}

std::string format_json(const GradedReport& report) {
  nlohmann::ordered_json j;
  j["source"] = report.source;
  j["r"] = report.r;
  j["ordering"] = to_string(report.ordering);
  j["free_through"] = report.free_through;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) {
    nlohmann::ordered_json row;
    row["k"] = rec.k;
    row["lower"] = rec.bounds.lower;
    row["upper"] = rec.bounds.upper_ordered;
    row["upper_free"] = rec.bounds.upper_free;
    row["free"] = to_string(rec.bounds.free_status);
    if (rec.homology) {
      row["h0"] = rec.homology->h0;
      row["h1"] = rec.homology->h1;
      row["h2"] = rec.homology->h2;
      row["ideal_dims"] = {{"triangles", rec.homology->sum_triangle},
                           {"edges", rec.homology->sum_edge},
                           {"vertices", rec.homology->sum_vertex}};
    }
    if (rec.oracle) row["oracle"] = *rec.oracle;
    row["edge_ordering"] = rec.bounds.edge_ordering;
    row["vertex_ordering"] = rec.bounds.vertex_ordering;
    j["records"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace splinedim
