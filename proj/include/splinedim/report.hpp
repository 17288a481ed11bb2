#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splinedim/bounds.hpp"
#include "splinedim/homology.hpp"
#include "splinedim/mesh.hpp"

namespace splinedim {

enum class OrderingStrategy { Input, Lex, Search };

/// Accepts "input", "lex", "search"; throws std::invalid_argument otherwise.
OrderingStrategy parse_ordering(std::string_view text);
const char* to_string(OrderingStrategy strategy);

struct ReportOptions {
  OrderingStrategy ordering = OrderingStrategy::Lex;
  std::size_t budget = 40320;
  bool homology = true;
  bool oracle = false;
  unsigned jobs = 1;
};

struct DegreeRecord {
  int k = 0;
  BoundResult bounds;
  std::optional<HomologyDims> homology;
  std::optional<std::int64_t> oracle;
};

struct GradedReport {
  std::string source;
  int r = 0;
  OrderingStrategy ordering = OrderingStrategy::Lex;
  std::vector<DegreeRecord> records;  // ascending k
  /// Largest k with h0_j = h1_j = 0 for all j <= k; -1 if none or not computed.
  int free_through = -1;
};

/// Bounds for one degree under the chosen ordering strategy.
BoundResult bounds_for(const SimplicialComplex3& complex, const FaceTables& tables,
                       const std::vector<LinearForm>& forms, int r, int k, const ReportOptions& options);

/// One record per k in [k_first, k_last]. Homology is evaluated from degree 0
/// so the freeness flag covers every degree up to k.
GradedReport compute_table(const SimplicialComplex3& complex, int r, int k_first, int k_last,
                           const ReportOptions& options, std::string source = {});

std::string format_text(const GradedReport& report);
std::string format_csv(const GradedReport& report);
std::string format_json(const GradedReport& report);

}  // namespace splinedim
