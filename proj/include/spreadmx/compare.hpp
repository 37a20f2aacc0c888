#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spreadmx/csv.hpp"

namespace spreadmx {

struct CompareOptions {
  std::string group_column = "group";
  std::vector<std::string> measures{"alpha_m", "t_m"};
  /// Optional column correlated with each measure by Kendall tau-b.
  std::optional<std::string> kendall_column;
};

/// One output line. `value` and the Kruskal–Wallis fields are empty when the
/// cell is degenerate; `significant` is "true", "false" or "NA".
struct ComparisonRow {
  std::string dx;
  std::string seed;
  std::string groups;
  std::string measure;
  std::string retention;
  std::optional<double> value;
  std::string significant;
  std::optional<double> kw_h;
  std::optional<double> kw_p;
};

struct ComparisonResult {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> notes;
};

/// Groups metric rows into cells keyed by (dx, seed, R) and, per measure,
/// reports every pairwise Cohen's d with the cell's Kruskal–Wallis result
/// (significant when p < 0.05). Missing dx/seed/R columns count as "NA".
/// Degenerate cells are noted and left blank; the remaining cells still run.
ComparisonResult compare_groups(const CsvTable& metrics, const CompareOptions& options);

/// `dx,seed,groups,measure,R,value,significant,kw_h,kw_p`
void write_comparison_csv(std::ostream& out, const ComparisonResult& result);

}  // namespace spreadmx
