#include "spreadmx/compare.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>

#include "spreadmx/error.hpp"
#include "spreadmx/format.hpp"
#include "spreadmx/stats.hpp"

namespace spreadmx {
namespace {

constexpr double kSignificance = 0.05;

std::optional<double> to_real(const std::string& text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

struct CellKey {
  std::string dx, seed, retention;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

// Preserves first-appearance order of keys.
template <typename Key, typename Value>
struct OrderedGroups {
  std::vector<Key> keys;
  std::vector<Value> values;

  Value& operator[](const Key& key) {
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it != keys.end()) return values[it - keys.begin()];
    keys.push_back(key);
    values.emplace_back();
    return values.back();
  }
};

struct CellRows {
  std::vector<std::size_t> rows;
};

std::string cell_name(const CellKey& k) {
  return "dx=" + k.dx + " seed=" + k.seed + " R=" + k.retention;
}

}  // namespace

ComparisonResult compare_groups(const CsvTable& metrics, const CompareOptions& options) {
  const auto group_col = metrics.column(options.group_column);
  if (!group_col) throw LookupError("metrics file has no column '" + options.group_column + "'");
  std::vector<std::size_t> measure_cols;
  for (const auto& m : options.measures) {
    auto col = metrics.column(m);
    if (!col) throw LookupError("metrics file has no column '" + m + "'");
    measure_cols.push_back(*col);
  }
  std::optional<std::size_t> kendall_col;
  if (options.kendall_column) {
    kendall_col = metrics.column(*options.kendall_column);
    if (!kendall_col) throw LookupError("metrics file has no column '" + *options.kendall_column + "'");
  }
  const auto dx_col = metrics.column("dx");
  const auto seed_col = metrics.column("seed");
  const auto r_col = metrics.column("R");
  auto cell_value = [](const std::vector<std::string>& row, std::optional<std::size_t> col) {
    return col ? row[*col] : std::string("NA");
  };

  std::vector<std::string> levels;
  OrderedGroups<CellKey, CellRows> cells;
  for (std::size_t i = 0; i < metrics.rows.size(); ++i) {
    const auto& row = metrics.rows[i];
    const auto& level = row[*group_col];
    if (std::find(levels.begin(), levels.end(), level) == levels.end()) levels.push_back(level);
    cells[{cell_value(row, dx_col), cell_value(row, seed_col), cell_value(row, r_col)}].rows.push_back(i);
  }
  if (levels.size() < 2) {
    throw InvalidArgument("grouping column '" + options.group_column + "' needs at least 2 levels");
  }

  ComparisonResult result;
  for (std::size_t c = 0; c < cells.keys.size(); ++c) {
    const CellKey& key = cells.keys[c];
    for (std::size_t m = 0; m < options.measures.size(); ++m) {
      const std::string& measure = options.measures[m];
      std::vector<std::vector<double>> samples(levels.size());
      bool parse_ok = true;
      for (std::size_t r : cells.values[c].rows) {
        const auto& row = metrics.rows[r];
        auto v = to_real(row[measure_cols[m]]);
        if (!v) {
          parse_ok = false;
          continue;
        }
        const auto level = std::find(levels.begin(), levels.end(), row[*group_col]) - levels.begin();
        samples[level].push_back(*v);
      }
      if (!parse_ok) {
        result.notes.push_back(cell_name(key) + " " + measure + ": non-numeric values skipped");
      }

      std::optional<stats::KruskalWallis> kw;
      std::vector<std::vector<double>> present;
      for (const auto& s : samples) {
        if (!s.empty()) present.push_back(s);
      }
      if (present.size() >= 2) {
        kw = stats::kruskal_wallis(present);
      } else {
        result.notes.push_back(cell_name(key) + " " + measure +
                               ": fewer than 2 non-empty groups, Kruskal-Wallis skipped");
      }

      for (std::size_t a = 0; a < levels.size(); ++a) {
        for (std::size_t b = a + 1; b < levels.size(); ++b) {
          ComparisonRow out{key.dx, key.seed, levels[a] + " vs " + levels[b], measure, key.retention,
                            std::nullopt, "NA", std::nullopt, std::nullopt};
          if (kw) {
            out.kw_h = kw->h;
            out.kw_p = kw->p;
            out.significant = kw->p < kSignificance ? "true" : "false";
          }
          try {
            out.value = stats::cohens_d(samples[a], samples[b]);
          } catch (const InvalidArgument& e) {
            result.notes.push_back(cell_name(key) + " " + measure + " " + out.groups + ": " + e.what());
          }
          result.rows.push_back(std::move(out));
        }
      }

      if (kendall_col) {
        std::vector<double> xs, ys;
        for (std::size_t r : cells.values[c].rows) {
          const auto& row = metrics.rows[r];
          auto x = to_real(row[measure_cols[m]]);
          auto y = to_real(row[*kendall_col]);
          if (x && y) {
            xs.push_back(*x);
            ys.push_back(*y);
          }
        }
        ComparisonRow out{key.dx, key.seed, "ALL", "kendall_tau:" + measure + "~" + *options.kendall_column,
                          key.retention, std::nullopt, "NA", std::nullopt, std::nullopt};
        try {
          out.value = stats::kendall_tau(xs, ys);
        } catch (const InvalidArgument& e) {
          result.notes.push_back(cell_name(key) + " " + out.measure + ": " + e.what());
        }
        result.rows.push_back(std::move(out));
      }
    }
  }
  return result;
}

void write_comparison_csv(std::ostream& out, const ComparisonResult& result) {
  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  out << "dx,seed,groups,measure,R,value,significant,kw_h,kw_p\n";
  for (const auto& r : result.rows) {
    out << csv_field(r.dx) << ',' << csv_field(r.seed) << ',' << csv_field(r.groups) << ','
        << csv_field(r.measure) << ',' << csv_field(r.retention) << ',' << opt(r.value) << ','
        << r.significant << ',' << opt(r.kw_h) << ',' << opt(r.kw_p) << '\n';
  }
}

}  // namespace spreadmx
