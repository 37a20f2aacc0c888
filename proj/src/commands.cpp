#include "spreadmx/commands.hpp"

#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "spreadmx/error.hpp"
#include "spreadmx/format.hpp"
#include "spreadmx/mindset_stream.hpp"
#include "spreadmx/viable_cluster.hpp"

namespace spreadmx::commands {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

std::string safe_name(const std::string& text) {
  std::string out;
  for (char c : text) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

}  // namespace

std::size_t run(const RunOptions& options, std::ostream& log) {
  ExperimentSpec spec = load_experiment(options.config);
  if (options.retention) spec.retention = *options.retention;
  if (options.coupling) spec.coupling = *options.coupling;
  if (options.seed_layers) spec.seed_layers = *options.seed_layers;
  if (options.horizon) spec.horizon = *options.horizon;
  if (options.measure_layer) spec.measure_layer = *options.measure_layer;
  if (options.lvc) spec.lvc = *options.lvc;

  const ExperimentResult result = run_experiment(spec, options.threads);
  for (const auto& w : result.warnings) log << "warning: " << w << '\n';

  {
    auto out = open_output(options.out_dir / "metrics.csv");
    write_experiment_metrics(out, result);
  }
  {
    auto out = open_output(options.out_dir / "run_report.json");
    write_experiment_report(out, result);
  }
  if (options.traces) {
    std::filesystem::remove_all(options.out_dir / "traces");
    std::filesystem::create_directories(options.out_dir / "traces");
    for (const auto& row : result.rows) {
      auto path = options.out_dir / "traces" /
                  ("cell" + std::to_string(row.cell) + "_" + safe_name(row.item) + ".csv");
      const bool fresh = !std::filesystem::exists(path);
      std::ofstream out(path, std::ios::binary | std::ios::app);
      if (!out) throw Error("cannot write '" + path.string() + "'");
      if (fresh) out << "node,layer,t,energy\n";
      for (std::size_t t = 0; t < row.trace.series.size(); ++t) {
        out << csv_field(row.trace.node) << ',' << csv_field(row.trace.layer) << ',' << t << ','
            << format_real(row.trace.series[t]) << '\n';
      }
    }
  }
  return result.rows.size();
}

LvcSummary lvc(const LvcOptions& options, std::ostream& log) {
  std::vector<std::string> warnings;
  const auto net = load_network(options.layers, options.attributes, &warnings);
  for (const auto& w : warnings) log << "warning: " << w << '\n';
  const auto cluster = largest_viable_cluster(net);
  std::filesystem::create_directories(options.out_dir);
  for (Index l = 0; l < cluster.num_layers(); ++l) {
    auto out = open_output(options.out_dir / (cluster.layer(l).name() + ".tsv"));
    write_layer(out, cluster, l, false);
  }
  if (options.attributes) {
    auto out = open_output(options.out_dir / "attributes.tsv");
    write_attributes(out, cluster);
  }

  LvcSummary summary;
  summary.nodes = cluster.num_nodes();
  nlohmann::ordered_json report;
  report["nodes"] = summary.nodes;
  auto& edges = report["edges_per_layer"] = nlohmann::ordered_json::object();
  for (const auto& layer : cluster.layers()) {
    summary.edges_per_layer.emplace_back(layer.name(), layer.num_edges());
    edges[layer.name()] = layer.num_edges();
  }
  auto out = open_output(options.out_dir / "lvc_report.json");
  out << report.dump(2) << '\n';
  return summary;
}

std::vector<SpectralReport> spectrum(const SpectrumOptions& options) {
  auto net = load_network(options.layers);
  if (options.lvc) net = largest_viable_cluster(net);
  return dx_sweep(net, options.grid, options.rates);
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectralReport>& reports) {
  out << "dx,lambda2_layer1,lambda2_layer2,lambda2_supra,lambda2_superposition,regime\n";
  for (const auto& r : reports) {
    out << format_real(r.coupling) << ',' << format_real(r.lambda2_per_layer.at(0)) << ','
        << format_real(r.lambda2_per_layer.at(1)) << ',' << format_real(r.lambda2_supra) << ','
        << format_real(r.lambda2_superposition) << ',' << to_string(r.regime) << '\n';
  }
}

std::size_t compare(const CompareCommand& command, std::ostream& log) {
  std::ifstream in(command.metrics, std::ios::binary);
  if (!in) throw Error("cannot open '" + command.metrics.string() + "'");
  const auto table = read_csv(in, command.metrics.string());
  const auto result = compare_groups(table, command.options);
  for (const auto& n : result.notes) log << "note: " << n << '\n';
  {
    auto out = open_output(command.output);
    write_comparison_csv(out, result);
  }
  nlohmann::ordered_json report;
  report["input_rows"] = table.rows.size();
  report["output_rows"] = result.rows.size();
  report["notes"] = result.notes;
  auto side = open_output(command.output.string() + ".report.json");
  side << report.dump(2) << '\n';
  return result.rows.size();
}

int stream(const StreamOptions& options, std::ostream& log) {
  std::vector<std::string> warnings;
  const auto net = load_network(options.layers, options.attributes, &warnings);
  for (const auto& w : warnings) log << "warning: " << w << '\n';
  const auto s = mindset_stream(net, options.layer, options.source, options.target);

  auto edges = open_output(options.out_prefix.string() + "_edges.tsv");
  for (const auto& [u, v] : s.edges) edges << u.label << '\t' << v.label << '\n';
  auto valence = open_output(options.out_prefix.string() + "_valence.csv");
  valence << "node,valence\n";
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    valence << csv_field(s.nodes[i].label) << ','
            << (s.valence[i] ? std::string(to_string(*s.valence[i])) : std::string("NA")) << '\n';
  }
  if (!s.connected()) log << "no path between '" << s.source.label << "' and '" << s.target.label << "'\n";
  return s.path_length;
}

}  // namespace spreadmx::commands
