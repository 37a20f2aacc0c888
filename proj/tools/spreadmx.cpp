// Command-line experiment runner for spreading activation on multiplex networks.

#include <exception>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spreadmx/commands.hpp"
#include "spreadmx/error.hpp"
#include "spreadmx/mindset_stream.hpp"

namespace {

using namespace spreadmx;

std::vector<LayerSource> to_sources(const std::vector<std::string>& specs) {
  std::vector<LayerSource> out;
  for (const auto& s : specs) out.push_back(parse_layer_source(s));
  return out;
}

int report_error(const char* kind, const std::exception& e) {
  nlohmann::ordered_json err;
  err["error"] = kind;
  err["message"] = e.what();
  std::cerr << err.dump() << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spreadmx: spreading activation on single-layer and multiplex networks"};
  app.require_subcommand(1);

  // run
  commands::RunOptions run_opts;
  run_opts.threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<double> run_retention, run_coupling;
  std::vector<std::string> run_seed_layers;
  int run_horizon = 0;
  std::string run_measure;
  bool run_lvc = false;
  auto* run_cmd = app.add_subcommand("run", "Run a simulation grid from an experiment file");
  run_cmd->add_option("config", run_opts.config, "Experiment file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("-o,--out", run_opts.out_dir, "Output directory")->required();
  run_cmd->add_option("-j,--threads", run_opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--traces", run_opts.traces, "Also write per-cell activation traces");
  auto* o_r = run_cmd->add_option("--retention", run_retention, "Override retention grid")->delimiter(',');
  auto* o_dx = run_cmd->add_option("--coupling", run_coupling, "Override coupling grid")->delimiter(',');
  auto* o_seed = run_cmd->add_option("--seed-layers", run_seed_layers, "Override seed layers (names or ALL)")
                     ->delimiter(',');
  auto* o_t = run_cmd->add_option("--horizon", run_horizon, "Override horizon");
  auto* o_m = run_cmd->add_option("--measure-layer", run_measure, "AGGREGATE, SEED or a layer name");
  auto* o_lvc = run_cmd->add_flag("--lvc", run_lvc, "Restrict to the largest viable cluster");

  // lvc
  commands::LvcOptions lvc_opts;
  std::vector<std::string> lvc_layers;
  std::string lvc_attrs;
  auto* lvc_cmd = app.add_subcommand("lvc", "Extract the largest viable cluster");
  lvc_cmd->add_option("-l,--layer", lvc_layers, "Layer as name=path (repeatable)")->required();
  lvc_cmd->add_option("-a,--attributes", lvc_attrs, "Attribute table");
  lvc_cmd->add_option("-o,--out", lvc_opts.out_dir, "Output directory")->required();

  // spectrum
  commands::SpectrumOptions spec_opts;
  std::vector<std::string> spec_layers;
  std::vector<double> spec_dx;
  std::vector<double> spec_log;
  std::vector<double> spec_rates{1.0, 1.0};
  std::string spec_out;
  auto* spec_cmd = app.add_subcommand("spectrum", "Supra-Laplacian lambda2 sweep over coupling values");
  spec_cmd->add_option("-l,--layer", spec_layers, "Layer as name=path (exactly two)")->required();
  auto* o_dxl = spec_cmd->add_option("--dx", spec_dx, "Coupling values, ascending")->delimiter(',');
  auto* o_log = spec_cmd->add_option("--dx-log", spec_log, "lo,hi,count log-spaced grid")
                    ->delimiter(',')
                    ->expected(3);
  o_dxl->excludes(o_log);
  spec_cmd->add_option("--rates", spec_rates, "Layer rates p1,p2")->delimiter(',')->expected(2);
  spec_cmd->add_flag("--lvc", spec_opts.lvc, "Restrict to the largest viable cluster first");
  spec_cmd->add_option("-o,--out", spec_out, "Output CSV (stdout when omitted)");

  // compare
  commands::CompareCommand cmp;
  std::string cmp_kendall;
  std::vector<std::string> cmp_measures;
  auto* cmp_cmd = app.add_subcommand("compare", "Group statistics over a metrics CSV");
  cmp_cmd->add_option("metrics", cmp.metrics, "Metrics CSV")->required()->check(CLI::ExistingFile);
  cmp_cmd->add_option("-g,--group", cmp.options.group_column, "Grouping column");
  auto* o_meas = cmp_cmd->add_option("--measures", cmp_measures, "Measure columns")->delimiter(',');
  auto* o_k = cmp_cmd->add_option("--kendall", cmp_kendall, "Column to correlate with each measure");
  cmp_cmd->add_option("-o,--out", cmp.output, "Output CSV")->required();

  // stream
  commands::StreamOptions st;
  std::vector<std::string> st_layers;
  std::string st_attrs;
  auto* st_cmd = app.add_subcommand("stream", "Mindset stream: all shortest paths between two concepts");
  st_cmd->add_option("-l,--layer", st_layers, "Layer as name=path (repeatable)")->required();
  st_cmd->add_option("-a,--attributes", st_attrs, "Attribute table with valence labels");
  st_cmd->add_option("--in-layer", st.layer, "Layer to search (defaults to the first)");
  st_cmd->add_option("--from", st.source, "Source concept")->required();
  st_cmd->add_option("--to", st.target, "Target concept")->required();
  st_cmd->add_option("-o,--out", st.out_prefix, "Output prefix")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      if (*o_r) run_opts.retention = run_retention;
      if (*o_dx) run_opts.coupling = run_coupling;
      if (*o_seed) run_opts.seed_layers = run_seed_layers;
      if (*o_t) run_opts.horizon = run_horizon;
      if (*o_m) run_opts.measure_layer = run_measure;
      if (*o_lvc) run_opts.lvc = run_lvc;
      const auto rows = commands::run(run_opts, std::cerr);
      std::cout << "wrote " << rows << " metric rows to " << (run_opts.out_dir / "metrics.csv").string()
                << '\n';
    } else if (*lvc_cmd) {
      lvc_opts.layers = to_sources(lvc_layers);
      if (!lvc_attrs.empty()) lvc_opts.attributes = lvc_attrs;
      const auto summary = commands::lvc(lvc_opts, std::cerr);
      std::cout << "largest viable cluster: " << summary.nodes << " nodes\n";
    } else if (*spec_cmd) {
      spec_opts.layers = to_sources(spec_layers);
      spec_opts.rates = {spec_rates.at(0), spec_rates.at(1)};
      if (!spec_log.empty()) {
        spec_opts.grid = log_grid(spec_log[0], spec_log[1], static_cast<int>(spec_log[2]));
      } else if (!spec_dx.empty()) {
        spec_opts.grid = spec_dx;
      } else {
        spec_opts.grid = log_grid(1e-2, 1e2, 50);
      }
      const auto reports = commands::spectrum(spec_opts);
      if (spec_out.empty()) {
        commands::write_spectrum_csv(std::cout, reports);
      } else {
        std::ofstream out(spec_out, std::ios::binary);
        if (!out) throw Error("cannot write '" + spec_out + "'");
        commands::write_spectrum_csv(out, reports);
      }
    } else if (*cmp_cmd) {
      if (*o_meas) cmp.options.measures = cmp_measures;
      if (*o_k) cmp.options.kendall_column = cmp_kendall;
      const auto rows = commands::compare(cmp, std::cerr);
      std::cout << "wrote " << rows << " comparison rows to " << cmp.output.string() << '\n';
    } else if (*st_cmd) {
      st.layers = to_sources(st_layers);
      if (!st_attrs.empty()) st.attributes = st_attrs;
      if (st.layer.empty()) st.layer = st.layers.front().name;
      const int length = commands::stream(st, std::cerr);
      nlohmann::ordered_json summary;
      summary["source"] = st.source;
      summary["target"] = st.target;
      summary["layer"] = st.layer;
      summary["path_length"] = length == MindsetStream::kNoPath ? nlohmann::ordered_json(nullptr)
                                                                : nlohmann::ordered_json(length);
      std::cout << summary.dump() << '\n';
    }
  } catch (const ParseError& e) {
    return report_error("parse", e);
  } catch (const LookupError& e) {
    return report_error("lookup", e);
  } catch (const InvalidArgument& e) {
    return report_error("invalid_argument", e);
  } catch (const std::exception& e) {
    return report_error("runtime", e);
  }
  return 0;
}
