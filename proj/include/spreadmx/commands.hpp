#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spreadmx/compare.hpp"
#include "spreadmx/experiment.hpp"
#include "spreadmx/network_io.hpp"
#include "spreadmx/spectral.hpp"

namespace spreadmx::commands {

/// `run`: experiment file in, metrics CSV + JSON report (+ optional traces) out.
struct RunOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir;
  unsigned threads = 1;
  bool traces = false;
  // Overrides applied on top of the experiment file.
  std::optional<std::vector<double>> retention;
  std::optional<std::vector<double>> coupling;
  std::optional<std::vector<std::string>> seed_layers;
  std::optional<int> horizon;
  std::optional<std::string> measure_layer;
  std::optional<bool> lvc;
};

/// Writes `metrics.csv`, `run_report.json` and, with traces, one
/// `traces/<cell>_<item>.csv` per pair. Returns the number of metric rows.
std::size_t run(const RunOptions& options, std::ostream& log);

/// `lvc`: writes pruned layer files and `lvc_report.json`.
struct LvcOptions {
  std::vector<LayerSource> layers;
  std::optional<std::filesystem::path> attributes;
  std::filesystem::path out_dir;
};

struct LvcSummary {
  Index nodes = 0;
  std::vector<std::pair<std::string, std::size_t>> edges_per_layer;
};

LvcSummary lvc(const LvcOptions& options, std::ostream& log);

/// `spectrum`: one CSV row per coupling value.
struct SpectrumOptions {
  std::vector<LayerSource> layers;
  std::vector<double> grid;
  LayerRates rates;
  bool lvc = false;
};

std::vector<SpectralReport> spectrum(const SpectrumOptions& options);
/// `dx,lambda2_layer1,lambda2_layer2,lambda2_supra,lambda2_superposition,regime`
void write_spectrum_csv(std::ostream& out, const std::vector<SpectralReport>& reports);

/// `compare`: metrics CSV in, comparison CSV + `<output>.report.json` out.
struct CompareCommand {
  std::filesystem::path metrics;
  std::filesystem::path output;
  CompareOptions options;
};

std::size_t compare(const CompareCommand& command, std::ostream& log);

/// `stream`: mindset stream as an edge list plus a valence table.
struct StreamOptions {
  std::vector<LayerSource> layers;
  std::optional<std::filesystem::path> attributes;
  std::string layer;
  std::string source;
  std::string target;
  std::filesystem::path out_prefix;
};

/// Writes `<prefix>_edges.tsv` and `<prefix>_valence.csv`; returns the path
/// length (MindsetStream::kNoPath when disconnected).
int stream(const StreamOptions& options, std::ostream& log);

}  // namespace spreadmx::commands
