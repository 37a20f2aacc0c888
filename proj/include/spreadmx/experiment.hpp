#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spreadmx/metrics.hpp"
#include "spreadmx/network.hpp"
#include "spreadmx/network_io.hpp"

namespace spreadmx {

inline constexpr std::string_view kAllLayers = "ALL";
inline constexpr std::string_view kSeedLayer = "SEED";

/// One stimulus: cues are seeded, targets are measured.
struct ExperimentItem {
  std::string id;
  std::string group;
  std::vector<std::string> cues;
  std::vector<std::string> targets;
};

/// Declarative description of a simulation grid over a set of items. See
/// docs/experiment-format.md for the file syntax.
struct ExperimentSpec {
  std::vector<LayerSource> layers;
  std::optional<std::filesystem::path> attributes;
  bool lvc = false;

  std::vector<double> retention{0.5};
  std::vector<double> coupling{1.0};
  /// Layer names, or "ALL" to seed every replica.
  std::vector<std::string> seed_layers;
  int horizon = 50;
  double decay = 0.0;
  double suppress = 0.0;
  double amount = 1.0;
  bool seed_split = false;
  bool weighted_split = false;
  /// "AGGREGATE", "SEED" (the seeded layer; aggregate for ALL) or a layer name.
  std::string measure_layer{kAggregateLayer};

  std::vector<ExperimentItem> items;
};

/// Parses the experiment file; relative paths resolve against `base_dir`.
ExperimentSpec parse_experiment(std::istream& in, const std::filesystem::path& base_dir,
                                const std::string& source_name);
ExperimentSpec load_experiment(const std::filesystem::path& path);

/// One grid point. `coupling` is empty for single-layer networks.
struct GridCell {
  double retention = 0.0;
  std::optional<double> coupling;
  std::string seed_layer;
};

struct ExperimentRow {
  std::size_t cell = 0;
  std::string item;
  std::string group;
  ActivationTrace trace;
  std::optional<double> frequency;
};

struct DroppedItem {
  std::string id;
  std::vector<std::string> missing;
};

struct ExperimentResult {
  MultiplexNetwork network;
  std::vector<GridCell> cells;
  /// Ordered by cell, then item, then target.
  std::vector<ExperimentRow> rows;
  std::vector<DroppedItem> dropped;
  std::vector<std::string> warnings;
  std::size_t items_total = 0;
  bool has_frequency = false;
};

/// Expands the grid (retention × coupling × seed layer, in that nesting) and
/// runs every (cell, item) pair on `threads` workers. Items naming labels
/// absent from the network are dropped with a report, not an error.
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned threads = 1);

/// `item,group,R,dx,seed,node,layer,alpha_m,t_m[,frequency]`
void write_experiment_metrics(std::ostream& out, const ExperimentResult& result);
/// JSON sidecar with item counts, drops and warnings.
void write_experiment_report(std::ostream& out, const ExperimentResult& result);

}  // namespace spreadmx
