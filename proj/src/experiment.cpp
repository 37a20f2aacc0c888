#include "spreadmx/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "spreadmx/diffusion.hpp"
#include "spreadmx/error.hpp"
#include "spreadmx/format.hpp"
#include "spreadmx/viable_cluster.hpp"

namespace spreadmx {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    auto piece = trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (!piece.empty()) out.emplace_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

class ConfigReader {
 public:
  ConfigReader(std::string source, int line) : source_(std::move(source)), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  double real(std::string_view text) const {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail("expected a number, got '" + std::string(text) + "'");
    }
    return v;
  }

  int integer(std::string_view text) const {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail("expected an integer, got '" + std::string(text) + "'");
    }
    return v;
  }

  bool boolean(std::string_view text) const {
    if (text == "true" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "no" || text == "0") return false;
    fail("expected true or false, got '" + std::string(text) + "'");
  }

  std::vector<double> reals(std::string_view text) const {
    std::vector<double> out;
    for (const auto& piece : split_list(text, ',')) out.push_back(real(piece));
    if (out.empty()) fail("empty list");
    return out;
  }

 private:
  std::string source_;
  int line_;
};

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view p) {
  std::filesystem::path path{std::string(p)};
  return path.is_absolute() ? path : base / path;
}

}  // namespace

ExperimentSpec parse_experiment(std::istream& in, const std::filesystem::path& base_dir,
                                const std::string& source_name) {
  ExperimentSpec spec;
  enum class Section { kNone, kNetwork, kSimulation, kItems } section = Section::kNone;
  bool seen_seed_layers = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    ConfigReader reader(source_name, line_no);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line == "[network]") section = Section::kNetwork;
      else if (line == "[simulation]") section = Section::kSimulation;
      else if (line == "[items]") section = Section::kItems;
      else reader.fail("unknown section " + std::string(line));
      continue;
    }

    if (section == Section::kItems) {
      std::vector<std::string_view> fields;
      std::string_view rest = raw;
      while (true) {
        const auto tab = rest.find('\t');
        fields.push_back(trim(rest.substr(0, tab)));
        if (tab == std::string_view::npos) break;
        rest = rest.substr(tab + 1);
      }
      if (fields.size() != 4) reader.fail("item rows are id<TAB>group<TAB>cues<TAB>targets");
      ExperimentItem item{std::string(fields[0]), std::string(fields[1]), split_list(fields[2], ','),
                          split_list(fields[3], ',')};
      if (item.id.empty() || item.cues.empty() || item.targets.empty()) {
        reader.fail("item needs an id, at least one cue and at least one target");
      }
      spec.items.push_back(std::move(item));
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) reader.fail("expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (value.empty()) reader.fail("missing value for '" + std::string(key) + "'");

    if (section == Section::kNetwork) {
      if (key.starts_with("layer.")) {
        const auto name = key.substr(6);
        if (name.empty()) reader.fail("layer key needs a name: layer.<name>");
        spec.layers.push_back({std::string(name), resolve(base_dir, value)});
      } else if (key == "attributes") {
        spec.attributes = resolve(base_dir, value);
      } else if (key == "lvc") {
        spec.lvc = reader.boolean(value);
      } else {
        reader.fail("unknown network key '" + std::string(key) + "'");
      }
    } else if (section == Section::kSimulation) {
      if (key == "retention") spec.retention = reader.reals(value);
      else if (key == "coupling") spec.coupling = reader.reals(value);
      else if (key == "seed_layers") {
        spec.seed_layers = split_list(value, ',');
        seen_seed_layers = true;
      } else if (key == "horizon") spec.horizon = reader.integer(value);
      else if (key == "decay") spec.decay = reader.real(value);
      else if (key == "suppress") spec.suppress = reader.real(value);
      else if (key == "amount") spec.amount = reader.real(value);
      else if (key == "seed_split") spec.seed_split = reader.boolean(value);
      else if (key == "weighted_split") spec.weighted_split = reader.boolean(value);
      else if (key == "measure_layer") spec.measure_layer = std::string(value);
      else reader.fail("unknown simulation key '" + std::string(key) + "'");
    } else {
      reader.fail("key outside of a section");
    }
  }
  if (spec.layers.empty()) throw ParseError(source_name, line_no, "no layer.<name> entries");
  if (!seen_seed_layers) spec.seed_layers = {spec.layers.front().name};
  return spec;
}

ExperimentSpec load_experiment(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_experiment(in, path.parent_path(), path.string());
}

namespace {

void validate_spec(const ExperimentSpec& spec, const MultiplexNetwork& net) {
  if (spec.retention.empty() || spec.seed_layers.empty()) throw InvalidArgument("empty simulation grid");
  if (net.num_layers() > 1 && spec.coupling.empty()) throw InvalidArgument("empty coupling grid");
  for (const auto& s : spec.seed_layers) {
    if (s != kAllLayers) net.layer_index(s);
  }
  if (spec.measure_layer != kAggregateLayer && spec.measure_layer != kSeedLayer) {
    net.layer_index(spec.measure_layer);
  }
  // Parameter ranges are checked by SimulationConfig on a probe config.
  for (double r : spec.retention) {
    for (double dx : spec.coupling) {
      SimulationConfig probe;
      probe.retention = r;
      probe.coupling = dx;
      probe.decay = spec.decay;
      probe.suppress = spec.suppress;
      probe.horizon = spec.horizon;
      probe.validate(net);
    }
  }
  if (!(spec.amount > 0.0)) throw InvalidArgument("seed amount must be positive");
}

LayerSelector measure_selector(const ExperimentSpec& spec, const GridCell& cell) {
  if (spec.measure_layer == kSeedLayer) {
    return cell.seed_layer == kAllLayers ? LayerSelector::aggregate()
                                         : LayerSelector::named(cell.seed_layer);
  }
  return LayerSelector::parse(spec.measure_layer);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned threads) {
  ExperimentResult result;
  MultiplexNetwork loaded = load_network(spec.layers, spec.attributes, &result.warnings);
  if (spec.lvc) {
    const Index before = loaded.num_nodes();
    result.network = largest_viable_cluster(loaded);
    result.warnings.push_back("largest viable cluster kept " +
                              std::to_string(result.network.num_nodes()) + " of " +
                              std::to_string(before) + " nodes");
  } else {
    result.network = std::move(loaded);
  }
  const MultiplexNetwork& net = result.network;
  validate_spec(spec, net);

  for (double r : spec.retention) {
    if (net.num_layers() == 1) {
      for (const auto& s : spec.seed_layers) result.cells.push_back({r, std::nullopt, s});
    } else {
      for (double dx : spec.coupling) {
        for (const auto& s : spec.seed_layers) result.cells.push_back({r, dx, s});
      }
    }
  }
  if (net.num_layers() == 1 && spec.coupling.size() > 1) {
    result.warnings.push_back("single-layer network: coupling grid ignored");
  }

  result.items_total = spec.items.size();
  std::vector<const ExperimentItem*> kept;
  for (const auto& item : spec.items) {
    DroppedItem drop{item.id, {}};
    for (const auto* list : {&item.cues, &item.targets}) {
      for (const auto& label : *list) {
        if (!net.find(label) &&
            std::find(drop.missing.begin(), drop.missing.end(), label) == drop.missing.end()) {
          drop.missing.push_back(label);
        }
      }
    }
    if (drop.missing.empty()) {
      kept.push_back(&item);
    } else {
      std::string list;
      for (const auto& m : drop.missing) list += (list.empty() ? "" : ", ") + m;
      result.warnings.push_back("item '" + item.id + "' dropped, missing: " + list);
      result.dropped.push_back(std::move(drop));
    }
  }

  for (const auto& [label, attrs] : net.attributes()) {
    if (attrs.frequency) result.has_frequency = true;
  }

  const std::size_t tasks = result.cells.size() * kept.size();
  std::vector<std::vector<ExperimentRow>> slots(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= tasks) return;
      try {
        const std::size_t c = task / kept.size();
        const GridCell& cell = result.cells[c];
        const ExperimentItem& item = *kept[task % kept.size()];

        SimulationConfig config;
        config.retention = cell.retention;
        config.coupling = cell.coupling.value_or(1.0);
        config.decay = spec.decay;
        config.suppress = spec.suppress;
        config.horizon = spec.horizon;
        config.seed_split = spec.seed_split;
        config.weighted_split = spec.weighted_split;
        for (const auto& cue : item.cues) {
          std::optional<std::string> layer;
          if (cell.seed_layer != kAllLayers) layer = cell.seed_layer;
          config.seeds.push_back({cue, layer, spec.amount});
        }
        std::vector<Index> recorded;
        for (const auto& t : item.targets) recorded.push_back(net.node(t).index);
        std::sort(recorded.begin(), recorded.end());
        recorded.erase(std::unique(recorded.begin(), recorded.end()), recorded.end());

        const auto trajectory = run<double>(net, config, recorded);
        auto traces = batch_metrics(net, trajectory, item.targets, measure_selector(spec, cell));
        for (auto& trace : traces) {
          ExperimentRow row{c, item.id, item.group, std::move(trace), std::nullopt};
          if (const auto* attrs = net.attributes(net.node(row.trace.node).index)) {
            row.frequency = attrs->frequency;
          }
          slots[task].push_back(std::move(row));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks);
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks)));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& slot : slots) {
    for (auto& row : slot) result.rows.push_back(std::move(row));
  }
  return result;
}

void write_experiment_metrics(std::ostream& out, const ExperimentResult& result) {
  out << "item,group,R,dx,seed,node,layer,alpha_m,t_m";
  if (result.has_frequency) out << ",frequency";
  out << '\n';
  for (const auto& row : result.rows) {
    const GridCell& cell = result.cells[row.cell];
    out << csv_field(row.item) << ',' << csv_field(row.group) << ',' << format_real(cell.retention)
        << ',' << (cell.coupling ? format_real(*cell.coupling) : std::string("NA")) << ','
        << csv_field(cell.seed_layer) << ',' << csv_field(row.trace.node) << ','
        << csv_field(row.trace.layer) << ',' << format_real(row.trace.alpha_m) << ','
        << row.trace.t_m;
    if (result.has_frequency) {
      out << ',' << (row.frequency ? format_real(*row.frequency) : std::string("NA"));
    }
    out << '\n';
  }
}

void write_experiment_report(std::ostream& out, const ExperimentResult& result) {
  nlohmann::ordered_json report;
  report["items_total"] = result.items_total;
  report["items_run"] = result.items_total - result.dropped.size();
  report["items_dropped"] = result.dropped.size();
  report["cells"] = result.cells.size();
  report["rows"] = result.rows.size();
  report["network_nodes"] = result.network.num_nodes();
  auto& drops = report["dropped"] = nlohmann::ordered_json::array();
  for (const auto& d : result.dropped) drops.push_back({{"item", d.id}, {"missing", d.missing}});
  report["warnings"] = result.warnings;
  out << report.dump(2) << '\n';
}

}  // namespace spreadmx
