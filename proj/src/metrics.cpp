#include "spreadmx/metrics.hpp"

#include <algorithm>
#include <ostream>

#include "spreadmx/format.hpp"

namespace spreadmx {

LayerSelector LayerSelector::parse(std::string_view text) {
  if (text == kAggregateLayer) return aggregate();
  return named(std::string(text));
}

ActivationTrace make_trace(std::string node, std::string layer, std::vector<double> series) {
  if (series.empty()) throw InvalidArgument("activation series is empty");
  ActivationTrace trace{std::move(node), std::move(layer), std::move(series), 0.0, 0};
  const auto peak = std::max_element(trace.series.begin(), trace.series.end());
  trace.alpha_m = *peak;
  trace.t_m = static_cast<int>(peak - trace.series.begin());
  return trace;
}

namespace {

std::optional<Index> recorded_row(const Trajectory<double>& run, Index node) {
  auto it = std::find(run.nodes.begin(), run.nodes.end(), node);
  if (it == run.nodes.end()) return std::nullopt;
  return static_cast<Index>(it - run.nodes.begin());
}

}  // namespace

ActivationTrace extract_trace(const MultiplexNetwork& net, const Trajectory<double>& run,
                              std::string_view node, const LayerSelector& selector) {
  const NodeId id = net.node(node);
  const auto row = recorded_row(run, id.index);
  if (!row) throw LookupError("node '" + id.label + "' was not recorded");
  std::vector<double> series;
  series.reserve(run.frames.size());
  if (selector.layer) {
    const Index column = net.layer_index(*selector.layer);
    for (const auto& frame : run.frames) series.push_back(frame(*row, column));
  } else {
    for (const auto& frame : run.frames) series.push_back(frame.row(*row).sum());
  }
  return make_trace(id.label, selector.name(), std::move(series));
}

std::vector<ActivationTrace> batch_metrics(const MultiplexNetwork& net,
                                           const Trajectory<double>& run,
                                           std::span<const std::string> targets,
                                           const LayerSelector& selector) {
  if (targets.empty()) throw InvalidArgument("no targets given");
  if (selector.layer) net.layer_index(*selector.layer);
  std::vector<std::string> missing;
  for (const auto& t : targets) {
    auto idx = net.find(t);
    if (!idx || !recorded_row(run, *idx)) missing.push_back(t);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw LookupError("targets not recorded: " + list);
  }
  std::vector<ActivationTrace> out;
  out.reserve(targets.size());
  for (const auto& t : targets) out.push_back(extract_trace(net, run, t, selector));
  return out;
}

void write_trace_csv(std::ostream& out, std::span<const ActivationTrace> traces) {
  out << "node,layer,t,energy\n";
  for (const auto& tr : traces) {
    for (std::size_t t = 0; t < tr.series.size(); ++t) {
      out << csv_field(tr.node) << ',' << csv_field(tr.layer) << ',' << t << ','
          << format_real(tr.series[t]) << '\n';
    }
  }
}

void write_metrics_csv(std::ostream& out, std::span<const ActivationTrace> traces) {
  out << "node,layer,alpha_m,t_m\n";
  for (const auto& tr : traces) {
    out << csv_field(tr.node) << ',' << csv_field(tr.layer) << ',' << format_real(tr.alpha_m)
        << ',' << tr.t_m << '\n';
  }
}

}  // namespace spreadmx
