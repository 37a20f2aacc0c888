#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spreadmx/diffusion.hpp"
#include "spreadmx/network.hpp"

namespace spreadmx {

inline constexpr std::string_view kAggregateLayer = "AGGREGATE";

/// A named layer, or the sum over all replicas when `layer` is empty.
struct LayerSelector {
  std::optional<std::string> layer;

  static LayerSelector aggregate() { return {}; }
  static LayerSelector named(std::string name) { return {std::move(name)}; }
  /// "AGGREGATE" maps to the aggregate view, anything else to a layer name.
  static LayerSelector parse(std::string_view text);

  std::string name() const { return layer ? *layer : std::string(kAggregateLayer); }
};

/// Activation time series of one node with its peak: alpha_m is the maximum
/// and t_m the earliest step reaching it.
struct ActivationTrace {
  std::string node;
  std::string layer;
  std::vector<double> series;
  double alpha_m = 0.0;
  int t_m = 0;
};

/// Builds a trace from a series; throws on an empty series.
ActivationTrace make_trace(std::string node, std::string layer, std::vector<double> series);

ActivationTrace extract_trace(const MultiplexNetwork& net, const Trajectory<double>& run,
                              std::string_view node, const LayerSelector& selector);

/// One trace per target, in input order. Missing targets are reported together.
std::vector<ActivationTrace> batch_metrics(const MultiplexNetwork& net,
                                           const Trajectory<double>& run,
                                           std::span<const std::string> targets,
                                           const LayerSelector& selector);

/// `node,layer,t,energy`
void write_trace_csv(std::ostream& out, std::span<const ActivationTrace> traces);
/// `node,layer,alpha_m,t_m`
void write_metrics_csv(std::ostream& out, std::span<const ActivationTrace> traces);

}  // namespace spreadmx
