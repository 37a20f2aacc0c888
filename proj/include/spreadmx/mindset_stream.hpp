#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "spreadmx/network.hpp"

namespace spreadmx {

/// Union of every shortest path between two concepts on one layer.
struct MindsetStream {
  static constexpr int kNoPath = std::numeric_limits<int>::max();

  NodeId source;
  NodeId target;
  std::string layer;
  /// Hop count, or kNoPath when the endpoints are disconnected.
  int path_length = kNoPath;
  /// Ascending node indices on at least one shortest path.
  std::vector<NodeId> nodes;
  /// Edges (u, v) oriented along the path, u one hop closer to the source.
  std::vector<std::pair<NodeId, NodeId>> edges;
  /// Parallel to `nodes`; empty entries where no valence is known.
  std::vector<std::optional<Valence>> valence;

  bool connected() const { return path_length != kNoPath; }
};

/// Hop distances from `source` on one layer; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const Layer& layer, Index source);

MindsetStream mindset_stream(const MultiplexNetwork& net, std::string_view layer,
                             std::string_view source, std::string_view target);

}  // namespace spreadmx
