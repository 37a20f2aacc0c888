#include "spreadmx/mindset_stream.hpp"

#include <queue>

#include "spreadmx/error.hpp"

namespace spreadmx {

std::vector<int> bfs_distances(const Layer& layer, Index source) {
  std::vector<int> dist(layer.num_nodes(), -1);
  std::queue<Index> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop();
    for (const auto& nb : layer.neighbors(u)) {
      if (dist[nb.node] < 0) {
        dist[nb.node] = dist[u] + 1;
        queue.push(nb.node);
      }
    }
  }
  return dist;
}

MindsetStream mindset_stream(const MultiplexNetwork& net, std::string_view layer_name,
                             std::string_view source, std::string_view target) {
  const Layer& layer = net.layer(layer_name);
  MindsetStream stream;
  stream.source = net.node(source);
  stream.target = net.node(target);
  stream.layer = layer.name();
  if (stream.source.index == stream.target.index) {
    throw InvalidArgument("mindset_stream endpoints must differ");
  }

  const auto from_source = bfs_distances(layer, stream.source.index);
  const auto from_target = bfs_distances(layer, stream.target.index);
  const int length = from_source[stream.target.index];
  if (length < 0) return stream;
  stream.path_length = length;

  auto on_path = [&](Index u) {
    return from_source[u] >= 0 && from_target[u] >= 0 && from_source[u] + from_target[u] == length;
  };
  for (Index u = 0; u < net.num_nodes(); ++u) {
    if (!on_path(u)) continue;
    stream.nodes.push_back({net.label(u), u});
    const NodeAttributes* attrs = net.attributes(u);
    stream.valence.push_back(attrs ? attrs->valence : std::nullopt);
    for (const auto& nb : layer.neighbors(u)) {
      if (on_path(nb.node) && from_source[nb.node] == from_source[u] + 1) {
        stream.edges.push_back({{net.label(u), u}, {net.label(nb.node), nb.node}});
      }
    }
  }
  return stream;
}

}  // namespace spreadmx
