#include "spreadmx/viable_cluster.hpp"

#include <algorithm>
#include <string>

#include "spreadmx/error.hpp"

namespace spreadmx {
namespace {

// Connected components of `layer` restricted to `members`.
std::vector<std::vector<Index>> components_within(const Layer& layer,
                                                  const std::vector<Index>& members,
                                                  std::vector<int>& mark, int stamp) {
  for (Index u : members) mark[u] = stamp;
  std::vector<std::vector<Index>> parts;
  std::vector<Index> stack;
  for (Index root : members) {
    if (mark[root] != stamp) continue;
    mark[root] = stamp + 1;
    std::vector<Index> part{root};
    stack.assign(1, root);
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (const auto& nb : layer.neighbors(u)) {
        if (mark[nb.node] == stamp) {
          mark[nb.node] = stamp + 1;
          part.push_back(nb.node);
          stack.push_back(nb.node);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

std::vector<std::vector<Index>> viable_clusters(const MultiplexNetwork& net) {
  std::vector<int> mark(net.num_nodes(), 0);
  int stamp = 1;

  std::vector<Index> all(net.num_nodes());
  for (Index i = 0; i < net.num_nodes(); ++i) all[i] = i;

  // Refine until a set is a single component on every layer. A set connected
  // on all layers never straddles two components, so refinement is exact.
  std::vector<std::vector<Index>> pending;
  if (!all.empty()) pending.push_back(std::move(all));
  std::vector<std::vector<Index>> done;
  while (!pending.empty()) {
    std::vector<Index> set = std::move(pending.back());
    pending.pop_back();
    bool split = false;
    for (const Layer& layer : net.layers()) {
      auto parts = components_within(layer, set, mark, stamp);
      stamp += 2;
      if (parts.size() > 1) {
        for (auto& p : parts) pending.push_back(std::move(p));
        split = true;
        break;
      }
    }
    if (!split) done.push_back(std::move(set));
  }
  std::sort(done.begin(), done.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return done;
}

MultiplexNetwork largest_viable_cluster(const MultiplexNetwork& net) {
  if (net.num_layers() < 2) {
    throw InvalidArgument("largest_viable_cluster requires at least two layers");
  }
  auto sorted_labels = [&](const std::vector<Index>& set) {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (Index u : set) out.push_back(net.label(u));
    std::sort(out.begin(), out.end());
    return out;
  };

  const std::vector<Index>* best = nullptr;
  std::vector<std::string> best_labels;
  const auto clusters = viable_clusters(net);
  for (const auto& c : clusters) {
    if (c.size() < 2) continue;
    if (best && c.size() < best->size()) continue;
    auto labels = sorted_labels(c);
    if (!best || c.size() > best->size() || labels < best_labels) {
      best = &c;
      best_labels = std::move(labels);
    }
  }
  if (!best) return net.induced({});
  return net.induced(*best);
}

}  // namespace spreadmx
