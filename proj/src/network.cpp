#include "spreadmx/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spreadmx/error.hpp"

namespace spreadmx {

std::string_view to_string(Valence v) {
  switch (v) {
    case Valence::kPositive:
      return "positive";
    case Valence::kNegative:
      return "negative";
    case Valence::kNeutral:
      return "neutral";
  }
  return "neutral";
}

std::optional<Valence> parse_valence(std::string_view text) {
  if (text == "positive") return Valence::kPositive;
  if (text == "negative") return Valence::kNegative;
  if (text == "neutral") return Valence::kNeutral;
  return std::nullopt;
}

Layer::Layer(std::string name, std::vector<std::vector<Neighbor>> adjacency)
    : name_(std::move(name)), adjacency_(std::move(adjacency)) {
  std::size_t ends = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    ends += list.size();
  }
  num_edges_ = ends / 2;
}

double Layer::strength(Index node) const {
  double s = 0.0;
  for (const auto& nb : adjacency_[node]) s += nb.weight;
  return s;
}

std::optional<Index> MultiplexNetwork::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId MultiplexNetwork::node(std::string_view label) const {
  auto idx = find(label);
  if (!idx) throw LookupError("unknown node '" + std::string(label) + "'");
  return {labels_[*idx], *idx};
}

Index MultiplexNetwork::layer_index(std::string_view name) const {
  for (Index i = 0; i < num_layers(); ++i) {
    if (layers_[i].name() == name) return i;
  }
  throw LookupError("unknown layer '" + std::string(name) + "'");
}

const NodeAttributes* MultiplexNetwork::attributes(Index node) const {
  auto it = attributes_.find(labels_[node]);
  return it == attributes_.end() ? nullptr : &it->second;
}

double MultiplexNetwork::degree(std::string_view layer_name, std::string_view label,
                                bool weighted) const {
  const Layer& l = layer(layer_name);
  const Index u = node(label).index;
  return weighted ? l.strength(u) : static_cast<double>(l.degree(u));
}

std::vector<NodeId> MultiplexNetwork::neighbors(std::string_view layer_name,
                                                std::string_view label) const {
  const Layer& l = layer(layer_name);
  const Index u = node(label).index;
  std::vector<NodeId> out;
  for (const auto& nb : l.neighbors(u)) out.push_back({labels_[nb.node], nb.node});
  return out;
}

MultiplexNetwork MultiplexNetwork::induced(std::span<const Index> keep) const {
  std::vector<Index> remap(labels_.size(), -1);
  MultiplexNetwork out;
  for (Index i = 0; i < static_cast<Index>(keep.size()); ++i) {
    const Index old = keep[i];
    if (old < 0 || old >= num_nodes() || remap[old] != -1) {
      throw InvalidArgument("induced: node indices must be distinct and in range");
    }
    remap[old] = i;
    out.labels_.push_back(labels_[old]);
    out.index_.emplace(labels_[old], i);
    if (auto it = attributes_.find(labels_[old]); it != attributes_.end()) {
      out.attributes_.insert(*it);
    }
  }
  for (const Layer& l : layers_) {
    std::vector<std::vector<Neighbor>> adj(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (const auto& nb : l.neighbors(keep[i])) {
        if (remap[nb.node] >= 0) adj[i].push_back({remap[nb.node], nb.weight});
      }
    }
    out.layers_.emplace_back(l.name(), std::move(adj));
  }
  return out;
}

Index NetworkBuilder::add_node(std::string_view label) {
  if (label.empty()) throw InvalidArgument("empty node label");
  auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<Index>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

Index NetworkBuilder::add_layer(std::string_view name) {
  for (std::size_t i = 0; i < layer_names_.size(); ++i) {
    if (layer_names_[i] == name) return static_cast<Index>(i);
  }
  layer_names_.emplace_back(name);
  edges_.emplace_back();
  return static_cast<Index>(layer_names_.size() - 1);
}

NetworkBuilder::EdgeStatus NetworkBuilder::add_edge(Index layer, std::string_view a,
                                                    std::string_view b, double weight) {
  if (a == b) throw InvalidArgument("self-loop on '" + std::string(a) + "'");
  if (!std::isfinite(weight) || weight < 0.0) {
    throw InvalidArgument("edge weight must be finite and non-negative");
  }
  const Index ia = add_node(a);
  const Index ib = add_node(b);
  Key key{std::min(ia, ib), std::max(ia, ib)};
  auto [it, inserted] = edges_.at(layer).try_emplace(key, weight);
  if (inserted) return EdgeStatus::kAdded;
  if (it->second != weight) {
    throw InvalidArgument("edge '" + std::string(a) + "'-'" + std::string(b) +
                          "' repeated with a different weight");
  }
  return EdgeStatus::kDuplicate;
}

bool NetworkBuilder::set_attributes(std::string_view label, NodeAttributes attrs) {
  if (!index_.contains(std::string(label))) return false;
  attributes_[std::string(label)] = std::move(attrs);
  return true;
}

MultiplexNetwork NetworkBuilder::build() && {
  MultiplexNetwork net;
  const std::size_t n = labels_.size();
  for (std::size_t l = 0; l < layer_names_.size(); ++l) {
    std::vector<std::vector<Neighbor>> adj(n);
    for (const auto& [key, w] : edges_[l]) {
      adj[key.a].push_back({key.b, w});
      adj[key.b].push_back({key.a, w});
    }
    net.layers_.emplace_back(layer_names_[l], std::move(adj));
  }
  net.labels_ = std::move(labels_);
  net.index_ = std::move(index_);
  net.attributes_ = std::move(attributes_);
  return net;
}

}  // namespace spreadmx
