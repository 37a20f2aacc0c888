#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace spreadmx {

using Index = Eigen::Index;

/// Dense node handle paired with its word form.
struct NodeId {
  std::string label;
  Index index = -1;

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

enum class Valence { kPositive, kNegative, kNeutral };

std::string_view to_string(Valence v);
std::optional<Valence> parse_valence(std::string_view text);

struct NodeAttributes {
  std::optional<Valence> valence;
  std::optional<double> frequency;
  /// Keys other than valence/frequency, kept verbatim.
  std::map<std::string, std::string> extra;
};

struct Neighbor {
  Index node;
  double weight;
};

/// One edge layer over the shared node registry. Adjacency lists are sorted by
/// neighbour index.
class Layer {
 public:
  Layer(std::string name, std::vector<std::vector<Neighbor>> adjacency);

  const std::string& name() const { return name_; }
  Index num_nodes() const { return static_cast<Index>(adjacency_.size()); }
  std::span<const Neighbor> neighbors(Index node) const { return adjacency_[node]; }
  Index degree(Index node) const { return static_cast<Index>(adjacency_[node].size()); }
  double strength(Index node) const;
  std::size_t num_edges() const { return num_edges_; }

 private:
  std::string name_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Undirected multiplex network: one node registry replicated on every layer.
/// Immutable once built.
class MultiplexNetwork {
 public:
  MultiplexNetwork() = default;

  Index num_nodes() const { return static_cast<Index>(labels_.size()); }
  Index num_layers() const { return static_cast<Index>(layers_.size()); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(Index node) const { return labels_[node]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(std::string_view label) const;
  /// Throws LookupError when absent.
  NodeId node(std::string_view label) const;

  const Layer& layer(Index i) const { return layers_[i]; }
  const std::vector<Layer>& layers() const { return layers_; }
  /// Throws LookupError when absent.
  Index layer_index(std::string_view name) const;
  const Layer& layer(std::string_view name) const { return layers_[layer_index(name)]; }

  const NodeAttributes* attributes(Index node) const;
  const std::map<std::string, NodeAttributes>& attributes() const { return attributes_; }

  /// Neighbour count, or summed edge weight when `weighted`.
  double degree(std::string_view layer, std::string_view node, bool weighted = false) const;
  std::vector<NodeId> neighbors(std::string_view layer, std::string_view node) const;

  /// Sub-network induced on `keep`; node order follows `keep`.
  MultiplexNetwork induced(std::span<const Index> keep) const;

 private:
  friend class NetworkBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Layer> layers_;
  std::map<std::string, NodeAttributes> attributes_;
};

/// Incremental construction with duplicate/contradiction checks.
class NetworkBuilder {
 public:
  enum class EdgeStatus { kAdded, kDuplicate };

  /// Adds the label if new and returns its index.
  Index add_node(std::string_view label);
  /// Appends an empty layer (or returns the existing one) by name.
  Index add_layer(std::string_view name);

  /// Throws InvalidArgument on self-loops, negative or non-finite weights, and
  /// on a repeated edge with a different weight.
  EdgeStatus add_edge(Index layer, std::string_view a, std::string_view b, double weight = 1.0);

  /// Returns false when the label is unknown (attribute is dropped).
  bool set_attributes(std::string_view label, NodeAttributes attrs);

  MultiplexNetwork build() &&;

 private:
  struct Key {
    Index a, b;
    friend bool operator<(const Key& x, const Key& y) {
      return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
  };

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::string> layer_names_;
  std::vector<std::map<Key, double>> edges_;
  std::map<std::string, NodeAttributes> attributes_;
};

}  // namespace spreadmx
