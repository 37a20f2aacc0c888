#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadmx/network.hpp"

namespace spreadmx {

/// A named layer backed by an edge-list file.
struct LayerSource {
  std::string name;
  std::filesystem::path path;
};

/// Parses "name=path"; a bare path takes its file stem as the layer name.
LayerSource parse_layer_source(std::string_view spec);

/// Loads layer edge lists (TSV: `source<TAB>target[<TAB>weight]`, `#` comments,
/// blank lines ignored, a lone label declares an isolated node) and an optional
/// attribute table (`label<TAB>key<TAB>value`).
///
/// The node registry is the union of labels over all layers, indexed in order
/// of first appearance. Attribute rows naming unknown labels are skipped and
/// reported through `warnings`. Malformed lines throw ParseError.
MultiplexNetwork load_network(std::span<const LayerSource> layers,
                              const std::optional<std::filesystem::path>& attributes = std::nullopt,
                              std::vector<std::string>* warnings = nullptr);

/// Writes one layer in the edge-list format. Nodes with no edge on any layer
/// are emitted as lone labels when `include_isolated` is set.
void write_layer(std::ostream& out, const MultiplexNetwork& net, Index layer,
                 bool include_isolated);

/// Writes `<dir>/<layer name>.tsv` for every layer (isolated nodes go to the
/// first file) and returns the sources, ready for load_network.
std::vector<LayerSource> write_network(const MultiplexNetwork& net,
                                       const std::filesystem::path& dir);

void write_attributes(std::ostream& out, const MultiplexNetwork& net);

}  // namespace spreadmx
