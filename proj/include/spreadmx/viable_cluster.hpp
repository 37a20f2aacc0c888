#pragma once

#include <vector>

#include "spreadmx/network.hpp"

namespace spreadmx {

/// Partitions the nodes into maximal sets that induce a connected subgraph on
/// every layer. Sets of one node are included. Each set is sorted ascending;
/// sets are ordered by their smallest index.
std::vector<std::vector<Index>> viable_clusters(const MultiplexNetwork& net);

/// Largest Viable Cluster: the largest node set that stays connected within
/// every layer when the layers are restricted to it. Equal-size candidates are
/// ranked by their sorted label lists, smallest first. Returns an empty network
/// when no such set has at least two nodes. Requires at least two layers.
MultiplexNetwork largest_viable_cluster(const MultiplexNetwork& net);

}  // namespace spreadmx
