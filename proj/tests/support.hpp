#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spreadmx/network.hpp"

namespace testing {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

inline std::string node_label(int i) { return "n" + std::to_string(i); }

/// Network with nodes n0..n{n-1} (in that index order) and the given layers.
inline spreadmx::MultiplexNetwork make_network(int n, const std::vector<EdgeList>& layers,
                                               const std::vector<std::string>& names = {}) {
  spreadmx::NetworkBuilder b;
  for (int i = 0; i < n; ++i) b.add_node(node_label(i));
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const auto li = b.add_layer(l < names.size() ? names[l] : "L" + std::to_string(l));
    for (auto [u, v] : layers[l]) b.add_edge(li, node_label(u), node_label(v));
  }
  return std::move(b).build();
}

/// Random spanning tree plus independent extra edges with probability p.
inline EdgeList random_connected(std::mt19937_64& rng, int n, double p) {
  EdgeList edges;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int a = order[i], b = order[pick(rng)];
    edges.emplace_back(a, b);
    has[a][b] = has[b][a] = true;
  }
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!has[a][b] && coin(rng)) {
        edges.emplace_back(a, b);
        has[a][b] = has[b][a] = true;
      }
    }
  }
  return edges;
}

/// Erdos-Renyi edge set; may be disconnected.
inline EdgeList random_edges(std::mt19937_64& rng, int n, double p) {
  EdgeList edges;
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return edges;
}

inline EdgeList path_graph(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

inline EdgeList ring_graph(int n, int step = 1) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + step) % n);
  return e;
}

inline EdgeList complete_graph(int n) {
  EdgeList e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return e;
}

inline bool is_connected(int n, const EdgeList& edges) {
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  for (int pass = 0; pass < n; ++pass)
    for (auto [a, b] : edges) comp[a] = comp[b] = std::min(comp[a], comp[b]);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

/// Every edge subset of K_n, connected or not.
inline std::vector<EdgeList> edge_subsets(int n) {
  const auto all = complete_graph(n);
  std::vector<EdgeList> out;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    EdgeList e;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) e.push_back(all[i]);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<EdgeList> connected_graphs(int n) {
  std::vector<EdgeList> out;
  for (auto& e : edge_subsets(n))
    if (is_connected(n, e)) out.push_back(std::move(e));
  return out;
}

/// Fresh, empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("spreadmx_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testing
