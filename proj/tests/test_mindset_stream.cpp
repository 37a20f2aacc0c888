#include <doctest.h>

#include <set>

#include "spreadmx/error.hpp"
#include "spreadmx/mindset_stream.hpp"
#include "support.hpp"

using namespace spreadmx;
using testing::EdgeList;
using testing::make_network;

namespace {

// Enumerates every simple path by DFS and keeps the shortest ones.
std::pair<int, std::set<int>> brute_force_stream(int n, const EdgeList& edges, int a, int b) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int best = -1;
  std::set<int> nodes;
  std::vector<int> path{a};
  std::vector<bool> on(n, false);
  on[a] = true;
  auto dfs = [&](auto& self, int u) -> void {
    if (u == b) {
      const int len = static_cast<int>(path.size()) - 1;
      if (best < 0 || len < best) {
        best = len;
        nodes.clear();
      }
      if (len == best) nodes.insert(path.begin(), path.end());
      return;
    }
    for (int v : adj[u]) {
      if (on[v]) continue;
      on[v] = true;
      path.push_back(v);
      self(self, v);
      path.pop_back();
      on[v] = false;
    }
  };
  dfs(dfs, a);
  return {best, nodes};
}

std::set<int> indices(const MindsetStream& s) {
  std::set<int> out;
  for (const auto& n : s.nodes) out.insert(static_cast<int>(n.index));
  return out;
}

}  // namespace

TEST_CASE("direct connection") {
  const auto net = make_network(3, {{{0, 1}, {1, 2}, {0, 2}}});
  const auto s = mindset_stream(net, "L0", "n0", "n1");
  CHECK(s.path_length == 1);
  CHECK(indices(s) == std::set<int>{0, 1});
  CHECK(s.edges.size() == 1);
}

TEST_CASE("unique two-hop path") {
  const auto net = make_network(3, {testing::path_graph(3)});
  const auto s = mindset_stream(net, "L0", "n0", "n2");
  CHECK(s.path_length == 2);
  CHECK(indices(s) == std::set<int>{0, 1, 2});
}

TEST_CASE("diamond keeps both routes") {
  const EdgeList diamond{{0, 1}, {1, 3}, {0, 2}, {2, 3}};
  const auto net = make_network(4, {diamond});
  const auto s = mindset_stream(net, "L0", "n0", "n3");
  CHECK(s.path_length == 2);
  CHECK(indices(s) == std::set<int>{0, 1, 2, 3});
  CHECK(s.edges.size() == 4);
  CHECK(brute_force_stream(4, diamond, 0, 3).second == indices(s));
}

TEST_CASE("disconnected endpoints report no path") {
  const auto net = make_network(4, {{{0, 1}, {2, 3}}});
  const auto s = mindset_stream(net, "L0", "n0", "n3");
  CHECK_FALSE(s.connected());
  CHECK(s.path_length == MindsetStream::kNoPath);
  CHECK(s.nodes.empty());
}

TEST_CASE("preconditions") {
  const auto net = make_network(2, {{{0, 1}}});
  CHECK_THROWS_AS(mindset_stream(net, "L0", "n0", "n0"), InvalidArgument);
  CHECK_THROWS_AS(mindset_stream(net, "L0", "n0", "zz"), LookupError);
  CHECK_THROWS_AS(mindset_stream(net, "L9", "n0", "n1"), LookupError);
}

TEST_CASE("valence labels ride along") {
  NetworkBuilder b;
  const auto l = b.add_layer("sem");
  b.add_edge(l, "math", "anxiety");
  b.add_edge(l, "anxiety", "exam");
  NodeAttributes neg;
  neg.valence = Valence::kNegative;
  b.set_attributes("anxiety", neg);
  const auto net = std::move(b).build();
  const auto s = mindset_stream(net, "sem", "math", "exam");
  REQUIRE(s.nodes.size() == 3);
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (s.nodes[i].label == "anxiety") CHECK(s.valence[i] == Valence::kNegative);
    else CHECK_FALSE(s.valence[i].has_value());
  }
}

TEST_CASE("random graphs: nodes match path enumeration and edges lie on shortest paths") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const auto edges = testing::random_edges(rng, n, 0.4);
    const auto net = make_network(n, {edges});
    const auto s = mindset_stream(net, "L0", "n0", testing::node_label(n - 1));
    const auto [len, nodes] = brute_force_stream(n, edges, 0, n - 1);
    INFO("trial " << trial);
    if (len < 0) {
      CHECK_FALSE(s.connected());
      continue;
    }
    CHECK(s.path_length == len);
    CHECK(indices(s) == nodes);
    const auto from_a = bfs_distances(net.layer(Index{0}), 0);
    const auto from_b = bfs_distances(net.layer(Index{0}), n - 1);
    for (const auto& [u, v] : s.edges) {
      CHECK(from_a[u.index] + 1 + from_b[v.index] == s.path_length);
    }
  }
}
