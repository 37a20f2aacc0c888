#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>
#include <sstream>

#include "spreadmx/error.hpp"
#include "spreadmx/network_io.hpp"
#include "support.hpp"

using namespace spreadmx;
using testing::temp_dir;
using testing::write_file;

namespace {

std::set<std::string> label_set(const MultiplexNetwork& net) {
  return {net.labels().begin(), net.labels().end()};
}

// (layer name, label a, label b, weight) with a < b.
std::set<std::tuple<std::string, std::string, std::string, double>> edge_set(const MultiplexNetwork& net) {
  std::set<std::tuple<std::string, std::string, std::string, double>> out;
  for (const auto& layer : net.layers()) {
    for (Index u = 0; u < net.num_nodes(); ++u) {
      for (const auto& nb : layer.neighbors(u)) {
        auto a = net.label(u), b = net.label(nb.node);
        if (a < b) out.emplace(layer.name(), a, b, nb.weight);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("load_network takes the union of layer vocabularies") {
  auto dir = temp_dir("union");
  write_file(dir / "sem.tsv", "# semantic\ngood\tfine\n");
  write_file(dir / "phon.tsv", "\ngood\tsay\n");
  std::vector<LayerSource> layers{{"semantic", dir / "sem.tsv"}, {"phonological", dir / "phon.tsv"}};
  const auto net = load_network(layers);
  CHECK(net.num_nodes() == 3);
  CHECK(net.num_layers() == 2);
  CHECK(net.layer(Index{0}).num_edges() == 1);
  CHECK(net.layer(Index{1}).num_edges() == 1);
  // "say" has no semantic edges but still has a replica there.
  CHECK(net.degree("semantic", "say") == 0);
  CHECK(net.degree("phonological", "say") == 1);

  const auto fine = net.neighbors("semantic", "good");
  REQUIRE(fine.size() == 1);
  CHECK(fine[0].label == "fine");
}

TEST_CASE("a single layer file gives a single-layer network") {
  auto dir = temp_dir("single");
  write_file(dir / "g.tsv", "a\tb\nb\tc\n");
  std::vector<LayerSource> layers{parse_layer_source((dir / "g.tsv").string())};
  CHECK(layers[0].name == "g");
  const auto net = load_network(layers);
  CHECK(net.num_layers() == 1);
  CHECK(net.num_nodes() == 3);
}

TEST_CASE("degree and strength") {
  auto dir = temp_dir("degree");
  write_file(dir / "g.tsv", "hub\ta\t2.5\nhub\tb\nhub\tc\t0.5\nlone\n");
  std::vector<LayerSource> layers{{"g", dir / "g.tsv"}};
  const auto net = load_network(layers);
  CHECK(net.degree("g", "hub") == 3);
  CHECK(net.degree("g", "hub", true) == doctest::Approx(4.0));
  CHECK(net.degree("g", "lone") == 0);
  CHECK(net.neighbors("g", "lone").empty());
  CHECK_THROWS_AS(net.degree("nope", "hub"), LookupError);
  CHECK_THROWS_AS(net.degree("g", "nobody"), LookupError);
}

TEST_CASE("loader errors carry file and line") {
  auto dir = temp_dir("errors");
  SUBCASE("too many fields") {
    write_file(dir / "bad.tsv", "a\tb\n# c\na\tb\t1\textra\n");
    std::vector<LayerSource> layers{{"x", dir / "bad.tsv"}};
    try {
      load_network(layers);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.file() == (dir / "bad.tsv").string());
    }
  }
  SUBCASE("contradictory weights") {
    write_file(dir / "bad.tsv", "a\tb\t1\nb\ta\t2\n");
    std::vector<LayerSource> layers{{"x", dir / "bad.tsv"}};
    CHECK_THROWS_AS(load_network(layers), ParseError);
  }
  SUBCASE("repeated identical edge is fine") {
    write_file(dir / "ok.tsv", "a\tb\t2\nb\ta\t2\n");
    std::vector<LayerSource> layers{{"x", dir / "ok.tsv"}};
    CHECK(load_network(layers).layer(Index{0}).num_edges() == 1);
  }
  SUBCASE("self-loop, negative and garbage weights") {
    for (const char* text : {"a\ta\n", "a\tb\t-1\n", "a\tb\tabc\n", "a\t\n"}) {
      write_file(dir / "bad.tsv", text);
      std::vector<LayerSource> layers{{"x", dir / "bad.tsv"}};
      CHECK_THROWS_AS(load_network(layers), ParseError);
    }
  }
  SUBCASE("missing file") {
    std::vector<LayerSource> layers{{"x", dir / "missing.tsv"}};
    CHECK_THROWS_AS(load_network(layers), Error);
  }
}

TEST_CASE("attributes: known keys parsed, unknown labels warned") {
  auto dir = temp_dir("attrs");
  write_file(dir / "g.tsv", "hope\tfuture\n");
  write_file(dir / "a.tsv",
             "hope\tvalence\tpositive\nhope\tfrequency\t12.5\nhope\tpos\tnoun\nghost\tvalence\tnegative\n");
  std::vector<LayerSource> layers{{"g", dir / "g.tsv"}};
  std::vector<std::string> warnings;
  const auto net = load_network(layers, dir / "a.tsv", &warnings);
  const auto* attrs = net.attributes(net.node("hope").index);
  REQUIRE(attrs);
  CHECK(attrs->valence == Valence::kPositive);
  CHECK(attrs->frequency == 12.5);
  CHECK(attrs->extra.at("pos") == "noun");
  CHECK(net.attributes(net.node("future").index) == nullptr);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("ghost") != std::string::npos);

  write_file(dir / "bad.tsv", "hope\tvalence\tecstatic\n");
  CHECK_THROWS_AS(load_network(layers, dir / "bad.tsv"), ParseError);
}

TEST_CASE("round trip: load(write(net)) preserves nodes, edges and weights") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> weight(0.0, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    NetworkBuilder b;
    const int n = 2 + trial % 9;
    for (int i = 0; i < n; ++i) b.add_node("w" + std::to_string(i));
    for (int l = 0; l < 1 + trial % 3; ++l) {
      const auto li = b.add_layer("layer" + std::to_string(l));
      for (auto [u, v] : testing::random_edges(rng, n, 0.3)) {
        const double w = (trial % 2) ? weight(rng) : 1.0;
        b.add_edge(li, "w" + std::to_string(u), "w" + std::to_string(v), w);
      }
    }
    const auto net = std::move(b).build();
    auto dir = temp_dir("roundtrip");
    const auto sources = write_network(net, dir);
    const auto back = load_network(sources);
    CHECK(label_set(back) == label_set(net));
    CHECK(edge_set(back) == edge_set(net));
    CHECK(back.num_layers() == net.num_layers());
  }
}

TEST_CASE("induced subnetwork keeps attributes and remaps edges") {
  const auto net = testing::make_network(4, {testing::path_graph(4)});
  const std::vector<Index> keep{2, 1};
  const auto sub = net.induced(keep);
  CHECK(sub.num_nodes() == 2);
  CHECK(sub.label(0) == "n2");
  CHECK(sub.layer(Index{0}).num_edges() == 1);
  const std::vector<Index> dup{1, 1};
  CHECK_THROWS_AS(net.induced(dup), InvalidArgument);
}
