#include "spreadmx/network_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>

#include "spreadmx/error.hpp"

namespace spreadmx {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Strips CR of CRLF files. Returns nullopt for comments and blank lines.
std::optional<std::string_view> content_of(const std::string& raw) {
  std::string_view line = raw;
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line.front() == '#') return std::nullopt;
  if (line.find_first_not_of(" \t") == std::string_view::npos) return std::nullopt;
  return line;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return in;
}

void read_layer(const LayerSource& source, NetworkBuilder& builder) {
  const Index layer = builder.add_layer(source.name);
  auto in = open_input(source.path);
  const std::string file = source.path.string();
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = content_of(raw);
    if (!line) continue;
    const auto fields = split_tabs(*line);
    for (auto f : fields) {
      if (f.empty()) throw ParseError(file, line_no, "empty field");
    }
    try {
      if (fields.size() == 1) {
        builder.add_node(fields[0]);
      } else if (fields.size() == 2 || fields.size() == 3) {
        double weight = 1.0;
        if (fields.size() == 3) {
          auto w = parse_double(fields[2]);
          if (!w) throw ParseError(file, line_no, "bad weight '" + std::string(fields[2]) + "'");
          weight = *w;
        }
        builder.add_edge(layer, fields[0], fields[1], weight);
      } else {
        throw ParseError(file, line_no, "expected 1 to 3 tab-separated fields");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(file, line_no, e.what());
    }
  }
}

void read_attributes(const std::filesystem::path& path, NetworkBuilder& builder,
                     std::vector<std::string>* warnings) {
  auto in = open_input(path);
  const std::string file = path.string();
  std::map<std::string, NodeAttributes> table;
  std::map<std::string, int> first_line;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = content_of(raw);
    if (!line) continue;
    const auto fields = split_tabs(*line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(file, line_no, "expected label<TAB>key<TAB>value");
    }
    const std::string label(fields[0]);
    first_line.try_emplace(label, line_no);
    NodeAttributes& attrs = table[label];
    if (fields[1] == "valence") {
      auto v = parse_valence(fields[2]);
      if (!v) throw ParseError(file, line_no, "valence must be positive, negative or neutral");
      attrs.valence = *v;
    } else if (fields[1] == "frequency") {
      auto f = parse_double(fields[2]);
      if (!f || *f < 0.0) throw ParseError(file, line_no, "frequency must be a non-negative decimal");
      attrs.frequency = *f;
    } else {
      attrs.extra[std::string(fields[1])] = std::string(fields[2]);
    }
  }
  for (auto& [label, attrs] : table) {
    if (!builder.set_attributes(label, std::move(attrs)) && warnings) {
      warnings->push_back(file + ":" + std::to_string(first_line[label]) +
                          ": attribute for unknown node '" + label + "' ignored");
    }
  }
}

std::string format_weight(double w) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

}  // namespace

LayerSource parse_layer_source(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos) {
    std::filesystem::path p{std::string(spec)};
    return {p.stem().string(), p};
  }
  if (eq == 0 || eq + 1 == spec.size()) {
    throw InvalidArgument("layer spec must be name=path, got '" + std::string(spec) + "'");
  }
  return {std::string(spec.substr(0, eq)), std::filesystem::path(std::string(spec.substr(eq + 1)))};
}

MultiplexNetwork load_network(std::span<const LayerSource> layers,
                              const std::optional<std::filesystem::path>& attributes,
                              std::vector<std::string>* warnings) {
  if (layers.empty()) throw InvalidArgument("at least one layer file is required");
  NetworkBuilder builder;
  for (const auto& source : layers) {
    for (const auto& other : layers) {
      if (&other != &source && other.name == source.name) {
        throw InvalidArgument("duplicate layer name '" + source.name + "'");
      }
    }
    read_layer(source, builder);
  }
  if (attributes) read_attributes(*attributes, builder, warnings);
  return std::move(builder).build();
}

void write_layer(std::ostream& out, const MultiplexNetwork& net, Index layer,
                 bool include_isolated) {
  const Layer& l = net.layer(layer);
  for (Index u = 0; u < net.num_nodes(); ++u) {
    if (include_isolated) {
      bool isolated = true;
      for (const Layer& any : net.layers()) isolated = isolated && any.degree(u) == 0;
      if (isolated) out << net.label(u) << '\n';
    }
    for (const auto& nb : l.neighbors(u)) {
      if (nb.node < u) continue;
      out << net.label(u) << '\t' << net.label(nb.node);
      if (nb.weight != 1.0) out << '\t' << format_weight(nb.weight);
      out << '\n';
    }
  }
}

std::vector<LayerSource> write_network(const MultiplexNetwork& net,
                                       const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<LayerSource> sources;
  for (Index l = 0; l < net.num_layers(); ++l) {
    LayerSource src{net.layer(l).name(), dir / (net.layer(l).name() + ".tsv")};
    std::ofstream out(src.path, std::ios::binary);
    if (!out) throw Error("cannot write '" + src.path.string() + "'");
    write_layer(out, net, l, l == 0);
    sources.push_back(std::move(src));
  }
  return sources;
}

void write_attributes(std::ostream& out, const MultiplexNetwork& net) {
  for (const auto& [label, attrs] : net.attributes()) {
    if (attrs.valence) out << label << "\tvalence\t" << to_string(*attrs.valence) << '\n';
    if (attrs.frequency) out << label << "\tfrequency\t" << format_weight(*attrs.frequency) << '\n';
    for (const auto& [key, value] : attrs.extra) out << label << '\t' << key << '\t' << value << '\n';
  }
}

}  // namespace spreadmx
