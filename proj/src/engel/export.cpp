#include "engel/export.hpp"

#include <sstream>

namespace engel {

namespace {

  std::string dot_quote(std::string const& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') {
        out += '\\';
      }
      out += c;
    }
    return out + "\"";
  }

  template <typename Graph>
  void dot_vertices(std::ostringstream& os, Graph const& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      os << "  " << v << " [label=" << dot_quote(g.label(v)) << "];\n";
    }
  }

  template <typename Graph>
  nlohmann::json labels_json(Graph const& g) {
    auto labels = nlohmann::json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      labels.push_back(g.label(v));
    }
    return labels;
  }

}  // namespace

std::string to_dot(SimpleGraph const& g, std::string const& name) {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  dot_vertices(os, g);
  for (auto [u, v] : g.edges()) {
    os << "  " << u << " -- " << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(DirectedGraph const& g, std::string const& name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  dot_vertices(os, g);
  for (auto [u, v] : g.arcs()) {
    os << "  " << u << " -> " << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(SimpleGraph const& g) {
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) {
    edges.push_back({u, v});
  }
  return {{"schema", schema_version},
          {"n", g.vertex_count()},
          {"directed", false},
          {"edges", std::move(edges)},
          {"labels", labels_json(g)}};
}

nlohmann::json to_json(DirectedGraph const& g) {
  auto arcs = nlohmann::json::array();
  for (auto [u, v] : g.arcs()) {
    arcs.push_back({u, v});
  }
  return {{"schema", schema_version},
          {"n", g.vertex_count()},
          {"directed", true},
          {"edges", std::move(arcs)},
          {"labels", labels_json(g)}};
}

}  // namespace engel
