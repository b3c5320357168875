#include "engel/graph.hpp"

#include <stdexcept>

namespace engel {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::string> labels)
    : rows_(n, Bitrow(n)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= rows_.size() || v >= rows_.size()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("self-loops are not allowed");
  }
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto const& r : rows_) {
    twice += r.count();
  }
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != Bitrow::npos;
         v      = rows_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> SimpleGraph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  auto const&              r = rows_.at(v);
  for (auto u = r.find_first(); u != Bitrow::npos; u = r.find_next(u)) {
    out.push_back(u);
  }
  return out;
}

std::string SimpleGraph::label(std::size_t v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

SimpleGraph
SimpleGraph::induced_subgraph(std::vector<std::size_t> const& vertices) const {
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    for (auto v : vertices) {
      labels.push_back(labels_.at(v));
    }
  }
  SimpleGraph sub(vertices.size(), std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) {
        sub.add_edge(i, j);
      }
    }
  }
  return sub;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(rows_.size(), labels_);
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    c.rows_[u] = ~rows_[u];
    c.rows_[u].reset(u);
  }
  return c;
}

DirectedGraph::DirectedGraph(std::size_t n, std::vector<std::string> labels)
    : out_(n, Bitrow(n)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
}

void DirectedGraph::add_arc(std::size_t from, std::size_t to) {
  if (from >= out_.size() || to >= out_.size()) {
    throw std::out_of_range("arc endpoint out of range");
  }
  if (from == to) {
    throw std::invalid_argument("self-arcs are not allowed");
  }
  out_[from].set(to);
}

std::size_t DirectedGraph::arc_count() const {
  std::size_t total = 0;
  for (auto const& r : out_) {
    total += r.count();
  }
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> DirectedGraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (auto v = out_[u].find_first(); v != Bitrow::npos;
         v      = out_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::string DirectedGraph::label(std::size_t v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

bool DirectedGraph::is_complete() const {
  std::size_t const n = out_.size();
  return arc_count() == n * (n == 0 ? 0 : n - 1);
}

SimpleGraph complete_graph(std::size_t n) {
  return complete_multipartite_graph(std::vector<std::size_t>(n, 1));
}

SimpleGraph complete_multipartite_graph(std::vector<std::size_t> const& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    part_of.insert(part_of.end(), parts[p], p);
  }
  SimpleGraph g(part_of.size());
  for (std::size_t u = 0; u < part_of.size(); ++u) {
    for (std::size_t v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; n >= 3 && i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
  }
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
  }
  return g;
}

}  // namespace engel
