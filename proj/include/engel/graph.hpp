// Graphs on vertex indices 0..n-1 stored as adjacency bitrows.

#ifndef ENGEL_GRAPH_HPP_
#define ENGEL_GRAPH_HPP_

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace engel {

using Bitrow = boost::dynamic_bitset<>;

// Undirected, loop-free.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept {
    return rows_.size();
  }

  void add_edge(std::size_t u, std::size_t v);

  bool has_edge(std::size_t u, std::size_t v) const {
    return rows_.at(u).test(v);
  }

  Bitrow const& row(std::size_t v) const {
    return rows_.at(v);
  }

  std::size_t degree(std::size_t v) const {
    return rows_.at(v).count();
  }

  std::size_t edge_count() const;

  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  std::vector<std::size_t> neighbours(std::size_t v) const;

  // Label of vertex v, or its decimal index if unlabelled.
  std::string label(std::size_t v) const;

  std::vector<std::string> const& labels() const noexcept {
    return labels_;
  }

  SimpleGraph induced_subgraph(std::vector<std::size_t> const& vertices) const;

  SimpleGraph complement() const;

  bool operator==(SimpleGraph const& other) const {
    return rows_ == other.rows_;
  }

 private:
  std::vector<Bitrow>      rows_;
  std::vector<std::string> labels_;
};

// Arc relation without self-arcs.
class DirectedGraph {
 public:
  explicit DirectedGraph(std::size_t n = 0, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept {
    return out_.size();
  }

  void add_arc(std::size_t from, std::size_t to);

  bool has_arc(std::size_t from, std::size_t to) const {
    return out_.at(from).test(to);
  }

  Bitrow const& out_row(std::size_t v) const {
    return out_.at(v);
  }

  std::size_t arc_count() const;

  // Arcs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

  std::string label(std::size_t v) const;

  std::vector<std::string> const& labels() const noexcept {
    return labels_;
  }

  bool is_complete() const;

  bool operator==(DirectedGraph const& other) const {
    return out_ == other.out_;
  }

 private:
  std::vector<Bitrow>      out_;
  std::vector<std::string> labels_;
};

SimpleGraph complete_graph(std::size_t n);

// K_{n_1,...,n_k}; part i occupies a contiguous block of vertices.
SimpleGraph complete_multipartite_graph(std::vector<std::size_t> const& parts);

SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);

}  // namespace engel

#endif  // ENGEL_GRAPH_HPP_
