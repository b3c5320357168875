// Structural recognition and combinatorial measurements on SimpleGraph.

#ifndef ENGEL_ANALYSIS_HPP_
#define ENGEL_ANALYSIS_HPP_

#include "engel/graph.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace engel {

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Certificate that a graph is K_{n_1, ..., n_k}.
struct MultipartiteShape {
  std::vector<std::size_t> parts;  // descending
  bool                     is_uniform = false;
  std::size_t              a          = 0;  // number of parts
  std::size_t              b          = 0;  // common part size, 0 unless uniform

  std::size_t vertex_count() const;

  bool operator==(MultipartiteShape const&) const = default;
};

MultipartiteShape make_shape(std::vector<std::size_t> parts);

// Some(shape) iff "equal or non-adjacent" is an equivalence relation whose
// classes are pairwise completely joined.
std::optional<MultipartiteShape> recognize_complete_multipartite(SimpleGraph const& g);

// The non-adjacency classes themselves, each ascending, classes ordered by
// least vertex. Empty when the graph is not complete multipartite.
std::vector<std::vector<std::size_t>> multipartite_classes(SimpleGraph const& g);

inline constexpr std::size_t default_clique_limit = 64;

// Exact clique number by branch and bound with greedy colouring bounds.
// Vertices are ordered by descending degree, ties by index. Throws
// SizeLimitExceeded above `limit` vertices. Returns 0 for the empty graph.
std::size_t clique_number(SimpleGraph const& g, std::size_t limit = default_clique_limit);

// Exact planarity by path addition on each biconnected component.
bool is_planar(SimpleGraph const& g);

// Every left-right pair is an edge. Throws std::invalid_argument when the
// sets overlap.
bool verify_biclique(SimpleGraph const&              g,
                     std::vector<std::size_t> const& left,
                     std::vector<std::size_t> const& right);

inline constexpr std::size_t small_iso_limit = 12;

// Multipartite graphs compare by shape; otherwise both must have at most
// 12 vertices (SizeLimitExceeded if not) and are matched by backtracking.
bool graphs_isomorphic_small(SimpleGraph const& a, SimpleGraph const& b);

}  // namespace engel

#endif  // ENGEL_ANALYSIS_HPP_
