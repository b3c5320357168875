// Engel commutators, left Engel elements and the graphs built from them.
//
// For x, y in G the Engel sequence is a_1 = [x, y], a_{k+1} = [a_k, y]. In a
// finite group it is eventually periodic, and once it reaches the identity
// it stays there, so each ordered pair either terminates or cycles forever.

#ifndef ENGEL_ENGEL_HPP_
#define ENGEL_ENGEL_HPP_

#include "engel/graph.hpp"
#include "engel/group.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace engel {

struct EngelVerdict {
  bool terminates = false;
  // Minimal k with [x, _k y] = 1.
  std::optional<std::size_t> first_k;
  // Period of the non-terminating tail.
  std::optional<std::size_t> cycle_length;
  // Number of commutators computed before a repeat was seen.
  std::size_t tail_length = 0;

  bool operator==(EngelVerdict const&) const = default;
};

EngelVerdict engel_verdict(FiniteGroup const& g, Element x, Element y);

// [x, _k y] by direct iteration, k >= 1.
Element engel_commutator(FiniteGroup const& g, Element x, Element y, std::size_t k);

// terminates(x, y) iff [x, _k y] = 1 for some k >= 1. One verdict per
// ordered pair, computed once and shared by every graph builder.
class EngelRelation {
 public:
  // Rows are split into contiguous blocks across `workers` threads; the
  // result does not depend on the worker count.
  explicit EngelRelation(FiniteGroup const& g, unsigned workers = 1);

  std::size_t size() const noexcept {
    return rows_.size();
  }

  bool terminates(Element x, Element y) const {
    return rows_.at(x).test(y);
  }

  Bitrow const& row(Element x) const {
    return rows_.at(x);
  }

  bool operator==(EngelRelation const&) const = default;

 private:
  std::vector<Bitrow> rows_;
};

class EmptyVertexSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {x : for all a, [a, _k x] = 1 for some k}, ascending.
std::vector<Element> left_engel_set(FiniteGroup const& g);
std::vector<Element> left_engel_set(EngelRelation const& rel);

// x ~ y iff neither Engel sequence between them reaches 1. Vertex labels are
// element words.
SimpleGraph co_engel_graph(FiniteGroup const& g);
SimpleGraph co_engel_graph(FiniteGroup const& g, EngelRelation const& rel);

struct ReducedGraph {
  SimpleGraph          graph;
  // vertex i of `graph` is element `elements[i]`, ascending.
  std::vector<Element> elements;
};

// Induced subgraph on G \ L(G). Throws EmptyVertexSet for Engel groups.
ReducedGraph reduced_co_engel_graph(FiniteGroup const& g);
ReducedGraph reduced_co_engel_graph(FiniteGroup const& g, EngelRelation const& rel);

// Arc x -> y iff [y, _n x] = 1 for some n, x != y.
DirectedGraph directed_engel_graph(FiniteGroup const& g);
DirectedGraph directed_engel_graph(FiniteGroup const& g, EngelRelation const& rel);

// (x, y) with x -> y but not y -> x, lexicographic.
std::vector<std::pair<std::size_t, std::size_t>>
single_arc_pairs(DirectedGraph const& d);

// Single arcs with both ends outside L(G).
std::vector<std::pair<Element, Element>> single_arcs_outside_L(FiniteGroup const& g);

// Baer's theorem: in a finite group L(G) is the Fitting subgroup. Each flag
// is checked independently.
struct FittingCheck {
  bool is_subgroup = false;
  bool is_normal   = false;
  bool is_nilpotent = false;
  // No g outside L(G) has a nilpotent normal closure of <L(G), g>.
  bool is_maximal = false;

  bool passed() const noexcept {
    return is_subgroup && is_normal && is_nilpotent && is_maximal;
  }
};

FittingCheck validate_fitting(FiniteGroup const& g, std::vector<Element> const& l);

}  // namespace engel

#endif  // ENGEL_ENGEL_HPP_
