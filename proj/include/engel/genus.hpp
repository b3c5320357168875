// Closed-form genus and crosscap values, surface classification of reduced
// co-Engel graphs, and Zagreb indices.
//
// All arithmetic is integer or exact rational. Crosscap values are clamped
// to at least 1, so planar graphs count as projective.

#ifndef ENGEL_GENUS_HPP_
#define ENGEL_GENUS_HPP_

#include "engel/analysis.hpp"
#include "engel/engel.hpp"
#include "engel/group.hpp"
#include "engel/spectra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace engel {

using Genus = std::uint64_t;

// ceil((n-3)(n-4)/12); 0 for n < 3.
Genus genus_complete(std::size_t n);

// ceil((m-2)(n-2)/4), m, n >= 2.
Genus genus_complete_bipartite(std::size_t m, std::size_t n);

// max(1, ceil((m-2)(n-2)/2)), m, n >= 2.
Genus crosscap_complete_bipartite(std::size_t m, std::size_t n);

// 3 for n = 7, else max(1, ceil((n-3)(n-4)/6)), n >= 3.
Genus crosscap_complete(std::size_t n);

// Genus of K_{mn,n,n}: (mn-2)(n-1)/2, m, n >= 1.
Genus genus_K_mnn(std::size_t m, std::size_t n);

// (a(a-1)/2) ceil((b-2)^2/4) + ceil((a-3)(a-4)/12) for a >= 3, b >= 2;
// b = 1 gives genus_complete(a).
Genus genus_uniform_multipartite(std::size_t a, std::size_t b);

// ceil((e - 3v + 6)/6), at least 0; valid for connected graphs with v >= 3.
Genus euler_genus_bound(std::size_t vertices, std::size_t edges);

enum class SurfaceKind {
  planar,
  toroidal,
  double_toroidal,
  triple_toroidal,
  genus_4,
  genus_at_least_5,
  unknown,
};

std::string to_string(SurfaceKind kind);
SurfaceKind surface_kind_of_genus(std::optional<Genus> genus);

struct SurfaceClass {
  std::optional<Genus> genus;
  std::optional<Genus> crosscap;
  SurfaceKind          classification = SurfaceKind::unknown;
  std::optional<bool>  projective;
  // Proven lower bounds, reported alongside the exact values.
  std::optional<Genus> genus_lower_bound;
  std::optional<Genus> crosscap_lower_bound;
  // Which formula or fact produced `genus`.
  std::string basis;

  bool operator==(SurfaceClass const&) const = default;
};

// Genus by formula for K_n, K_{m,n}, K_{mn,n,n} (including K_{n,n,n}) and
// K_{a.b}; other shapes fall back to the planarity test. A formula value of
// 0 for a non-planar graph is dropped and the genus left unknown.
SurfaceClass surface_class_of_shape(MultipartiteShape const& shape);

// Classifies the reduced co-Engel graph of g by its shape or, when it is not
// complete multipartite, by the planarity test. For g isomorphic to A_4 the
// non-planar result is replaced by the recorded genus 1. Throws
// EmptyVertexSet for Engel groups.
SurfaceClass surface_class_of_reduced(FiniteGroup const& g);
SurfaceClass surface_class_of_reduced(FiniteGroup const& g, ReducedGraph const& reduced);

struct ZagrebReport {
  BigInt      m1;
  BigInt      m2;
  std::size_t e_count = 0;
  std::size_t v_count = 0;
  // Hansen-Vukicevic: m2 / e >= m1 / v. Absent for edgeless graphs.
  std::optional<Rational> hv_lhs;
  std::optional<Rational> hv_rhs;
  std::optional<bool>     hv_holds;

  bool operator==(ZagrebReport const&) const = default;
};

ZagrebReport zagreb_report(SimpleGraph const& g);

// (M1, M2) of K_{a.b}: a(a-1)^2 b^3 and a(a-1)^3 b^4 / 2.
std::pair<BigInt, BigInt> zagreb_closed_form(std::size_t a, std::size_t b);

}  // namespace engel

#endif  // ENGEL_GENUS_HPP_
