// Finite groups as explicit multiplication tables.
//
// Every group is stored as an n x n Cayley table over the element universe
// 0..n-1. Builders enumerate elements in a fixed documented order so that
// tables are bit-reproducible across runs.

#ifndef ENGEL_GROUP_HPP_
#define ENGEL_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace engel {

using Element = std::uint32_t;

struct NamedGenerator {
  std::string name;
  Element     index;

  bool operator==(NamedGenerator const&) const = default;
};

// Immutable after construction; safe to share between threads.
class FiniteGroup {
 public:
  // Validates that `table` is an order x order Latin square with a two-sided
  // identity. Inverses are derived from the table. Associativity is checked
  // separately (see check_associativity) because it is O(n^3).
  FiniteGroup(std::string                 label,
              std::size_t                 order,
              std::vector<Element>        table,
              std::vector<NamedGenerator> generators,
              std::vector<std::string>    element_names = {});

  std::size_t order() const noexcept {
    return order_;
  }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  Element identity() const noexcept {
    return identity_;
  }

  Element inverse(Element a) const noexcept {
    return inverse_[a];
  }

  Element power(Element a, std::int64_t k) const;

  std::string const& label() const noexcept {
    return label_;
  }

  std::vector<NamedGenerator> const& generators() const noexcept {
    return generators_;
  }

  // Word for element `a` (e.g. "xy^3", "(1,2,3)", "(a,b)").
  std::string const& element_name(Element a) const {
    return names_.at(a);
  }

  std::vector<std::string> const& element_names() const noexcept {
    return names_;
  }

  std::span<Element const> table() const noexcept {
    return table_;
  }

  // Throws std::out_of_range unless a < order().
  void check_element(Element a) const;

  bool operator==(FiniteGroup const& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::string                 label_;
  std::size_t                 order_;
  std::vector<Element>        table_;
  Element                     identity_;
  std::vector<Element>        inverse_;
  std::vector<NamedGenerator> generators_;
  std::vector<std::string>    names_;
};

// Sorted set of element indices of some parent group. Operations taking a
// Subgroup also take the parent group explicitly.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Element> members);

  std::vector<Element> const& members() const noexcept {
    return members_;
  }

  std::size_t size() const noexcept {
    return members_.size();
  }

  std::size_t parent_order() const noexcept {
    return mask_.size();
  }

  bool contains(Element a) const noexcept {
    return a < mask_.size() && mask_[a];
  }

  bool operator==(Subgroup const&) const = default;

 private:
  std::vector<Element> members_;
  std::vector<bool>    mask_;
};

////////////////////////////////////////////////////////////////////////
// Builders
////////////////////////////////////////////////////////////////////////

// Z/nZ; element k is g^k.
FiniteGroup build_cyclic(std::size_t n);

// D_{2n} = <x, y | y^n = x^2 = 1, xyx^-1 = y^-1>. Elements y^i (index i)
// then x y^i (index n + i).
FiniteGroup build_dihedral(std::size_t two_n);

// Q_{4n} = <x, y | y^{2n} = 1, x^2 = y^n, xyx^-1 = y^-1>. Elements y^i
// (index i) then x y^i (index 2n + i).
FiniteGroup build_generalized_quaternion(std::size_t four_n);

// Smallest r >= 2 with r^p = 1 mod q; throws if p, q are not primes with
// q = 1 mod p.
std::uint64_t default_frobenius_root(std::uint64_t p, std::uint64_t q);

// F_{p,q} = <a, b | a^p = b^q = 1, a^-1 b a = b^r>, elements a^i b^j at
// index i*q + j.
FiniteGroup build_frobenius(std::uint64_t                p,
                            std::uint64_t                q,
                            std::optional<std::uint64_t> r = std::nullopt);

// Permutations of {1..n} in lexicographic order of their image lists; the
// product ab means "apply a, then b".
FiniteGroup build_symmetric(std::size_t n);
FiniteGroup build_alternating(std::size_t n);

// (g, h) has index g * |H| + h.
FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);

////////////////////////////////////////////////////////////////////////
// Axioms
////////////////////////////////////////////////////////////////////////

enum class AssociativityCheck { automatic, exhaustive, sampled };

// Exhaustive for order <= 200 under `automatic`, otherwise 10^4 random
// triples from a fixed seed.
bool check_associativity(FiniteGroup const& g,
                         AssociativityCheck mode = AssociativityCheck::automatic);

////////////////////////////////////////////////////////////////////////
// Arithmetic
////////////////////////////////////////////////////////////////////////

// [x, y] = x^-1 y^-1 x y
Element commutator(FiniteGroup const& g, Element x, Element y);
// x^y = y^-1 x y
Element conjugate(FiniteGroup const& g, Element x, Element y);
std::size_t element_order(FiniteGroup const& g, Element x);

// Sorted list of (order, count).
std::vector<std::pair<std::size_t, std::size_t>>
order_census(FiniteGroup const& g);

////////////////////////////////////////////////////////////////////////
// Subgroups and series
////////////////////////////////////////////////////////////////////////

Subgroup trivial_subgroup(FiniteGroup const& g);
Subgroup whole_group(FiniteGroup const& g);

bool is_subgroup(FiniteGroup const& g, std::span<Element const> members);

Subgroup subgroup_generated(FiniteGroup const& g,
                            std::span<Element const> seeds);
Subgroup normal_closure(FiniteGroup const& g, std::span<Element const> seeds);
bool     is_normal(FiniteGroup const& g, Subgroup const& s);

Subgroup              center(FiniteGroup const& g);
std::vector<Subgroup> upper_central_series(FiniteGroup const& g);
Subgroup              hypercenter(FiniteGroup const& g);
std::vector<Subgroup> derived_series(FiniteGroup const& g);

bool is_nilpotent(FiniteGroup const& g);
bool is_soluble(FiniteGroup const& g);

// The subgroup as a group in its own right, elements renumbered in
// ascending parent index.
FiniteGroup subgroup_as_group(FiniteGroup const& g, Subgroup const& s);

// G/S on cosets ordered by their least element. Throws
// std::invalid_argument if S is not normal.
FiniteGroup quotient_group(FiniteGroup const& g, Subgroup const& s);

// Small generating set found greedily in ascending element order.
std::vector<Element> small_generating_set(FiniteGroup const& g);

// Generator-image backtracking; only for order <= 24.
bool are_isomorphic_small(FiniteGroup const& a, FiniteGroup const& b);

// G/S isomorphic to `target` (|target| <= 24).
bool quotient_iso_check(FiniteGroup const& g,
                        Subgroup const&    s,
                        FiniteGroup const& target);

}  // namespace engel

#endif  // ENGEL_GROUP_HPP_
