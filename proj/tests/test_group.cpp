#include "doctest.h"

#include "engel/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace engel;

namespace {

std::vector<FiniteGroup> sample_groups() {
  std::vector<FiniteGroup> out;
  out.push_back(build_cyclic(1));
  out.push_back(build_cyclic(7));
  out.push_back(build_dihedral(6));
  out.push_back(build_dihedral(24));
  out.push_back(build_generalized_quaternion(8));
  out.push_back(build_generalized_quaternion(24));
  out.push_back(build_frobenius(2, 5));
  out.push_back(build_frobenius(3, 7));
  out.push_back(build_symmetric(3));
  out.push_back(build_symmetric(4));
  out.push_back(build_alternating(4));
  out.push_back(direct_product(build_cyclic(3), build_dihedral(6)));
  return out;
}

Element generator(FiniteGroup const& g, std::string const& name) {
  for (auto const& gen : g.generators()) {
    if (gen.name == name) {
      return gen.index;
    }
  }
  FAIL("missing generator " << name);
  return 0;
}

}  // namespace

TEST_CASE("group axioms hold for every builder") {
  for (FiniteGroup const& g : sample_groups()) {
    CAPTURE(g.label());
    CHECK(check_associativity(g, AssociativityCheck::exhaustive));
    for (Element a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.identity()) == a);
      CHECK(g.mul(g.identity(), a) == a);
      CHECK(g.mul(a, g.inverse(a)) == g.identity());
      CHECK(g.mul(g.inverse(a), a) == g.identity());
    }
    // Latin square rows.
    for (Element a = 0; a < g.order(); ++a) {
      std::set<Element> row;
      for (Element b = 0; b < g.order(); ++b) {
        row.insert(g.mul(a, b));
      }
      CHECK(row.size() == g.order());
    }
  }
}

TEST_CASE("random triples satisfy associativity and power laws") {
  std::mt19937_64 rng(20240611);
  for (FiniteGroup const& g : sample_groups()) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    for (int trial = 0; trial < 200; ++trial) {
      Element a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      std::int64_t const k = static_cast<std::int64_t>(trial % 9) - 4;
      CHECK(g.mul(g.power(a, k), g.power(a, 3)) == g.power(a, k + 3));
      CHECK(g.power(a, static_cast<std::int64_t>(element_order(g, a))) == g.identity());
      // [a, b]^-1 = [b, a]
      CHECK(g.inverse(commutator(g, a, b)) == commutator(g, b, a));
    }
  }
}

TEST_CASE("orders of the built families") {
  CHECK(build_dihedral(24).order() == 24);
  CHECK(build_generalized_quaternion(24).order() == 24);
  CHECK(build_frobenius(3, 13).order() == 39);
  CHECK(build_symmetric(4).order() == 24);
  CHECK(build_alternating(4).order() == 12);
  CHECK(direct_product(build_cyclic(4), build_frobenius(3, 7)).order() == 84);
}

TEST_CASE("dihedral presentation and element layout") {
  FiniteGroup const g = build_dihedral(6);
  Element const     x = generator(g, "x");
  Element const     y = generator(g, "y");
  CHECK(y == 1);
  CHECK(x == 3);
  CHECK(element_order(g, y) == 3);
  CHECK(element_order(g, x) == 2);
  CHECK(g.mul(g.mul(x, y), g.inverse(x)) == g.inverse(y));
  // [x, y] = x^-1 y^-1 x y = y^2 and [y, x] = y.
  CHECK(commutator(g, x, y) == g.power(y, 2));
  CHECK(commutator(g, y, x) == y);
  CHECK(g.element_name(0) == "1");
  CHECK(g.element_name(2) == "y^2");
}

TEST_CASE("generalized quaternion presentation") {
  for (std::size_t four_n : {8U, 12U, 24U, 40U}) {
    FiniteGroup const g = build_generalized_quaternion(four_n);
    std::size_t const n = four_n / 4;
    Element const     x = generator(g, "x");
    Element const     y = generator(g, "y");
    CHECK(element_order(g, y) == 2 * n);
    CHECK(g.mul(x, x) == g.power(y, static_cast<std::int64_t>(n)));
    CHECK(g.mul(g.mul(x, y), g.inverse(x)) == g.inverse(y));
    // Exactly one involution.
    auto census = order_census(g);
    CHECK(std::find(census.begin(), census.end(), std::pair<std::size_t, std::size_t>{2, 1})
          != census.end());
  }
}

TEST_CASE("frobenius presentation") {
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{2, 5}, {3, 7}, {3, 13}, {5, 11}}) {
    FiniteGroup const   g = build_frobenius(p, q);
    std::uint64_t const r = default_frobenius_root(p, q);
    Element const       a = generator(g, "a");
    Element const       b = generator(g, "b");
    CHECK(element_order(g, a) == p);
    CHECK(element_order(g, b) == q);
    CHECK(conjugate(g, b, a) == g.power(b, static_cast<std::int64_t>(r)));
    CHECK(center(g).size() == 1);
  }
  CHECK_THROWS(build_frobenius(3, 5));
  CHECK_THROWS(build_frobenius(4, 5));
}

TEST_CASE("permutation products apply the left factor first") {
  FiniteGroup const g = build_symmetric(3);
  auto find = [&](std::string const& name) {
    auto const& names = g.element_names();
    return static_cast<Element>(std::find(names.begin(), names.end(), name) - names.begin());
  };
  // (1,2) then (2,3): 1->2->3, 3->2, 2->1->1.
  CHECK(g.element_name(g.mul(find("(1,2)"), find("(2,3)"))) == "(1,3,2)");
  CHECK(g.element_name(g.identity()) == "()");
}

TEST_CASE("subgroups, centres and series") {
  FiniteGroup const s4 = build_symmetric(4);
  CHECK(center(s4).size() == 1);
  CHECK(hypercenter(s4).size() == 1);
  CHECK(derived_series(s4).back().size() == 1);
  CHECK(is_soluble(s4));
  CHECK_FALSE(is_nilpotent(s4));
  CHECK_FALSE(is_soluble(build_alternating(5)));

  FiniteGroup const q8 = build_generalized_quaternion(8);
  CHECK(is_nilpotent(q8));
  CHECK(center(q8).size() == 2);
  CHECK(hypercenter(q8).size() == 8);

  FiniteGroup const d12 = build_dihedral(12);
  CHECK(center(d12).size() == 2);
  CHECK(hypercenter(d12).size() == 2);
  FiniteGroup const c3d6 = direct_product(build_cyclic(3), build_dihedral(6));
  CHECK(hypercenter(c3d6).size() == 3);
  CHECK(quotient_iso_check(c3d6, hypercenter(c3d6), build_dihedral(6)));
}

TEST_CASE("generated subgroups and normal closures are closed") {
  std::mt19937_64 rng(7);
  for (FiniteGroup const& g : sample_groups()) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Element> seeds{pick(rng), pick(rng)};
      Subgroup const       h = subgroup_generated(g, seeds);
      CHECK(is_subgroup(g, h.members()));
      CHECK(g.order() % h.size() == 0);
      Subgroup const n = normal_closure(g, seeds);
      CHECK(is_subgroup(g, n.members()));
      CHECK(is_normal(g, n));
      CHECK(std::includes(n.members().begin(), n.members().end(), h.members().begin(),
                          h.members().end()));
    }
  }
}

TEST_CASE("quotients and small isomorphism") {
  FiniteGroup const d24 = build_dihedral(24);
  FiniteGroup const q24 = build_generalized_quaternion(24);
  CHECK_FALSE(are_isomorphic_small(d24, q24));
  CHECK(are_isomorphic_small(build_frobenius(2, 3), build_symmetric(3)));
  CHECK(are_isomorphic_small(build_dihedral(6), build_symmetric(3)));
  CHECK(are_isomorphic_small(direct_product(build_cyclic(2), build_cyclic(3)), build_cyclic(6)));
  FiniteGroup const quotient = quotient_group(d24, center(d24));
  CHECK(quotient.order() == 12);
  CHECK(are_isomorphic_small(quotient, build_dihedral(12)));
  CHECK_THROWS_AS(quotient_group(build_symmetric(3),
                                 subgroup_generated(build_symmetric(3), std::vector<Element>{1})),
                  std::invalid_argument);
}

TEST_CASE("direct product indexing") {
  FiniteGroup const g = build_dihedral(6);
  FiniteGroup const h = build_cyclic(4);
  FiniteGroup const p = direct_product(g, h);
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < h.order(); ++b) {
      for (Element c = 0; c < g.order(); c += 2) {
        Element const lhs = p.mul(static_cast<Element>(a * 4 + b), static_cast<Element>(c * 4 + 3));
        CHECK(lhs == g.mul(a, c) * 4 + h.mul(b, 3));
      }
    }
  }
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS(FiniteGroup("bad", 2, {0, 0, 1, 1}, {}));
  CHECK_THROWS(FiniteGroup("short", 2, {0, 1, 1}, {}));
  CHECK_THROWS(build_dihedral(5));
  CHECK_THROWS(build_generalized_quaternion(6));
}

TEST_CASE("Lagrange and the upper central series") {
  for (FiniteGroup const& g : sample_groups()) {
    CAPTURE(g.label());
    for (Element a = 0; a < g.order(); ++a) {
      CHECK(g.order() % element_order(g, a) == 0);
    }
    auto const series = upper_central_series(g);
    REQUIRE_FALSE(series.empty());
    for (std::size_t i = 1; i < series.size(); ++i) {
      CHECK(series[i].size() > series[i - 1].size());
      CHECK(std::includes(series[i].members().begin(), series[i].members().end(),
                          series[i - 1].members().begin(), series[i - 1].members().end()));
    }
    CHECK(series.back() == hypercenter(g));
    if (is_nilpotent(g)) {
      CHECK(hypercenter(g).size() == g.order());
    }
  }
  FiniteGroup const s3 = build_symmetric(3);
  CHECK(subgroup_generated(s3, std::vector<Element>{s3.identity()}) == trivial_subgroup(s3));
}

TEST_CASE("commutators of a direct product are pairs of commutators") {
  for (auto const& [h, g] : std::vector<std::pair<FiniteGroup, FiniteGroup>>{
           {build_cyclic(2), build_dihedral(6)},
           {build_cyclic(3), build_dihedral(6)},
           {build_generalized_quaternion(8), build_dihedral(12)},
           {build_cyclic(4), build_frobenius(3, 7)}}) {
    FiniteGroup const p = direct_product(h, g);
    REQUIRE(p.order() <= 300);
    std::size_t const n = g.order();
    for (Element a = 0; a < p.order(); ++a) {
      for (Element b = 0; b < p.order(); ++b) {
        Element const c = commutator(p, a, b);
        REQUIRE(c == commutator(h, static_cast<Element>(a / n), static_cast<Element>(b / n)) * n
                         + commutator(g, static_cast<Element>(a % n), static_cast<Element>(b % n)));
      }
    }
  }
}
