#include "doctest.h"

#include "oracles.hpp"

#include "engel/analysis.hpp"
#include "engel/engel.hpp"
#include "engel/export.hpp"

#include <algorithm>
#include <random>

using namespace engel;

namespace {

Element generator(FiniteGroup const& g, std::string const& name) {
  for (auto const& gen : g.generators()) {
    if (gen.name == name) {
      return gen.index;
    }
  }
  FAIL("missing generator " << name);
  return 0;
}

std::vector<Element> cyclic_subgroup(FiniteGroup const& g, Element x) {
  return subgroup_generated(g, std::vector<Element>{x}).members();
}

bool power_of_two(std::size_t n) {
  return (n & (n - 1)) == 0;
}

std::vector<FiniteGroup> relation_groups() {
  std::vector<FiniteGroup> out;
  out.push_back(build_dihedral(6));
  out.push_back(build_dihedral(24));
  out.push_back(build_dihedral(40));
  out.push_back(build_generalized_quaternion(24));
  out.push_back(build_frobenius(3, 7));
  out.push_back(build_symmetric(4));
  out.push_back(build_alternating(4));
  out.push_back(direct_product(build_cyclic(3), build_dihedral(6)));
  out.push_back(build_generalized_quaternion(16));
  return out;
}

}  // namespace

TEST_CASE("Engel relation agrees with bounded iteration") {
  for (FiniteGroup const& g : relation_groups()) {
    CAPTURE(g.label());
    EngelRelation const rel(g);
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) {
        REQUIRE(rel.terminates(x, y) == oracle::engel_terminates(g, x, y));
      }
    }
  }
}

TEST_CASE("Engel sequences stay at the identity once reached") {
  std::mt19937_64 rng(1234);
  for (FiniteGroup const& g : relation_groups()) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    for (int trial = 0; trial < 100; ++trial) {
      Element const      x = pick(rng);
      Element const      y = pick(rng);
      EngelVerdict const v = engel_verdict(g, x, y);
      if (v.terminates) {
        REQUIRE(v.first_k);
        std::size_t const k = *v.first_k;
        CHECK(engel_commutator(g, x, y, k) == g.identity());
        for (std::size_t extra = 1; extra <= 4; ++extra) {
          CHECK(engel_commutator(g, x, y, k + extra) == g.identity());
        }
        if (k > 1) {
          CHECK(engel_commutator(g, x, y, k - 1) != g.identity());
        }
      } else {
        REQUIRE(v.cycle_length);
        for (std::size_t k = 1; k <= g.order(); ++k) {
          CHECK(engel_commutator(g, x, y, k) != g.identity());
        }
      }
    }
  }
}

TEST_CASE("Engel relation does not depend on the worker count") {
  for (FiniteGroup const& g : relation_groups()) {
    EngelRelation const one(g, 1);
    for (unsigned workers : {2U, 3U, 8U}) {
      CHECK(EngelRelation(g, workers) == one);
    }
  }
}

TEST_CASE("commutators over a direct product split componentwise") {
  FiniteGroup const h = build_cyclic(3);
  FiniteGroup const d = build_dihedral(6);
  FiniteGroup const p = direct_product(h, d);
  for (Element u = 0; u < 3; ++u) {
    for (Element x = 0; x < 6; ++x) {
      for (Element v = 0; v < 3; ++v) {
        for (Element y = 0; y < 6; ++y) {
          Element const a = u * 6 + x;
          Element const b = v * 6 + y;
          for (std::size_t k = 1; k <= 3; ++k) {
            CHECK(engel_commutator(p, a, b, k)
                  == engel_commutator(h, u, v, k) * 6 + engel_commutator(d, x, y, k));
          }
        }
      }
    }
  }
}

TEST_CASE("left Engel sets of the dihedral and Frobenius families") {
  for (std::size_t t : {1U, 2U, 3U}) {
    for (std::size_t m : {3U, 5U, 7U}) {
      FiniteGroup const g = build_dihedral((std::size_t{1} << (t + 1)) * m);
      CHECK(left_engel_set(g) == cyclic_subgroup(g, generator(g, "y")));
    }
  }
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {2, 7}, {3, 7}, {5, 11}}) {
    FiniteGroup const g = build_frobenius(p, q);
    CHECK(left_engel_set(g) == cyclic_subgroup(g, generator(g, "b")));
  }
}

TEST_CASE("left Engel set of S_4 is the Klein four-group") {
  FiniteGroup const        s4 = build_symmetric(4);
  std::vector<std::string> names;
  for (Element e : left_engel_set(s4)) {
    names.push_back(s4.element_name(e));
  }
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"});
}

TEST_CASE("left Engel set is the Fitting subgroup") {
  for (FiniteGroup const& g : relation_groups()) {
    CAPTURE(g.label());
    FittingCheck const check = validate_fitting(g, left_engel_set(g));
    CHECK(check.is_subgroup);
    CHECK(check.is_normal);
    CHECK(check.is_nilpotent);
    CHECK(check.is_maximal);
  }
  // A proper normal nilpotent subgroup that is not maximal fails.
  FiniteGroup const s4 = build_symmetric(4);
  CHECK_FALSE(validate_fitting(s4, {s4.identity()}).is_maximal);
}

TEST_CASE("L of a product with an Engel factor is H x L(G)") {
  std::vector<FiniteGroup> engel_factors{build_cyclic(2), build_cyclic(3), build_cyclic(4),
                                         direct_product(build_cyclic(2), build_cyclic(2)),
                                         build_generalized_quaternion(8)};
  std::vector<FiniteGroup> bases{build_dihedral(6), build_dihedral(12),
                                 build_generalized_quaternion(12), build_frobenius(3, 7)};
  for (auto const& h : engel_factors) {
    for (auto const& g : bases) {
      FiniteGroup const    p = direct_product(h, g);
      std::vector<Element> expected;
      for (Element a = 0; a < h.order(); ++a) {
        for (Element b : left_engel_set(g)) {
          expected.push_back(static_cast<Element>(a * g.order() + b));
        }
      }
      std::sort(expected.begin(), expected.end());
      CHECK(left_engel_set(p) == expected);
    }
  }
}

TEST_CASE("left Engel set is maximal among normal nilpotent subgroups") {
  std::vector<FiniteGroup> soluble{build_dihedral(30), build_dihedral(72),
                                   build_generalized_quaternion(60), build_frobenius(5, 11),
                                   build_frobenius(3, 13),
                                   direct_product(build_cyclic(4), build_frobenius(3, 7))};
  for (auto const& g : soluble) {
    CAPTURE(g.label());
    CHECK(validate_fitting(g, left_engel_set(g)).passed());
  }
}

TEST_CASE("co-Engel edges are exactly the pairs with no arc") {
  for (FiniteGroup const& g : relation_groups()) {
    SimpleGraph const   c = co_engel_graph(g);
    DirectedGraph const d = directed_engel_graph(g);
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t y = 0; y < g.order(); ++y) {
        if (x != y) {
          CHECK(c.has_edge(x, y) == (!d.has_arc(x, y) && !d.has_arc(y, x)));
        }
      }
    }
  }
}

TEST_CASE("reduced co-Engel graph of D_6 is a triangle") {
  ReducedGraph const r = reduced_co_engel_graph(build_dihedral(6));
  CHECK(r.elements == std::vector<Element>{3, 4, 5});
  CHECK(r.graph.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  nlohmann::json const j = to_json(r.graph);
  CHECK(j["n"] == 3);
  CHECK(j["edges"] == nlohmann::json::parse("[[0,1],[0,2],[1,2]]"));
  CHECK(j["schema"] == "engel-lab/1");
}

TEST_CASE("co-Engel graph is symmetric and loop-free") {
  for (FiniteGroup const& g : relation_groups()) {
    SimpleGraph const c = co_engel_graph(g);
    for (std::size_t i = 0; i < c.vertex_count(); ++i) {
      CHECK_FALSE(c.has_edge(i, i));
      for (std::size_t j = 0; j < c.vertex_count(); ++j) {
        CHECK(c.has_edge(i, j) == c.has_edge(j, i));
      }
    }
    // Elements of L(G) are isolated.
    for (Element l : left_engel_set(g)) {
      CHECK(c.degree(l) == 0);
    }
  }
}

TEST_CASE("Engel groups have no reduced graph") {
  CHECK_THROWS_AS(reduced_co_engel_graph(build_generalized_quaternion(8)), EmptyVertexSet);
  CHECK_THROWS_AS(reduced_co_engel_graph(build_cyclic(5)), EmptyVertexSet);
}

TEST_CASE("adjacency is invariant under hypercentral translation") {
  for (FiniteGroup const& g :
       {direct_product(build_cyclic(3), build_dihedral(6)), build_dihedral(12)}) {
    SimpleGraph const c  = co_engel_graph(g);
    Subgroup const    zs = hypercenter(g);
    CHECK(zs.size() == (g.order() == 18 ? 3 : 2));
    for (auto [x, y] : c.edges()) {
      for (Element z1 : zs.members()) {
        for (Element z2 : zs.members()) {
          CHECK(c.has_edge(g.mul(static_cast<Element>(x), z1), g.mul(static_cast<Element>(y), z2)));
        }
      }
    }
  }
}

TEST_CASE("nilpotent groups give complete digraphs") {
  CHECK(directed_engel_graph(build_generalized_quaternion(8)).is_complete());
  CHECK(directed_engel_graph(build_dihedral(8)).is_complete());
  CHECK(directed_engel_graph(build_cyclic(6)).is_complete());
  CHECK(directed_engel_graph(build_dihedral(16)).is_complete());
}

TEST_CASE("non-nilpotent soluble groups have single arcs") {
  for (FiniteGroup const& g : {build_symmetric(3), build_symmetric(4), build_dihedral(12),
                               build_generalized_quaternion(12), build_frobenius(3, 7)}) {
    CAPTURE(g.label());
    CHECK_FALSE(single_arc_pairs(directed_engel_graph(g)).empty());
  }
}

TEST_CASE("directed Engel graph of D_2n follows the three-case description") {
  for (std::size_t n : {6U, 10U, 12U, 20U, 24U, 36U}) {
    FiniteGroup const   g = build_dihedral(2 * n);
    DirectedGraph const d = directed_engel_graph(g);
    auto in_c = [&](Element e) { return e < n; };
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) {
        if (x == y) {
          continue;
        }
        if (in_c(x) && in_c(y)) {
          CHECK(d.has_arc(x, y));
        } else if (in_c(x) && !in_c(y)) {
          CHECK(d.has_arc(x, y));
          CHECK(d.has_arc(y, x) == power_of_two(element_order(g, commutator(g, y, x))));
        } else if (!in_c(x) && !in_c(y)) {
          bool const both = d.has_arc(x, y) && d.has_arc(y, x);
          bool const none = !d.has_arc(x, y) && !d.has_arc(y, x);
          CHECK((both || none));
          CHECK(both == power_of_two(element_order(g, g.mul(x, y))));
        }
      }
    }
    CHECK(single_arcs_outside_L(g).empty());
  }
}

TEST_CASE("S_4 has single arcs outside L from order 3 to order 2") {
  FiniteGroup const s4   = build_symmetric(4);
  auto const        arcs = single_arcs_outside_L(s4);
  CHECK_FALSE(arcs.empty());
  // Inside the point stabiliser S_3 the arcs run from 3-cycles to transpositions.
  std::size_t in_s3 = 0;
  for (auto [x, y] : arcs) {
    std::string const& xn = s4.element_name(x);
    std::string const& yn = s4.element_name(y);
    if (xn.find('4') == std::string::npos && yn.find('4') == std::string::npos) {
      ++in_s3;
      CHECK(element_order(s4, x) == 3);
      CHECK(element_order(s4, y) == 2);
    }
  }
  CHECK(in_s3 == 6);
}

TEST_CASE("DOT export lists each edge once") {
  std::string const dot = to_dot(reduced_co_engel_graph(build_dihedral(6)).graph, "d6");
  CHECK(dot.rfind("graph \"d6\" {", 0) == 0);
  std::size_t count = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) {
    ++count;
  }
  CHECK(count == 3);
}
