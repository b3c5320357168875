#include "engel/engel.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace engel {

EngelVerdict engel_verdict(FiniteGroup const& g, Element x, Element y) {
  g.check_element(x);
  g.check_element(y);
  std::unordered_map<Element, std::size_t> first_seen;
  Element                                  a = commutator(g, x, y);
  for (std::size_t k = 1;; ++k) {
    // The sequence lives in a set of size |G|, so a repeat must occur by
    // step |G| + 1.
    if (k > g.order() + 1) {
      throw std::logic_error("Engel sequence exceeded |G| + 1 steps");
    }
    if (a == g.identity()) {
      return {true, k, std::nullopt, k};
    }
    auto [it, inserted] = first_seen.emplace(a, k);
    if (!inserted) {
      return {false, std::nullopt, k - it->second, k};
    }
    a = commutator(g, a, y);
  }
}

Element engel_commutator(FiniteGroup const& g, Element x, Element y, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("Engel commutator length must be positive");
  }
  Element a = x;
  for (std::size_t i = 0; i < k; ++i) {
    a = commutator(g, a, y);
  }
  return a;
}

EngelRelation::EngelRelation(FiniteGroup const& g, unsigned workers)
    : rows_(g.order(), Bitrow(g.order())) {
  std::size_t const n = g.order();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (engel_verdict(g, static_cast<Element>(x), static_cast<Element>(y))
                .terminates) {
          rows_[x].set(y);
        }
      }
    }
  };
  if (workers == 1) {
    fill(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t const        block = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += block) {
    pool.emplace_back(fill, begin, std::min(n, begin + block));
  }
  for (auto& t : pool) {
    t.join();
  }
}

std::vector<Element> left_engel_set(EngelRelation const& rel) {
  std::vector<Element> out;
  for (Element x = 0; x < rel.size(); ++x) {
    bool left = true;
    for (Element a = 0; a < rel.size() && left; ++a) {
      left = rel.terminates(a, x);
    }
    if (left) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Element> left_engel_set(FiniteGroup const& g) {
  return left_engel_set(EngelRelation(g));
}

SimpleGraph co_engel_graph(FiniteGroup const& g, EngelRelation const& rel) {
  SimpleGraph graph(g.order(), g.element_names());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = x + 1; y < g.order(); ++y) {
      if (!rel.terminates(x, y) && !rel.terminates(y, x)) {
        graph.add_edge(x, y);
      }
    }
  }
  return graph;
}

SimpleGraph co_engel_graph(FiniteGroup const& g) {
  return co_engel_graph(g, EngelRelation(g));
}

ReducedGraph reduced_co_engel_graph(FiniteGroup const& g, EngelRelation const& rel) {
  auto              left = left_engel_set(rel);
  std::vector<bool> in_left(g.order(), false);
  for (Element x : left) {
    in_left[x] = true;
  }
  std::vector<std::size_t> keep;
  for (Element x = 0; x < g.order(); ++x) {
    if (!in_left[x]) {
      keep.push_back(x);
    }
  }
  if (keep.empty()) {
    throw EmptyVertexSet(g.label()
                         + " is an Engel group; G \\ L(G) has no vertices");
  }
  ReducedGraph out{co_engel_graph(g, rel).induced_subgraph(keep), {}};
  out.elements.assign(keep.begin(), keep.end());
  return out;
}

ReducedGraph reduced_co_engel_graph(FiniteGroup const& g) {
  return reduced_co_engel_graph(g, EngelRelation(g));
}

DirectedGraph directed_engel_graph(FiniteGroup const& g, EngelRelation const& rel) {
  DirectedGraph d(g.order(), g.element_names());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      if (x != y && rel.terminates(y, x)) {
        d.add_arc(x, y);
      }
    }
  }
  return d;
}

DirectedGraph directed_engel_graph(FiniteGroup const& g) {
  return directed_engel_graph(g, EngelRelation(g));
}

std::vector<std::pair<std::size_t, std::size_t>>
single_arc_pairs(DirectedGraph const& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [x, y] : d.arcs()) {
    if (!d.has_arc(y, x)) {
      out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<std::pair<Element, Element>> single_arcs_outside_L(FiniteGroup const& g) {
  EngelRelation     rel(g);
  std::vector<bool> in_left(g.order(), false);
  for (Element x : left_engel_set(rel)) {
    in_left[x] = true;
  }
  std::vector<std::pair<Element, Element>> out;
  for (auto [x, y] : single_arc_pairs(directed_engel_graph(g, rel))) {
    if (!in_left[x] && !in_left[y]) {
      out.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
    }
  }
  return out;
}

FittingCheck validate_fitting(FiniteGroup const& g, std::vector<Element> const& l) {
  FittingCheck check;
  check.is_subgroup = is_subgroup(g, l);
  if (!check.is_subgroup) {
    return check;
  }
  Subgroup s(g.order(), l);
  check.is_normal    = is_normal(g, s);
  check.is_nilpotent = is_nilpotent(subgroup_as_group(g, s));
  // Any strictly larger normal nilpotent N contains some g outside L(G) and
  // hence the normal closure of <L(G), g>, which would then be nilpotent.
  check.is_maximal = true;
  for (Element x = 0; x < g.order() && check.is_maximal; ++x) {
    if (s.contains(x)) {
      continue;
    }
    std::vector<Element> seeds = l;
    seeds.push_back(x);
    if (is_nilpotent(subgroup_as_group(g, normal_closure(g, seeds)))) {
      check.is_maximal = false;
    }
  }
  return check;
}

}  // namespace engel
