#include "engel/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace engel {

namespace {

  // Closure of `seeds` under multiplication by members of `closing`.
  // For a finite group, closure under products alone yields a subgroup.
  std::vector<Element> close_under_products(FiniteGroup const&       g,
                                            std::vector<Element>     gens) {
    std::vector<bool>    in(g.order(), false);
    std::vector<Element> members{g.identity()};
    in[g.identity()] = true;
    std::deque<Element> queue{g.identity()};
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    while (!queue.empty()) {
      Element a = queue.front();
      queue.pop_front();
      for (Element s : gens) {
        Element b = g.mul(a, s);
        if (!in[b]) {
          in[b] = true;
          members.push_back(b);
          queue.push_back(b);
        }
      }
    }
    return members;
  }

  // Z_{i+1} from Z_i: elements whose commutators with everything land in Z_i.
  Subgroup next_center(FiniteGroup const& g, Subgroup const& z) {
    std::vector<Element> members;
    for (Element a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (Element b = 0; b < g.order() && ok; ++b) {
        ok = z.contains(commutator(g, a, b));
      }
      if (ok) {
        members.push_back(a);
      }
    }
    return Subgroup(g.order(), std::move(members));
  }

}  // namespace

Subgroup trivial_subgroup(FiniteGroup const& g) {
  return Subgroup(g.order(), {g.identity()});
}

Subgroup whole_group(FiniteGroup const& g) {
  std::vector<Element> all(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    all[a] = a;
  }
  return Subgroup(g.order(), std::move(all));
}

bool is_subgroup(FiniteGroup const& g, std::span<Element const> members) {
  std::vector<bool> in(g.order(), false);
  for (Element m : members) {
    g.check_element(m);
    in[m] = true;
  }
  if (!in[g.identity()]) {
    return false;
  }
  for (Element a : members) {
    if (!in[g.inverse(a)]) {
      return false;
    }
    for (Element b : members) {
      if (!in[g.mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

Subgroup subgroup_generated(FiniteGroup const&       g,
                            std::span<Element const> seeds) {
  for (Element s : seeds) {
    g.check_element(s);
  }
  return Subgroup(g.order(),
                  close_under_products(g, {seeds.begin(), seeds.end()}));
}

Subgroup normal_closure(FiniteGroup const& g, std::span<Element const> seeds) {
  std::vector<Element> conj;
  for (Element s : seeds) {
    g.check_element(s);
    for (Element c = 0; c < g.order(); ++c) {
      conj.push_back(conjugate(g, s, c));
    }
  }
  return Subgroup(g.order(), close_under_products(g, std::move(conj)));
}

bool is_normal(FiniteGroup const& g, Subgroup const& s) {
  for (Element a : s.members()) {
    for (Element c = 0; c < g.order(); ++c) {
      if (!s.contains(conjugate(g, a, c))) {
        return false;
      }
    }
  }
  return true;
}

Subgroup center(FiniteGroup const& g) {
  return next_center(g, trivial_subgroup(g));
}

std::vector<Subgroup> upper_central_series(FiniteGroup const& g) {
  std::vector<Subgroup> series{trivial_subgroup(g)};
  while (true) {
    Subgroup next = next_center(g, series.back());
    if (next.size() == series.back().size()) {
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup hypercenter(FiniteGroup const& g) {
  return upper_central_series(g).back();
}

std::vector<Subgroup> derived_series(FiniteGroup const& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    auto const&          cur = series.back().members();
    std::vector<Element> comms;
    for (Element a : cur) {
      for (Element b : cur) {
        comms.push_back(commutator(g, a, b));
      }
    }
    Subgroup next = subgroup_generated(g, comms);
    if (next.size() == series.back().size()) {
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(FiniteGroup const& g) {
  return hypercenter(g).size() == g.order();
}

bool is_soluble(FiniteGroup const& g) {
  return derived_series(g).back().size() == 1;
}

FiniteGroup subgroup_as_group(FiniteGroup const& g, Subgroup const& s) {
  if (!is_subgroup(g, s.members())) {
    throw std::invalid_argument("member set is not a subgroup");
  }
  auto const&              members = s.members();
  std::size_t const        n       = members.size();
  std::vector<Element>     local(g.order(), 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    local[members[i]] = static_cast<Element>(i);
    names.push_back(g.element_name(members[i]));
  }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = local[g.mul(members[i], members[j])];
    }
  }
  std::vector<NamedGenerator> gens;
  for (Element x : small_generating_set(
           FiniteGroup("tmp", n, table, {}, names))) {
    gens.push_back({names[x], x});
  }
  return FiniteGroup("subgroup of " + g.label(), n, std::move(table),
                     std::move(gens), std::move(names));
}

FiniteGroup quotient_group(FiniteGroup const& g, Subgroup const& s) {
  if (!is_subgroup(g, s.members())) {
    throw std::invalid_argument("member set is not a subgroup");
  }
  if (!is_normal(g, s)) {
    throw std::invalid_argument("quotient requires a normal subgroup");
  }
  // coset[a] = index of the coset aS; cosets ordered by least element.
  std::vector<Element> coset(g.order(), static_cast<Element>(-1));
  std::vector<Element> rep;
  for (Element a = 0; a < g.order(); ++a) {
    if (coset[a] != static_cast<Element>(-1)) {
      continue;
    }
    Element id = static_cast<Element>(rep.size());
    rep.push_back(a);
    for (Element m : s.members()) {
      coset[g.mul(a, m)] = id;
    }
  }
  std::size_t const    n = rep.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(g.element_name(rep[i]) + "N");
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = coset[g.mul(rep[i], rep[j])];
    }
  }
  std::vector<NamedGenerator> gens;
  for (auto const& gen : g.generators()) {
    gens.push_back({gen.name + "N", coset[gen.index]});
  }
  return FiniteGroup(g.label() + "/N", n, std::move(table), std::move(gens),
                     std::move(names));
}

std::vector<Element> small_generating_set(FiniteGroup const& g) {
  std::vector<Element> gens;
  std::vector<bool>    in(g.order(), false);
  in[g.identity()]  = true;
  std::size_t covered = 1;
  // Prefer elements of large order; ties by index.
  std::vector<Element> order_by(g.order());
  std::vector<std::size_t> ord(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    order_by[a] = a;
    ord[a]      = element_order(g, a);
  }
  std::stable_sort(order_by.begin(), order_by.end(),
                   [&](Element a, Element b) { return ord[a] > ord[b]; });
  for (Element a : order_by) {
    if (covered == g.order()) {
      break;
    }
    if (in[a]) {
      continue;
    }
    gens.push_back(a);
    auto members = close_under_products(g, gens);
    covered      = members.size();
    for (Element m : members) {
      in[m] = true;
    }
  }
  return gens;
}

}  // namespace engel
