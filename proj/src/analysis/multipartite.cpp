#include "engel/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace engel {

std::size_t MultipartiteShape::vertex_count() const {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

MultipartiteShape make_shape(std::vector<std::size_t> parts) {
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
    throw std::invalid_argument("multipartite parts must be non-empty");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  MultipartiteShape shape;
  shape.a          = parts.size();
  shape.is_uniform = !parts.empty()
                     && std::all_of(parts.begin(), parts.end(),
                                    [&](std::size_t p) { return p == parts.front(); });
  shape.b     = shape.is_uniform ? parts.front() : 0;
  shape.parts = std::move(parts);
  return shape;
}

std::vector<std::vector<std::size_t>> multipartite_classes(SimpleGraph const& g) {
  std::size_t const                     n = g.vertex_count();
  std::vector<bool>                     assigned(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < n; ++v) {
    if (assigned[v]) {
      continue;
    }
    // v's class is v together with its non-neighbours. Every member must
    // see exactly the same class for the relation to be transitive.
    Bitrow cls = ~g.row(v);
    for (auto u = cls.find_first(); u != Bitrow::npos; u = cls.find_next(u)) {
      Bitrow other = ~g.row(u);
      if (other != cls || assigned[u]) {
        return {};
      }
    }
    std::vector<std::size_t> members;
    for (auto u = cls.find_first(); u != Bitrow::npos; u = cls.find_next(u)) {
      assigned[u] = true;
      members.push_back(u);
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

std::optional<MultipartiteShape> recognize_complete_multipartite(SimpleGraph const& g) {
  if (g.vertex_count() == 0) {
    return std::nullopt;
  }
  auto classes = multipartite_classes(g);
  if (classes.empty()) {
    return std::nullopt;
  }
  std::vector<std::size_t> parts;
  for (auto const& c : classes) {
    parts.push_back(c.size());
  }
  return make_shape(std::move(parts));
}

bool verify_biclique(SimpleGraph const&              g,
                     std::vector<std::size_t> const& left,
                     std::vector<std::size_t> const& right) {
  for (auto u : left) {
    if (std::find(right.begin(), right.end(), u) != right.end()) {
      throw std::invalid_argument("biclique sides overlap at vertex "
                                  + std::to_string(u));
    }
  }
  for (auto u : left) {
    for (auto v : right) {
      if (!g.has_edge(u, v)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

  bool extend_iso(SimpleGraph const&              a,
                  SimpleGraph const&              b,
                  std::vector<std::size_t> const& order,
                  std::vector<std::size_t>&       map,
                  std::vector<bool>&              used,
                  std::size_t                     depth) {
    if (depth == order.size()) {
      return true;
    }
    std::size_t const v = order[depth];
    for (std::size_t w = 0; w < b.vertex_count(); ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) {
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        std::size_t u = order[i];
        ok            = a.has_edge(u, v) == b.has_edge(map[u], w);
      }
      if (!ok) {
        continue;
      }
      map[v]  = w;
      used[w] = true;
      if (extend_iso(a, b, order, map, used, depth + 1)) {
        return true;
      }
      used[w] = false;
    }
    return false;
  }

  std::vector<std::size_t> degree_sequence(SimpleGraph const& g) {
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      d.push_back(g.degree(v));
    }
    std::sort(d.begin(), d.end());
    return d;
  }

}  // namespace

bool graphs_isomorphic_small(SimpleGraph const& a, SimpleGraph const& b) {
  auto sa = recognize_complete_multipartite(a);
  auto sb = recognize_complete_multipartite(b);
  if (sa && sb) {
    return *sa == *sb;
  }
  if (sa.has_value() != sb.has_value()) {
    return false;
  }
  if (a.vertex_count() > small_iso_limit || b.vertex_count() > small_iso_limit) {
    throw SizeLimitExceeded("general isomorphism test is limited to "
                            + std::to_string(small_iso_limit) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()
      || degree_sequence(a) != degree_sequence(b)) {
    return false;
  }
  // Place high-degree vertices first; they constrain the search most.
  std::vector<std::size_t> order(a.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a.degree(x) > a.degree(y);
  });
  std::vector<std::size_t> map(a.vertex_count());
  std::vector<bool>        used(b.vertex_count(), false);
  return extend_iso(a, b, order, map, used, 0);
}

}  // namespace engel
