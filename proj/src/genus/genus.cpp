#include "engel/genus.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

namespace engel {

namespace {

  using i64 = std::int64_t;

  // ceil(num / den) for den > 0, clamped below at 0.
  Genus ceil_div_nonneg(i64 num, i64 den) {
    if (num <= 0) {
      return 0;
    }
    return static_cast<Genus>((num + den - 1) / den);
  }

  i64 as_i64(std::size_t v) {
    return static_cast<i64>(v);
  }

  void require(bool ok, char const* message) {
    if (!ok) {
      throw std::invalid_argument(message);
    }
  }

  Genus euler_crosscap_bound(std::size_t v, std::size_t e) {
    return std::max<Genus>(1, ceil_div_nonneg(as_i64(e) - 3 * as_i64(v) + 6, 3));
  }

  bool is_connected(SimpleGraph const& g) {
    std::size_t const n = g.vertex_count();
    if (n == 0) {
      return true;
    }
    std::vector<bool>       seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0]           = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          queue.push_back(w);
        }
      }
    }
    return count == n;
  }

  void finish(SurfaceClass& s) {
    s.classification = surface_kind_of_genus(s.genus);
    if (s.crosscap) {
      s.crosscap_lower_bound = std::max(s.crosscap_lower_bound.value_or(1), *s.crosscap);
      s.projective           = *s.crosscap == 1;
    } else if (s.crosscap_lower_bound && *s.crosscap_lower_bound >= 2) {
      s.projective = false;
    } else if (s.genus && *s.genus == 0) {
      // A planar graph embeds in the projective plane.
      s.projective = true;
    }
  }

}  // namespace

Genus genus_complete(std::size_t n) {
  if (n < 3) {
    return 0;
  }
  return ceil_div_nonneg((as_i64(n) - 3) * (as_i64(n) - 4), 12);
}

Genus genus_complete_bipartite(std::size_t m, std::size_t n) {
  require(m >= 2 && n >= 2, "genus_complete_bipartite needs m, n >= 2");
  return ceil_div_nonneg((as_i64(m) - 2) * (as_i64(n) - 2), 4);
}

Genus crosscap_complete_bipartite(std::size_t m, std::size_t n) {
  require(m >= 2 && n >= 2, "crosscap_complete_bipartite needs m, n >= 2");
  return std::max<Genus>(1, ceil_div_nonneg((as_i64(m) - 2) * (as_i64(n) - 2), 2));
}

Genus crosscap_complete(std::size_t n) {
  require(n >= 3, "crosscap_complete needs n >= 3");
  if (n == 7) {
    return 3;
  }
  return std::max<Genus>(1, ceil_div_nonneg((as_i64(n) - 3) * (as_i64(n) - 4), 6));
}

Genus genus_K_mnn(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "genus_K_mnn needs m, n >= 1");
  i64 const product = (as_i64(m * n) - 2) * (as_i64(n) - 1);
  if (product % 2 != 0) {
    throw std::logic_error("(mn-2)(n-1) is odd");
  }
  return product <= 0 ? 0 : static_cast<Genus>(product / 2);
}

Genus genus_uniform_multipartite(std::size_t a, std::size_t b) {
  require(a >= 3 && b >= 1, "genus_uniform_multipartite needs a >= 3, b >= 1");
  if (b == 1) {
    return genus_complete(a);
  }
  i64 const pairs = as_i64(a) * (as_i64(a) - 1) / 2;
  i64 const bb    = as_i64(b) - 2;
  return static_cast<Genus>(pairs) * ceil_div_nonneg(bb * bb, 4)
         + ceil_div_nonneg((as_i64(a) - 3) * (as_i64(a) - 4), 12);
}

Genus euler_genus_bound(std::size_t vertices, std::size_t edges) {
  return ceil_div_nonneg(as_i64(edges) - 3 * as_i64(vertices) + 6, 6);
}

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::planar: return "planar";
    case SurfaceKind::toroidal: return "toroidal";
    case SurfaceKind::double_toroidal: return "double-toroidal";
    case SurfaceKind::triple_toroidal: return "triple-toroidal";
    case SurfaceKind::genus_4: return "genus-4";
    case SurfaceKind::genus_at_least_5: return "genus>=5";
    case SurfaceKind::unknown: return "unknown";
  }
  return "unknown";
}

SurfaceKind surface_kind_of_genus(std::optional<Genus> genus) {
  if (!genus) {
    return SurfaceKind::unknown;
  }
  static constexpr std::array kinds{SurfaceKind::planar, SurfaceKind::toroidal,
                                    SurfaceKind::double_toroidal,
                                    SurfaceKind::triple_toroidal, SurfaceKind::genus_4};
  return *genus < kinds.size() ? kinds[*genus] : SurfaceKind::genus_at_least_5;
}

SurfaceClass surface_class_of_shape(MultipartiteShape const& shape) {
  SurfaceClass      s;
  auto const&       parts = shape.parts;
  std::size_t const a     = parts.size();
  std::size_t const v     = shape.vertex_count();
  std::size_t       sq    = 0;
  for (std::size_t p : parts) {
    sq += p * p;
  }
  std::size_t const e = (v * v - sq) / 2;

  if (a >= 2 && v >= 3) {
    s.genus_lower_bound    = euler_genus_bound(v, e);
    Genus crosscap_bound   = euler_crosscap_bound(v, e);
    if (a >= 3) {
      crosscap_bound = std::max(crosscap_bound, crosscap_complete(a));
    }
    // Each part against everything else is a complete bipartite subgraph.
    for (std::size_t p : parts) {
      if (p >= 2 && v - p >= 2) {
        crosscap_bound = std::max(crosscap_bound, crosscap_complete_bipartite(v - p, p));
      }
    }
    s.crosscap_lower_bound = crosscap_bound;
  }

  if (a <= 1) {
    s.genus = 0;
    s.basis = "edgeless";
  } else if (shape.is_uniform && shape.b == 1) {
    s.genus = genus_complete(a);
    s.basis = "complete";
    if (a >= 3) {
      s.crosscap = crosscap_complete(a);
    }
  } else if (a == 2) {
    if (parts[1] == 1) {
      s.genus = 0;
      s.basis = "star";
    } else {
      s.genus    = genus_complete_bipartite(parts[0], parts[1]);
      s.crosscap = crosscap_complete_bipartite(parts[0], parts[1]);
      s.basis    = "complete-bipartite";
    }
  } else if (a == 3 && parts[1] == parts[2] && parts[0] % parts[2] == 0) {
    s.genus = genus_K_mnn(parts[0] / parts[2], parts[2]);
    s.basis = "tripartite";
    if (shape.is_uniform && shape.b == 2) {
      // K_{3.2} is named projective in the classification.
      s.crosscap = 1;
      s.basis    = "tripartite; crosscap recorded";
    }
  } else if (shape.is_uniform) {
    s.genus = genus_uniform_multipartite(a, shape.b);
    s.basis = "uniform-multipartite";
  } else if (is_planar(complete_multipartite_graph(parts))) {
    s.genus = 0;
    s.basis = "planarity";
  } else {
    s.basis             = "no formula";
    s.genus_lower_bound = std::max<Genus>(1, s.genus_lower_bound.value_or(0));
  }
  if (s.genus == Genus{0} && s.basis != "planarity" && !is_planar(complete_multipartite_graph(parts))) {
    // The formula claims planarity for a graph that is not planar.
    s.genus             = std::nullopt;
    s.basis            += "; value 0 refuted by planarity test";
    s.genus_lower_bound = std::max<Genus>(1, s.genus_lower_bound.value_or(0));
  }
  finish(s);
  return s;
}

SurfaceClass surface_class_of_reduced(FiniteGroup const& g) {
  return surface_class_of_reduced(g, reduced_co_engel_graph(g));
}

SurfaceClass surface_class_of_reduced(FiniteGroup const& g, ReducedGraph const& reduced) {
  SimpleGraph const& graph = reduced.graph;
  SurfaceClass       s;
  if (auto shape = recognize_complete_multipartite(graph)) {
    s = surface_class_of_shape(*shape);
  } else {
    std::size_t const v = graph.vertex_count();
    std::size_t const e = graph.edge_count();
    if (is_connected(graph) && v >= 3) {
      s.genus_lower_bound    = euler_genus_bound(v, e);
      s.crosscap_lower_bound = euler_crosscap_bound(v, e);
    }
    if (is_planar(graph)) {
      s.genus = 0;
      s.basis = "planarity";
    } else {
      s.genus_lower_bound = std::max<Genus>(1, s.genus_lower_bound.value_or(0));
      s.basis             = "no formula";
    }
    finish(s);
  }
  if (s.genus == Genus{0} || g.order() != 12 || !are_isomorphic_small(g, build_alternating(4))) {
    return s;
  }

  s.genus      = 1;
  s.basis      = "recorded fact: A_4";
  s.projective = std::nullopt;
  // The reduced graph of A_4 contains K_{4,4} on these parts.
  FiniteGroup const        a4 = build_alternating(4);
  ReducedGraph const       ra = reduced_co_engel_graph(a4);
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  auto locate = [&](std::string const& name) {
    for (std::size_t i = 0; i < ra.elements.size(); ++i) {
      if (a4.element_name(ra.elements[i]) == name) {
        return i;
      }
    }
    throw std::logic_error("A_4 element " + name + " missing from reduced graph");
  };
  for (char const* name : {"(2,3,4)", "(1,2,4)", "(2,4,3)", "(1,4,2)"}) {
    left.push_back(locate(name));
  }
  for (char const* name : {"(1,2,3)", "(1,3,4)", "(1,3,2)", "(1,4,3)"}) {
    right.push_back(locate(name));
  }
  if (verify_biclique(ra.graph, left, right)) {
    s.crosscap_lower_bound = std::max(s.crosscap_lower_bound.value_or(1),
                                      crosscap_complete_bipartite(4, 4));
  }
  finish(s);
  return s;
}

ZagrebReport zagreb_report(SimpleGraph const& g) {
  ZagrebReport r;
  r.v_count = g.vertex_count();
  r.e_count = g.edge_count();
  for (std::size_t v = 0; v < r.v_count; ++v) {
    BigInt d = g.degree(v);
    r.m1 += d * d;
  }
  for (auto [u, v] : g.edges()) {
    r.m2 += BigInt(g.degree(u)) * g.degree(v);
  }
  if (r.e_count > 0) {
    r.hv_lhs   = Rational(r.m2, BigInt(r.e_count));
    r.hv_rhs   = Rational(r.m1, BigInt(r.v_count));
    r.hv_holds = *r.hv_lhs >= *r.hv_rhs;
  }
  return r;
}

std::pair<BigInt, BigInt> zagreb_closed_form(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "zagreb_closed_form needs a, b >= 1");
  BigInt const A = a;
  BigInt const B = b;
  BigInt const m1 = A * (A - 1) * (A - 1) * B * B * B;
  BigInt const twice_m2 = A * (A - 1) * (A - 1) * (A - 1) * B * B * B * B;
  if (twice_m2 % 2 != 0) {
    throw std::logic_error("a(a-1)^3 b^4 is odd");
  }
  return {m1, twice_m2 / 2};
}

}  // namespace engel
