#include "engel/group.hpp"

#include <deque>
#include <stdexcept>

namespace engel {

namespace {

  constexpr std::size_t max_iso_order = 24;

  // Extends generator images along the right Cayley graph of `a`. Returns
  // true iff the images define an injective homomorphism a -> b.
  bool extends_to_isomorphism(FiniteGroup const&          a,
                              FiniteGroup const&          b,
                              std::vector<Element> const& gens,
                              std::vector<Element> const& images) {
    constexpr Element    unset = static_cast<Element>(-1);
    std::vector<Element> phi(a.order(), unset);
    phi[a.identity()] = b.identity();
    std::deque<Element> queue{a.identity()};
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Element xs  = a.mul(x, gens[i]);
        Element img = b.mul(phi[x], images[i]);
        if (phi[xs] == unset) {
          phi[xs] = img;
          queue.push_back(xs);
        } else if (phi[xs] != img) {
          return false;
        }
      }
    }
    std::vector<bool> hit(b.order(), false);
    for (Element x = 0; x < a.order(); ++x) {
      if (phi[x] == unset || hit[phi[x]]) {
        return false;
      }
      hit[phi[x]] = true;
    }
    return true;
  }

  bool search(FiniteGroup const&                 a,
              FiniteGroup const&                 b,
              std::vector<Element> const&        gens,
              std::vector<std::size_t> const&    gen_orders,
              std::vector<std::size_t> const&    b_orders,
              std::vector<Element>&              images) {
    if (images.size() == gens.size()) {
      return extends_to_isomorphism(a, b, gens, images);
    }
    std::size_t const want = gen_orders[images.size()];
    for (Element y = 0; y < b.order(); ++y) {
      if (b_orders[y] != want) {
        continue;
      }
      images.push_back(y);
      if (search(a, b, gens, gen_orders, b_orders, images)) {
        return true;
      }
      images.pop_back();
    }
    return false;
  }

}  // namespace

bool are_isomorphic_small(FiniteGroup const& a, FiniteGroup const& b) {
  if (a.order() > max_iso_order || b.order() > max_iso_order) {
    throw std::invalid_argument(
        "isomorphism testing is limited to groups of order <= 24");
  }
  if (a.order() != b.order() || order_census(a) != order_census(b)) {
    return false;
  }
  auto                     gens = small_generating_set(a);
  std::vector<std::size_t> gen_orders;
  for (Element s : gens) {
    gen_orders.push_back(element_order(a, s));
  }
  std::vector<std::size_t> b_orders(b.order());
  for (Element y = 0; y < b.order(); ++y) {
    b_orders[y] = element_order(b, y);
  }
  std::vector<Element> images;
  return search(a, b, gens, gen_orders, b_orders, images);
}

bool quotient_iso_check(FiniteGroup const& g,
                        Subgroup const&    s,
                        FiniteGroup const& target) {
  if (target.order() > max_iso_order) {
    throw std::invalid_argument("quotient target must have order <= 24");
  }
  if (g.order() != s.size() * target.order()) {
    return false;
  }
  return are_isomorphic_small(target, quotient_group(g, s));
}

}  // namespace engel
