// Independent reference implementations used to cross-check the library.
// Each one takes a different route from the production code and is only
// meant for small inputs.

#ifndef ENGEL_TESTS_ORACLES_HPP_
#define ENGEL_TESTS_ORACLES_HPP_

#include "engel/graph.hpp"
#include "engel/group.hpp"
#include "engel/spectra.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using engel::BigInt;
using engel::Element;
using engel::FiniteGroup;
using engel::SimpleGraph;

inline bool boost_planar(SimpleGraph const& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    boost::add_edge(u, v, bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

// det(xI - M) via Faddeev-LeVerrier with exact integer division.
inline std::vector<BigInt> faddeev_leverrier(engel::IntMatrix const& a) {
  std::size_t const n = a.size();
  using Mat           = std::vector<std::vector<BigInt>>;
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  Mat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Mat next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          s += BigInt(a(i, l)) * m[l][j];
        }
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        trace += BigInt(a(i, l)) * m[l][i];
      }
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

// Exhaustive over vertex subsets; n <= 20.
inline std::size_t brute_clique(SimpleGraph const& g) {
  std::size_t const n    = g.vertex_count();
  std::size_t       best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((mask >> i & 1U) && (mask >> j & 1U) && !g.has_edge(i, j)) {
          ok = false;
        }
      }
    }
    if (ok) {
      best = size;
    }
  }
  return best;
}

// The Engel sequence either reaches 1 within |G| steps or never does, since
// it is determined by its previous term and 1 is a fixed point.
inline bool engel_terminates(FiniteGroup const& g, Element x, Element y) {
  auto comm = [&](Element a, Element b) {
    return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
  };
  Element a = comm(x, y);
  for (std::size_t k = 1; k <= g.order(); ++k) {
    if (a == g.identity()) {
      return true;
    }
    a = comm(a, y);
  }
  return a == g.identity();
}

inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  SimpleGraph                 g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

}  // namespace oracle

#endif  // ENGEL_TESTS_ORACLES_HPP_
