#include "engel/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace engel {

namespace {

  class CliqueSearch {
   public:
    explicit CliqueSearch(std::vector<Bitrow> adj) : adj_(std::move(adj)) {}

    std::size_t run() {
      Bitrow all(adj_.size());
      all.set();
      expand(0, all);
      return best_;
    }

   private:
    void expand(std::size_t depth, Bitrow candidates) {
      // Greedy sequential colouring; colour[i] bounds the clique size
      // reachable from order[0..i].
      std::vector<std::size_t> order;
      std::vector<std::size_t> colour;
      Bitrow                   uncoloured = candidates;
      for (std::size_t k = 1; uncoloured.any(); ++k) {
        Bitrow available = uncoloured;
        for (auto v = available.find_first(); v != Bitrow::npos;
             v      = available.find_next(v)) {
          available &= ~adj_[v];
          uncoloured.reset(v);
          order.push_back(v);
          colour.push_back(k);
        }
      }
      for (std::size_t i = order.size(); i-- > 0;) {
        if (depth + colour[i] <= best_) {
          return;
        }
        std::size_t v    = order[i];
        Bitrow      next = candidates & adj_[v];
        if (next.none()) {
          best_ = std::max(best_, depth + 1);
        } else {
          expand(depth + 1, next);
        }
        candidates.reset(v);
      }
    }

    std::vector<Bitrow> adj_;
    std::size_t         best_ = 0;
  };

}  // namespace

std::size_t clique_number(SimpleGraph const& g, std::size_t limit) {
  std::size_t const n = g.vertex_count();
  if (n > limit) {
    throw SizeLimitExceeded("clique search limited to " + std::to_string(limit)
                            + " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[order[i]] = i;
  }
  std::vector<Bitrow> adj(n, Bitrow(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto u : g.neighbours(order[i])) {
      adj[i].set(position[u]);
    }
  }
  return CliqueSearch(std::move(adj)).run();
}

}  // namespace engel
