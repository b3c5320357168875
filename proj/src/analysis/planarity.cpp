// Planarity by path addition (Demoucron, Malgrange and Pertuiset).
//
// A graph is planar iff each of its biconnected components is. Each block is
// embedded starting from a cycle; at every step the fragments (bridges) of
// the block relative to the embedded part are computed, a fragment with the
// fewest admissible faces is chosen and one of its attachment paths is drawn
// through an admissible face. A fragment with no admissible face proves the
// block non-planar.

#include "engel/analysis.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace engel {

namespace {

  using Adjacency = std::vector<std::vector<std::size_t>>;
  using Edge      = std::pair<std::size_t, std::size_t>;

  class BlockFinder {
   public:
    explicit BlockFinder(Adjacency const& adj)
        : adj_(adj), disc_(adj.size(), 0), low_(adj.size(), 0) {}

    std::vector<std::vector<Edge>> run() {
      for (std::size_t v = 0; v < adj_.size(); ++v) {
        if (disc_[v] == 0) {
          visit(v, adj_.size());
        }
      }
      return std::move(blocks_);
    }

   private:
    void visit(std::size_t v, std::size_t parent) {
      disc_[v] = low_[v] = ++clock_;
      for (std::size_t w : adj_[v]) {
        if (disc_[w] == 0) {
          stack_.emplace_back(v, w);
          visit(w, v);
          low_[v] = std::min(low_[v], low_[w]);
          if (low_[w] >= disc_[v]) {
            std::vector<Edge> block;
            while (true) {
              Edge e = stack_.back();
              stack_.pop_back();
              block.push_back(e);
              if (e == Edge{v, w}) {
                break;
              }
            }
            blocks_.push_back(std::move(block));
          }
        } else if (w != parent && disc_[w] < disc_[v]) {
          stack_.emplace_back(v, w);
          low_[v] = std::min(low_[v], disc_[w]);
        }
      }
    }

    Adjacency const&               adj_;
    std::vector<std::size_t>       disc_;
    std::vector<std::size_t>       low_;
    std::size_t                    clock_ = 0;
    std::vector<Edge>              stack_;
    std::vector<std::vector<Edge>> blocks_;
  };

  struct Fragment {
    std::vector<std::size_t> attachments;
    // Empty for a single chord; otherwise the component's inner vertices.
    std::vector<std::size_t> inner;
  };

  class PathAddition {
   public:
    explicit PathAddition(Adjacency adj)
        : adj_(std::move(adj)),
          n_(adj_.size()),
          vertex_in_(n_, false),
          edge_in_(n_ * n_, false) {
      for (auto const& nb : adj_) {
        edge_total_ += nb.size();
      }
      edge_total_ /= 2;
    }

    bool planar() {
      if (n_ < 5 || edge_total_ < 9) {
        return true;
      }
      if (edge_total_ > 3 * n_ - 6) {
        return false;
      }
      embed_initial_cycle();
      while (edge_count_ < edge_total_) {
        auto fragments = find_fragments();
        std::size_t best       = fragments.size();
        std::size_t best_count = 0;
        std::size_t best_face  = 0;
        for (std::size_t f = 0; f < fragments.size(); ++f) {
          std::size_t count = 0;
          std::size_t first = 0;
          for (std::size_t k = 0; k < faces_.size(); ++k) {
            if (face_admits(k, fragments[f])) {
              if (count == 0) {
                first = k;
              }
              ++count;
            }
          }
          if (count == 0) {
            return false;
          }
          if (best == fragments.size() || count < best_count) {
            best       = f;
            best_count = count;
            best_face  = first;
          }
          if (count == 1) {
            break;
          }
        }
        embed_path(best_face, attachment_path(fragments[best]));
      }
      return true;
    }

   private:
    bool has_edge_in(std::size_t u, std::size_t v) const {
      return edge_in_[u * n_ + v];
    }

    void mark_edge(std::size_t u, std::size_t v) {
      if (!edge_in_[u * n_ + v]) {
        edge_in_[u * n_ + v] = edge_in_[v * n_ + u] = true;
        ++edge_count_;
      }
    }

    void embed_initial_cycle() {
      // DFS to the first back edge; in a block this closes a cycle.
      std::vector<std::size_t> parent(n_, n_);
      std::vector<std::size_t> depth(n_, 0);
      std::vector<bool>        seen(n_, false);
      std::vector<std::size_t> stack{0};
      seen[0] = true;
      std::vector<std::size_t> next(n_, 0);
      while (!stack.empty()) {
        std::size_t v = stack.back();
        if (next[v] == adj_[v].size()) {
          stack.pop_back();
          continue;
        }
        std::size_t w = adj_[v][next[v]++];
        if (!seen[w]) {
          seen[w]   = true;
          parent[w] = v;
          depth[w]  = depth[v] + 1;
          stack.push_back(w);
        } else if (w != parent[v] && depth[w] < depth[v]) {
          std::vector<std::size_t> cycle;
          for (std::size_t u = v; u != w; u = parent[u]) {
            cycle.push_back(u);
          }
          cycle.push_back(w);
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            vertex_in_[cycle[i]] = true;
            mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
          }
          faces_.push_back(cycle);
          faces_.push_back(std::move(cycle));
          return;
        }
      }
    }

    std::vector<Fragment> find_fragments() const {
      std::vector<Fragment> out;
      for (std::size_t u = 0; u < n_; ++u) {
        if (!vertex_in_[u]) {
          continue;
        }
        for (std::size_t v : adj_[u]) {
          if (u < v && vertex_in_[v] && !has_edge_in(u, v)) {
            out.push_back({{u, v}, {}});
          }
        }
      }
      std::vector<bool> seen(n_, false);
      for (std::size_t s = 0; s < n_; ++s) {
        if (vertex_in_[s] || seen[s]) {
          continue;
        }
        Fragment                frag;
        std::vector<bool>       attached(n_, false);
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
          std::size_t v = queue.front();
          queue.pop_front();
          frag.inner.push_back(v);
          for (std::size_t w : adj_[v]) {
            if (vertex_in_[w]) {
              if (!attached[w]) {
                attached[w] = true;
                frag.attachments.push_back(w);
              }
            } else if (!seen[w]) {
              seen[w] = true;
              queue.push_back(w);
            }
          }
        }
        out.push_back(std::move(frag));
      }
      return out;
    }

    bool face_admits(std::size_t face, Fragment const& frag) const {
      auto const& f = faces_[face];
      return std::all_of(frag.attachments.begin(), frag.attachments.end(),
                         [&](std::size_t a) {
                           return std::find(f.begin(), f.end(), a) != f.end();
                         });
    }

    // Path between two distinct attachments through the fragment.
    std::vector<std::size_t> attachment_path(Fragment const& frag) const {
      if (frag.inner.empty()) {
        return frag.attachments;
      }
      std::size_t const       start = frag.attachments.front();
      std::vector<bool>       inner(n_, false);
      std::vector<std::size_t> parent(n_, n_);
      for (std::size_t v : frag.inner) {
        inner[v] = true;
      }
      std::deque<std::size_t> queue;
      for (std::size_t w : adj_[start]) {
        if (inner[w]) {
          parent[w] = start;
          queue.push_back(w);
        }
      }
      while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj_[v]) {
          if (vertex_in_[w] && w != start) {
            std::vector<std::size_t> path{w};
            for (std::size_t u = v; u != start; u = parent[u]) {
              path.push_back(u);
            }
            path.push_back(start);
            std::reverse(path.begin(), path.end());
            return path;
          }
          if (inner[w] && parent[w] == n_) {
            parent[w] = v;
            queue.push_back(w);
          }
        }
      }
      return {};  // unreachable in a biconnected block
    }

    void embed_path(std::size_t face, std::vector<std::size_t> const& path) {
      auto const        f = faces_[face];
      std::size_t const u = path.front();
      std::size_t const v = path.back();
      std::size_t const i = std::find(f.begin(), f.end(), u) - f.begin();
      std::size_t const j = std::find(f.begin(), f.end(), v) - f.begin();
      std::size_t const k = f.size();

      std::vector<std::size_t> first;
      for (std::size_t p = i; p != j; p = (p + 1) % k) {
        first.push_back(f[p]);
      }
      first.push_back(f[j]);
      for (std::size_t q = path.size() - 1; q-- > 1;) {
        first.push_back(path[q]);
      }

      std::vector<std::size_t> second;
      for (std::size_t p = j; p != i; p = (p + 1) % k) {
        second.push_back(f[p]);
      }
      second.push_back(f[i]);
      for (std::size_t q = 1; q + 1 < path.size(); ++q) {
        second.push_back(path[q]);
      }

      faces_[face] = std::move(first);
      faces_.push_back(std::move(second));
      for (std::size_t q = 0; q + 1 < path.size(); ++q) {
        vertex_in_[path[q]] = true;
        mark_edge(path[q], path[q + 1]);
      }
      vertex_in_[path.back()] = true;
    }

    Adjacency                             adj_;
    std::size_t                           n_;
    std::size_t                           edge_total_ = 0;
    std::size_t                           edge_count_ = 0;
    std::vector<bool>                     vertex_in_;
    std::vector<bool>                     edge_in_;
    std::vector<std::vector<std::size_t>> faces_;
  };

}  // namespace

bool is_planar(SimpleGraph const& g) {
  std::size_t const n = g.vertex_count();
  if (n < 5) {
    return true;
  }
  if (g.edge_count() > 3 * n - 6) {
    return false;
  }
  Adjacency adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    adj[v] = g.neighbours(v);
  }
  for (auto const& block : BlockFinder(adj).run()) {
    std::vector<std::size_t> vertices;
    for (auto [u, v] : block) {
      vertices.push_back(u);
      vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() < 5) {
      continue;
    }
    Adjacency local(vertices.size());
    auto      index = [&](std::size_t v) {
      return static_cast<std::size_t>(
          std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (auto [u, v] : block) {
      local[index(u)].push_back(index(v));
      local[index(v)].push_back(index(u));
    }
    if (!PathAddition(std::move(local)).planar()) {
      return false;
    }
  }
  return true;
}

}  // namespace engel
