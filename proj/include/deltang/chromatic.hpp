#pragma once

/**
 * Exact chromatic number for n <= 16 by DSATUR-ordered branch and bound.
 * A greedy clique gives the lower bound, greedy colouring the upper bound.
 * A vertex may only open colour max_used + 1, which removes colour-permutation
 * symmetry from the search.
 */

#include <bit>
#include <cstdint>
#include <vector>

#include "deltang/graph.hpp"

namespace deltang {

inline constexpr int kChromaticMaxOrder = 16;

struct Coloring {
  int colors = 0;
  std::vector<int> color_of;  // colour index per vertex, 0-based
};

namespace detail {

inline std::vector<std::uint32_t> small_adjacency(const Graph &g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) g.for_each_neighbor(v, [&](int w) { adj[v] |= 1U << w; });
  return adj;
}

class ColoringSearch {
 public:
  explicit ColoringSearch(const Graph &g) : n_(g.order()), adj_(small_adjacency(g)), color_(n_, -1) {}

  Coloring run() {
    best_ = greedy();
    lower_ = greedy_clique_size();
    if (best_.colors > lower_) {
      std::fill(color_.begin(), color_.end(), -1);
      neighbor_colors_.assign(n_, 0);
      search(0, 0);
    }
    return best_;
  }

  int greedy_clique_size() const {
    int best = n_ > 0 ? 1 : 0;
    for (int start = 0; start < n_; ++start) {
      std::uint32_t candidates = adj_[start];
      int size = 1;
      while (candidates) {
        // Take the candidate with most neighbours among the remaining ones.
        int pick = -1, pick_score = -1;
        for (std::uint32_t c = candidates; c; c &= c - 1) {
          int v = std::countr_zero(c);
          int score = std::popcount(adj_[v] & candidates);
          if (score > pick_score) pick = v, pick_score = score;
        }
        ++size;
        candidates &= adj_[pick];
      }
      best = std::max(best, size);
    }
    return best;
  }

  Coloring greedy() const {
    Coloring c{0, std::vector<int>(n_, -1)};
    for (int v = 0; v < n_; ++v) {
      std::uint32_t used = 0;
      for (std::uint32_t a = adj_[v]; a; a &= a - 1) {
        int w = std::countr_zero(a);
        if (c.color_of[w] >= 0) used |= 1U << c.color_of[w];
      }
      int col = std::countr_one(used);
      c.color_of[v] = col;
      c.colors = std::max(c.colors, col + 1);
    }
    return c;
  }

 private:
  void search(int colored, int used) {
    if (used >= best_.colors) return;
    if (colored == n_) {
      best_ = {used, color_};
      return;
    }
    // Uncoloured vertex with most distinct neighbour colours, ties by degree.
    int v = -1, sat = -1, deg = -1;
    for (int u = 0; u < n_; ++u) {
      if (color_[u] >= 0) continue;
      int s = std::popcount(neighbor_colors_[u]);
      int d = std::popcount(adj_[u]);
      if (s > sat || (s == sat && d > deg)) v = u, sat = s, deg = d;
    }
    for (int c = 0; c <= used; ++c) {
      if ((neighbor_colors_[v] >> c) & 1U) continue;
      int next_used = std::max(used, c + 1);
      if (next_used >= best_.colors) continue;
      assign(v, c);
      search(colored + 1, next_used);
      unassign(v);
      if (best_.colors <= lower_) return;
    }
  }

  void assign(int v, int c) {
    color_[v] = c;
    saved_.push_back(neighbor_colors_);
    for (std::uint32_t a = adj_[v]; a; a &= a - 1) neighbor_colors_[std::countr_zero(a)] |= 1U << c;
  }

  void unassign(int v) {
    color_[v] = -1;
    neighbor_colors_ = std::move(saved_.back());
    saved_.pop_back();
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> color_;
  std::vector<std::uint32_t> neighbor_colors_;
  std::vector<std::vector<std::uint32_t>> saved_;
  Coloring best_;
  int lower_ = 0;
};

}  // namespace detail

/// An optimal proper colouring.
inline Coloring optimal_coloring(const Graph &g) {
  g.require_nonempty("chromatic_number");
  if (g.order() > kChromaticMaxOrder) throw UnsupportedError("chromatic_number: n > 16");
  return detail::ColoringSearch(g).run();
}

inline int chromatic_number(const Graph &g) { return optimal_coloring(g).colors; }

inline int greedy_clique_lower_bound(const Graph &g) {
  if (g.order() > kChromaticMaxOrder) throw UnsupportedError("greedy_clique_lower_bound: n > 16");
  return detail::ColoringSearch(g).greedy_clique_size();
}

inline int greedy_coloring_upper_bound(const Graph &g) {
  if (g.order() > kChromaticMaxOrder) throw UnsupportedError("greedy_coloring_upper_bound: n > 16");
  return detail::ColoringSearch(g).greedy().colors;
}

inline bool is_proper_coloring(const Graph &g, const Coloring &c) {
  if (static_cast<int>(c.color_of.size()) != g.order()) return false;
  for (const Edge &e : g.edges())
    if (c.color_of[e.u] == c.color_of[e.v]) return false;
  for (int col : c.color_of)
    if (col < 0 || col >= c.colors) return false;
  return true;
}

}  // namespace deltang
