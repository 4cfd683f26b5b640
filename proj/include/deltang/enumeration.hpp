#pragma once

/**
 * Graph universes: every labeled graph on n <= 7 vertices, one representative
 * per isomorphism class for n <= 8, and seeded random graphs.
 */

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "deltang/graph.hpp"

namespace deltang {

inline constexpr int kLabeledMaxOrder = 7;
inline constexpr int kNonIsomorphicMaxOrder = 8;
inline constexpr int kCanonicalMaxOrder = 11;

/// Number of vertex pairs, i.e. bits in an edge mask.
inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose edge (i, j), i < j, is present iff bit e of `mask` is set,
/// where e enumerates pairs by j ascending then i ascending (graph6 order).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int e = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++e)
      if ((mask >> e) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

/// All 2^(n(n-1)/2) labeled graphs on n vertices in increasing mask order.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return graph_from_mask(n_, mask_); }
    iterator &operator++() {
      ++mask_;
      return *this;
    }
    void operator++(int) { ++mask_; }
    friend bool operator==(const iterator &a, const iterator &b) { return a.mask_ == b.mask_; }

   private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
  };

  explicit LabeledGraphs(int n) : n_(n) {
    if (n < 1) throw DomainError("labeled_graphs: n must be >= 1");
    if (n > kLabeledMaxOrder) throw UnsupportedError("labeled_graphs: n > 7; use non-isomorphic or random mode");
  }

  std::uint64_t size() const { return std::uint64_t{1} << pair_count(n_); }
  Graph operator[](std::uint64_t mask) const { return graph_from_mask(n_, mask); }
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, size()}; }

 private:
  int n_;
};

inline LabeledGraphs labeled_graphs(int n) { return LabeledGraphs(n); }

struct CanonicalForm {
  std::uint64_t key = 0;     // upper triangle in graph6 bit order, first pair most significant
  std::vector<int> labeling;  // labeling[position] = original vertex
};

namespace detail {

// Iterated colour refinement starting from degrees.  Colours are ranks of
// sorted signatures, so the final colouring is isomorphism invariant.
inline std::vector<int> refined_colors(const Graph &g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      g.for_each_neighbor(v, [&](int w) { nb.push_back(color[w]); });
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.order()) {
    auto color = refined_colors(g);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return color[a] < color[b]; });
    cell_color_.resize(n_);
    for (int p = 0; p < n_; ++p) cell_color_[p] = color[order_[p]];
    color_ = std::move(color);

    // Twins (N(u) - v == N(v) - u) are interchangeable by an automorphism.
    twin_rep_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      for (int u = 0; u < v; ++u)
        if (twin_rep_[u] == u && are_twins(u, v)) {
          twin_rep_[v] = u;
          break;
        }
    }
    used_.assign(n_, 0);
    cur_cols_.assign(n_, 0);
    best_cols_.assign(n_, 0);
    cur_.assign(n_, -1);
  }

  CanonicalForm run() {
    if (n_ > 0) place(0);
    CanonicalForm out;
    out.labeling = best_;
    for (int j = 1; j < n_; ++j) out.key = (out.key << j) | best_cols_[j];
    return out;
  }

 private:
  bool are_twins(int u, int v) const {
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (g_.adjacent(u, w) != g_.adjacent(v, w)) return false;
    }
    return true;
  }

  // -1: current prefix smaller, 0: equal, 1: larger, compared on columns 1..j.
  int compare_prefix(int j) const {
    for (int c = 1; c <= j; ++c)
      if (cur_cols_[c] != best_cols_[c]) return cur_cols_[c] < best_cols_[c] ? -1 : 1;
    return 0;
  }

  void place(int pos) {
    if (pos == n_) {
      if (best_.empty() || compare_prefix(n_ - 1) < 0) {
        best_ = cur_;
        best_cols_ = cur_cols_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != cell_color_[pos]) continue;
      if (has_unused_earlier_twin(v)) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < pos; ++i) col = (col << 1) | (g_.adjacent(cur_[i], v) ? 1U : 0U);
      cur_cols_[pos] = col;
      if (!best_.empty() && compare_prefix(pos) > 0) continue;
      used_[v] = 1;
      cur_[pos] = v;
      place(pos + 1);
      used_[v] = 0;
      cur_[pos] = -1;
    }
  }

  // Only the lowest-index unused member of a twin class may be placed next.
  bool has_unused_earlier_twin(int v) const {
    for (int w = twin_rep_[v]; w < v; ++w)
      if (!used_[w] && twin_rep_[w] == twin_rep_[v]) return true;
    return false;
  }

  const Graph &g_;
  int n_;
  std::vector<int> color_, order_, cell_color_, twin_rep_;
  std::vector<char> used_;
  std::vector<std::uint32_t> cur_cols_, best_cols_;
  std::vector<int> cur_, best_;
};

}  // namespace detail

/// Lexicographically least upper triangle over all labelings that list
/// vertices in refined-colour order.
inline CanonicalForm canonical_form(const Graph &g) {
  if (g.order() > kCanonicalMaxOrder) throw UnsupportedError("canonical_form: n > 11");
  return detail::CanonicalSearch(g).run();
}

inline Graph relabel(const Graph &g, const std::vector<int> &labeling) {
  GraphBuilder b(g.order());
  for (int p = 0; p < g.order(); ++p)
    for (int q = p + 1; q < g.order(); ++q)
      if (g.adjacent(labeling[p], labeling[q])) b.add_edge(p, q);
  return std::move(b).build();
}

inline Graph canonical_graph(const Graph &g) { return relabel(g, canonical_form(g).labeling); }

/// One canonical representative per isomorphism class, sorted by canonical
/// key.  Built by extending each class on n-1 vertices with every possible
/// neighbourhood of a new vertex; every n-vertex graph arises this way.
inline const std::vector<Graph> &nonisomorphic_graphs(int n) {
  if (n < 1) throw DomainError("nonisomorphic_graphs: n must be >= 1");
  if (n > kNonIsomorphicMaxOrder) throw UnsupportedError("nonisomorphic_graphs: n > 8");
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 1) {
    result.push_back(empty_graph(1));
  } else {
    const auto &smaller = nonisomorphic_graphs(n - 1);
    std::map<std::uint64_t, Graph> classes;
    for (const Graph &h : smaller) {
      for (std::uint32_t nbrs = 0; nbrs < (1U << (n - 1)); ++nbrs) {
        GraphBuilder b(n);
        for (const Edge &e : h.edges()) b.add_edge(e.u, e.v);
        for (int v = 0; v < n - 1; ++v)
          if ((nbrs >> v) & 1U) b.add_edge(v, n - 1);
        Graph g = std::move(b).build();
        auto form = canonical_form(g);
        if (!classes.contains(form.key)) classes.emplace(form.key, relabel(g, form.labeling));
      }
    }
    for (auto &[key, g] : classes) result.push_back(std::move(g));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

/// Probability num/den with 0 <= num <= den, den > 0.
struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

/**
 * G(n, p) with a pinned generator: std::mt19937_64 seeded with `seed` (its
 * output sequence is fixed by the C++ standard).  Pairs are visited in graph6
 * order and each draws one 64-bit word u; the pair is an edge iff
 * u * den < num * 2^64, i.e. u / 2^64 < p exactly.
 */
inline Graph random_graph(int n, Probability p, std::uint64_t seed) {
  if (n < 1) throw DomainError("random_graph: n must be >= 1");
  if (p.den == 0 || p.num > p.den) throw InputError("random_graph: probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      unsigned __int128 u = rng();
      if (u * p.den < (static_cast<unsigned __int128>(p.num) << 64)) b.add_edge(i, j);
    }
  return std::move(b).build();
}

/// splitmix64 finaliser; derives independent per-sample seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t sample_seed(std::uint64_t seed, int n, std::uint64_t index) {
  return mix_seed(mix_seed(mix_seed(seed) ^ static_cast<std::uint64_t>(n)) ^ index);
}

}  // namespace deltang
