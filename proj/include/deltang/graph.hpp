#pragma once

/**
 * Immutable simple undirected graph on vertices 0..n-1, stored as one
 * adjacency bitset row per vertex.  Degrees are computed once at build time.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltang/error.hpp"

namespace deltang {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

inline constexpr int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

class GraphBuilder;

class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int words_per_row() const { return words_; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::span<const Word> row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int degree(int v) const { return degrees_[v]; }
  std::span<const int> degrees() const { return degrees_; }

  std::size_t edge_count() const { return edge_count_; }

  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](int v) {
        if (u < v) out.push_back({u, v});
      });
    return out;
  }

  template <class F>
  void for_each_neighbor(int v, F &&f) const {
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
      Word bits = r[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  /// δ(G).  Rejects n = 0.
  int min_degree() const {
    require_nonempty("min_degree");
    return *std::min_element(degrees_.begin(), degrees_.end());
  }

  /// Δ(G).  Rejects n = 0.
  int max_degree() const {
    require_nonempty("max_degree");
    return *std::max_element(degrees_.begin(), degrees_.end());
  }

  bool is_complete() const { return edge_count_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }

  void require_nonempty(const char *what) const {
    if (n_ == 0) throw DomainError(std::string(what) + ": undefined for the graph with no vertices");
  }

  friend bool operator==(const Graph &a, const Graph &b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int words_ = 0;
  std::vector<Word> rows_;
  std::vector<int> degrees_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for a Graph.  Callers keep adjacency symmetric and
/// loop-free; build() recomputes degrees from the rows.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n), words_(words_for(n)), rows_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0) throw InputError("vertex count must be non-negative");
  }

  /// Starts from an existing graph's rows.
  explicit GraphBuilder(const Graph &g) : n_(g.n_), words_(g.words_), rows_(g.rows_) {}

  int order() const { return n_; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    set_bit(u, v);
    set_bit(v, u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    clear_bit(u, v);
    clear_bit(v, u);
  }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::span<Word> row(int v) {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  Graph build() && {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.rows_ = std::move(rows_);
    g.degrees_.resize(n_);
    std::size_t twice_edges = 0;
    for (int v = 0; v < n_; ++v) {
      int d = 0;
      for (Word w : g.row(v)) d += std::popcount(w);
      g.degrees_[v] = d;
      twice_edges += d;
    }
    g.edge_count_ = twice_edges / 2;
    return g;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + ", " + std::to_string(v) + ") with n = " +
                       std::to_string(n_));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  }
  void set_bit(int u, int v) { rows_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |= Word{1} << (v % kWordBits); }
  void clear_bit(int u, int v) {
    rows_[static_cast<std::size_t>(u) * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  int n_;
  int words_;
  std::vector<Word> rows_;
};

/// The edgeless graph N_n.
inline Graph empty_graph(int n) { return GraphBuilder(n).build(); }

inline Graph from_edge_list(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge &e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline std::vector<int> degrees(const Graph &g) { return {g.degrees().begin(), g.degrees().end()}; }

/// Vertices grouped by degree; classes ordered by strictly increasing degree,
/// vertices ascending within a class.
struct DegreePartition {
  struct Class {
    int degree = 0;
    std::vector<int> vertices;

    friend bool operator==(const Class &, const Class &) = default;
  };
  std::vector<Class> classes;

  int class_count() const { return static_cast<int>(classes.size()); }

  int max_class_size() const {
    std::size_t best = 0;
    for (const auto &c : classes) best = std::max(best, c.vertices.size());
    return static_cast<int>(best);
  }
};

inline DegreePartition degree_partition(const Graph &g) {
  g.require_nonempty("degree_partition");
  std::vector<std::pair<int, int>> by_degree;
  by_degree.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) by_degree.emplace_back(g.degree(v), v);
  std::sort(by_degree.begin(), by_degree.end());
  DegreePartition p;
  for (auto [d, v] : by_degree) {
    if (p.classes.empty() || p.classes.back().degree != d) p.classes.push_back({d, {}});
    p.classes.back().vertices.push_back(v);
  }
  return p;
}

/// Mask with the low n bits of a bitset row set.
inline void fill_row_mask(std::span<Word> mask, int n) {
  std::fill(mask.begin(), mask.end(), Word{0});
  for (int w = 0; w < static_cast<int>(mask.size()); ++w) {
    int lo = w * kWordBits;
    if (lo >= n) break;
    int bits = std::min(kWordBits, n - lo);
    mask[w] = bits == kWordBits ? ~Word{0} : (Word{1} << bits) - 1;
  }
}

inline Graph complement(const Graph &g) {
  const int n = g.order();
  GraphBuilder b(g);
  std::vector<Word> mask(g.words_per_row());
  fill_row_mask(mask, n);
  for (int v = 0; v < n; ++v) {
    auto r = b.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) r[w] = ~r[w] & mask[w];
    r[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  return std::move(b).build();
}

/// Reachability from vertex 0 covers every vertex.  N_1 is connected.
inline bool is_connected(const Graph &g) {
  g.require_nonempty("is_connected");
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<Word> seen(words, 0), frontier(words, 0), next(words, 0);
  seen[0] = frontier[0] = 1;
  int reached = 1;
  while (true) {
    std::fill(next.begin(), next.end(), Word{0});
    for (int w = 0; w < words; ++w) {
      Word bits = frontier[w];
      while (bits) {
        int v = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        auto r = g.row(v);
        for (int x = 0; x < words; ++x) next[x] |= r[x];
      }
    }
    int added = 0;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~seen[w];
      seen[w] |= next[w];
      added += std::popcount(next[w]);
    }
    if (added == 0) break;
    reached += added;
    frontier.swap(next);
  }
  return reached == n;
}

/// Vertex blocks concatenated in list order, no edges between blocks.
inline Graph disjoint_union(std::span<const Graph> gs) {
  int n = 0;
  for (const auto &g : gs) n += g.order();
  GraphBuilder b(n);
  int offset = 0;
  for (const auto &g : gs) {
    for (const Edge &e : g.edges()) b.add_edge(offset + e.u, offset + e.v);
    offset += g.order();
  }
  return std::move(b).build();
}

inline Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// Graph with vertex v removed for every v in `removed`, relabeled in order.
inline Graph induced_without(const Graph &g, std::span<const int> removed) {
  std::vector<int> relabel(g.order(), 0);
  for (int v : removed) relabel[v] = -1;
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (relabel[v] == 0) relabel[v] = next++;
    else relabel[v] = -1;
  GraphBuilder b(next);
  for (const Edge &e : g.edges())
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) b.add_edge(relabel[e.u], relabel[e.v]);
  return std::move(b).build();
}

inline Graph without_edges(const Graph &g, std::span<const Edge> removed) {
  GraphBuilder b(g);
  for (const Edge &e : removed) b.remove_edge(e.u, e.v);
  return std::move(b).build();
}

/// Complete multipartite graph with contiguous parts in the given order.
inline Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  for (int s : part_sizes) n += s;
  std::vector<int> part_of;
  part_of.reserve(n);
  for (int p = 0; p < static_cast<int>(part_sizes.size()); ++p) part_of.insert(part_of.end(), part_sizes[p], p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph complete_multipartite(std::initializer_list<int> part_sizes) {
  return complete_multipartite(std::span<const int>(part_sizes.begin(), part_sizes.size()));
}

/// Star K_{1,n-1} with centre 0.
inline Graph star_graph(int n) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

}  // namespace deltang
