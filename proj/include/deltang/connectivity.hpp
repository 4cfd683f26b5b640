#pragma once

/**
 * Vertex connectivity κ and edge connectivity λ via Menger's theorem on
 * unit-capacity flow networks.
 *
 * Conventions: κ(N_1) = λ(N_1) = 0, κ = λ = 0 for a disconnected graph,
 * κ(K_n) = λ(K_n) = n - 1.  A witness is empty when the value needs no cut
 * (already disconnected, single vertex, or complete).
 */

#include <algorithm>
#include <vector>

#include "deltang/flow.hpp"
#include "deltang/graph.hpp"

namespace deltang {

template <class Item>
struct Cut {
  int value = 0;
  std::vector<Item> witness;
};

using VertexCut = Cut<int>;
using EdgeCut = Cut<Edge>;

namespace detail {

// Node 2v is v_in, 2v+1 is v_out.  The unit arc v_in -> v_out carries the
// vertex capacity; edge arcs get capacity n so they never appear in a
// minimum cut.
inline FlowNetwork &scratch_network(int nodes) {
  thread_local FlowNetwork network(0);
  network.clear(nodes);
  return network;
}

struct SplitNetwork {
  FlowNetwork &network;
  explicit SplitNetwork(const Graph &g) : network(scratch_network(2 * g.order())) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) network.add_arc(2 * v, 2 * v + 1, 1);
    for (int u = 0; u < n; ++u)
      g.for_each_neighbor(u, [&](int v) { network.add_arc(2 * u + 1, 2 * v, n); });
  }

  // Internally vertex-disjoint s-t paths for non-adjacent s, t, capped at limit.
  int disjoint_paths(int s, int t, int limit) { return network.max_flow(2 * s + 1, 2 * t, limit); }

  std::vector<int> last_cut(int n) const {
    auto side = network.source_side();
    std::vector<int> cut;
    for (int v = 0; v < n; ++v)
      if (side[2 * v] && !side[2 * v + 1]) cut.push_back(v);
    return cut;
  }
};

}  // namespace detail

/**
 * κ(G).  Let v be a vertex of minimum degree.  For a minimum separator S,
 * either v ∉ S, and then S separates v from some non-neighbour w, or v ∈ S,
 * and then minimality forces v to have neighbours x, y in two different
 * components of G - S.  So the minimum over κ(v, w) for non-neighbours w and
 * κ(x, y) for non-adjacent neighbour pairs equals κ.  N(v) itself is a
 * separator of size δ, which seeds the upper bound.
 */
inline VertexCut vertex_connectivity(const Graph &g) {
  g.require_nonempty("vertex_connectivity");
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return {0, {}};
  if (g.is_complete()) return {n - 1, {}};

  int v = 0;
  for (int u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  VertexCut best{g.degree(v), {}};
  g.for_each_neighbor(v, [&](int w) { best.witness.push_back(w); });

  detail::SplitNetwork split(g);
  auto try_pair = [&](int s, int t) {
    int f = split.disjoint_paths(s, t, best.value);
    if (f < best.value) best = {f, split.last_cut(n)};
  };

  for (int w = 0; w < n && best.value > 0; ++w)
    if (w != v && !g.adjacent(v, w)) try_pair(v, w);

  std::vector<int> nbrs;
  g.for_each_neighbor(v, [&](int w) { nbrs.push_back(w); });
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j])) try_pair(nbrs[i], nbrs[j]);
  return best;
}

/// λ(G) as the minimum over t ≠ 0 of the unit-capacity 0-t max-flow.
inline EdgeCut edge_connectivity(const Graph &g) {
  g.require_nonempty("edge_connectivity");
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return {0, {}};
  if (g.is_complete()) return {n - 1, {}};

  int v = 0;
  for (int u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;
  EdgeCut best{g.degree(v), {}};
  g.for_each_neighbor(v, [&](int w) { best.witness.push_back({std::min(v, w), std::max(v, w)}); });

  FlowNetwork &network = detail::scratch_network(n);
  std::vector<Edge> edge_list = g.edges();
  for (const Edge &e : edge_list) {
    network.add_arc(e.u, e.v, 1);
    network.add_arc(e.v, e.u, 1);
  }
  for (int t = 1; t < n && best.value > 0; ++t) {
    int f = network.max_flow(0, t, best.value);
    if (f < best.value) {
      auto side = network.source_side();
      EdgeCut cut{f, {}};
      for (const Edge &e : edge_list)
        if (side[e.u] != side[e.v]) cut.witness.push_back(e);
      best = std::move(cut);
    }
  }
  std::sort(best.witness.begin(), best.witness.end());
  return best;
}

namespace detail {

inline bool connected_on(const Graph &g, const std::vector<char> &alive) {
  const int n = g.order();
  int start = -1, count = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      if (start < 0) start = v;
      ++count;
    }
  if (count <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (alive[w] && !seen[w] && g.adjacent(u, w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == count;
}

}  // namespace detail

inline constexpr int kBruteForceMaxOrder = 10;
inline constexpr int kBruteForceMaxEdges = 28;

/// Smallest |S| with G - S disconnected or reduced to a single vertex, by
/// enumerating vertex subsets in order of size.
inline int vertex_connectivity_bruteforce(const Graph &g) {
  g.require_nonempty("vertex_connectivity_bruteforce");
  const int n = g.order();
  if (n > kBruteForceMaxOrder) throw UnsupportedError("vertex_connectivity_bruteforce: n > 10");
  for (int size = 0; size < n; ++size) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<char> alive(n);
      for (int v = 0; v < n; ++v) alive[v] = !((mask >> v) & 1U);
      if (n - size == 1 || !detail::connected_on(g, alive)) return size;
    }
  }
  return n - 1;
}

/// Smallest edge set whose removal disconnects G, by enumerating edge subsets
/// in order of size.
inline int edge_connectivity_bruteforce(const Graph &g) {
  g.require_nonempty("edge_connectivity_bruteforce");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > kBruteForceMaxEdges) throw UnsupportedError("edge_connectivity_bruteforce: more than 28 edges");
  if (n == 1) return 0;
  std::vector<char> all(n, 1);
  for (int size = 0; size <= m; ++size) {
    // Lexicographic walk over size-combinations of edge indices.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      GraphBuilder b(g);
      for (int i : pick) b.remove_edge(edges[i].u, edges[i].v);
      if (!detail::connected_on(std::move(b).build(), all)) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return m;
}

}  // namespace deltang
