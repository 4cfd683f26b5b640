#include <gtest/gtest.h>

#include <algorithm>

#include "deltang/connectivity.hpp"
#include "deltang/enumeration.hpp"
#include "deltang/graph_io.hpp"

using namespace deltang;

namespace {

bool witness_disconnects(const Graph &g, const VertexCut &cut) {
  Graph rest = induced_without(g, cut.witness);
  return rest.order() <= 1 || !is_connected(rest);
}

bool witness_disconnects(const Graph &g, const EdgeCut &cut) { return !is_connected(without_edges(g, cut.witness)); }

}  // namespace

TEST(Connectivity, VertexExamples) {
  EXPECT_EQ(vertex_connectivity(complete_graph(4)).value, 3);
  EXPECT_EQ(vertex_connectivity(path_graph(4)).value, 1);
  EXPECT_EQ(vertex_connectivity(disjoint_union({complete_graph(3), complete_graph(2)})).value, 0);
  EXPECT_EQ(vertex_connectivity(empty_graph(1)).value, 0);
  EXPECT_THROW(vertex_connectivity(empty_graph(0)), DomainError);
}

TEST(Connectivity, VertexWitnessOnMultipartite) {
  Graph g = complete_multipartite({1, 2, 3});
  VertexCut cut = vertex_connectivity(g);
  EXPECT_EQ(cut.value, 3);
  EXPECT_EQ(cut.witness.size(), 3u);
  EXPECT_TRUE(witness_disconnects(g, cut));
}

TEST(Connectivity, EdgeExamples) {
  Graph g = complete_multipartite({1, 2, 3});
  EdgeCut cut = edge_connectivity(g);
  EXPECT_EQ(cut.value, 3);
  EXPECT_EQ(cut.witness.size(), 3u);
  EXPECT_TRUE(witness_disconnects(g, cut));
  EXPECT_EQ(edge_connectivity(cycle_graph(5)).value, 2);
  EXPECT_EQ(edge_connectivity(disjoint_union({complete_graph(4), empty_graph(1)})).value, 0);
  EXPECT_EQ(edge_connectivity(complete_graph(6)).value, 5);
  EXPECT_THROW(edge_connectivity(empty_graph(0)), DomainError);
}

TEST(Connectivity, BruteForceExamples) {
  EXPECT_EQ(vertex_connectivity_bruteforce(complete_graph(4)), 3);
  EXPECT_EQ(vertex_connectivity_bruteforce(path_graph(4)), 1);
  EXPECT_EQ(vertex_connectivity_bruteforce(empty_graph(2)), 0);
  EXPECT_EQ(edge_connectivity_bruteforce(cycle_graph(5)), 2);
  EXPECT_EQ(edge_connectivity_bruteforce(complete_graph(2)), 1);
  EXPECT_EQ(edge_connectivity_bruteforce(empty_graph(3)), 0);
  EXPECT_EQ(edge_connectivity_bruteforce(empty_graph(1)), 0);
  EXPECT_THROW(vertex_connectivity_bruteforce(empty_graph(11)), UnsupportedError);
  EXPECT_THROW(edge_connectivity_bruteforce(complete_graph(9)), UnsupportedError);
}

TEST(Connectivity, AgreesWithBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph &g : labeled_graphs(n)) {
      VertexCut vc = vertex_connectivity(g);
      EdgeCut ec = edge_connectivity(g);
      ASSERT_EQ(vc.value, vertex_connectivity_bruteforce(g)) << to_graph6(g);
      ASSERT_EQ(ec.value, edge_connectivity_bruteforce(g)) << to_graph6(g);
      if (!vc.witness.empty()) {
        ASSERT_EQ(static_cast<int>(vc.witness.size()), vc.value);
        ASSERT_TRUE(witness_disconnects(g, vc)) << to_graph6(g);
      }
      if (!ec.witness.empty()) {
        ASSERT_EQ(static_cast<int>(ec.witness.size()), ec.value);
        ASSERT_TRUE(witness_disconnects(g, ec)) << to_graph6(g);
      }
    }
}

TEST(Connectivity, WhitneyChain) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Graph g = random_graph(2 + s % 15, {2, 3}, s);
    int k = vertex_connectivity(g).value, l = edge_connectivity(g).value;
    EXPECT_LE(k, l);
    EXPECT_LE(l, g.min_degree());
  }
}

TEST(Connectivity, LargeMultipartite) {
  Graph g = complete_multipartite({5, 10, 20, 30});
  EXPECT_EQ(vertex_connectivity(g).value, 65 - 30);
  EXPECT_EQ(edge_connectivity(g).value, 65 - 30);
}

TEST(Flow, Examples) {
  // K_{2,3} split network: s, t in the 3-part share the two vertices of the 2-part.
  Graph k23 = complete_multipartite({2, 3});
  FlowNetwork split(10);
  for (int v = 0; v < 5; ++v) split.add_arc(2 * v, 2 * v + 1, 1);
  for (const Edge &e : k23.edges()) {
    split.add_arc(2 * e.u + 1, 2 * e.v, 5);
    split.add_arc(2 * e.v + 1, 2 * e.u, 5);
  }
  EXPECT_EQ(st_max_flow(split, 2 * 2 + 1, 2 * 4), 2);

  FlowNetwork path(3);
  path.add_arc(0, 1, 1);
  path.add_arc(1, 2, 1);
  EXPECT_EQ(st_max_flow(path, 0, 2), 1);
  EXPECT_EQ(path.max_flow(0, 2, 0), 0);

  FlowNetwork apart(4);
  apart.add_arc(0, 1, 3);
  apart.add_arc(2, 3, 3);
  EXPECT_EQ(st_max_flow(apart, 0, 3), 0);
  EXPECT_THROW(st_max_flow(apart, 1, 1), InputError);
}
