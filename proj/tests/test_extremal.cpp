#include <gtest/gtest.h>

#include "deltang/extremal.hpp"
#include "deltang/sweep_io.hpp"

using namespace deltang;

namespace {

long long left_of(const Graph &g, std::string_view row) { return ng_report(g).find(row)->left; }

}  // namespace

TEST(Extremal, MultipartiteExamples) {
  auto w6 = multipartite_extremal(6);
  EXPECT_EQ(w6.l, 0);
  EXPECT_EQ(w6.graph, complete_multipartite({1, 2, 3}));
  EXPECT_EQ(left_of(w6.graph, "delta_sum.upper"), 8);

  auto w7 = multipartite_extremal(7);
  EXPECT_EQ(w7.k, 4);
  EXPECT_EQ(w7.l, 3);
  EXPECT_EQ(w7.graph, complete_multipartite({1, 2, 4}));
  EXPECT_EQ(w7.graph.min_degree(), 3);
  EXPECT_EQ(delta_complement(w7.graph), complete_graph(7));
  EXPECT_EQ(left_of(w7.graph, "delta_sum.upper"), 9);

  auto w4 = multipartite_extremal(4);
  EXPECT_EQ(w4.k, 3);
  EXPECT_EQ(w4.l, 2);
  EXPECT_EQ(w4.graph, complete_multipartite({1, 3}));
  EXPECT_EQ(left_of(w4.graph, "delta_sum.upper"), 4);

  EXPECT_THROW(multipartite_extremal(2), DomainError);
}

TEST(Extremal, CliqueUnionExamples) {
  auto w6 = clique_union_extremal(6);
  EXPECT_EQ(w6.graph, disjoint_union({complete_graph(1), complete_graph(2), complete_graph(3)}));
  EXPECT_EQ(w6.graph.max_degree(), 2);
  EXPECT_EQ(delta_complement(w6.graph), empty_graph(6));
  EXPECT_EQ(left_of(w6.graph, "max_degree_sum.lower"), 2);

  auto w7 = clique_union_extremal(7);
  EXPECT_EQ(w7.l, 3);
  EXPECT_EQ(w7.graph, disjoint_union({complete_graph(1), complete_graph(2), complete_graph(4)}));
  EXPECT_EQ(left_of(w7.graph, "max_degree_sum.lower"), 3);

  auto w9 = clique_union_extremal(9);
  EXPECT_EQ(w9.k, 4);
  EXPECT_EQ(w9.l, 1);
  EXPECT_EQ(w9.graph, disjoint_union({complete_graph(2), complete_graph(3), complete_graph(4)}));
  EXPECT_EQ(left_of(w9.graph, "max_degree_sum.lower"), 3);

  EXPECT_THROW(clique_union_extremal(2), DomainError);
}

TEST(Extremal, StarExamples) {
  Graph s6 = star_extremal(6).graph;
  EXPECT_EQ(left_of(s6, "max_degree_sum.upper"), 10);
  EXPECT_EQ(left_of(s6, "max_degree_product.upper"), 25);
  Graph s4 = star_extremal(4).graph;
  EXPECT_EQ(left_of(s4, "max_degree_sum.upper"), 6);
  EXPECT_EQ(left_of(s4, "max_degree_product.upper"), 9);
}

// K_{1,1} = K_2 is 1-regular, so its δ-complement is N_2 and the Δ-product is
// 0, not 1.  The family starts at n = 3.
TEST(Extremal, StarAtTwoIsNotAttained) {
  EXPECT_THROW(star_extremal(2), DomainError);
  Graph k2 = star_graph(2);
  EXPECT_EQ(delta_complement(k2), empty_graph(2));
  const BoundRow *row = ng_report(k2).find("max_degree_product.upper");
  EXPECT_EQ(row->left, 0);
  EXPECT_EQ(row->right, 1);
}

TEST(Extremal, CompleteAndIsolated) {
  EXPECT_EQ(left_of(complete_extremal(5).graph, "delta_product.lower"), 0);
  EXPECT_EQ(left_of(complete_extremal(3).graph, "max_degree_product.lower"), 0);
  auto w1 = complete_extremal(1);
  EXPECT_TRUE(verify_sharpness(w1));
  NGReport r1 = ng_report(w1.graph);
  EXPECT_EQ(r1.g.min_degree + r1.g.kappa + r1.g.lambda + r1.g.max_degree, 0);

  Graph iso6 = isolated_vertex_extremal(6).graph;
  EXPECT_EQ(iso6, disjoint_union({complete_graph(5), empty_graph(1)}));
  EXPECT_EQ(iso6.min_degree(), 0);
  EXPECT_EQ(delta_complement(iso6).min_degree(), 0);
  EXPECT_EQ(left_of(isolated_vertex_extremal(4).graph, "kappa_sum.lower"), 0);
  EXPECT_THROW(isolated_vertex_extremal(2), DomainError);
}

TEST(Extremal, VerifySharpness) {
  auto a = multipartite_extremal(6);
  EXPECT_TRUE(verify_sharpness(a));
  EXPECT_TRUE(a.attained);
  auto b = star_extremal(10);
  EXPECT_TRUE(verify_sharpness(b));
  auto c = complete_extremal(7);
  EXPECT_TRUE(verify_sharpness(c));
}

TEST(Extremal, VerifySharpnessRejectsWrongGraph) {
  auto w = multipartite_extremal(6);
  w.graph = path_graph(6);
  EXPECT_FALSE(verify_sharpness(w));
  EXPECT_FALSE(w.attained);
}

TEST(Extremal, AllFamiliesUpToForty) {
  for (const auto &family : extremal_family_names())
    for (int n = 3; n <= 40; ++n) {
      auto w = make_extremal(family, n);
      EXPECT_TRUE(verify_sharpness(w)) << family << " n=" << n;
    }
  EXPECT_THROW(make_extremal("wheel", 5), InputError);
}

TEST(Extremal, Json) {
  auto w = star_extremal(5);
  verify_sharpness(w);
  auto j = to_json(w);
  EXPECT_EQ(j["family"], "star");
  EXPECT_EQ(j["attained"], true);
  EXPECT_EQ(j["graph6"], to_graph6(star_graph(5)));
}
