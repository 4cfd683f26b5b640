#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "deltang/enumeration.hpp"
#include "deltang/graph_io.hpp"

using namespace deltang;

namespace {

// Isomorphism by trying every permutation.
bool isomorphic_bruteforce(const Graph &a, const Graph &b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge &e : a.edges())
      if (!b.adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::size_t dedup_count(int n) {
  std::vector<Graph> reps;
  for (const Graph &g : labeled_graphs(n)) {
    bool seen = false;
    for (const Graph &r : reps)
      if (isomorphic_bruteforce(g, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

}  // namespace

TEST(Enumeration, LabeledCounts) {
  EXPECT_EQ(labeled_graphs(3).size(), 8u);
  EXPECT_EQ(labeled_graphs(4).size(), 64u);
  EXPECT_EQ(labeled_graphs(7).size(), 2097152u);
  std::size_t seen = 0;
  for (const Graph &g : labeled_graphs(4)) {
    EXPECT_EQ(g.order(), 4);
    ++seen;
  }
  EXPECT_EQ(seen, 64u);
  EXPECT_THROW(labeled_graphs(8), UnsupportedError);
}

TEST(Enumeration, LabeledGraphsAreDistinct) {
  std::vector<std::string> codes;
  for (const Graph &g : labeled_graphs(5)) codes.push_back(to_graph6(g));
  std::sort(codes.begin(), codes.end());
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
}

TEST(Enumeration, NonIsomorphicMatchesDedupOracle) {
  EXPECT_EQ(nonisomorphic_graphs(1).size(), 1u);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(nonisomorphic_graphs(n).size(), dedup_count(n)) << n;
  EXPECT_EQ(dedup_count(4), 11u);
  EXPECT_EQ(dedup_count(5), 34u);
}

TEST(Enumeration, NonIsomorphicRepresentativesPairwiseDistinct) {
  const auto &reps = nonisomorphic_graphs(5);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) ASSERT_FALSE(isomorphic_bruteforce(reps[i], reps[j]));
}

TEST(Enumeration, NonIsomorphicCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(nonisomorphic_graphs(n).size(), expected[n - 1]);
  EXPECT_THROW(nonisomorphic_graphs(9), UnsupportedError);
}

TEST(Enumeration, CanonicalFormIsInvariant) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    int n = 2 + static_cast<int>(s % 10);
    Graph g = random_graph(n, {1, 2}, s);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::rotate(p.begin(), p.begin() + static_cast<long>(s % n), p.end());
    std::swap(p[0], p[n - 1]);
    Graph h = relabel(g, p);
    ASSERT_EQ(canonical_form(g).key, canonical_form(h).key);
    ASSERT_EQ(canonical_graph(g), canonical_graph(h));
    ASSERT_TRUE(n > 8 || isomorphic_bruteforce(g, canonical_graph(g)));
  }
}

TEST(Enumeration, CanonicalFormSeparatesNonIsomorphic) {
  std::vector<std::uint64_t> keys;
  for (const Graph &g : nonisomorphic_graphs(6)) keys.push_back(canonical_form(g).key);
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
}

TEST(Enumeration, RandomGraphExamples) {
  EXPECT_EQ(random_graph(5, {0, 1}, 3), empty_graph(5));
  EXPECT_EQ(random_graph(5, {1, 1}, 3), complete_graph(5));
  EXPECT_EQ(random_graph(8, {1, 2}, 42), random_graph(8, {1, 2}, 42));
  EXPECT_NE(random_graph(20, {1, 2}, 42), random_graph(20, {1, 2}, 43));
  EXPECT_THROW(random_graph(5, {3, 2}, 1), InputError);
  EXPECT_THROW(random_graph(5, {1, 0}, 1), InputError);
}

TEST(Enumeration, RandomGraphDensity) {
  long long edges = 0;
  for (std::uint64_t s = 0; s < 100; ++s) edges += random_graph(30, {1, 4}, s).edge_count();
  double density = static_cast<double>(edges) / (100.0 * 435);
  EXPECT_NEAR(density, 0.25, 0.02);
}

TEST(Enumeration, SampleSeedsDiffer) {
  EXPECT_NE(sample_seed(1, 7, 0), sample_seed(1, 7, 1));
  EXPECT_NE(sample_seed(1, 7, 0), sample_seed(1, 8, 0));
  EXPECT_EQ(sample_seed(9, 7, 5), sample_seed(9, 7, 5));
}
