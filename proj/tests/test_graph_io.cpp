#include <gtest/gtest.h>

#include <sstream>

#include "deltang/enumeration.hpp"
#include "deltang/graph_io.hpp"

using namespace deltang;

namespace {

// Straight transcription of the graph6 layout: column-major upper triangle,
// six bits per byte, big-endian within each byte.
std::string reference_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

}  // namespace

TEST(Graph6, FixedVectorsDecode) {
  EXPECT_EQ(from_graph6("A_"), complete_graph(2));
  EXPECT_EQ(from_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(from_graph6("Bg"), path_graph(3));
  EXPECT_EQ(from_graph6("@"), empty_graph(1));
}

TEST(Graph6, FixedVectorsEncode) {
  EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(to_graph6(empty_graph(1)), "@");
  EXPECT_EQ(to_graph6(empty_graph(3)), "B?");
}

TEST(Graph6, MatchesReferenceEncoderOnAllSmallGraphs) {
  EXPECT_EQ(to_graph6(empty_graph(0)), "?");
  EXPECT_EQ(from_graph6("?").order(), 0);
  for (int n = 1; n <= 5; ++n)
    for (const Graph &g : labeled_graphs(n)) {
      std::string s = to_graph6(g);
      ASSERT_EQ(s, reference_graph6(g));
      ASSERT_EQ(from_graph6(s), g);
    }
}

TEST(Graph6, LongForm) {
  Graph g = cycle_graph(100);
  std::string s = to_graph6(g);
  EXPECT_EQ(s, reference_graph6(g));
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(from_graph6(s), g);
  EXPECT_EQ(from_graph6(to_graph6(empty_graph(63))), empty_graph(63));
}

TEST(Graph6, HeaderAccepted) { EXPECT_EQ(from_graph6(">>graph6<<Bw"), complete_graph(3)); }

TEST(Graph6, Errors) {
  EXPECT_THROW(from_graph6(""), FormatError);
  EXPECT_THROW(from_graph6("B\x20"), FormatError);    // byte below 63
  EXPECT_THROW(from_graph6("B\x7f"), FormatError);    // byte above 126
  EXPECT_THROW(from_graph6("B"), FormatError);        // truncated payload
  EXPECT_THROW(from_graph6("Bx"), FormatError);       // padding bit set
  EXPECT_THROW(from_graph6("A_?"), FormatError);      // trailing byte
  EXPECT_THROW(from_graph6("~?"), FormatError);       // truncated size
  EXPECT_THROW(from_graph6("~??A_"), FormatError);    // long form for n <= 62
  EXPECT_THROW(from_graph6("~~?????????"), UnsupportedError);  // 8-byte size form
}

TEST(EdgeList, RoundTrip) {
  Graph g = complete_multipartite({1, 2, 3});
  Graph back = parse_edge_list(to_edge_list(g));
  EXPECT_EQ(back, g);
}

TEST(EdgeList, Parse) {
  Graph g = parse_edge_list("4 3\n0 1\n0 2\n0 3\n");
  EXPECT_EQ(g, star_graph(4));
  EXPECT_TRUE(looks_like_edge_list("4 3\n0 1\n"));
  EXPECT_FALSE(looks_like_edge_list("Bw\n"));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), FormatError);  // fewer edges than declared
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), FormatError);
  EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), InputError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), InputError);
}
