#pragma once

/**
 * The δ-complement G_δ: on the same vertex set, u ~ v in G_δ iff
 * deg(u) = deg(v) and uv ∉ E, or deg(u) ≠ deg(v) and uv ∈ E.
 * Degrees are those of G, read before any flipping.
 */

#include <vector>

#include "deltang/graph.hpp"

namespace deltang {

inline Graph delta_complement(const Graph &g) {
  g.require_nonempty("delta_complement");
  const int n = g.order();
  const int words = g.words_per_row();

  // One bitset per degree value present; vertices of equal degree share a mask.
  std::vector<int> class_of_degree(n, -1);
  std::vector<Word> masks;
  for (int v = 0; v < n; ++v) {
    int &c = class_of_degree[g.degree(v)];
    if (c < 0) {
      c = static_cast<int>(masks.size() / words);
      masks.resize(masks.size() + words, 0);
    }
    masks[static_cast<std::size_t>(c) * words + v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  GraphBuilder b(g);
  for (int v = 0; v < n; ++v) {
    const Word *mask = masks.data() + static_cast<std::size_t>(class_of_degree[g.degree(v)]) * words;
    auto r = b.row(v);
    for (int w = 0; w < words; ++w) r[w] ^= mask[w];
    r[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  return std::move(b).build();
}

/// complement(G_δ) and (complement G)_δ have identical edge sets.
inline bool complement_commutes(const Graph &g) {
  g.require_nonempty("complement_commutes");
  return complement(delta_complement(g)) == delta_complement(complement(g));
}

}  // namespace deltang
