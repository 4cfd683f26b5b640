#pragma once

/**
 * Graphs that attain the δ-complement bounds with equality.
 *
 *   multipartite  K_{1,..,l-1,l+1,..,k}, l = C(k+1,2) - n   δ/κ/λ sum upper bound
 *   cliques       K_1 + .. + K_k without K_l                 Δ-sum lower bound
 *   star          K_{1,n-1}                                  Δ-sum and Δ-product upper bounds
 *   complete      K_n                                        product lower bounds
 *   isolated      K_{n-1} + K_1                              sum lower bounds
 */

#include <optional>
#include <string>
#include <vector>

#include "deltang/bounds.hpp"

namespace deltang {

struct ExtremalWitness {
  std::string family;
  int n = 0;
  int k = 0;
  int l = 0;
  Graph graph;
  std::vector<std::string> targets;  // report rows expected at slack 0
  Graph expected_delta;              // the δ-complement the construction predicts
  bool attained = false;             // set by verify_sharpness
};

inline const std::vector<std::string> &extremal_family_names() {
  static const std::vector<std::string> names{"multipartite", "cliques", "star", "complete", "isolated"};
  return names;
}

namespace detail {

inline int omitted_part(int n, int k) { return k * (k + 1) / 2 - n; }

}  // namespace detail

inline ExtremalWitness multipartite_extremal(int n) {
  if (n < 3) throw DomainError("multipartite_extremal: n must be >= 3");
  const int k = triangular_index(n).k;
  const int l = detail::omitted_part(n, k);
  std::vector<int> parts;
  for (int s = 1; s <= k; ++s)
    if (s != l) parts.push_back(s);
  return {"multipartite", n, k, l, complete_multipartite(parts),
          {"delta_sum.upper", "kappa_sum.upper", "lambda_sum.upper"}, complete_graph(n)};
}

inline ExtremalWitness clique_union_extremal(int n) {
  if (n < 3) throw DomainError("clique_union_extremal: n must be >= 3");
  const int k = triangular_index(n).k;
  const int l = detail::omitted_part(n, k);
  std::vector<Graph> cliques;
  for (int s = 1; s <= k; ++s)
    if (s != l) cliques.push_back(complete_graph(s));
  return {"cliques", n, k, l, disjoint_union(cliques), {"max_degree_sum.lower"}, empty_graph(n)};
}

/// The construction needs a unique vertex of degree n-1, so n = 2 (where
/// K_{1,1} has two such vertices and G_δ = N_2) is outside its range.
inline ExtremalWitness star_extremal(int n) {
  if (n < 3) throw DomainError("star_extremal: n must be >= 3");
  return {"star", n, triangular_index(n).k, 0, star_graph(n),
          {"max_degree_sum.upper", "max_degree_product.upper"}, complete_graph(n)};
}

inline ExtremalWitness complete_extremal(int n) {
  if (n < 1) throw DomainError("complete_extremal: n must be >= 1");
  return {"complete", n, triangular_index(n).k, 0, complete_graph(n),
          {"delta_product.lower", "max_degree_product.lower", "kappa_product.lower", "lambda_product.lower"},
          empty_graph(n)};
}

inline ExtremalWitness isolated_vertex_extremal(int n) {
  if (n < 3) throw DomainError("isolated_vertex_extremal: n must be >= 3");
  return {"isolated", n, triangular_index(n).k, 0, disjoint_union({complete_graph(n - 1), complete_graph(1)}),
          {"delta_sum.lower", "kappa_sum.lower", "lambda_sum.lower"}, empty_graph(n)};
}

inline ExtremalWitness make_extremal(const std::string &family, int n) {
  if (family == "multipartite") return multipartite_extremal(n);
  if (family == "cliques") return clique_union_extremal(n);
  if (family == "star") return star_extremal(n);
  if (family == "complete") return complete_extremal(n);
  if (family == "isolated") return isolated_vertex_extremal(n);
  throw InputError("unknown extremal family: " + family);
}

/// Recomputes every target row and the predicted δ-complement.
inline bool verify_sharpness(ExtremalWitness &w) {
  if (delta_complement(w.graph) != w.expected_delta) return w.attained = false;
  const NGReport report = ng_report(w.graph);
  for (const auto &name : w.targets) {
    const BoundRow *row = report.find(name);
    if (row == nullptr || !row->tight()) return w.attained = false;
  }
  return w.attained = true;
}

}  // namespace deltang
