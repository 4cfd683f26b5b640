#pragma once

/**
 * Nordhaus-Gaddum-type bounds for a graph G and its δ-complement G_δ.
 *
 * Every bound is held as an integer row "left <= right" (or "left == right"
 * for the two-vertex identities).  Half-integer bounds are squared and
 * multiplied through by 4, so ((2n-k-1)/2)^2 becomes 4·a·b <= (2n-k-1)^2 and
 * 2·sqrt(x) <= s becomes 4·x <= s^2.  No floating point is involved.
 */

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltang/chromatic.hpp"
#include "deltang/connectivity.hpp"
#include "deltang/delta.hpp"
#include "deltang/graph.hpp"
#include "deltang/graph_io.hpp"

namespace deltang {

/// The unique k >= 1 with C(k,2) + 1 <= n <= C(k+1,2).
struct KIndex {
  int n = 0;
  int k = 0;
};

inline KIndex triangular_index(long long n) {
  if (n < 1) throw DomainError("triangular_index: n must be >= 1");
  auto k = static_cast<long long>(std::sqrt(2.0 * static_cast<double>(n)));
  while (k * (k + 1) / 2 < n) ++k;
  while (k > 1 && (k - 1) * k / 2 >= n) --k;
  return {static_cast<int>(n), static_cast<int>(k)};
}

/// Upper bound on δ·δ̄, κ·κ̄ and λ·λ̄ for a graph and its ordinary complement.
inline long long alavi_M(long long n) {
  if (n < 2) throw DomainError("alavi_M: n must be >= 2");
  if (n % 4 == 3) return ((n - 3) / 2) * ((n + 1) / 2);
  return ((n - 1) / 2) * (n / 2);  // floor((n-1)/2) * ceil((n-1)/2)
}

enum class Relation { less_equal, equal };

struct BoundRow {
  std::string_view name;  // static storage
  Relation relation = Relation::less_equal;
  long long left = 0;
  long long right = 0;
  bool skipped = false;

  long long slack() const { return right - left; }
  bool holds() const { return skipped || (relation == Relation::equal ? left == right : left <= right); }
  bool tight() const { return !skipped && left == right; }
};

struct Invariants {
  int min_degree = 0;
  int max_degree = 0;
  int kappa = 0;   // -1 when not computed
  int lambda = 0;  // -1 when not computed
  int degree_classes = 0;
  int max_class_size = 0;
  std::optional<int> chromatic;
};

struct ReportOptions {
  bool classical = false;
  bool chromatic = false;
  bool connectivity = true;  // false leaves κ/λ rows skipped
};

struct NGReport {
  int n = 0;
  int k = 0;
  std::string graph6;
  std::string delta_graph6;
  Invariants g;
  Invariants delta;
  std::optional<Invariants> complement;
  std::vector<BoundRow> rows;

  const BoundRow *find(std::string_view name) const {
    for (const auto &r : rows)
      if (r.name == name) return &r;
    return nullptr;
  }
};

namespace detail {

inline Invariants invariants_of(const Graph &g, bool with_chromatic, bool with_connectivity = true) {
  Invariants inv;
  inv.min_degree = g.min_degree();
  inv.max_degree = g.max_degree();
  if (with_connectivity) {
    inv.kappa = vertex_connectivity(g).value;
    inv.lambda = edge_connectivity(g).value;
  } else {
    inv.kappa = inv.lambda = -1;
  }
  auto part = degree_partition(g);
  inv.degree_classes = part.class_count();
  inv.max_class_size = part.max_class_size();
  if (with_chromatic && g.order() <= kChromaticMaxOrder) inv.chromatic = chromatic_number(g);
  return inv;
}

struct RowSink {
  std::vector<BoundRow> &rows;
  void le(std::string_view name, long long left, long long right) {
    rows.push_back({name, Relation::less_equal, left, right, false});
  }
  void eq(std::string_view name, long long left, long long right) {
    rows.push_back({name, Relation::equal, left, right, false});
  }
  void skip(std::string_view name) { rows.push_back({name, Relation::less_equal, 0, 0, true}); }
};

struct PairRowNames {
  std::string_view n2_sum, sum_lower, sum_upper, product_lower, product_upper;
};

#define DELTANG_PAIR_ROW_NAMES(prefix)                                                                  \
  PairRowNames {                                                                                     \
    "n2." prefix "_sum", prefix "_sum.lower", prefix "_sum.upper", prefix "_product.lower", prefix "_product.upper" \
  }
inline constexpr PairRowNames kDeltaRows = DELTANG_PAIR_ROW_NAMES("delta");
inline constexpr PairRowNames kMaxDegreeRows = DELTANG_PAIR_ROW_NAMES("max_degree");
inline constexpr PairRowNames kKappaRows = DELTANG_PAIR_ROW_NAMES("kappa");
inline constexpr PairRowNames kLambdaRows = DELTANG_PAIR_ROW_NAMES("lambda");
inline constexpr PairRowNames kClassicalMinDegreeRows = DELTANG_PAIR_ROW_NAMES("classical.min_degree");
inline constexpr PairRowNames kClassicalKappaRows = DELTANG_PAIR_ROW_NAMES("classical.kappa");
inline constexpr PairRowNames kClassicalLambdaRows = DELTANG_PAIR_ROW_NAMES("classical.lambda");
#undef DELTANG_PAIR_ROW_NAMES

}  // namespace detail

/// Sum and product rows for one invariant pair, `a` on G and `b` on G_δ.
/// Sum rows are replaced by the exact identity a + b = 1 when n = 2.
inline void add_pair_rows(std::vector<BoundRow> &rows, const detail::PairRowNames &names, int n, long long a,
                          long long b, long long sum_low, long long sum_high, long long product_scale,
                          long long product_high) {
  detail::RowSink out{rows};
  if (n == 2) {
    out.eq(names.n2_sum, a + b, 1);
  } else {
    out.le(names.sum_lower, sum_low, a + b);
    out.le(names.sum_upper, a + b, sum_high);
  }
  out.le(names.product_lower, 0, a * b);
  out.le(names.product_upper, product_scale * a * b, product_high);
}

inline NGReport ng_report(const Graph &g, ReportOptions options = {}) {
  g.require_nonempty("ng_report");
  const long long n = g.order();
  const long long k = triangular_index(n).k;
  const Graph gd = delta_complement(g);

  NGReport r;
  r.n = static_cast<int>(n);
  r.k = static_cast<int>(k);
  r.graph6 = to_graph6(g);
  r.delta_graph6 = to_graph6(gd);
  r.g = detail::invariants_of(g, options.chromatic, options.connectivity);
  r.delta = detail::invariants_of(gd, options.chromatic, options.connectivity);

  const long long top = 2 * n - k - 1;
  auto &rows = r.rows;
  detail::RowSink out{rows};

  add_pair_rows(rows, detail::kDeltaRows, r.n, r.g.min_degree, r.delta.min_degree, 0, top, 4, top * top);
  add_pair_rows(rows, detail::kMaxDegreeRows, r.n, r.g.max_degree, r.delta.max_degree, k - 1, 2 * n - 2, 1,
                (n - 1) * (n - 1));
  const std::size_t connectivity_begin = rows.size();
  add_pair_rows(rows, detail::kKappaRows, r.n, r.g.kappa, r.delta.kappa, 0, top, 4, top * top);
  add_pair_rows(rows, detail::kLambdaRows, r.n, r.g.lambda, r.delta.lambda, 0, top, 4, top * top);
  const std::size_t connectivity_end = rows.size();

  // δ(G_δ) = n - p  implies  δ(G) <= n - k + p - 1.
  const long long p = n - r.delta.min_degree;
  out.le("min_degree_theorem", r.g.min_degree, n - k + p - 1);

  out.le("whitney.kappa_lambda", r.g.kappa, r.g.lambda);
  out.le("whitney.lambda_min_degree", r.g.lambda, r.g.min_degree);
  out.le("whitney_delta.kappa_lambda", r.delta.kappa, r.delta.lambda);
  out.le("whitney_delta.lambda_min_degree", r.delta.lambda, r.delta.min_degree);
  if (!options.connectivity) {
    for (std::size_t i = connectivity_begin; i < connectivity_end; ++i) rows[i] = {rows[i].name, rows[i].relation, 0, 0, true};
    for (std::size_t i = rows.size() - 4; i < rows.size(); ++i) rows[i] = {rows[i].name, rows[i].relation, 0, 0, true};
  }

  const bool chromatic_ok = options.chromatic && n <= kChromaticMaxOrder;

  if (options.chromatic && n >= 4) {
    if (chromatic_ok) {
      const long long s = *r.g.chromatic + *r.delta.chromatic;
      const long long prod = static_cast<long long>(*r.g.chromatic) * *r.delta.chromatic;
      const long long m = r.g.degree_classes;
      const long long widest = r.g.max_class_size;
      out.le("chromatic_sum.lower", 4 * widest, s * s);
      out.le("chromatic_sum.upper", s, m + n);
      out.le("chromatic_product.lower", widest, prod);
      out.le("chromatic_product.upper", 4 * prod, (m + n) * (m + n));
    } else {
      for (const char *name : {"chromatic_sum.lower", "chromatic_sum.upper", "chromatic_product.lower",
                               "chromatic_product.upper"})
        out.skip(name);
    }
  }

  if (options.classical && n >= 2) {
    const Graph gc = complement(g);
    r.complement = detail::invariants_of(gc, options.chromatic, options.connectivity);
    const auto &c = *r.complement;
    out.le("classical.max_degree_sum.lower", n - 1, r.g.max_degree + c.max_degree);
    out.le("classical.max_degree_sum.upper", r.g.max_degree + c.max_degree, 2 * n - 3);
    out.le("classical.max_degree_product.upper", static_cast<long long>(r.g.max_degree) * c.max_degree,
           (n - 1) * (n - 1));
    const long long M = alavi_M(n);
    auto alavi = [&](const detail::PairRowNames &names, long long a, long long b) {
      out.le(names.sum_lower, 1, a + b);
      out.le(names.sum_upper, a + b, n - 1);
      out.le(names.product_upper, a * b, M);
    };
    alavi(detail::kClassicalMinDegreeRows, r.g.min_degree, c.min_degree);
    if (options.connectivity) {
      alavi(detail::kClassicalKappaRows, r.g.kappa, c.kappa);
      alavi(detail::kClassicalLambdaRows, r.g.lambda, c.lambda);
    }
    if (chromatic_ok) {
      const long long s = *r.g.chromatic + *c.chromatic;
      const long long prod = static_cast<long long>(*r.g.chromatic) * *c.chromatic;
      out.le("classical.chromatic_sum.lower", 4 * n, s * s);
      out.le("classical.chromatic_sum.upper", s, n + 1);
      out.le("classical.chromatic_product.lower", n, prod);
      out.le("classical.chromatic_product.upper", 4 * prod, (n + 1) * (n + 1));
    } else if (options.chromatic) {
      for (const char *name : {"classical.chromatic_sum.lower", "classical.chromatic_sum.upper",
                               "classical.chromatic_product.lower", "classical.chromatic_product.upper"})
        out.skip(name);
    }
  }
  return r;
}

/// δ(G) <= n - k + p - 1 where δ(G_δ) = n - p.
inline bool check_min_degree_theorem(const Graph &g) {
  g.require_nonempty("check_min_degree_theorem");
  const long long n = g.order();
  const long long k = triangular_index(n).k;
  const long long p = n - delta_complement(g).min_degree();
  return g.min_degree() <= n - k + p - 1;
}

struct Violation {
  std::string row;
  std::string graph6;
  long long left = 0;
  long long right = 0;
  Relation relation = Relation::less_equal;

  std::string describe() const {
    return row + ": " + std::to_string(left) + (relation == Relation::equal ? " == " : " <= ") +
           std::to_string(right) + " fails for graph6 " + graph6;
  }
};

inline std::vector<Violation> check_all_bounds(const NGReport &report) {
  std::vector<Violation> out;
  for (const auto &row : report.rows)
    if (!row.holds()) out.push_back({std::string(row.name), report.graph6, row.left, row.right, row.relation});
  return out;
}

}  // namespace deltang
