#pragma once

/**
 * Verification sweeps over graph universes and the empirical scan of the
 * three product upper bounds (δ, κ, λ) that are not known to be sharp.
 *
 * Work is split into contiguous index ranges, one per worker, and partial
 * results are merged in range order, so every output is identical for any
 * worker count.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "deltang/bounds.hpp"
#include "deltang/enumeration.hpp"

namespace deltang {

enum class UniverseMode { labeled, noniso, random };

inline const char *mode_name(UniverseMode m) {
  switch (m) {
    case UniverseMode::labeled: return "labeled";
    case UniverseMode::noniso: return "noniso";
    case UniverseMode::random: return "random";
  }
  return "?";
}

struct CheckSet {
  bool bounds = true;        // NGReport rows other than the Whitney rows
  bool min_degree = true;    // check_min_degree_theorem
  bool lemma = true;         // complement_commutes
  bool whitney = true;       // κ <= λ <= δ on G and G_δ
  bool connectivity = true;  // compute κ, λ at all
  bool oracle = false;       // max-flow κ, λ against brute force
  bool chromatic = false;    // χ rows for G_δ (n >= 4)
  bool classical = false;    // rows against the ordinary complement
};

struct SweepConfig {
  UniverseMode mode = UniverseMode::labeled;
  int n_min = 1;
  int n_max = 1;
  std::uint64_t samples = 0;         // random mode only
  std::optional<std::uint64_t> seed;  // random mode only
  Probability edge_probability{1, 2};
  CheckSet checks;
  int jobs = 1;
};

inline void validate(const SweepConfig &c) {
  if (c.n_min < 1 || c.n_max < c.n_min) throw InputError("sweep: need 1 <= n_min <= n_max");
  if (c.jobs < 1) throw InputError("sweep: jobs must be >= 1");
  switch (c.mode) {
    case UniverseMode::labeled:
      if (c.n_max > kLabeledMaxOrder) throw UnsupportedError("sweep: labeled mode supports n <= 7");
      break;
    case UniverseMode::noniso:
      if (c.n_max > kNonIsomorphicMaxOrder) throw UnsupportedError("sweep: noniso mode supports n <= 8");
      break;
    case UniverseMode::random:
      if (!c.seed) throw InputError("sweep: random mode requires a seed");
      if (c.samples == 0) throw InputError("sweep: random mode requires samples > 0");
      if (c.edge_probability.den == 0 || c.edge_probability.num > c.edge_probability.den)
        throw InputError("sweep: edge probability outside [0, 1]");
      break;
  }
}

/// Indexable view of one universe at a fixed n.
class Universe {
 public:
  Universe(const SweepConfig &c, int n) : mode_(c.mode), n_(n), p_(c.edge_probability), seed_(c.seed.value_or(0)) {
    switch (mode_) {
      case UniverseMode::labeled: size_ = LabeledGraphs(n).size(); break;
      case UniverseMode::noniso:
        classes_ = &nonisomorphic_graphs(n);
        size_ = classes_->size();
        break;
      case UniverseMode::random: size_ = c.samples; break;
    }
  }

  std::uint64_t size() const { return size_; }
  bool sampled() const { return mode_ == UniverseMode::random; }

  Graph at(std::uint64_t i) const {
    switch (mode_) {
      case UniverseMode::labeled: return graph_from_mask(n_, i);
      case UniverseMode::noniso: return (*classes_)[i];
      case UniverseMode::random: return random_graph(n_, p_, sample_seed(seed_, n_, i));
    }
    return {};
  }

 private:
  UniverseMode mode_;
  int n_;
  Probability p_;
  std::uint64_t seed_;
  std::uint64_t size_ = 0;
  const std::vector<Graph> *classes_ = nullptr;
};

/// Runs fn(chunk, lo, hi) over `jobs` contiguous slices of [0, count).
template <class Fn>
void for_each_chunk(std::uint64_t count, int jobs, Fn &&fn) {
  const auto chunks = static_cast<std::uint64_t>(std::max(1, jobs));
  auto bound = [&](std::uint64_t c) { return count / chunks * c + std::min(c, count % chunks); };
  if (chunks == 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> workers;
  for (std::uint64_t c = 0; c < chunks; ++c) workers.emplace_back([&, c] { fn(c, bound(c), bound(c + 1)); });
  for (auto &w : workers) w.join();
}

struct RowTally {
  std::string name;
  std::uint64_t evaluated = 0;
  std::uint64_t tight = 0;  // slack == 0
  std::uint64_t skipped = 0;
  std::uint64_t failed = 0;
};

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct SweepViolation {
  std::string check;
  std::string detail;
  std::string graph6;
  std::uint64_t index = 0;
};

inline constexpr std::size_t kStoredViolations = 100;

struct SweepSlice {
  int n = 0;
  std::uint64_t graphs = 0;
  std::vector<RowTally> rows;
  std::vector<CheckTally> checks;
  std::vector<SweepViolation> violations;  // first kStoredViolations in universe order
  std::uint64_t violation_count = 0;
};

struct SweepSummary {
  UniverseMode mode = UniverseMode::labeled;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
  std::vector<SweepSlice> slices;

  std::uint64_t graphs() const {
    std::uint64_t t = 0;
    for (const auto &s : slices) t += s.graphs;
    return t;
  }
  std::uint64_t violations() const {
    std::uint64_t t = 0;
    for (const auto &s : slices) t += s.violation_count;
    return t;
  }
  bool zero_violations() const { return violations() == 0; }
};

namespace detail {

inline const std::vector<std::string> &check_names() {
  static const std::vector<std::string> names{"bounds",        "min_degree_theorem", "complement_commutes",
                                              "whitney",       "oracle.vertex",      "oracle.edge"};
  return names;
}

class SliceBuilder {
 public:
  SliceBuilder(int n, const CheckSet &checks) : checks_(checks) {
    slice_.n = n;
    for (const auto &name : check_names()) slice_.checks.push_back({name});
  }

  void run(const Graph &g, std::uint64_t index) {
    ++slice_.graphs;
    const bool need_report = checks_.bounds || checks_.whitney || checks_.chromatic || checks_.classical;
    if (need_report) {
      ReportOptions opts{checks_.classical, checks_.chromatic, checks_.connectivity};
      NGReport r = ng_report(g, opts);
      if (slice_.rows.empty())
        for (const auto &row : r.rows) slice_.rows.push_back({std::string(row.name)});
      bool bounds_ok = true, whitney_ok = true, bounds_seen = false, whitney_seen = false;
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const BoundRow &row = r.rows[i];
        RowTally &t = slice_.rows[i];
        const bool is_whitney = row.name.starts_with("whitney");
        if (is_whitney && !checks_.whitney) continue;
        if (!is_whitney && !checks_.bounds && !row.name.starts_with("chromatic") && !row.name.starts_with("classical"))
          continue;
        if (row.skipped) {
          ++t.skipped;
          continue;
        }
        ++t.evaluated;
        (is_whitney ? whitney_seen : bounds_seen) = true;
        if (row.tight()) ++t.tight;
        if (!row.holds()) {
          ++t.failed;
          (is_whitney ? whitney_ok : bounds_ok) = false;
          record("row " + std::string(row.name),
                 std::to_string(row.left) + (row.relation == Relation::equal ? " == " : " <= ") +
                     std::to_string(row.right),
                 r.graph6, index);
        }
      }
      if (bounds_seen) tally(0, bounds_ok);
      else ++slice_.checks[0].skipped;
      if (whitney_seen) tally(3, whitney_ok);
      else ++slice_.checks[3].skipped;
    } else {
      ++slice_.checks[0].skipped;
      ++slice_.checks[3].skipped;
    }

    if (checks_.min_degree) {
      bool ok = check_min_degree_theorem(g);
      tally(1, ok);
      if (!ok) record("min_degree_theorem", "delta(G) > n - k + p - 1", to_graph6(g), index);
    } else {
      ++slice_.checks[1].skipped;
    }
    if (checks_.lemma) {
      bool ok = complement_commutes(g);
      tally(2, ok);
      if (!ok) record("complement_commutes", "complement(G_delta) != (complement G)_delta", to_graph6(g), index);
    } else {
      ++slice_.checks[2].skipped;
    }
    if (checks_.oracle) {
      if (g.order() <= kBruteForceMaxOrder) {
        int fast = vertex_connectivity(g).value, slow = vertex_connectivity_bruteforce(g);
        tally(4, fast == slow);
        if (fast != slow)
          record("oracle.vertex", std::to_string(fast) + " != " + std::to_string(slow), to_graph6(g), index);
      } else {
        ++slice_.checks[4].skipped;
      }
      if (g.edge_count() <= static_cast<std::size_t>(kBruteForceMaxEdges)) {
        int fast = edge_connectivity(g).value, slow = edge_connectivity_bruteforce(g);
        tally(5, fast == slow);
        if (fast != slow)
          record("oracle.edge", std::to_string(fast) + " != " + std::to_string(slow), to_graph6(g), index);
      } else {
        ++slice_.checks[5].skipped;
      }
    } else {
      ++slice_.checks[4].skipped;
      ++slice_.checks[5].skipped;
    }
  }

  SweepSlice take() && { return std::move(slice_); }

 private:
  void tally(int check, bool ok) { ++(ok ? slice_.checks[check].passed : slice_.checks[check].failed); }

  void record(std::string check, std::string detail, std::string graph6, std::uint64_t index) {
    ++slice_.violation_count;
    if (slice_.violations.size() < kStoredViolations)
      slice_.violations.push_back({std::move(check), std::move(detail), std::move(graph6), index});
  }

  CheckSet checks_;
  SweepSlice slice_;
};

inline void merge_into(SweepSlice &into, SweepSlice &&part) {
  into.graphs += part.graphs;
  if (into.rows.empty()) into.rows = std::move(part.rows);
  else
    for (std::size_t i = 0; i < part.rows.size(); ++i) {
      into.rows[i].evaluated += part.rows[i].evaluated;
      into.rows[i].tight += part.rows[i].tight;
      into.rows[i].skipped += part.rows[i].skipped;
      into.rows[i].failed += part.rows[i].failed;
    }
  for (std::size_t i = 0; i < into.checks.size(); ++i) {
    into.checks[i].passed += part.checks[i].passed;
    into.checks[i].failed += part.checks[i].failed;
    into.checks[i].skipped += part.checks[i].skipped;
  }
  into.violation_count += part.violation_count;
  for (auto &v : part.violations)
    if (into.violations.size() < kStoredViolations) into.violations.push_back(std::move(v));
}

}  // namespace detail

inline SweepSummary sweep_verify(const SweepConfig &config) {
  validate(config);
  SweepSummary summary;
  summary.mode = config.mode;
  summary.sampled = config.mode == UniverseMode::random;
  summary.seed = config.mode == UniverseMode::random ? config.seed : std::nullopt;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    Universe universe(config, n);
    std::vector<std::optional<SweepSlice>> parts(static_cast<std::size_t>(config.jobs));
    for_each_chunk(universe.size(), config.jobs, [&](std::uint64_t chunk, std::uint64_t lo, std::uint64_t hi) {
      detail::SliceBuilder builder(n, config.checks);
      for (std::uint64_t i = lo; i < hi; ++i) builder.run(universe.at(i), i);
      parts[chunk] = std::move(builder).take();
    });
    SweepSlice slice = detail::SliceBuilder(n, config.checks).take();
    for (auto &p : parts)
      if (p) detail::merge_into(slice, std::move(*p));
    summary.slices.push_back(std::move(slice));
  }
  return summary;
}

struct SharpnessEntry {
  std::string expression;  // "delta_product", "kappa_product", "lambda_product"
  long long max_value = 0;  // largest 4·a·b seen
  long long bound = 0;      // (2n-k-1)^2
  std::string witness;      // graph6 of the first graph reaching max_value
  std::uint64_t witness_index = 0;

  long long gap() const { return bound - max_value; }
  bool tight() const { return gap() == 0; }
};

struct SharpnessRow {
  int n = 0;
  int k = 0;
  std::string universe;  // "exhaustive", "labeled" or "sampled"
  bool sampled = false;  // maxima are then only lower bounds on the true maxima
  std::uint64_t graphs = 0;
  std::vector<SharpnessEntry> entries;
};

struct SharpnessTable {
  std::vector<SharpnessRow> rows;
};

inline const std::vector<std::string> &product_expressions() {
  static const std::vector<std::string> names{"delta_product", "kappa_product", "lambda_product"};
  return names;
}

/// 4·a·b for each product expression, in product_expressions() order.
inline std::vector<long long> product_values(const Graph &g) {
  const Graph gd = delta_complement(g);
  auto four = [](long long a, long long b) { return 4 * a * b; };
  return {four(g.min_degree(), gd.min_degree()),
          four(vertex_connectivity(g).value, vertex_connectivity(gd).value),
          four(edge_connectivity(g).value, edge_connectivity(gd).value)};
}

inline SharpnessTable product_conjecture_scan(const SweepConfig &config) {
  validate(config);
  SharpnessTable table;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    Universe universe(config, n);
    const long long k = triangular_index(n).k;
    const long long top = 2LL * n - k - 1;
    const std::size_t exprs = product_expressions().size();

    struct Best {
      std::vector<long long> value;
      std::vector<std::uint64_t> index;
    };
    std::vector<Best> parts(static_cast<std::size_t>(config.jobs));
    for_each_chunk(universe.size(), config.jobs, [&](std::uint64_t chunk, std::uint64_t lo, std::uint64_t hi) {
      Best b{std::vector<long long>(exprs, -1), std::vector<std::uint64_t>(exprs, 0)};
      for (std::uint64_t i = lo; i < hi; ++i) {
        auto values = product_values(universe.at(i));
        for (std::size_t e = 0; e < exprs; ++e)
          if (values[e] > b.value[e]) b.value[e] = values[e], b.index[e] = i;
      }
      parts[chunk] = std::move(b);
    });

    SharpnessRow row;
    row.n = n;
    row.k = static_cast<int>(k);
    row.sampled = universe.sampled();
    row.universe = config.mode == UniverseMode::random ? "sampled"
                   : config.mode == UniverseMode::noniso ? "exhaustive"
                                                         : "labeled";
    row.graphs = universe.size();
    for (std::size_t e = 0; e < exprs; ++e) {
      SharpnessEntry entry{product_expressions()[e], -1, top * top, {}, 0};
      // Strict improvement in chunk order keeps the earliest index on ties.
      for (const auto &p : parts)
        if (!p.value.empty() && p.value[e] > entry.max_value) entry.max_value = p.value[e], entry.witness_index = p.index[e];
      entry.witness = to_graph6(universe.at(entry.witness_index));
      row.entries.push_back(std::move(entry));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace deltang
