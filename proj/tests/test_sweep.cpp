#include <gtest/gtest.h>

#include "deltang/sweep_io.hpp"

using namespace deltang;

namespace {

SweepConfig config(UniverseMode mode, int lo, int hi) {
  SweepConfig c;
  c.mode = mode;
  c.n_min = lo;
  c.n_max = hi;
  return c;
}

const CheckTally &check(const SweepSlice &s, const std::string &name) {
  for (const auto &c : s.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Sweep, ExhaustiveFour) {
  auto c = config(UniverseMode::labeled, 4, 4);
  c.checks.oracle = c.checks.chromatic = c.checks.classical = true;
  auto s = sweep_verify(c);
  EXPECT_EQ(s.graphs(), 64u);
  EXPECT_EQ(s.violations(), 0u);
  EXPECT_TRUE(s.zero_violations());
  EXPECT_EQ(check(s.slices[0], "oracle.vertex").passed, 64u);
  EXPECT_NE(to_text(s).find("64 graphs, 0 violations"), std::string::npos);
}

TEST(Sweep, NonIsoCountsPerN) {
  auto s = sweep_verify(config(UniverseMode::noniso, 1, 6));
  ASSERT_EQ(s.slices.size(), 6u);
  const std::vector<std::uint64_t> expected{1, 2, 4, 11, 34, 156};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(s.slices[i].graphs, expected[i]);
  EXPECT_TRUE(s.zero_violations());
}

TEST(Sweep, RandomIsDeterministicAcrossJobs) {
  auto c = config(UniverseMode::random, 9, 12);
  c.samples = 150;
  c.seed = 7;
  c.checks.chromatic = true;
  auto one = to_json(sweep_verify(c)).dump();
  c.jobs = 3;
  auto three = to_json(sweep_verify(c)).dump();
  c.jobs = 8;
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, to_json(sweep_verify(c)).dump());
  auto summary = sweep_verify(c);
  EXPECT_TRUE(summary.sampled);
  EXPECT_NE(to_text(summary).find("sampled, not exhaustive"), std::string::npos);
}

TEST(Sweep, SkippedChecksAreReported) {
  auto c = config(UniverseMode::labeled, 3, 3);
  c.checks.connectivity = false;
  auto s = sweep_verify(c);
  EXPECT_TRUE(s.zero_violations());
  EXPECT_EQ(check(s.slices[0], "oracle.vertex").skipped, 8u);
  for (const auto &r : s.slices[0].rows)
    if (r.name.starts_with("kappa") || r.name.starts_with("whitney")) EXPECT_EQ(r.skipped, 8u) << r.name;
}

TEST(Sweep, OracleSkipsLargeOrders) {
  auto c = config(UniverseMode::random, 11, 11);
  c.samples = 3;
  c.seed = 1;
  c.checks.oracle = true;
  auto s = sweep_verify(c);
  EXPECT_EQ(check(s.slices[0], "oracle.vertex").skipped, 3u);
}

TEST(Sweep, ValidationErrors) {
  EXPECT_THROW(sweep_verify(config(UniverseMode::labeled, 8, 8)), UnsupportedError);
  EXPECT_THROW(sweep_verify(config(UniverseMode::noniso, 9, 9)), UnsupportedError);
  EXPECT_THROW(sweep_verify(config(UniverseMode::labeled, 3, 2)), InputError);
  EXPECT_THROW(sweep_verify(config(UniverseMode::labeled, 0, 2)), InputError);
  auto r = config(UniverseMode::random, 5, 5);
  r.samples = 10;
  EXPECT_THROW(sweep_verify(r), InputError);  // no seed
  r.seed = 1;
  r.samples = 0;
  EXPECT_THROW(sweep_verify(r), InputError);
}

TEST(Sweep, ChunkBoundariesCoverRange) {
  for (int jobs : {1, 2, 3, 7, 20}) {
    std::vector<int> hits(17, 0);
    std::mutex m;
    for_each_chunk(17, jobs, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
      std::lock_guard lock(m);
      for (auto i = lo; i < hi; ++i) ++hits[i];
    });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(Scan, SmallRange) {
  auto t = product_conjecture_scan(config(UniverseMode::noniso, 1, 6));
  ASSERT_EQ(t.rows.size(), 6u);
  for (const auto &row : t.rows) {
    EXPECT_EQ(row.universe, "exhaustive");
    for (const auto &e : row.entries) {
      EXPECT_GE(e.gap(), 0) << row.n << ' ' << e.expression;
      auto values = product_values(from_graph6(e.witness));
      auto idx = std::find(product_expressions().begin(), product_expressions().end(), e.expression) -
                 product_expressions().begin();
      EXPECT_EQ(values[idx], e.max_value);
    }
  }
  // n = 1, 2 have nothing but zero products.
  for (int i = 0; i < 2; ++i)
    for (const auto &e : t.rows[i].entries) EXPECT_EQ(e.max_value, 0);
}

TEST(Scan, SampledRowsAreLabeled) {
  auto c = config(UniverseMode::random, 9, 10);
  c.samples = 20;
  c.seed = 1;
  auto t = product_conjecture_scan(c);
  for (const auto &row : t.rows) {
    EXPECT_TRUE(row.sampled);
    EXPECT_EQ(row.universe, "sampled");
  }
  EXPECT_NE(to_json(t).dump().find("lower bound on the maximum"), std::string::npos);
}

TEST(Scan, DeterministicAcrossJobs) {
  auto c = config(UniverseMode::noniso, 3, 6);
  auto a = to_json(product_conjecture_scan(c)).dump();
  c.jobs = 5;
  EXPECT_EQ(a, to_json(product_conjecture_scan(c)).dump());
}
