#pragma once

// JSON, CSV and text renderings of sweep summaries, sharpness tables and
// extremal witnesses.  Nothing here depends on the worker count.

#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"

#include "deltang/extremal.hpp"
#include "deltang/report_io.hpp"
#include "deltang/sweep.hpp"

namespace deltang {

inline nlohmann::json to_json(const SweepSlice &s) {
  nlohmann::json j{{"n", s.n}, {"graphs", s.graphs}, {"violation_count", s.violation_count}};
  nlohmann::json checks = nlohmann::json::object();
  for (const auto &c : s.checks) checks[c.name] = {{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
  j["checks"] = std::move(checks);
  nlohmann::json rows = nlohmann::json::object();
  for (const auto &r : s.rows)
    rows[r.name] = {{"evaluated", r.evaluated}, {"tight", r.tight}, {"skipped", r.skipped}, {"failed", r.failed}};
  j["rows"] = std::move(rows);
  nlohmann::json v = nlohmann::json::array();
  for (const auto &x : s.violations)
    v.push_back({{"check", x.check}, {"detail", x.detail}, {"graph6", x.graph6}, {"index", x.index}});
  j["violations"] = std::move(v);
  return j;
}

inline nlohmann::json to_json(const SweepSummary &s) {
  nlohmann::json j{{"mode", mode_name(s.mode)},
                   {"sampled", s.sampled},
                   {"graphs", s.graphs()},
                   {"violations", s.violations()},
                   {"zero_violations", s.zero_violations()}};
  j["seed"] = s.seed ? nlohmann::json(*s.seed) : nlohmann::json(nullptr);
  nlohmann::json slices = nlohmann::json::array();
  for (const auto &slice : s.slices) slices.push_back(to_json(slice));
  j["per_n"] = std::move(slices);
  return j;
}

inline std::string to_csv(const SweepSummary &s) {
  std::ostringstream out;
  out << "n,kind,name,evaluated,tight,skipped,failed\n";
  for (const auto &slice : s.slices) {
    for (const auto &c : slice.checks)
      out << slice.n << ",check," << c.name << ',' << c.passed + c.failed << ",," << c.skipped << ',' << c.failed << '\n';
    for (const auto &r : slice.rows)
      out << slice.n << ",row," << r.name << ',' << r.evaluated << ',' << r.tight << ',' << r.skipped << ',' << r.failed
          << '\n';
  }
  return out.str();
}

inline std::string to_text(const SweepSummary &s) {
  std::ostringstream out;
  for (const auto &slice : s.slices) {
    out << "n=" << slice.n << ": " << slice.graphs << " graphs, " << slice.violation_count << " violations";
    std::string skipped;
    for (const auto &c : slice.checks)
      if (c.skipped > 0) skipped += (skipped.empty() ? "" : ", ") + c.name + " " + std::to_string(c.skipped);
    if (!skipped.empty()) out << " (skipped: " << skipped << ")";
    out << '\n';
    for (const auto &v : slice.violations) out << "  VIOLATION " << v.check << ": " << v.detail << " [" << v.graph6 << "]\n";
  }
  out << s.graphs() << " graphs, " << s.violations() << " violations";
  if (s.sampled) out << " (sampled, not exhaustive)";
  out << '\n';
  return out.str();
}

inline nlohmann::json to_json(const SharpnessTable &t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &r : t.rows) {
    nlohmann::json row{{"n", r.n}, {"k", r.k}, {"universe", r.universe}, {"sampled", r.sampled}, {"graphs", r.graphs}};
    if (r.sampled) row["note"] = "lower bound on the maximum";
    nlohmann::json entries = nlohmann::json::object();
    for (const auto &e : r.entries)
      entries[e.expression] = {{"max_four_times_product", e.max_value},
                               {"bound", e.bound},
                               {"gap", e.gap()},
                               {"tight", e.tight()},
                               {"witness", e.witness},
                               {"witness_index", e.witness_index}};
    row["expressions"] = std::move(entries);
    rows.push_back(std::move(row));
  }
  return {{"rows", rows}};
}

inline std::string to_csv(const SharpnessTable &t) {
  std::ostringstream out;
  out << "n,k,universe,graphs,expression,max_four_times_product,bound,gap,tight,witness\n";
  for (const auto &r : t.rows)
    for (const auto &e : r.entries)
      out << r.n << ',' << r.k << ',' << r.universe << ',' << r.graphs << ',' << e.expression << ',' << e.max_value << ','
          << e.bound << ',' << e.gap() << ',' << (e.tight() ? "yes" : "no") << ',' << e.witness << '\n';
  return out.str();
}

inline std::string to_text(const SharpnessTable &t) {
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(12) << "universe" << std::setw(10) << "graphs"
      << std::setw(16) << "expression" << std::setw(8) << "4*max" << std::setw(8) << "bound" << std::setw(6) << "gap"
      << "  witness\n";
  for (const auto &r : t.rows)
    for (const auto &e : r.entries)
      out << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(12) << r.universe << std::setw(10) << r.graphs
          << std::setw(16) << e.expression << std::setw(8) << e.max_value << std::setw(8) << e.bound << std::setw(6)
          << e.gap() << "  " << e.witness << '\n';
  return out.str();
}

inline nlohmann::json to_json(const ExtremalWitness &w) {
  return {{"family", w.family}, {"n", w.n},
          {"k", w.k},           {"l", w.l},
          {"graph6", to_graph6(w.graph)},
          {"targets", w.targets},
          {"attained", w.attained}};
}

}  // namespace deltang
