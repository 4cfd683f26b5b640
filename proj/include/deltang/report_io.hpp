#pragma once

// JSON, CSV and aligned-text renderings of NGReport.

#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"

#include "deltang/bounds.hpp"

namespace deltang {

inline const char *relation_symbol(Relation r) { return r == Relation::equal ? "==" : "<="; }

inline nlohmann::json to_json(const Invariants &inv) {
  auto optional_int = [](int v) { return v < 0 ? nlohmann::json(nullptr) : nlohmann::json(v); };
  nlohmann::json j{{"min_degree", inv.min_degree},         {"max_degree", inv.max_degree},
                   {"kappa", optional_int(inv.kappa)},     {"lambda", optional_int(inv.lambda)},
                   {"degree_classes", inv.degree_classes}, {"max_class_size", inv.max_class_size}};
  j["chromatic"] = inv.chromatic ? nlohmann::json(*inv.chromatic) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const BoundRow &row) {
  nlohmann::json j{{"relation", relation_symbol(row.relation)}, {"skipped", row.skipped}};
  if (!row.skipped) {
    j["left"] = row.left;
    j["right"] = row.right;
    j["slack"] = row.slack();
    j["holds"] = row.holds();
  }
  return j;
}

inline nlohmann::json to_json(const Violation &v) {
  return {{"row", v.row},
          {"graph6", v.graph6},
          {"left", v.left},
          {"right", v.right},
          {"relation", relation_symbol(v.relation)}};
}

/// Rows are keyed by name, e.g. "delta_sum.upper".
inline nlohmann::json to_json(const NGReport &r) {
  nlohmann::json j{{"n", r.n}, {"k", r.k}, {"graph6", r.graph6}, {"delta_graph6", r.delta_graph6}};
  j["invariants"]["g"] = to_json(r.g);
  j["invariants"]["delta"] = to_json(r.delta);
  if (r.complement) j["invariants"]["complement"] = to_json(*r.complement);
  nlohmann::json rows = nlohmann::json::object();
  for (const auto &row : r.rows) rows[std::string(row.name)] = to_json(row);
  j["rows"] = std::move(rows);
  nlohmann::json violations = nlohmann::json::array();
  for (const auto &v : check_all_bounds(r)) violations.push_back(to_json(v));
  j["violations"] = std::move(violations);
  return j;
}

inline std::string report_csv_header() { return "graph6,row,relation,left,right,slack,status\n"; }

inline std::string to_csv(const NGReport &r) {
  std::ostringstream out;
  for (const auto &row : r.rows) {
    out << r.graph6 << ',' << row.name << ',' << relation_symbol(row.relation) << ',';
    if (row.skipped)
      out << ",,,skipped\n";
    else
      out << row.left << ',' << row.right << ',' << row.slack() << ',' << (row.holds() ? "ok" : "VIOLATED") << '\n';
  }
  return out.str();
}

inline std::string to_text(const NGReport &r) {
  std::ostringstream out;
  out << "graph6 " << r.graph6 << "  n=" << r.n << "  k=" << r.k << "  delta-complement " << r.delta_graph6 << '\n';
  auto inv_line = [&](const char *label, const Invariants &inv) {
    out << "  " << std::left << std::setw(11) << label << std::right << " min_deg=" << inv.min_degree
        << " max_deg=" << inv.max_degree << " kappa=" << inv.kappa << " lambda=" << inv.lambda
        << " classes=" << inv.degree_classes;
    if (inv.chromatic) out << " chi=" << *inv.chromatic;
    out << '\n';
  };
  inv_line("G", r.g);
  inv_line("G_delta", r.delta);
  if (r.complement) inv_line("complement", *r.complement);
  out << "  " << std::left << std::setw(40) << "row" << std::right << std::setw(10) << "left" << "    "
      << std::setw(10) << "right" << std::setw(8) << "slack" << "  status\n";
  for (const auto &row : r.rows) {
    out << "  " << std::left << std::setw(40) << row.name << std::right;
    if (row.skipped) {
      out << std::setw(10) << "-" << "    " << std::setw(10) << "-" << std::setw(8) << "-" << "  skipped\n";
      continue;
    }
    out << std::setw(10) << row.left << ' ' << relation_symbol(row.relation) << ' ' << std::setw(10) << row.right
        << std::setw(8) << row.slack() << "  " << (row.holds() ? "ok" : "VIOLATED") << '\n';
  }
  return out.str();
}

}  // namespace deltang
