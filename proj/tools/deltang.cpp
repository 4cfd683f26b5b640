// deltang: command-line front end.
//
// Exit codes: 0 success, 1 a bound or check failed, 2 usage error,
// 3 I/O or format error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "deltang/deltang.hpp"

namespace {

using namespace deltang;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

std::string read_all(const std::string &path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// An edge-list document is one graph; otherwise every non-blank line is graph6.
std::vector<Graph> read_graphs(const std::string &path) {
  std::string text = read_all(path);
  if (looks_like_edge_list(text)) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

std::pair<int, int> parse_range(const std::string &text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception &) {
    throw UsageError("invalid range \"" + text + "\" (expected N or A..B)");
  }
}

Probability parse_probability(const std::string &text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      if (text == "0") return {0, 1};
      if (text == "1") return {1, 1};
      throw UsageError("");
    }
    return {std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1))};
  } catch (const std::exception &) {
    throw UsageError("invalid probability \"" + text + "\" (expected NUM/DEN, 0 or 1)");
  }
}

int default_jobs() {
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (const char *cap = std::getenv("DELTANG_MAX_JOBS")) {
    int c = std::atoi(cap);
    if (c >= 1) jobs = std::min(jobs, c);
  }
  return jobs;
}

CheckSet parse_checks(const std::vector<std::string> &names) {
  if (names.empty()) return {};
  CheckSet c{false, false, false, false, true, false, false, false};
  for (const auto &name : names) {
    if (name == "all") {
      c = {true, true, true, true, true, true, true, true};
    } else if (name == "default") {
      c.bounds = c.min_degree = c.lemma = c.whitney = true;
    } else if (name == "bounds") {
      c.bounds = true;
    } else if (name == "min-degree") {
      c.min_degree = true;
    } else if (name == "lemma") {
      c.lemma = true;
    } else if (name == "whitney") {
      c.whitney = true;
    } else if (name == "oracle") {
      c.oracle = true;
    } else if (name == "chromatic") {
      c.chromatic = true;
    } else if (name == "classical") {
      c.classical = true;
    } else if (name == "no-connectivity") {
      c.connectivity = false;
    } else {
      throw UsageError("unknown check \"" + name + "\"");
    }
  }
  return c;
}

Format pick_format(bool json, bool csv) {
  if (json && csv) throw UsageError("--json and --csv are mutually exclusive");
  return json ? Format::json : csv ? Format::csv : Format::text;
}

struct SweepFlags {
  std::string mode = "exhaustive";
  std::string n;
  std::string n_range;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::string probability = "1/2";
  std::vector<std::string> checks;
  int jobs = 0;
  bool json = false;
  bool csv = false;
};

SweepConfig make_config(const SweepFlags &f, bool scan) {
  SweepConfig c;
  if (f.mode == "exhaustive") c.mode = scan ? UniverseMode::noniso : UniverseMode::labeled;
  else if (f.mode == "labeled") c.mode = UniverseMode::labeled;
  else if (f.mode == "noniso") c.mode = UniverseMode::noniso;
  else if (f.mode == "random") c.mode = UniverseMode::random;
  else throw UsageError("unknown mode \"" + f.mode + "\"");
  if (!f.n.empty() && !f.n_range.empty()) throw UsageError("give either --n or --n-range, not both");
  if (f.n.empty() && f.n_range.empty()) throw UsageError("one of --n or --n-range is required");
  auto [lo, hi] = parse_range(f.n.empty() ? f.n_range : f.n);
  c.n_min = lo;
  c.n_max = hi;
  c.samples = f.samples;
  c.seed = f.seed;
  c.edge_probability = parse_probability(f.probability);
  c.checks = parse_checks(f.checks);
  c.jobs = f.jobs > 0 ? f.jobs : default_jobs();
  if (c.mode != UniverseMode::random && (f.samples != 0 || f.seed))
    throw UsageError("--samples and --seed only apply to --mode random");
  try {
    validate(c);
  } catch (const Error &e) {
    throw UsageError(e.what());
  }
  return c;
}

void add_sweep_flags(CLI::App *cmd, SweepFlags &f, bool scan) {
  cmd->add_option("--mode", f.mode,
                  scan ? "exhaustive (all isomorphism classes) | labeled | noniso | random"
                       : "exhaustive (all labeled graphs) | noniso | random")
      ->capture_default_str();
  cmd->add_option("--n", f.n, "single vertex count");
  cmd->add_option("--n-range", f.n_range, "vertex counts A..B");
  cmd->add_option("--samples", f.samples, "random graphs per n (random mode)");
  cmd->add_option("--seed", f.seed, "generator seed (random mode)");
  cmd->add_option("--p", f.probability, "edge probability NUM/DEN (random mode)")->capture_default_str();
  cmd->add_option("--jobs", f.jobs, "worker threads (default: hardware threads, capped by DELTANG_MAX_JOBS)");
  cmd->add_flag("--json", f.json, "JSON output");
  cmd->add_flag("--csv", f.csv, "CSV output");
}

int cmd_delta(const std::string &input, bool show_partition) {
  for (const Graph &g : read_graphs(input)) {
    std::cout << to_graph6(delta_complement(g)) << '\n';
    if (show_partition) {
      for (const auto &c : degree_partition(g).classes) {
        std::cout << "# degree " << c.degree << ":";
        for (int v : c.vertices) std::cout << ' ' << v;
        std::cout << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_report(const std::string &input, ReportOptions options, Format format) {
  bool violated = false;
  bool first = true;
  for (const Graph &g : read_graphs(input)) {
    NGReport r = ng_report(g, options);
    violated |= !check_all_bounds(r).empty();
    switch (format) {
      case Format::json: std::cout << to_json(r).dump() << '\n'; break;
      case Format::csv:
        if (first) std::cout << report_csv_header();
        std::cout << to_csv(r);
        break;
      case Format::text: std::cout << to_text(r); break;
    }
    first = false;
  }
  return violated ? kExitViolation : kExitOk;
}

int cmd_verify(const SweepFlags &flags) {
  Format format = pick_format(flags.json, flags.csv);
  SweepSummary s = sweep_verify(make_config(flags, false));
  switch (format) {
    case Format::json: std::cout << to_json(s).dump(2) << '\n'; break;
    case Format::csv: std::cout << to_csv(s); break;
    case Format::text: std::cout << to_text(s); break;
  }
  return s.zero_violations() ? kExitOk : kExitViolation;
}

int cmd_extremal(const std::string &family, const std::string &range, Format format) {
  std::vector<std::string> families;
  if (family == "all") families = extremal_family_names();
  else if (std::find(extremal_family_names().begin(), extremal_family_names().end(), family) !=
           extremal_family_names().end())
    families = {family};
  else throw UsageError("unknown family \"" + family + "\"");
  auto [lo, hi] = parse_range(range);
  if (lo < 1 || hi < lo) throw UsageError("need 1 <= A <= B in --n-range");

  bool all_attained = true;
  nlohmann::json rows = nlohmann::json::array();
  if (format == Format::csv) std::cout << "family,n,k,l,status,targets,graph6\n";
  if (format == Format::text)
    std::cout << std::left << std::setw(14) << "family" << std::right << std::setw(5) << "n" << std::setw(4) << "k"
              << std::setw(4) << "l" << "  status\n";
  for (const auto &fam : families) {
    for (int n = lo; n <= hi; ++n) {
      std::optional<ExtremalWitness> w;
      try {
        w = make_extremal(fam, n);
      } catch (const DomainError &) {
      }
      std::string status = "inapplicable";
      if (w) {
        verify_sharpness(*w);
        status = w->attained ? "attained" : "NOT-ATTAINED";
        all_attained &= w->attained;
      }
      switch (format) {
        case Format::json: {
          nlohmann::json j = w ? to_json(*w) : nlohmann::json{{"family", fam}, {"n", n}};
          j["status"] = status;
          rows.push_back(std::move(j));
          break;
        }
        case Format::csv: {
          std::string targets;
          if (w)
            for (const auto &t : w->targets) targets += (targets.empty() ? "" : ";") + t;
          std::cout << fam << ',' << n << ',' << (w ? std::to_string(w->k) : "") << ','
                    << (w ? std::to_string(w->l) : "") << ',' << status << ',' << targets << ','
                    << (w ? to_graph6(w->graph) : "") << '\n';
          break;
        }
        case Format::text:
          std::cout << std::left << std::setw(14) << fam << std::right << std::setw(5) << n << std::setw(4)
                    << (w ? std::to_string(w->k) : "-") << std::setw(4) << (w ? std::to_string(w->l) : "-") << "  "
                    << status << '\n';
          break;
      }
    }
  }
  if (format == Format::json) std::cout << rows.dump(2) << '\n';
  return all_attained ? kExitOk : kExitViolation;
}

int cmd_scan(const SweepFlags &flags) {
  Format format = pick_format(flags.json, flags.csv);
  SharpnessTable t = product_conjecture_scan(make_config(flags, true));
  switch (format) {
    case Format::json: std::cout << to_json(t).dump(2) << '\n'; break;
    case Format::csv: std::cout << to_csv(t); break;
    case Format::text: std::cout << to_text(t); break;
  }
  for (const auto &row : t.rows)
    for (const auto &e : row.entries)
      if (e.gap() < 0) return kExitViolation;
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Nordhaus-Gaddum bounds for a graph and its delta-complement"};
  app.require_subcommand(1);

  std::string input;
  bool show_partition = false;
  auto *delta = app.add_subcommand("delta", "print the delta-complement of each input graph as graph6");
  delta->add_option("input", input, "graph6 lines or an edge-list file (default: stdin)");
  delta->add_flag("--show-partition", show_partition, "also print the degree partition");

  bool classical = false, chromatic = false, report_json = false, report_csv = false;
  auto *report = app.add_subcommand("report", "invariants and every bound row for each input graph");
  report->add_option("input", input, "graph6 lines or an edge-list file (default: stdin)");
  report->add_flag("--classical", classical, "add rows against the ordinary complement");
  report->add_flag("--chromatic", chromatic, "add chromatic-number rows (n <= 16)");
  report->add_flag("--json", report_json, "JSON output, one object per line");
  report->add_flag("--csv", report_csv, "CSV output, one line per bound row");

  SweepFlags verify_flags;
  auto *verify = app.add_subcommand("verify", "check every bound over a graph universe");
  add_sweep_flags(verify, verify_flags, false);
  verify->add_option("--checks", verify_flags.checks,
                     "comma list: default, all, bounds, min-degree, lemma, whitney, oracle, chromatic, classical, "
                     "no-connectivity")
      ->delimiter(',');

  std::string family = "all", extremal_range;
  bool extremal_json = false, extremal_csv = false;
  auto *extremal = app.add_subcommand("extremal", "build and verify the sharpness witnesses");
  extremal->add_option("--family", family, "all | multipartite | cliques | star | complete | isolated")
      ->capture_default_str();
  extremal->add_option("--n-range", extremal_range, "vertex counts A..B")->required();
  extremal->add_flag("--json", extremal_json, "JSON output");
  extremal->add_flag("--csv", extremal_csv, "CSV output");

  SweepFlags scan_flags;
  auto *scan = app.add_subcommand("scan", "empirical maxima of the delta, kappa and lambda product bounds");
  add_sweep_flags(scan, scan_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*delta) return cmd_delta(input, show_partition);
    if (*report) return cmd_report(input, {classical, chromatic, true}, pick_format(report_json, report_csv));
    if (*verify) return cmd_verify(verify_flags);
    if (*extremal) return cmd_extremal(family, extremal_range, pick_format(extremal_json, extremal_csv));
    if (*scan) return cmd_scan(scan_flags);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const deltang::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
