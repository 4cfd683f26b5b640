#pragma once

/**
 * graph6 and edge-list text I/O.
 *
 * graph6: a size prefix (one byte n+63 for n <= 62, or 126 followed by three
 * 6-bit groups for 63 <= n <= 258047) then the upper triangle x(i,j), i<j,
 * ordered by j ascending then i ascending, packed six bits per byte MSB first,
 * zero padded, each group offset by 63.
 *
 * Edge list: first line "n m", then m lines "u v", 0-indexed.
 */

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "deltang/error.hpp"
#include "deltang/graph.hpp"

namespace deltang {

inline constexpr int kGraph6MaxOrder = 258047;
inline constexpr int kGraph6ShortMaxOrder = 62;

inline std::string to_graph6(const Graph &g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw UnsupportedError("graph6: n = " + std::to_string(n) + " exceeds 258047");
  std::string out;
  if (n <= kGraph6ShortMaxOrder) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  out.reserve(out.size() + (total_bits + 5) / 6);
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw FormatError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) + " outside 63..126");
  }
  if (text.empty()) throw FormatError("graph6: empty input");
  auto value = [&](std::size_t i) { return static_cast<unsigned char>(text[i]) - 63; };

  int n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && value(1) == 63)
      throw UnsupportedError("graph6: 8-byte size form (n > 258047) is not supported");
    if (text.size() < 4) throw FormatError("graph6: truncated size prefix");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n <= kGraph6ShortMaxOrder) throw FormatError("graph6: extended size prefix used for n <= 62");
    pos = 4;
  }

  const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t payload = (total_bits + 5) / 6;
  if (text.size() - pos < payload) throw FormatError("graph6: truncated payload");
  if (text.size() - pos > payload) throw FormatError("graph6: trailing bytes after payload");

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = value(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    int last = value(pos + payload - 1);
    int pad = 6 - static_cast<int>(bit % 6);
    if (last & ((1 << pad) - 1)) throw FormatError("graph6: non-zero padding bits");
  }
  return std::move(b).build();
}

inline Graph read_edge_list(std::istream &in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw FormatError("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw FormatError("edge list: negative n or m");
  if (n > kGraph6MaxOrder) throw UnsupportedError("edge list: n too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw FormatError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge list: endpoint out of range in edge " + std::to_string(i));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string rest;
  if (in >> rest) throw FormatError("edge list: unexpected trailing token \"" + rest + "\"");
  return from_edge_list(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// True when the first non-blank line is two whitespace-separated integers,
/// which graph6 text can never be.
inline bool looks_like_edge_list(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      std::istringstream in{std::string(line)};
      long long a = 0, b = 0;
      std::string extra;
      return static_cast<bool>(in >> a >> b) && !(in >> extra);
    }
    start = end + 1;
  }
  return false;
}

}  // namespace deltang
