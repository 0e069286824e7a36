#pragma once

// Edge-list and graph6 text formats, and DOT export with partition styling.

#include "decyc/graph.hpp"
#include "decyc/partition.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace decyc {

enum class GraphFormat { EdgeList, Graph6 };

/// "n m" followed by m lines "u v"; blank lines and '#' comments are skipped.
inline CubicGraph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long long> nums;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(x);
      } catch (const std::logic_error&) {
        fail(Errc::ParseError, "not an integer: '" + tok + "'");
      }
    }
  }
  require(nums.size() >= 2, Errc::ParseError, "missing header 'n m'");
  long long n = nums[0], m = nums[1];
  require(n > 0 && m >= 0 && n < (1 << 24), Errc::ParseError, "bad header");
  require(static_cast<long long>(nums.size()) == 2 + 2 * m, Errc::ParseError,
          "expected " + std::to_string(m) + " edges, found " + std::to_string((nums.size() - 2) / 2.0));
  std::vector<EdgeEnds> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = nums[2 + 2 * i], v = nums[3 + 2 * i];
    require(u >= 0 && u < n && v >= 0 && v < n, Errc::ParseError, "edge endpoint out of range");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return build_graph(static_cast<int>(n), edges);
}

inline std::string to_edgelist(const Multigraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (EdgeId e = 0; e < g.size(); ++e) out += std::to_string(g.ends(e).u) + " " + std::to_string(g.ends(e).v) + "\n";
  return out;
}

/// Standard graph6 (no '>>graph6<<' header required, but accepted).
inline Multigraph parse_graph6_raw(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  require(!s.empty(), Errc::ParseError, "empty graph6 string");
  for (char c : s) require(c >= 63 && c <= 126, Errc::ParseError, "graph6 byte out of range");
  std::size_t pos = 0;
  long long n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else if (s.size() >= 4 && s[1] != 126) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    pos = 4;
  } else {
    require(s.size() >= 8, Errc::ParseError, "truncated graph6 size");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (s[i] - 63);
    pos = 8;
  }
  require(n > 0 && n < (1 << 24), Errc::ParseError, "bad graph6 order");
  long long bits = n * (n - 1) / 2;
  require(static_cast<long long>(s.size() - pos) == (bits + 5) / 6, Errc::ParseError, "graph6 length mismatch");
  Multigraph g(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int byte = s[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) g.add_edge(u, v);
    }
  return g;
}

inline CubicGraph parse_graph6(std::string_view text) {
  auto g = parse_graph6_raw(text);
  return CubicGraph(std::move(g));
}

inline std::string to_graph6(const Multigraph& g) {
  require(g.is_simple(), Errc::Graph6Multigraph, "graph6 cannot encode loops or parallel edges");
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
  } else {
    out += "~~";
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((static_cast<long long>(n) >> sh) & 63)));
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.multiplicity(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline CubicGraph parse_graph_text(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

inline CubicGraph parse_graph(const std::string& path, GraphFormat format) {
  return parse_graph_text(read_file(path), format);
}

/// One graph6 string per line; blank lines skipped.
inline std::vector<CubicGraph> parse_graph6_lines(std::string_view text) {
  std::vector<CubicGraph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// DOT.

struct DotEdgeCounts {
  int solid = 0, dashed = 0, dotted = 0;
};

/// A vertices filled black, J vertices white; A-A edges solid, J-J dashed,
/// A-J dotted.
inline std::string export_dot(const Multigraph& g, const DecyclingPartition* p = nullptr, DotEdgeCounts* counts = nullptr) {
  if (p) {
    bool ok = p->A.universe() == static_cast<std::size_t>(g.order()) && p->J.universe() == p->A.universe();
    if (ok) {
      try {
        auto cls = classify_partition(CubicGraph(g), p->A, p->J);
        ok = cls.stable == p->cls.stable && cls.type == p->cls.type;
      } catch (const Error&) {
        ok = false;
      }
    }
    require(ok, Errc::UnclassifiedPartition, "partition does not classify on this graph");
  }
  std::string out = "graph G {\n  node [shape=circle, label=\"\"];\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (p) out += p->A.contains(v) ? " [style=filled, fillcolor=black]" : " [style=filled, fillcolor=white]";
    out += ";\n";
  }
  DotEdgeCounts c;
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto [u, v] = g.ends(e);
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    if (p) {
      int ina = p->A.contains(u) + p->A.contains(v);
      const char* style = ina == 2 ? "solid" : ina == 0 ? "dashed" : "dotted";
      (ina == 2 ? c.solid : ina == 0 ? c.dashed : c.dotted)++;
      out += std::string(" [style=") + style + "]";
    }
    out += ";\n";
  }
  out += "}\n";
  if (counts) *counts = c;
  return out;
}

}  // namespace decyc
