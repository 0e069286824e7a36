#pragma once

// Dart-based multigraphs. Every edge e owns darts 2e and 2e+1; dart 2e sits
// at the first endpoint and 2e+1 at the second. A loop has both darts on the
// same vertex, so it contributes 2 to the degree.

#include "decyc/error.hpp"
#include "decyc/id_set.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace decyc {

using VertexId = int;
using EdgeId = int;
using DartId = int;

struct EdgeEnds {
  VertexId u;
  VertexId v;
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

constexpr DartId dart_of(EdgeId e, int side) { return 2 * e + side; }
constexpr DartId opposite(DartId d) { return d ^ 1; }
constexpr EdgeId edge_of(DartId d) { return d >> 1; }

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int order) : incident_(static_cast<std::size_t>(order)) {}
  Multigraph(int order, std::span<const EdgeEnds> edges) : Multigraph(order) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  VertexId add_vertex() {
    incident_.emplace_back();
    return order() - 1;
  }

  EdgeId add_edge(VertexId u, VertexId v) {
    require(u >= 0 && u < order() && v >= 0 && v < order(), Errc::InvalidArgument,
            "edge endpoint out of range: " + std::to_string(u) + "," + std::to_string(v));
    EdgeId e = size();
    dart_vertex_.push_back(u);
    dart_vertex_.push_back(v);
    incident_[u].push_back(dart_of(e, 0));
    incident_[v].push_back(dart_of(e, 1));
    return e;
  }

  int order() const { return static_cast<int>(incident_.size()); }
  int size() const { return static_cast<int>(dart_vertex_.size() / 2); }

  VertexId dart_vertex(DartId d) const { return dart_vertex_[d]; }
  EdgeEnds ends(EdgeId e) const { return {dart_vertex_[2 * e], dart_vertex_[2 * e + 1]}; }
  bool is_loop(EdgeId e) const { return dart_vertex_[2 * e] == dart_vertex_[2 * e + 1]; }
  VertexId other_end(EdgeId e, VertexId v) const {
    auto [a, b] = ends(e);
    return a == v ? b : a;
  }
  /// Vertex at the far end of dart d's edge.
  VertexId across(DartId d) const { return dart_vertex_[opposite(d)]; }

  std::span<const DartId> darts(VertexId v) const { return incident_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incident_[v].size()); }

  /// Distinct edges at v in increasing id order (a loop appears once).
  std::vector<EdgeId> incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (DartId d : incident_[v]) out.push_back(edge_of(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Number of edges joining u and v (loops when u == v).
  int multiplicity(VertexId u, VertexId v) const {
    int c = 0;
    for (DartId d : incident_[u]) {
      if (across(d) == v) ++c;
    }
    return u == v ? c / 2 : c;
  }

  bool has_loops() const {
    for (EdgeId e = 0; e < size(); ++e)
      if (is_loop(e)) return true;
    return false;
  }

  bool is_simple() const {
    std::vector<std::pair<int, int>> keys;
    for (EdgeId e = 0; e < size(); ++e) {
      auto [u, v] = ends(e);
      if (u == v) return false;
      keys.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

  std::vector<EdgeEnds> edge_list() const {
    std::vector<EdgeEnds> out;
    out.reserve(size());
    for (EdgeId e = 0; e < size(); ++e) out.push_back(ends(e));
    return out;
  }

  EdgeSet empty_edge_set() const { return EdgeSet(static_cast<std::size_t>(size())); }
  VertexSet empty_vertex_set() const { return VertexSet(static_cast<std::size_t>(order())); }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.incident_ == b.incident_ && a.dart_vertex_ == b.dart_vertex_;
  }

 private:
  std::vector<std::vector<DartId>> incident_;
  std::vector<VertexId> dart_vertex_;
};

/// A multigraph in which every vertex has degree exactly 3. Immutable once
/// constructed; converts implicitly to the underlying Multigraph.
class CubicGraph {
 public:
  CubicGraph() = default;
  explicit CubicGraph(Multigraph g) : g_(std::move(g)) {
    require(g_.order() % 2 == 0, Errc::OddOrder, "cubic graph needs an even order, got " + std::to_string(g_.order()));
    for (VertexId v = 0; v < g_.order(); ++v) {
      require(g_.degree(v) == 3, Errc::DegreeViolation,
              "vertex " + std::to_string(v) + " has degree " + std::to_string(g_.degree(v)));
    }
  }

  const Multigraph& graph() const { return g_; }
  operator const Multigraph&() const { return g_; }  // NOLINT(google-explicit-constructor)

  int order() const { return g_.order(); }
  int size() const { return g_.size(); }
  EdgeEnds ends(EdgeId e) const { return g_.ends(e); }
  bool is_loop(EdgeId e) const { return g_.is_loop(e); }
  std::span<const DartId> darts(VertexId v) const { return g_.darts(v); }
  VertexId other_end(EdgeId e, VertexId v) const { return g_.other_end(e, v); }
  VertexId across(DartId d) const { return g_.across(d); }
  std::vector<EdgeEnds> edge_list() const { return g_.edge_list(); }

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) { return a.g_ == b.g_; }

 private:
  Multigraph g_;
};

/// Validates and builds a cubic multigraph. Dart numbering follows the input
/// edge order.
inline CubicGraph build_graph(int n, std::span<const EdgeEnds> edges) {
  require(n > 0, Errc::InvalidArgument, "empty graph");
  require(n % 2 == 0, Errc::OddOrder, "cubic graph needs an even order, got " + std::to_string(n));
  require(2 * static_cast<long>(edges.size()) == 3L * n, Errc::DegreeViolation,
          "expected " + std::to_string(3 * n / 2) + " edges, got " + std::to_string(edges.size()));
  return CubicGraph(Multigraph(n, edges));
}

inline CubicGraph build_graph(int n, std::initializer_list<EdgeEnds> edges) {
  std::vector<EdgeEnds> v(edges);
  return build_graph(n, std::span<const EdgeEnds>(v));
}

// ---------------------------------------------------------------------------
// Union-find with undo, used by tree enumeration and backtracking searches.

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Returns false (and records nothing) when x and y are already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    history_.push_back({y, rank_[x] == rank_[y]});
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t cp) {
    while (history_.size() > cp) {
      auto [child, bumped] = history_.back();
      history_.pop_back();
      int root = parent_[child];
      parent_[child] = child;
      if (bumped) --rank_[root];
    }
  }

 private:
  struct Step {
    int child;
    bool bumped;
  };
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<Step> history_;
};

// ---------------------------------------------------------------------------
// Components and Betti numbers.

struct Components {
  std::vector<int> label;  // -1 for vertices outside the considered set
  int count = 0;
  std::vector<int> vertices_in;  // per component
  std::vector<int> edges_in;     // per component

  int betti(int c) const { return edges_in[c] - vertices_in[c] + 1; }
};

/// Components of the subgraph with vertex set `keep` and all edges of `g`
/// that avoid `removed` and have both ends in `keep`.
inline Components components(const Multigraph& g, const VertexSet* keep = nullptr, const EdgeSet* removed = nullptr) {
  Components out;
  out.label.assign(g.order(), -1);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (out.label[s] != -1 || (keep && !keep->contains(s))) continue;
    int c = out.count++;
    out.vertices_in.push_back(0);
    out.edges_in.push_back(0);
    std::vector<VertexId> stack{s};
    out.label[s] = c;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++out.vertices_in[c];
      for (DartId d : g.darts(v)) {
        EdgeId e = edge_of(d);
        if (removed && removed->contains(e)) continue;
        VertexId w = g.across(d);
        if (keep && !keep->contains(w)) continue;
        if (out.label[w] == -1) {
          out.label[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (removed && removed->contains(e)) continue;
    auto [u, v] = g.ends(e);
    if (out.label[u] >= 0 && out.label[v] >= 0) ++out.edges_in[out.label[u]];
  }
  return out;
}

inline bool is_connected(const Multigraph& g) { return g.order() == 0 || components(g).count == 1; }

struct BettiNumber {
  int value = 0;
  bool cyclically_odd() const { return value % 2 != 0; }
  bool cyclically_even() const { return value % 2 == 0; }
};

inline BettiNumber betti(const Multigraph& g) {
  require(is_connected(g), Errc::Disconnected, "Betti number requested for a disconnected graph");
  return {g.size() - g.order() + 1};
}

/// Edges with exactly one end in `side`; loops never qualify.
inline EdgeSet delta_cut(const Multigraph& g, const VertexSet& side) {
  require(!side.empty() && side.size() < static_cast<std::size_t>(g.order()), Errc::EmptySide,
          "cut side must be a nonempty proper subset");
  EdgeSet cut = g.empty_edge_set();
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto [u, v] = g.ends(e);
    if (side.contains(u) != side.contains(v)) cut.insert(e);
  }
  return cut;
}

struct Subgraph {
  Multigraph graph;
  std::vector<VertexId> vertex_origin;  // subgraph vertex -> host vertex
  std::vector<EdgeId> edge_origin;      // subgraph edge -> host edge
  int component_count = 0;
  bool acyclic = true;

  bool is_tree() const { return acyclic && component_count == 1; }
  bool is_forest() const { return acyclic; }
};

/// Subgraph induced by `keep`; vertices are renumbered in increasing host order.
inline Subgraph induced_subgraph(const Multigraph& g, const VertexSet& keep) {
  Subgraph out;
  std::vector<int> index(g.order(), -1);
  for (VertexId v : keep) {
    index[v] = static_cast<int>(out.vertex_origin.size());
    out.vertex_origin.push_back(v);
  }
  out.graph = Multigraph(static_cast<int>(out.vertex_origin.size()));
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto [u, v] = g.ends(e);
    if (index[u] >= 0 && index[v] >= 0) {
      out.graph.add_edge(index[u], index[v]);
      out.edge_origin.push_back(e);
    }
  }
  auto comp = components(out.graph);
  out.component_count = comp.count;
  out.acyclic = out.graph.size() == out.graph.order() - comp.count;
  return out;
}

/// Subgraph spanned by an edge set, on the vertices those edges touch.
inline Subgraph edge_subgraph(const Multigraph& g, const EdgeSet& edges) {
  Subgraph out;
  std::vector<int> index(g.order(), -1);
  auto touch = [&](VertexId v) {
    if (index[v] < 0) {
      index[v] = static_cast<int>(out.vertex_origin.size());
      out.vertex_origin.push_back(v);
      out.graph.add_vertex();
    }
    return index[v];
  };
  for (EdgeId e : edges) {
    auto [u, v] = g.ends(e);
    int a = touch(u);
    int b = touch(v);
    out.graph.add_edge(a, b);
    out.edge_origin.push_back(e);
  }
  auto comp = components(out.graph);
  out.component_count = comp.count;
  out.acyclic = out.graph.size() == out.graph.order() - comp.count;
  return out;
}

struct Subdivision {
  Multigraph graph;
  VertexId vertex;  // the new 2-valent vertex
  EdgeId new_edge;  // second half of the subdivided edge
};

/// Edge e = uv becomes u-w (keeping id e) and w-v (appended).
inline Subdivision subdivide_edge(const Multigraph& g, EdgeId e) {
  require(e >= 0 && e < g.size(), Errc::InvalidArgument, "no edge " + std::to_string(e));
  auto edges = g.edge_list();
  VertexId w = g.order();
  VertexId v = edges[e].v;
  edges[e].v = w;
  edges.push_back({w, v});
  return {Multigraph(g.order() + 1, edges), w, g.size()};
}

/// Removes the 2-valent vertex v and merges its two edges into one. The merged
/// edge keeps the smaller id; vertex and edge ids above the removed ones shift
/// down by one. Inverse of subdivide_edge.
inline Multigraph suppress_vertex(const Multigraph& g, VertexId v) {
  require(v >= 0 && v < g.order(), Errc::InvalidArgument, "no vertex " + std::to_string(v));
  require(g.degree(v) == 2, Errc::NotDegreeTwo, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  DartId d1 = g.darts(v)[0];
  DartId d2 = g.darts(v)[1];
  require(edge_of(d1) != edge_of(d2), Errc::NotDegreeTwo, "vertex " + std::to_string(v) + " carries only a loop");
  EdgeId keep = std::min(edge_of(d1), edge_of(d2));
  EdgeId drop = std::max(edge_of(d1), edge_of(d2));
  VertexId a = g.across(d1);
  VertexId b = g.across(d2);
  auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
  std::vector<EdgeEnds> edges;
  edges.reserve(g.size() - 1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (e == drop) continue;
    if (e == keep) {
      edges.push_back({shift(a), shift(b)});
    } else {
      auto [x, y] = g.ends(e);
      edges.push_back({shift(x), shift(y)});
    }
  }
  return Multigraph(g.order() - 1, edges);
}

/// Applies a vertex permutation: new id of vertex v is perm[v]. Edge ids are
/// preserved.
inline Multigraph relabel(const Multigraph& g, std::span<const VertexId> perm) {
  require(static_cast<int>(perm.size()) == g.order(), Errc::InvalidArgument, "permutation size mismatch");
  std::vector<EdgeEnds> edges;
  for (auto [u, v] : g.edge_list()) edges.push_back({perm[u], perm[v]});
  return Multigraph(g.order(), edges);
}

/// Sorted multiset of normalized endpoint pairs; equal for graphs that differ
/// only in edge order and endpoint orientation.
inline std::vector<std::pair<int, int>> edge_multiset(const Multigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edge_list()) out.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

/// Removes the listed vertices together with every edge touching them.
inline Subgraph delete_vertices(const Multigraph& g, const VertexSet& gone) {
  return induced_subgraph(g, gone.complement());
}

}  // namespace decyc
