#pragma once

// Named graphs and the constructions built on them: vertex inflation, diamond
// strings, rings of diamonds, the claw-free family built over K4 and L4, loop
// gadgets and configuration-model random cubic graphs.

#include "decyc/genus.hpp"
#include "decyc/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <variant>

namespace decyc {

/// Vertex numbering:
///   K4       0..3, edges 01 02 03 12 13 23
///   Q3       bit strings 0..7, edges v < v^bit in (v, bit) order
///   K33      {0,1,2} | {3,4,5}
///   Petersen outer cycle 0..4, spokes i-(i+5), inner pentagram 5..9
///   prism    triangles 012 and 345, rungs 03 14 25
///   L4       4-cycle 0123 with 01 and 23 doubled
///   D2       three parallel edges 01
///   digon8   D2 with a digon inserted into each edge
inline CubicGraph named(std::string_view name) {
  std::vector<EdgeEnds> e;
  int n = 0;
  if (name == "K4") {
    n = 4;
    e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  } else if (name == "Q3") {
    n = 8;
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b)
        if (v < (v ^ (1 << b))) e.push_back({v, v ^ (1 << b)});
  } else if (name == "K33") {
    n = 6;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) e.push_back({i, j});
  } else if (name == "Petersen") {
    n = 10;
    for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
  } else if (name == "prism") {
    n = 6;
    e = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  } else if (name == "L4") {
    n = 4;
    e = {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}};
  } else if (name == "D2") {
    n = 2;
    e = {{0, 1}, {0, 1}, {0, 1}};
  } else if (name == "digon8") {
    n = 8;
    for (int i = 0; i < 3; ++i) {
      int a = 2 + 2 * i, b = 3 + 2 * i;
      e.push_back({0, a});
      e.push_back({a, b});
      e.push_back({a, b});
      e.push_back({b, 1});
    }
  } else {
    fail(Errc::UnknownName, "unknown graph name '" + std::string(name) + "'");
  }
  return build_graph(n, e);
}

inline const std::vector<std::string>& named_graphs() {
  static const std::vector<std::string> names{"K4", "Q3", "K33", "Petersen", "prism", "L4", "D2", "digon8"};
  return names;
}

/// Replaces v by a triangle. v keeps its id for the triangle vertex holding
/// its first dart; the other two darts move to new vertices n and n+1.
inline CubicGraph inflate_vertex(const CubicGraph& g, VertexId v) {
  require(v >= 0 && v < g.order(), Errc::InvalidArgument, "no vertex " + std::to_string(v));
  for (DartId d : g.darts(v))
    require(!g.is_loop(edge_of(d)), Errc::LoopVertex, "cannot inflate loop vertex " + std::to_string(v));
  auto edges = g.edge_list();
  int n = g.order();
  auto darts = g.darts(v);
  for (int i = 1; i < 3; ++i) {
    DartId d = darts[i];
    auto& ends = edges[edge_of(d)];
    ((d & 1) ? ends.v : ends.u) = n + i - 1;
  }
  edges.push_back({v, n});
  edges.push_back({n, n + 1});
  edges.push_back({n + 1, v});
  return build_graph(n + 2, edges);
}

/// Inserts a diamond into e = uv: e becomes uu', then u' s, u' t, s t, s v',
/// t v', v' v are appended, with u' = n, s = n+1, t = n+2, v' = n+3.
inline CubicGraph insert_diamond(const CubicGraph& g, EdgeId e) {
  require(e >= 0 && e < g.size(), Errc::InvalidArgument, "no edge " + std::to_string(e));
  auto edges = g.edge_list();
  int n = g.order();
  VertexId v = edges[e].v;
  int u1 = n, s = n + 1, t = n + 2, v1 = n + 3;
  edges[e].v = u1;
  edges.push_back({u1, s});
  edges.push_back({u1, t});
  edges.push_back({s, t});
  edges.push_back({s, v1});
  edges.push_back({t, v1});
  edges.push_back({v1, v});
  return build_graph(n + 4, edges);
}

/// String of k diamonds on e; each further diamond goes into the edge v'v
/// left by the previous one.
inline CubicGraph insert_diamond_string(const CubicGraph& g, EdgeId e, int k) {
  require(k >= 0, Errc::InvalidArgument, "string length must be nonnegative");
  CubicGraph cur = g;
  EdgeId target = e;
  for (int i = 0; i < k; ++i) {
    cur = insert_diamond(cur, target);
    target = cur.size() - 1;
  }
  return cur;
}

/// Even cycle of length 2k with every second edge replaced by a diamond.
inline CubicGraph ring_of_diamonds(int k) {
  require(k >= 2, Errc::TooSmall, "a ring of diamonds needs k >= 2");
  std::vector<EdgeEnds> edges;
  for (int i = 0; i < k; ++i) {
    int a = 4 * i, s = a + 1, t = a + 2, b = a + 3;
    edges.push_back({a, s});
    edges.push_back({a, t});
    edges.push_back({s, t});
    edges.push_back({s, b});
    edges.push_back({t, b});
  }
  for (int i = 0; i < k; ++i) edges.push_back({4 * i + 3, 4 * ((i + 1) % k)});
  return build_graph(4 * k, edges);
}

/// Inflate every vertex of K4 or L4, then replace each of the six original
/// edges (in base edge order) with a string of lengths[i] >= 1 diamonds.
inline CubicGraph family_F(std::string_view base, const std::array<int, 6>& lengths) {
  require(base == "K4" || base == "L4", Errc::InvalidArgument, "family base must be K4 or L4");
  for (int k : lengths) require(k >= 1, Errc::ZeroLength, "diamond strings in the family have positive length");
  CubicGraph g = named(base);
  for (VertexId v = 0; v < 4; ++v) g = inflate_vertex(g, v);
  for (EdgeId e = 0; e < 6; ++e) g = insert_diamond_string(g, e, lengths[e]);
  return g;
}

inline CubicGraph F1() { return family_F("K4", {1, 1, 1, 1, 1, 1}); }
inline CubicGraph F2() { return family_F("L4", {1, 1, 1, 1, 1, 1}); }

/// Subdivides edge `e` of h with a vertex v, hangs a new vertex u on v by a
/// bridge and puts a loop at u. u = n+1, v = n.
inline CubicGraph attach_loop_pendant(const CubicGraph& h, EdgeId e = 0) {
  auto sub = subdivide_edge(h, e);
  auto edges = sub.graph.edge_list();
  int v = sub.vertex, u = h.order() + 1;
  edges.push_back({v, u});
  edges.push_back({u, u});
  return build_graph(h.order() + 2, edges);
}

inline CubicGraph loop_tight_gadget(const CubicGraph& h, const GenusOptions& opt = {}) {
  auto cls = classify_upper_embeddable(h, opt);
  require(cls.face == FaceClass::OneFace, Errc::NotOneFace, "base graph must be one-face embeddable");
  return attach_loop_pendant(h, 0);
}

/// No vertex has three distinct, pairwise nonadjacent neighbours.
inline bool is_claw_free(const Multigraph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    std::vector<VertexId> nb;
    for (DartId d : g.darts(v)) nb.push_back(g.across(d));
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end() || nb.size() != 3) continue;
    if (std::find(nb.begin(), nb.end(), v) != nb.end()) continue;
    if (g.multiplicity(nb[0], nb[1]) == 0 && g.multiplicity(nb[0], nb[2]) == 0 && g.multiplicity(nb[1], nb[2]) == 0)
      return false;
  }
  return true;
}

inline constexpr std::int64_t kRandomAttemptCap = 1'000'000;

/// Configuration model: 3n points shuffled and paired. With require_simple,
/// pairings with loops or parallel edges are rejected and redrawn from the
/// same stream.
inline CubicGraph random_cubic(int n, std::uint64_t seed, bool require_simple = true) {
  require(n >= 4 && n % 2 == 0, Errc::InvalidArgument, "random cubic graphs need an even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  for (std::int64_t attempt = 0; attempt < kRandomAttemptCap; ++attempt) {
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<EdgeEnds> edges;
    for (int i = 0; i < 3 * n; i += 2) edges.push_back({points[i], points[i + 1]});
    Multigraph m(n, edges);
    if (require_simple && !m.is_simple()) continue;
    return CubicGraph(std::move(m));
  }
  fail(Errc::CapExceeded, "random cubic sampling exceeded the attempt cap");
}

// ---------------------------------------------------------------------------
// Recipes.

struct InflateOp {
  VertexId v;
};
struct DiamondOp {
  EdgeId e;
};
struct StringOp {
  EdgeId e;
  int k;
};
struct SubdivideLoopOp {
  EdgeId e;
};
using GeneratorOp = std::variant<InflateOp, DiamondOp, StringOp, SubdivideLoopOp>;

/// A base (named graph, or random cubic order + seed) followed by operations.
struct GeneratorRecipe {
  std::string base = "K4";
  int random_n = 0;  // when > 0 the base is random_cubic(random_n, seed)
  std::uint64_t seed = 0;
  std::vector<GeneratorOp> ops;
};

inline CubicGraph replay(const GeneratorRecipe& r) {
  CubicGraph g = r.random_n > 0 ? random_cubic(r.random_n, r.seed) : named(r.base);
  for (const auto& op : r.ops) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, InflateOp>) g = inflate_vertex(g, o.v);
          else if constexpr (std::is_same_v<T, DiamondOp>) g = insert_diamond(g, o.e);
          else if constexpr (std::is_same_v<T, StringOp>) g = insert_diamond_string(g, o.e, o.k);
          else g = attach_loop_pendant(g, o.e);
        },
        op);
  }
  return g;
}

}  // namespace decyc
