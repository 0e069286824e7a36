#pragma once

// Spanning trees judged by their cotrees: cotree components, odd counts,
// heavy/light components, Kotzig pairings and the acyclic-cotree swap.

#include "decyc/graph.hpp"
#include "decyc/spanning_trees.hpp"

#include <cmath>
#include <deque>
#include <optional>
#include <random>

namespace decyc {

struct CotreeComponent {
  EdgeSet edges;
  int size = 0;
  bool is_cycle = false;
  bool heavy = false;

  bool odd() const { return size % 2 != 0; }
};

struct XuongCertificate {
  EdgeSet tree;
  std::vector<CotreeComponent> components;
  int odd_count = 0;
  int betti = 0;

  EdgeSet cotree() const { return tree.complement(); }

  bool acyclic_cotree() const {
    for (const auto& c : components)
      if (c.is_cycle) return false;
    return true;
  }

  const CotreeComponent* odd_component() const {
    for (const auto& c : components)
      if (c.odd()) return &c;
    return nullptr;
  }

  bool has_heavy() const {
    for (const auto& c : components)
      if (c.heavy) return true;
    return false;
  }

  /// Exactly one odd component, and it is heavy.
  bool heavy_two_face() const { return odd_count == 1 && odd_component()->heavy; }
};

/// Builds the certificate of a spanning tree; BadCertificate when `tree` is
/// not a spanning tree of g.
inline XuongCertificate analyze_tree(const Multigraph& g, const EdgeSet& tree) {
  require(tree.universe() == static_cast<std::size_t>(g.size()), Errc::BadCertificate, "tree edge set has the wrong universe");
  require(static_cast<int>(tree.size()) == g.order() - 1, Errc::BadCertificate, "tree has the wrong number of edges");
  UnionFind dsu(g.order());
  for (EdgeId e : tree) {
    auto [u, v] = g.ends(e);
    require(dsu.unite(u, v), Errc::BadCertificate, "tree edges contain a cycle");
  }
  XuongCertificate cert;
  cert.tree = tree;
  cert.betti = g.size() - g.order() + 1;
  EdgeSet co = tree.complement();
  auto sub = edge_subgraph(g, co);
  auto comp = components(sub.graph);
  cert.components.resize(comp.count);
  for (auto& c : cert.components) c.edges = g.empty_edge_set();
  for (EdgeId e = 0; e < sub.graph.size(); ++e) {
    int c = comp.label[sub.graph.ends(e).u];
    cert.components[c].edges.insert(sub.edge_origin[e]);
  }
  for (int c = 0; c < comp.count; ++c) {
    auto& cc = cert.components[c];
    cc.size = comp.edges_in[c];
    cc.is_cycle = comp.edges_in[c] >= comp.vertices_in[c];
    cc.heavy = cc.size >= 3 && cc.size % 2 == cert.betti % 2;
    if (cc.odd()) ++cert.odd_count;
  }
  return cert;
}

struct DeficiencyResult {
  int xi = 0;
  int max_genus = 0;
  XuongCertificate best;
  bool heavy_two_face_exists = false;  // some tree with one odd component that is heavy
  std::optional<XuongCertificate> heavy;
  std::int64_t trees_examined = 0;
};

/// Exact deficiency of any connected multigraph by full tree enumeration.
inline DeficiencyResult deficiency_unbounded(const Multigraph& g, bool look_for_heavy = false) {
  DeficiencyResult r;
  int beta = betti(g).value;
  r.xi = beta + 1;
  for_each_spanning_tree_unbounded(g, [&](const EdgeSet& t) {
    ++r.trees_examined;
    auto cert = analyze_tree(g, t);
    if (cert.odd_count < r.xi) {
      r.xi = cert.odd_count;
      r.best = cert;
    }
    if (look_for_heavy && !r.heavy && cert.heavy_two_face()) r.heavy = cert;
    bool done = r.xi == beta % 2;
    return !(done && (!look_for_heavy || r.heavy || r.xi == 0));
  });
  r.max_genus = (beta - r.xi) / 2;
  r.heavy_two_face_exists = r.heavy.has_value();
  return r;
}

inline DeficiencyResult deficiency_exact(const CubicGraph& g) {
  require(g.order() <= kSpanningTreeCap, Errc::TooLarge,
          "exact deficiency is capped at n=" + std::to_string(kSpanningTreeCap));
  return deficiency_unbounded(g);
}

// ---------------------------------------------------------------------------
// Kotzig pairing.

struct AdjacentPair {
  EdgeId first;
  EdgeId second;
  VertexId shared;
};

struct KotzigPairing {
  std::vector<AdjacentPair> pairs;
  std::optional<EdgeId> leftover;
};

namespace detail {

// Edge-connectivity of the edge set (isolated vertices ignored).
inline bool edges_connected(const Multigraph& h, const EdgeSet& edges) {
  if (edges.empty()) return true;
  auto sub = edge_subgraph(h, edges);
  return sub.component_count == 1;
}

}  // namespace detail

/// Partitions the edges of a connected graph into pairs of adjacent edges,
/// plus one leftover edge when the edge count is odd. The leftover is
/// `preferred` if given, else the lowest edge whose removal keeps the rest
/// connected. Odd in-degrees are repaired by reversing shortest undirected
/// paths between odd vertices.
inline KotzigPairing kotzig_pairing(const Multigraph& h, std::optional<EdgeId> preferred = std::nullopt) {
  EdgeSet all = EdgeSet::full(static_cast<std::size_t>(h.size()));
  require(detail::edges_connected(h, all), Errc::Disconnected, "Kotzig pairing needs a connected edge set");
  KotzigPairing out;
  EdgeSet use = all;
  if (h.size() % 2 != 0) {
    if (preferred) {
      out.leftover = *preferred;
    } else {
      for (EdgeId e = 0; e < h.size(); ++e) {
        EdgeSet rest = all;
        rest.erase(e);
        if (detail::edges_connected(h, rest)) {
          out.leftover = e;
          break;
        }
      }
    }
    require(out.leftover.has_value(), Errc::InternalSearchFailure, "no removable leftover edge");
    use.erase(*out.leftover);
    require(detail::edges_connected(h, use), Errc::PreconditionFailed, "leftover edge disconnects the remaining edges");
  }

  // head[e] is the vertex edge e points into.
  std::vector<VertexId> head(h.size());
  std::vector<int> indeg(h.order(), 0);
  for (EdgeId e : use) {
    head[e] = h.ends(e).v;
    ++indeg[head[e]];
  }
  auto reverse = [&](EdgeId e) {
    auto [u, v] = h.ends(e);
    VertexId tail = head[e] == v ? u : v;
    --indeg[head[e]];
    head[e] = tail;
    ++indeg[tail];
  };
  for (;;) {
    VertexId a = -1;
    for (VertexId v = 0; v < h.order(); ++v) {
      if (indeg[v] % 2 != 0) {
        a = v;
        break;
      }
    }
    if (a < 0) break;
    // BFS over edges in `use` to the nearest other odd vertex.
    std::vector<DartId> via(h.order(), -1);
    std::vector<bool> seen(h.order(), false);
    std::deque<VertexId> queue{a};
    seen[a] = true;
    VertexId b = -1;
    while (!queue.empty() && b < 0) {
      VertexId x = queue.front();
      queue.pop_front();
      for (DartId d : h.darts(x)) {
        if (!use.contains(edge_of(d))) continue;
        VertexId y = h.across(d);
        if (seen[y]) continue;
        seen[y] = true;
        via[y] = d;
        if (indeg[y] % 2 != 0) {
          b = y;
          break;
        }
        queue.push_back(y);
      }
    }
    require(b >= 0, Errc::InternalSearchFailure, "odd in-degree vertex without partner");
    for (VertexId y = b; y != a; y = h.dart_vertex(via[y])) reverse(edge_of(via[y]));
  }

  std::vector<std::vector<EdgeId>> incoming(h.order());
  for (EdgeId e : use) incoming[head[e]].push_back(e);
  for (VertexId v = 0; v < h.order(); ++v) {
    auto& in = incoming[v];
    for (std::size_t i = 0; i + 1 < in.size(); i += 2) out.pairs.push_back({in[i], in[i + 1], v});
  }
  return out;
}

/// Checks the pairing property: pairs plus leftover partition the edges and
/// every pair shares its recorded vertex.
inline bool is_valid_pairing(const Multigraph& h, const KotzigPairing& p) {
  EdgeSet covered = h.empty_edge_set();
  auto touches = [&](EdgeId e, VertexId v) { return h.ends(e).u == v || h.ends(e).v == v; };
  for (const auto& [e, f, v] : p.pairs) {
    if (e == f || covered.contains(e) || covered.contains(f)) return false;
    if (!touches(e, v) || !touches(f, v)) return false;
    covered.insert(e);
    covered.insert(f);
  }
  if (p.leftover) {
    if (covered.contains(*p.leftover)) return false;
    covered.insert(*p.leftover);
  }
  if (p.leftover.has_value() != (h.size() % 2 != 0)) return false;
  return covered.size() == static_cast<std::size_t>(h.size());
}

// ---------------------------------------------------------------------------
// Acyclic cotree normalisation.

/// Repeats T' = T + u1u2 - u1v1 on cyclic cotree components until the cotree
/// is acyclic. u1 is the lowest vertex of the cycle, u1u2 its lowest cotree
/// edge and u1v1 its tree edge.
inline XuongCertificate normalize_acyclic_cotree(const CubicGraph& g, const XuongCertificate& cert) {
  require(!g.graph().has_loops(), Errc::HasLoop, "acyclic cotree normalisation needs a loopless graph");
  require(g.order() >= 4, Errc::TooSmall, "acyclic cotree normalisation needs at least 4 vertices");
  require(cert.odd_count <= 1, Errc::BadCertificate, "certificate is not a Xuong tree of an upper-embeddable graph");
  XuongCertificate cur = analyze_tree(g, cert.tree);
  bool had_heavy = cur.has_heavy();
  int odd = cur.odd_count;
  for (int guard = 0; guard <= g.size(); ++guard) {
    const CotreeComponent* cyc = nullptr;
    for (const auto& c : cur.components)
      if (c.is_cycle) {
        cyc = &c;
        break;
      }
    if (!cyc) {
      require(!had_heavy || cur.has_heavy(), Errc::InternalSearchFailure, "cotree swap lost the heavy component");
      return cur;
    }
    VertexId u1 = g.order();
    for (EdgeId e : cyc->edges) u1 = std::min({u1, g.ends(e).u, g.ends(e).v});
    EdgeId add = -1, drop = -1;
    for (DartId d : g.darts(u1)) {
      EdgeId e = edge_of(d);
      if (cur.tree.contains(e)) drop = e;
      else if (add < 0 || e < add) add = e;
    }
    EdgeSet t = cur.tree;
    t.insert(add);
    t.erase(drop);
    cur = analyze_tree(g, t);
    require(cur.odd_count == odd, Errc::InternalSearchFailure, "cotree swap changed the odd count");
  }
  fail(Errc::InternalSearchFailure, "acyclic cotree normalisation did not terminate");
}

// ---------------------------------------------------------------------------
// Budgeted local search for Xuong trees beyond the enumeration cap.

namespace detail {

inline EdgeSet bfs_tree(const Multigraph& g, VertexId root = 0) {
  EdgeSet t = g.empty_edge_set();
  std::vector<bool> seen(g.order(), false);
  std::deque<VertexId> q{root};
  seen[root] = true;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (DartId d : g.darts(x)) {
      VertexId y = g.across(d);
      if (!seen[y]) {
        seen[y] = true;
        t.insert(edge_of(d));
        q.push_back(y);
      }
    }
  }
  return t;
}

// Edges of the tree path between u and v.
inline std::vector<EdgeId> tree_path(const Multigraph& g, const EdgeSet& tree, VertexId u, VertexId v) {
  std::vector<DartId> via(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  std::deque<VertexId> q{u};
  seen[u] = true;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    if (x == v) break;
    for (DartId d : g.darts(x)) {
      if (!tree.contains(edge_of(d))) continue;
      VertexId y = g.across(d);
      if (!seen[y]) {
        seen[y] = true;
        via[y] = d;
        q.push_back(y);
      }
    }
  }
  std::vector<EdgeId> path;
  for (VertexId y = v; y != u; y = g.dart_vertex(via[y])) path.push_back(edge_of(via[y]));
  return path;
}

}  // namespace detail

struct SearchOptions {
  std::uint64_t seed = 1;
  std::int64_t budget = 200000;  // local-search steps
};

namespace detail {

// Simulated-annealing edge swaps T -> T + e - f minimising `score`; stops at
// the first tree accepted by `good`.
template <class Good, class Score>
std::optional<XuongCertificate> anneal_trees(const Multigraph& g, const SearchOptions& opt, Good good, Score score) {
  require(is_connected(g), Errc::Disconnected, "Xuong tree search needs a connected graph");
  if (g.order() == 0) return std::nullopt;
  std::mt19937_64 rng(opt.seed);
  XuongCertificate cur = analyze_tree(g, bfs_tree(g, static_cast<VertexId>(rng() % g.order())));
  if (good(cur)) return cur;
  int cur_score = score(cur);
  std::vector<EdgeId> cotree;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::int64_t step = 0; step < opt.budget; ++step) {
    cotree = cur.cotree().to_vector();
    if (cotree.empty()) return std::nullopt;
    EdgeId add = cotree[rng() % cotree.size()];
    auto [u, v] = g.ends(add);
    if (u == v) continue;
    auto path = tree_path(g, cur.tree, u, v);
    EdgeId drop = path[rng() % path.size()];
    EdgeSet t = cur.tree;
    t.insert(add);
    t.erase(drop);
    auto next = analyze_tree(g, t);
    int s = score(next);
    double temp = 1.0 - static_cast<double>(step) / static_cast<double>(opt.budget);
    if (s <= cur_score || unit(rng) < std::exp(-(s - cur_score) / std::max(0.05, temp))) {
      cur = std::move(next);
      cur_score = s;
      if (good(cur)) return cur;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Local search scored by odd count (and, with want_heavy, by whether the
/// single odd component is heavy). Returns a certificate meeting the target or
/// nothing; nothing is not a proof.
inline std::optional<XuongCertificate> find_xuong_tree(const Multigraph& g, int target_odd, SearchOptions opt = {},
                                                       bool want_heavy = false) {
  auto good = [&](const XuongCertificate& c) {
    if (c.odd_count > target_odd) return false;
    return !want_heavy || c.heavy_two_face();
  };
  auto score = [&](const XuongCertificate& c) { return 2 * c.odd_count + (want_heavy && !c.heavy_two_face() ? 1 : 0); };
  return detail::anneal_trees(g, opt, good, score);
}

/// Looks for a Xuong tree whose only odd cotree component is the single edge e.
inline std::optional<XuongCertificate> find_xuong_tree_with_odd_edge(const Multigraph& g, EdgeId e,
                                                                     SearchOptions opt = {}) {
  auto [u, v] = g.ends(e);
  auto good = [&](const XuongCertificate& c) {
    return c.odd_count == 1 && c.odd_component()->size == 1 && c.odd_component()->edges.contains(e);
  };
  auto score = [&](const XuongCertificate& c) {
    int s = 4 * c.odd_count;
    if (c.tree.contains(e)) s += 2;
    for (VertexId x : {u, v})
      for (DartId d : g.darts(x))
        if (edge_of(d) != e && !c.tree.contains(edge_of(d))) ++s;
    return s;
  };
  return detail::anneal_trees(g, opt, good, score);
}

}  // namespace decyc
