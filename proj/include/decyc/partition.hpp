#pragma once

// Decycling partitions {A, J}: classification, a backtracking search over
// decycling sets, and the conversions between Xuong certificates and stable
// partitions.

#include "decyc/graph.hpp"
#include "decyc/xuong.hpp"

#include <deque>
#include <functional>
#include <optional>
#include <string_view>

namespace decyc {

enum class PartitionType { TreeIndependent, TreeNearIndependent, TwoTreesIndependent, Other };

constexpr std::string_view to_string(PartitionType t) {
  switch (t) {
    case PartitionType::TreeIndependent: return "TreeIndependent";
    case PartitionType::TreeNearIndependent: return "TreeNearIndependent";
    case PartitionType::TwoTreesIndependent: return "TwoTreesIndependent";
    case PartitionType::Other: return "Other";
  }
  return "Other";
}

struct PartitionClass {
  bool stable = false;
  bool coherent = false;
  PartitionType type = PartitionType::Other;
  int e_J = 0;
  int components_A = 0;
};

struct DecyclingPartition {
  VertexSet A;
  VertexSet J;
  PartitionClass cls;
};

/// Smallest possible decycling-set size of a cubic graph of order n.
constexpr int decycling_lower_bound(int n) { return (n + 2 + 3) / 4; }

inline PartitionClass classify_partition(const Multigraph& g, const VertexSet& A, const VertexSet& J) {
  require(A.universe() == static_cast<std::size_t>(g.order()) && J.universe() == A.universe(), Errc::InvalidArgument,
          "partition sets have the wrong universe");
  require((A & J).empty() && (A | J).size() == static_cast<std::size_t>(g.order()), Errc::InvalidArgument,
          "A and J must partition the vertex set");
  PartitionClass c;
  int e_A = 0;
  UnionFind dsu(g.order());
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto [u, v] = g.ends(e);
    if (A.contains(u) && A.contains(v)) {
      require(dsu.unite(u, v), Errc::NotDecycling, "G[A] contains a cycle");
      ++e_A;
    } else if (J.contains(u) && J.contains(v)) {
      ++c.e_J;
    }
  }
  c.components_A = static_cast<int>(A.size()) - e_A;
  if (c.components_A == 1 && c.e_J == 0) c.type = PartitionType::TreeIndependent;
  else if (c.components_A == 1 && c.e_J == 1) c.type = PartitionType::TreeNearIndependent;
  else if (c.components_A == 2 && c.e_J == 0) c.type = PartitionType::TwoTreesIndependent;
  c.stable = c.type != PartitionType::Other;
  c.coherent = c.stable && c.components_A == 1;
  return c;
}

inline DecyclingPartition make_partition(const Multigraph& g, const VertexSet& J) {
  VertexSet A = J.complement();
  return {A, J, classify_partition(g, A, J)};
}

// ---------------------------------------------------------------------------
// Backtracking over decycling sets of a fixed size.

struct PartitionQuery {
  int j_size = 0;                      // exact |J|
  int max_e_J = 1;                     // bound on edges inside J
  std::optional<int> components_A;     // required component count of G[A]
  std::optional<int> e_J;              // required edge count inside J
  std::vector<VertexId> forced_J;      // vertices that must lie in J
  std::function<bool(const DecyclingPartition&)> accept;  // extra filter at leaves
  std::int64_t node_budget = 50'000'000;
};

struct PartitionSearchResult {
  std::optional<DecyclingPartition> found;
  bool complete = false;  // search space exhausted (meaningful when nothing found)
  std::int64_t nodes = 0;
};

namespace detail {

class PartitionSearch {
 public:
  PartitionSearch(const Multigraph& g, const PartitionQuery& q)
      : g_(g), q_(q), side_(g.order(), Side::Open), dsu_(g.order()) {
    // BFS order from the first forced vertex (or 0) keeps decided vertices
    // clustered, so cycle and e_J violations surface early.
    std::vector<bool> seen(g.order(), false);
    VertexId start = q.forced_J.empty() ? 0 : q.forced_J.front();
    for (VertexId s = start, k = 0; k < g.order(); s = k++) {
      if (seen[s]) continue;
      std::deque<VertexId> bfs{s};
      seen[s] = true;
      while (!bfs.empty()) {
        VertexId x = bfs.front();
        bfs.pop_front();
        order_.push_back(x);
        for (DartId d : g.darts(x)) {
          VertexId y = g.across(d);
          if (!seen[y]) {
            seen[y] = true;
            bfs.push_back(y);
          }
        }
      }
    }
    forced_.assign(g.order(), false);
    for (VertexId v : q.forced_J) forced_[v] = true;
  }

  PartitionSearchResult run() {
    PartitionSearchResult r;
    step(0);
    r.found = found_;
    r.complete = !budget_hit_;
    r.nodes = nodes_;
    return r;
  }

 private:
  enum class Side { Open, InA, InJ };

  // Returns false when the search must stop (found or budget).
  bool step(std::size_t idx) {
    if (++nodes_ > q_.node_budget) {
      budget_hit_ = true;
      return false;
    }
    int n = g_.order();
    if (idx == order_.size()) return leaf();
    VertexId v = order_[idx];
    int remaining = n - static_cast<int>(idx);
    // Try J first: it tends to reach leaves faster for small decycling sets.
    if (j_count_ < q_.j_size) {
      int add = 0;
      for (DartId d : g_.darts(v)) {
        VertexId w = g_.across(d);
        if (w == v) ++add;  // each loop is seen twice
        else if (side_[w] == Side::InJ) add += 2;
      }
      add /= 2;
      if (e_J_ + add <= q_.max_e_J) {
        side_[v] = Side::InJ;
        ++j_count_;
        e_J_ += add;
        bool go = step(idx + 1);
        e_J_ -= add;
        --j_count_;
        side_[v] = Side::Open;
        if (!go) return false;
      }
    }
    if (!forced_[v] && j_count_ + remaining - 1 >= q_.j_size) {
      auto cp = dsu_.checkpoint();
      bool ok = true;
      int added = 0;
      for (DartId d : g_.darts(v)) {
        VertexId w = g_.across(d);
        if (w == v) {
          ok = false;
          break;
        }
        if (side_[w] == Side::InA) {
          if (!dsu_.unite(v, w)) {
            ok = false;
            break;
          }
          ++added;
        }
      }
      if (ok) {
        side_[v] = Side::InA;
        e_A_ += added;
        ++a_count_;
        bool go = step(idx + 1);
        --a_count_;
        e_A_ -= added;
        side_[v] = Side::Open;
        dsu_.rollback(cp);
        if (!go) return false;
      } else {
        dsu_.rollback(cp);
      }
    }
    return true;
  }

  bool leaf() {
    if (j_count_ != q_.j_size) return true;
    if (q_.e_J && e_J_ != *q_.e_J) return true;
    int comps = a_count_ - e_A_;
    if (q_.components_A && comps != *q_.components_A) return true;
    VertexSet J = g_.empty_vertex_set();
    for (VertexId v = 0; v < g_.order(); ++v)
      if (side_[v] == Side::InJ) J.insert(v);
    auto p = make_partition(g_, J);
    if (q_.accept && !q_.accept(p)) return true;
    found_ = std::move(p);
    return false;
  }

  const Multigraph& g_;
  const PartitionQuery& q_;
  std::vector<VertexId> order_;
  std::vector<bool> forced_;
  std::vector<Side> side_;
  UnionFind dsu_;
  int j_count_ = 0;
  int a_count_ = 0;
  int e_J_ = 0;
  int e_A_ = 0;
  std::int64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::optional<DecyclingPartition> found_;
};

}  // namespace detail

inline PartitionSearchResult search_partition(const Multigraph& g, const PartitionQuery& q) {
  for (VertexId v : q.forced_J)
    require(v >= 0 && v < g.order(), Errc::InvalidArgument, "forced vertex out of range");
  return detail::PartitionSearch(g, q).run();
}

/// Query for stable partitions: |J| at the lower bound. With that size every
/// decycling set gives a stable partition, by the edge-counting identity
/// components(A) = (4|J| - n - 2 e_J) / 2.
inline PartitionQuery stable_query(const Multigraph& g) {
  PartitionQuery q;
  q.j_size = decycling_lower_bound(g.order());
  q.max_e_J = g.order() % 4 == 0 ? 1 : 0;
  return q;
}

/// Query for coherent partitions: additionally G[A] is a tree, which at the
/// lower bound forces e_J = 1 when n = 0 (mod 4) and e_J = 0 otherwise.
inline PartitionQuery coherent_query(const Multigraph& g) {
  PartitionQuery q = stable_query(g);
  q.components_A = 1;
  q.e_J = q.max_e_J;
  return q;
}

// ---------------------------------------------------------------------------
// Xuong certificate -> stable partition.

namespace detail {

// J' = one shared vertex per Kotzig pair, over every cotree component except
// that `singleton` (if any) is left unpaired.
inline VertexSet kotzig_vertices(const Multigraph& g, const XuongCertificate& cert, std::optional<EdgeId> singleton) {
  VertexSet J = g.empty_vertex_set();
  for (const auto& comp : cert.components) {
    EdgeSet edges = comp.edges;
    if (singleton && edges.contains(*singleton)) edges.erase(*singleton);
    if (edges.empty()) continue;
    auto sub = edge_subgraph(g, edges);
    auto pairing = kotzig_pairing(sub.graph);
    require(!pairing.leftover, Errc::BadCertificate, "odd cotree component where an even one was expected");
    for (const auto& p : pairing.pairs) J.insert(sub.vertex_origin[p.shared]);
  }
  return J;
}

// The vertex w of a loop-carrying graph, its neighbour u, and the cubic graph
// obtained by deleting w and suppressing u.
struct LoopReduction {
  VertexId loop_vertex;
  VertexId neighbour;
  Multigraph reduced;
  std::vector<VertexId> origin;  // reduced vertex -> original vertex
};

inline LoopReduction reduce_loop(const Multigraph& g) {
  EdgeId loop = -1;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.is_loop(e)) {
      loop = e;
      break;
    }
  VertexId w = g.ends(loop).u;
  VertexId u = -1;
  for (DartId d : g.darts(w))
    if (!g.is_loop(edge_of(d))) u = g.across(d);
  VertexSet keep = VertexSet::full(static_cast<std::size_t>(g.order()));
  keep.erase(w);
  auto sub = induced_subgraph(g, keep);
  VertexId u_sub = -1;
  for (std::size_t i = 0; i < sub.vertex_origin.size(); ++i)
    if (sub.vertex_origin[i] == u) u_sub = static_cast<VertexId>(i);
  Multigraph reduced = suppress_vertex(sub.graph, u_sub);
  std::vector<VertexId> origin;
  for (std::size_t i = 0; i < sub.vertex_origin.size(); ++i)
    if (static_cast<VertexId>(i) != u_sub) origin.push_back(sub.vertex_origin[i]);
  return {w, u, std::move(reduced), std::move(origin)};
}

}  // namespace detail

/// Converts a Xuong certificate with at most one odd component into a stable
/// partition. Heavy odd component: drop a pendant edge g = w1w2 of the odd
/// path, pair the rest and put the non-pendant end w1 into J. Light
/// component: J' plus one end of the singleton. Putting the pendant end w2 into
/// J instead always gives two trees; `prefer` selects between the two. Loop
/// graphs: the loop vertex goes to J on top of a one-face partition of the
/// reduced graph.
inline DecyclingPartition partition_from_xuong(const CubicGraph& g, const XuongCertificate& cert_in,
                                               std::optional<PartitionType> prefer = std::nullopt) {
  auto cert = analyze_tree(g, cert_in.tree);
  require(cert.odd_count <= 1, Errc::BadCertificate, "certificate has more than one odd cotree component");
  if (cert.odd_count == 0) {
    auto p = make_partition(g, detail::kotzig_vertices(g, cert, std::nullopt));
    require(p.cls.type == PartitionType::TreeIndependent, Errc::InternalSearchFailure, "one-face construction not TreeIndependent");
    return p;
  }
  if (g.graph().has_loops()) {
    auto red = detail::reduce_loop(g);
    auto sub = search_partition(red.reduced, coherent_query(red.reduced));
    require(sub.found.has_value(), Errc::BadCertificate, "graph without the loop is not one-face embeddable");
    VertexSet J = g.graph().empty_vertex_set();
    for (VertexId v : sub.found->J) J.insert(red.origin[v]);
    J.insert(red.loop_vertex);
    auto p = make_partition(g, J);
    require(p.cls.stable, Errc::InternalSearchFailure, "loop construction not stable");
    return p;
  }
  if (!cert.acyclic_cotree()) cert = normalize_acyclic_cotree(g, cert);
  const CotreeComponent& B = *cert.odd_component();
  // Pendant edges of the path B, lowest id first.
  std::vector<int> bdeg(g.order(), 0);
  for (EdgeId e : B.edges) {
    ++bdeg[g.ends(e).u];
    ++bdeg[g.ends(e).v];
  }
  std::vector<std::pair<EdgeId, VertexId>> pendant;  // edge, end going into J (w1 first, then w2)
  for (EdgeId e : B.edges) {
    auto [a, b] = g.ends(e);
    if (bdeg[b] == 1) pendant.push_back({e, a});
    else if (bdeg[a] == 1) pendant.push_back({e, b});
  }
  if (B.size == 1) pendant.clear();
  for (EdgeId e : B.edges) {
    auto [a, b] = g.ends(e);
    if (bdeg[b] == 1) pendant.push_back({e, b});
    if (bdeg[a] == 1) pendant.push_back({e, a});
  }
  PartitionType want = prefer.value_or(B.heavy ? PartitionType::TreeNearIndependent : PartitionType::TwoTreesIndependent);
  std::optional<DecyclingPartition> fallback;
  for (auto [edge, w] : pendant) {
    VertexSet J = detail::kotzig_vertices(g, cert, edge);
    J.insert(w);
    auto p = make_partition(g, J);
    if (!p.cls.stable) continue;
    if (p.cls.type == want) return p;
    if (!fallback) fallback = p;
  }
  require(fallback.has_value(), Errc::InternalSearchFailure, "Xuong construction produced no stable partition");
  return *fallback;
}

/// Converts a stable partition into a Xuong tree: G[A] plus, for each J vertex,
/// its lowest edge into A (two edges for the bridging vertex of a two-tree
/// partition).
inline XuongCertificate xuong_from_partition(const CubicGraph& g, const DecyclingPartition& p) {
  auto cls = classify_partition(g, p.A, p.J);
  require(cls.stable, Errc::NotStable, "partition is not stable");
  const Multigraph& G = g;
  EdgeSet tree = G.empty_edge_set();
  for (EdgeId e = 0; e < G.size(); ++e)
    if (p.A.contains(G.ends(e).u) && p.A.contains(G.ends(e).v)) tree.insert(e);
  VertexId bridge_vertex = -1;
  if (cls.type == PartitionType::TwoTreesIndependent) {
    VertexSet Aset = p.A;
    auto comp = components(G, &Aset);
    for (VertexId x : p.J) {
      int seen = -1;
      for (DartId d : G.darts(x)) {
        VertexId y = G.across(d);
        if (!p.A.contains(y)) continue;
        if (seen >= 0 && comp.label[y] != seen) bridge_vertex = x;
        seen = seen < 0 ? comp.label[y] : seen;
      }
      if (bridge_vertex >= 0) break;
    }
    require(bridge_vertex >= 0, Errc::NotStable, "no J vertex joins the two trees of A");
    int first_label = -1;
    for (EdgeId e : G.incident_edges(bridge_vertex)) {
      VertexId y = G.other_end(e, bridge_vertex);
      if (!p.A.contains(y) || comp.label[y] == first_label) continue;
      tree.insert(e);
      if (first_label >= 0) break;
      first_label = comp.label[y];
    }
  }
  for (VertexId v : p.J) {
    if (v == bridge_vertex) continue;
    for (EdgeId e : G.incident_edges(v)) {
      if (p.A.contains(G.other_end(e, v))) {
        tree.insert(e);
        break;
      }
    }
  }
  auto cert = analyze_tree(g, tree);
  require(cert.odd_count == (cls.type == PartitionType::TreeIndependent ? 0 : 1), Errc::InternalSearchFailure,
          "partition construction gave an unexpected odd count");
  return cert;
}

}  // namespace decyc
