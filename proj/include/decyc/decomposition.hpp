#pragma once

// 3-sums, splitting at nontrivial 3-cuts, canonical decomposition into
// cyclically 4-edge-connected factors, edge extension/reduction, coherent
// partitions built along these operations, and odd 2-sums.

#include "decyc/canonical.hpp"
#include "decyc/connectivity.hpp"
#include "decyc/decycling.hpp"
#include "decyc/genus.hpp"
#include "decyc/generators.hpp"

#include <array>
#include <random>

namespace decyc {

using Matching3 = std::array<int, 3>;  // dangling edge i of the first graph meets edge m[i] of the second

struct ThreeSumSpec {
  VertexId root1 = -1;
  VertexId root2 = -1;
  Matching3 matching{0, 1, 2};
  EdgeSet principal_cut;
};

struct ThreeSum {
  CubicGraph graph;
  ThreeSumSpec spec;
  std::vector<VertexId> vmap1, vmap2;  // input vertex -> result vertex, -1 for the root
  std::vector<EdgeId> emap1, emap2;    // input edge -> result edge (root edges -> cut edges)
};

/// Glues g1 - v1 and g2 - v2 along their dangling edges. Result vertices: g1
/// without v1 in order, then g2 without v2. Result edges: g1 edges off v1,
/// g2 edges off v2, then the three cut edges in v1's dart order.
inline ThreeSum three_sum(const CubicGraph& g1, VertexId v1, const CubicGraph& g2, VertexId v2, Matching3 matching = {0, 1, 2}) {
  for (auto [g, v] : {std::pair{&g1, v1}, std::pair{&g2, v2}}) {
    require(v >= 0 && v < g->order(), Errc::InvalidArgument, "root vertex out of range");
    for (DartId d : g->darts(v)) require(!g->is_loop(edge_of(d)), Errc::RootHasLoop, "root vertex carries a loop");
    require(is_bridgeless(*g), Errc::NotBridgeless, "3-sum operands must be bridgeless");
  }
  {
    Matching3 sorted = matching;
    std::sort(sorted.begin(), sorted.end());
    require(sorted == Matching3{0, 1, 2}, Errc::InvalidArgument, "matching must be a permutation of 0,1,2");
  }
  ThreeSum out;
  int n1 = g1.order(), n2 = g2.order();
  out.vmap1.assign(n1, -1);
  out.vmap2.assign(n2, -1);
  int next = 0;
  for (VertexId v = 0; v < n1; ++v)
    if (v != v1) out.vmap1[v] = next++;
  for (VertexId v = 0; v < n2; ++v)
    if (v != v2) out.vmap2[v] = next++;
  std::vector<EdgeEnds> edges;
  out.emap1.assign(g1.size(), -1);
  out.emap2.assign(g2.size(), -1);
  for (EdgeId e = 0; e < g1.size(); ++e) {
    auto [a, b] = g1.ends(e);
    if (a == v1 || b == v1) continue;
    out.emap1[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({out.vmap1[a], out.vmap1[b]});
  }
  for (EdgeId e = 0; e < g2.size(); ++e) {
    auto [a, b] = g2.ends(e);
    if (a == v2 || b == v2) continue;
    out.emap2[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({out.vmap2[a], out.vmap2[b]});
  }
  auto d1 = g1.darts(v1);
  auto d2 = g2.darts(v2);
  out.spec = {v1, v2, matching, EdgeSet(static_cast<std::size_t>(edges.size() + 3))};
  for (int i = 0; i < 3; ++i) {
    DartId a = d1[i], b = d2[matching[i]];
    EdgeId cut = static_cast<EdgeId>(edges.size());
    out.emap1[edge_of(a)] = cut;
    out.emap2[edge_of(b)] = cut;
    out.spec.principal_cut.insert(cut);
    edges.push_back({out.vmap1[g1.across(a)], out.vmap2[g2.across(b)]});
  }
  out.graph = build_graph(next, edges);
  return out;
}

struct ThreeCutSplit {
  CubicGraph side1, side2;  // each side plus its root, appended as the last vertex
  VertexId root1 = -1, root2 = -1;
  std::vector<VertexId> vmap1, vmap2;  // host vertex -> side vertex, -1 if on the other side
  std::vector<EdgeId> emap1, emap2;    // host edge -> side edge (cut edges -> root edges)
  std::vector<EdgeId> cut;             // host cut edges in increasing id order
};

/// Splits g at a nontrivial 3-edge cut. Root edges are appended after the
/// side's own edges in cut order, so root dart i belongs to cut edge i and
/// three_sum(side1, root1, side2, root2) rebuilds g up to relabelling.
inline ThreeCutSplit split_at_three_cut(const CubicGraph& g, const EdgeSet& cut) {
  require(cut.size() == 3, Errc::InvalidArgument, "a 3-cut needs exactly three edges");
  auto side = detail::bond_side(g, cut);
  require(side.has_value(), Errc::InvalidArgument, "edge set is not a 3-edge cut");
  require(side->size() >= 2 && side->size() + 2 <= static_cast<std::size_t>(g.order()), Errc::TrivialCut,
          "cut has a single-vertex side");
  ThreeCutSplit out;
  out.cut = cut.to_vector();
  VertexSet sides[2] = {*side, side->complement()};
  std::vector<VertexId>* vmaps[2] = {&out.vmap1, &out.vmap2};
  std::vector<EdgeId>* emaps[2] = {&out.emap1, &out.emap2};
  for (int s = 0; s < 2; ++s) {
    auto& vm = *vmaps[s];
    auto& em = *emaps[s];
    vm.assign(g.order(), -1);
    em.assign(g.size(), -1);
    int next = 0;
    for (VertexId v : sides[s]) vm[v] = next++;
    VertexId root = next;
    std::vector<EdgeEnds> edges;
    for (EdgeId e = 0; e < g.size(); ++e) {
      auto [a, b] = g.ends(e);
      if (sides[s].contains(a) && sides[s].contains(b)) {
        em[e] = static_cast<EdgeId>(edges.size());
        edges.push_back({vm[a], vm[b]});
      }
    }
    for (EdgeId e : out.cut) {
      auto [a, b] = g.ends(e);
      em[e] = static_cast<EdgeId>(edges.size());
      edges.push_back({root, vm[sides[s].contains(a) ? a : b]});
    }
    (s == 0 ? out.side1 : out.side2) = build_graph(root + 1, edges);
    (s == 0 ? out.root1 : out.root2) = root;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical decomposition.

enum class SplitOrder { First, Last, Random };

struct DecompositionNode {
  explicit DecompositionNode(CubicGraph g) : graph(std::move(g)) {}

  CubicGraph graph;
  std::optional<EdgeSet> cut;     // set for internal nodes
  int child1 = -1, child2 = -1;   // node indices
  VertexId root1 = -1, root2 = -1;
  std::vector<VertexId> vmap1, vmap2;
  std::vector<EdgeId> emap1, emap2;
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;  // nodes[0] is the input
  std::vector<int> factor_nodes;         // leaves, in discovery order
  std::vector<CanonicalCode> codes;      // per factor

  std::vector<CubicGraph> factors() const {
    std::vector<CubicGraph> out;
    for (int i : factor_nodes) out.push_back(nodes[i].graph);
    return out;
  }

  std::vector<CanonicalCode> sorted_codes() const {
    auto c = codes;
    std::sort(c.begin(), c.end());
    return c;
  }

  int odd_factor_count() const {
    int odd = 0;
    for (int i : factor_nodes)
      if (betti(nodes[i].graph).cyclically_odd()) ++odd;
    return odd;
  }
};

struct DecompositionOptions {
  SplitOrder order = SplitOrder::First;
  std::uint64_t seed = 0;
  int iso_cap = 64;
};

inline DecompositionTree canonical_decomposition(const CubicGraph& g, const DecompositionOptions& opt = {}) {
  require(is_three_connected(g), Errc::PreconditionFailed, "canonical decomposition needs a 3-connected graph");
  DecompositionTree tree;
  std::mt19937_64 rng(opt.seed);
  tree.nodes.emplace_back(g);
  std::vector<int> work{0};
  while (!work.empty()) {
    int idx = work.back();
    work.pop_back();
    auto cuts = nontrivial_three_cuts(tree.nodes[idx].graph);
    if (cuts.empty()) {
      tree.factor_nodes.push_back(idx);
      tree.codes.push_back(canonical_code(tree.nodes[idx].graph, opt.iso_cap));
      continue;
    }
    std::size_t pick = 0;
    if (opt.order == SplitOrder::Last) pick = cuts.size() - 1;
    if (opt.order == SplitOrder::Random) pick = rng() % cuts.size();
    auto split = split_at_three_cut(tree.nodes[idx].graph, cuts[pick].cut);
    int c1 = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back(split.side1);
    tree.nodes.emplace_back(split.side2);
    auto& node = tree.nodes[idx];
    node.cut = cuts[pick].cut;
    node.child1 = c1;
    node.child2 = c1 + 1;
    node.root1 = split.root1;
    node.root2 = split.root2;
    node.vmap1 = std::move(split.vmap1);
    node.vmap2 = std::move(split.vmap2);
    node.emap1 = std::move(split.emap1);
    node.emap2 = std::move(split.emap2);
    work.push_back(c1 + 1);
    work.push_back(c1);
  }
  return tree;
}

struct Recombination {
  CubicGraph graph;
  std::vector<VertexId> vmap;  // node vertex -> recombined vertex
  std::vector<EdgeId> emap;    // node edge -> recombined edge
};

/// Rebuilds a node from its factors by 3-sums, tracking vertex and edge maps.
inline Recombination recombine(const DecompositionTree& t, int idx = 0) {
  const auto& node = t.nodes[idx];
  if (!node.cut) {
    Recombination r{node.graph, {}, {}};
    r.vmap.resize(node.graph.order());
    r.emap.resize(node.graph.size());
    std::iota(r.vmap.begin(), r.vmap.end(), 0);
    std::iota(r.emap.begin(), r.emap.end(), 0);
    return r;
  }
  auto r1 = recombine(t, node.child1);
  auto r2 = recombine(t, node.child2);
  const auto& s1 = t.nodes[node.child1].graph;
  const auto& s2 = t.nodes[node.child2].graph;
  VertexId x1 = r1.vmap[node.root1], x2 = r2.vmap[node.root2];
  // Cut index of each dart at the recombined roots.
  auto cut_index = [](const CubicGraph& side, VertexId root, const Recombination& r, VertexId rroot) {
    std::array<int, 3> idx{};
    int base = side.size() - 3;  // root edges are the last three, in cut order
    for (int i = 0; i < 3; ++i) {
      EdgeId re = edge_of(r.graph.darts(rroot)[i]);
      for (int c = 0; c < 3; ++c)
        if (r.emap[base + c] == re) idx[i] = c;
    }
    (void)root;
    return idx;
  };
  auto c1 = cut_index(s1, node.root1, r1, x1);
  auto c2 = cut_index(s2, node.root2, r2, x2);
  Matching3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (c1[i] == c2[j]) m[i] = j;
  auto sum = three_sum(r1.graph, x1, r2.graph, x2, m);
  Recombination out{sum.graph, std::vector<VertexId>(node.graph.order(), -1), std::vector<EdgeId>(node.graph.size(), -1)};
  for (VertexId v = 0; v < node.graph.order(); ++v) {
    if (node.vmap1[v] >= 0) out.vmap[v] = sum.vmap1[r1.vmap[node.vmap1[v]]];
    else out.vmap[v] = sum.vmap2[r2.vmap[node.vmap2[v]]];
  }
  for (EdgeId e = 0; e < node.graph.size(); ++e) {
    if (node.emap1[e] >= 0) out.emap[e] = sum.emap1[r1.emap[node.emap1[e]]];
    else out.emap[e] = sum.emap2[r2.emap[node.emap2[e]]];
  }
  return out;
}

/// True when the maps of a recombination are an exact isomorphism onto the
/// original graph (every edge lands on an edge with the mapped endpoints).
inline bool recombination_matches(const CubicGraph& g, const Recombination& r) {
  if (r.graph.order() != g.order() || r.graph.size() != g.size()) return false;
  std::vector<bool> hitv(g.order(), false), hite(g.size(), false);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (r.vmap[v] < 0 || hitv[r.vmap[v]]) return false;
    hitv[r.vmap[v]] = true;
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    EdgeId f = r.emap[e];
    if (f < 0 || hite[f]) return false;
    hite[f] = true;
    auto [a, b] = g.ends(e);
    auto [c, d] = r.graph.ends(f);
    VertexId ma = r.vmap[a], mb = r.vmap[b];
    if (!((ma == c && mb == d) || (ma == d && mb == c))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Edge extension and reduction.

struct EdgeExtension {
  CubicGraph graph;
  VertexId u = -1, v = -1;  // subdivision vertices of e and f
  EdgeId added = -1;        // the new edge uv
};

inline EdgeExtension edge_extension(const CubicGraph& g, EdgeId e, EdgeId f) {
  require(e >= 0 && e < g.size() && f >= 0 && f < g.size(), Errc::InvalidArgument, "edge out of range");
  auto [a, b] = g.ends(e);
  auto [c, d] = g.ends(f);
  require(e != f && a != c && a != d && b != c && b != d, Errc::AdjacentEdges, "extension needs two nonadjacent edges");
  auto s1 = subdivide_edge(g, e);
  auto s2 = subdivide_edge(s1.graph, f);
  Multigraph m = s2.graph;
  EdgeId added = m.add_edge(s1.vertex, s2.vertex);
  return {CubicGraph(std::move(m)), s1.vertex, s2.vertex, added};
}

struct EdgeReduction {
  Multigraph graph;
  std::vector<VertexId> vmap;  // old vertex -> new vertex, -1 for the two removed
};

/// Deletes e = uv and suppresses u and v.
inline EdgeReduction edge_reduction(const Multigraph& g, EdgeId e) {
  require(e >= 0 && e < g.size(), Errc::InvalidArgument, "no edge " + std::to_string(e));
  auto [u, v] = g.ends(e);
  require(u != v, Errc::PreconditionFailed, "cannot reduce a loop");
  for (VertexId x : {u, v})
    require(g.multiplicity(x, x) == 0, Errc::PreconditionFailed, "reduced edge ends must be loop-free");
  std::vector<EdgeEnds> edges;
  for (EdgeId f = 0; f < g.size(); ++f)
    if (f != e) edges.push_back(g.ends(f));
  Multigraph h(g.order(), edges);
  std::vector<VertexId> vmap(g.order());
  std::iota(vmap.begin(), vmap.end(), 0);
  for (VertexId x : {std::max(u, v), std::min(u, v)}) {
    // After removing uv, x may have become a loop carrier (u-v-u digon).
    require(h.degree(x) == 2 && h.multiplicity(x, x) == 0, Errc::PreconditionFailed, "reduction leaves a bare loop");
    h = suppress_vertex(h, x);
    for (auto& m : vmap) {
      if (m == x) m = -1;
      else if (m > x) --m;
    }
  }
  return {std::move(h), std::move(vmap)};
}

struct ReductionStep {
  EdgeId edge;
  VertexId u, v;  // endpoints of the removed edge in the graph before the step
  CubicGraph result;
  std::vector<VertexId> vmap;
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
  std::string terminal;  // "K4" or "Q3"
};

namespace detail {

inline bool is_named(const CubicGraph& g, std::string_view name) {
  auto ref = named(name);
  return g.order() == ref.order() && is_isomorphic(g, ref);
}

// First edge (by id) whose reduction is simple, cubic and cyclically
// 4-edge-connected.
inline std::optional<ReductionStep> reduction_step(const CubicGraph& g) {
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto [u, v] = g.ends(e);
    if (u == v) continue;
    try {
      auto r = edge_reduction(g, e);
      if (!r.graph.is_simple() || r.graph.order() < 4) continue;
      CubicGraph c(r.graph);
      if (!is_c4c(c)) continue;
      return ReductionStep{e, u, v, std::move(c), std::move(r.vmap)};
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline ReductionChain find_reduction_chain(const CubicGraph& g) {
  require(is_c4c(g), Errc::NotC4C, "reduction chains start from a cyclically 4-edge-connected graph");
  require(!detail::is_named(g, "K4") && !detail::is_named(g, "Q3"), Errc::PreconditionFailed, "K4 and Q3 are terminal");
  ReductionChain chain;
  CubicGraph cur = g;
  for (;;) {
    if (detail::is_named(cur, "K4")) {
      chain.terminal = "K4";
      return chain;
    }
    if (detail::is_named(cur, "Q3")) {
      chain.terminal = "Q3";
      return chain;
    }
    auto step = detail::reduction_step(cur);
    require(step.has_value(), Errc::InternalSearchFailure, "no cyclically 4-edge-connected reduction found");
    cur = step->result;
    chain.steps.push_back(std::move(*step));
  }
}

// ---------------------------------------------------------------------------
// Coherent partitions of cyclically 4-edge-connected graphs.

namespace detail {

// Q3 in bit labels: J = {000, 001, 110}; A induces the path 010-011-111-101-100.
inline VertexSet standard_q3_j(const CubicGraph& g) {
  auto ref = named("Q3");
  auto fr = canonical_form(ref);
  auto fg = canonical_form(g);
  std::vector<VertexId> at(g.order());
  for (VertexId v = 0; v < g.order(); ++v) at[fg.labeling[v]] = v;
  VertexSet J = g.graph().empty_vertex_set();
  for (VertexId x : {0, 1, 6}) J.insert(at[fr.labeling[x]]);
  return J;
}

}  // namespace detail

inline DecyclingPartition coherent_partition_c4c(const CubicGraph& g) {
  require(is_c4c(g), Errc::NotC4C, "graph is not cyclically 4-edge-connected");
  int n = g.order();
  if (n % 4 == 2) {
    auto r = search_partition(g, stable_query(g));
    require(r.found.has_value(), Errc::InternalSearchFailure, "no stable partition of a cyclically 4-edge-connected graph");
    require(r.found->cls.type == PartitionType::TreeIndependent, Errc::InternalSearchFailure, "unexpected partition type");
    return *r.found;
  }
  if (detail::is_named(g, "K4")) {
    auto ends = g.ends(0);
    VertexSet J(static_cast<std::size_t>(n), {ends.u, ends.v});
    return make_partition(g, J);
  }
  if (detail::is_named(g, "Q3")) {
    auto p = make_partition(g, detail::standard_q3_j(g));
    require(p.cls.type == PartitionType::TreeNearIndependent, Errc::InternalSearchFailure, "Q3 table is wrong");
    return p;
  }
  auto step = detail::reduction_step(g);
  require(step.has_value(), Errc::InternalSearchFailure, "no cyclically 4-edge-connected reduction found");
  // e = uv; x is a neighbour of u other than v, carried into the reduction.
  VertexId u = step->u, v = step->v, x = -1;
  for (DartId d : g.darts(u)) {
    VertexId w = g.across(d);
    if (w != v) {
      x = w;
      break;
    }
  }
  auto sub = find_partition_with_vertex(step->result, step->vmap[x]);
  VertexSet J = g.graph().empty_vertex_set();
  for (VertexId w = 0; w < n; ++w)
    if (step->vmap[w] >= 0 && sub.J.contains(step->vmap[w])) J.insert(w);
  J.insert(u);
  auto p = make_partition(g, J);
  require(p.cls.type == PartitionType::TreeNearIndependent, Errc::InternalSearchFailure,
          "extension step did not give a TreeNearIndependent partition");
  return p;
}

// ---------------------------------------------------------------------------
// Coherent partitions across 3-sums.

namespace detail {

// A 3-sum seen from the host graph: the H side and K side as separate cubic
// graphs, host <-> side vertex maps, and per cut edge the neighbours of the
// two roots.
struct SumView {
  const CubicGraph* H;
  const CubicGraph* K;
  VertexId x, y;                         // roots in H and K
  std::vector<VertexId> h_of, k_of;      // host vertex -> H / K vertex, -1 if absent
  std::array<VertexId, 3> xi{}, yi{};    // x_i in H, y_i in K, per cut edge
};

inline VertexSet compose_on_view(const Multigraph& host, const SumView& s, const DecyclingPartition& ph) {
  DecyclingPartition pk;
  if (ph.J.contains(s.x)) {
    int i3 = 0;
    for (int i = 0; i < 3; ++i)
      if (ph.J.contains(s.xi[i])) {
        i3 = i;
        break;
      }
    pk = find_partition_with_vertex(*s.K, s.yi[i3]);
  } else {
    pk = find_partition_with_vertex(*s.K, s.y);
  }
  VertexSet J = host.empty_vertex_set();
  for (VertexId v = 0; v < host.order(); ++v) {
    if (s.h_of[v] >= 0 ? ph.J.contains(s.h_of[v]) : pk.J.contains(s.k_of[v])) J.insert(v);
  }
  return J;
}

}  // namespace detail

struct ComposedPartition {
  ThreeSum sum;
  DecyclingPartition partition;
};

/// Coherent partition of h * k from a coherent partition of h, for k
/// cyclically 4-edge-connected with even Betti number.
inline ComposedPartition compose_coherent_over_three_sum(const CubicGraph& h, VertexId x, const CubicGraph& k, VertexId y,
                                                         Matching3 matching, const DecyclingPartition& ph) {
  require(is_c4c(k), Errc::PreconditionFailed, "K must be cyclically 4-edge-connected");
  require(betti(k).cyclically_even(), Errc::PreconditionFailed, "K must have an even Betti number");
  auto cls = classify_partition(h, ph.A, ph.J);
  require(cls.coherent, Errc::PreconditionFailed, "partition of H must be coherent");
  auto sum = three_sum(h, x, k, y, matching);
  detail::SumView view{&h, &k, x, y, {}, {}, {}, {}};
  view.h_of.assign(sum.graph.order(), -1);
  view.k_of.assign(sum.graph.order(), -1);
  for (VertexId v = 0; v < h.order(); ++v)
    if (sum.vmap1[v] >= 0) view.h_of[sum.vmap1[v]] = v;
  for (VertexId v = 0; v < k.order(); ++v)
    if (sum.vmap2[v] >= 0) view.k_of[sum.vmap2[v]] = v;
  for (int i = 0; i < 3; ++i) {
    view.xi[i] = h.across(h.darts(x)[i]);
    view.yi[i] = k.across(k.darts(y)[matching[i]]);
  }
  auto J = detail::compose_on_view(sum.graph, view, ph);
  auto p = make_partition(sum.graph, J);
  require(p.cls.coherent, Errc::InternalSearchFailure, "composition did not give a coherent partition");
  return {std::move(sum), std::move(p)};
}

struct CoherentOutcome {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<DecyclingPartition> partition;
  std::string route;                 // "decomposition" or "fallback-search"
  std::string reason;                // why the decomposition route does not apply
  bool counterexample = false;       // 3-connected, upper-embeddable, provably no coherent partition
  std::optional<ExhaustionProof> proof;
};

namespace detail {

inline DecyclingPartition coherent_by_decomposition(const CubicGraph& g) {
  auto cuts = nontrivial_three_cuts(g);
  if (cuts.empty()) return coherent_partition_c4c(g);
  for (const auto& c : cuts) {
    auto split = split_at_three_cut(g, c.cut);
    for (int s = 0; s < 2; ++s) {
      const CubicGraph& K = s == 0 ? split.side1 : split.side2;
      const CubicGraph& H = s == 0 ? split.side2 : split.side1;
      if (!betti(K).cyclically_even() || !nontrivial_three_cuts(K).empty()) continue;
      auto ph = coherent_by_decomposition(H);
      SumView view{&H, &K, s == 0 ? split.root2 : split.root1, s == 0 ? split.root1 : split.root2,
                   s == 0 ? split.vmap2 : split.vmap1, s == 0 ? split.vmap1 : split.vmap2, {}, {}};
      for (int i = 0; i < 3; ++i) {
        view.xi[i] = H.across(H.darts(view.x)[i]);
        view.yi[i] = K.across(K.darts(view.y)[i]);
      }
      auto p = make_partition(g, compose_on_view(g, view, ph));
      require(p.cls.coherent, Errc::InternalSearchFailure, "composition did not give a coherent partition");
      return p;
    }
  }
  fail(Errc::InternalSearchFailure, "no cyclically even leaf factor to peel off");
}

}  // namespace detail

inline CoherentOutcome coherent_partition_3connected(const CubicGraph& g, bool fallback = false,
                                                     std::int64_t budget = 50'000'000) {
  require(is_three_connected(g), Errc::PreconditionFailed, "graph is not 3-connected");
  CoherentOutcome out;
  auto tree = canonical_decomposition(g);
  if (tree.odd_factor_count() <= 1) {
    out.status = SearchStatus::Found;
    out.partition = detail::coherent_by_decomposition(g);
    out.route = "decomposition";
    return out;
  }
  out.reason = std::to_string(tree.odd_factor_count()) + " cyclically odd factors";
  if (!fallback) return out;
  out.route = "fallback-search";
  auto r = search_coherent_partition(g, budget);
  if (r.found) {
    out.status = SearchStatus::Found;
    out.partition = r.found;
    return out;
  }
  if (!r.complete) return out;
  out.status = SearchStatus::NoneExists;
  out.proof = ExhaustionProof{"partition-backtracking", r.nodes, true};
  auto stable = search_partition(g, stable_query(g));
  out.counterexample = stable.found.has_value();
  return out;
}

// ---------------------------------------------------------------------------
// Odd 2-sums.

struct OddTwoSum {
  CubicGraph graph;
  EdgeSet principal_cut;
};

/// Removes e1 = a1b1 from g1 and e2 = a2b2 from g2 and joins a1-a2, b1-b2
/// (or a1-b2, b1-a2 when `crossed`). Vertices of g2 follow those of g1. No
/// oddness checks; see odd_two_sum.
inline OddTwoSum two_sum(const CubicGraph& g1, EdgeId e1, const CubicGraph& g2, EdgeId e2, bool crossed = false) {
  require(e1 >= 0 && e1 < g1.size() && e2 >= 0 && e2 < g2.size(), Errc::InvalidArgument, "edge out of range");
  auto [a1, b1] = g1.ends(e1);
  auto [a2, b2] = g2.ends(e2);
  require(a1 != b1 && a2 != b2, Errc::DependentJoins, "a loop cannot be a 2-sum edge");
  int n1 = g1.order();
  std::vector<EdgeEnds> edges;
  for (EdgeId e = 0; e < g1.size(); ++e)
    if (e != e1) edges.push_back(g1.ends(e));
  for (EdgeId e = 0; e < g2.size(); ++e)
    if (e != e2) edges.push_back({g2.ends(e).u + n1, g2.ends(e).v + n1});
  VertexId p = a2 + n1, q = b2 + n1;
  if (crossed) std::swap(p, q);
  EdgeId f1 = static_cast<EdgeId>(edges.size());
  edges.push_back({a1, p});
  edges.push_back({b1, q});
  auto g = build_graph(n1 + g2.order(), edges);
  EdgeSet cut(static_cast<std::size_t>(g.size()), {f1, f1 + 1});
  return {std::move(g), std::move(cut)};
}

/// two_sum restricted to odd edges of tightly two-face-embeddable graphs.
/// Odd edges are only defined for tight graphs, so an amply two-face graph
/// has none.
inline OddTwoSum odd_two_sum(const CubicGraph& g1, EdgeId e1, const CubicGraph& g2, EdgeId e2, bool crossed = false,
                             const GenusOptions& opt = {}) {
  require(e1 >= 0 && e1 < g1.size() && e2 >= 0 && e2 < g2.size(), Errc::InvalidArgument, "edge out of range");
  require(!g1.is_loop(e1) && !g2.is_loop(e2), Errc::DependentJoins, "a loop cannot be a 2-sum edge");
  int which = 1;
  for (auto [g, e] : {std::pair{&g1, e1}, std::pair{&g2, e2}}) {
    std::string name = which++ == 1 ? "first" : "second";
    require(betti(*g).cyclically_odd(), Errc::NotOddEdge, "the " + name + " graph has an even Betti number");
    auto amp = classify_amply(*g, opt);
    require(amp.verdict != Ampleness::Amply, Errc::NotOddEdge,
            "the " + name + " graph is amply two-face embeddable, so it has no odd edges");
    require(is_odd_edge(*g, e, opt.search), Errc::NotOddEdge,
            "edge " + std::to_string(e) + " of the " + name + " graph is not odd");
  }
  return two_sum(g1, e1, g2, e2, crossed);
}

}  // namespace decyc
