#pragma once

#include "decyc/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace decyc {

inline constexpr int kCutCap = 6;

struct CutWitness {
  EdgeSet cut;
  VertexSet side_a;
  bool each_side_has_cycle = false;
  bool each_side_nontrivial = false;
  int betti_a = 0;  // β of G[side_a] (components counted)
  int betti_b = 0;

  bool side_a_odd() const { return betti_a % 2 != 0; }
  bool side_b_odd() const { return betti_b % 2 != 0; }
};

struct CyclicConnectivityReport {
  int zeta = 0;
  std::optional<CutWitness> witness;
  bool saturated = false;
};

struct BlockInfo {
  EdgeSet bridges;
  VertexSet cutvertices;
};

namespace detail {

// Betti number of G[side], allowing several components.
inline int induced_betti(const Multigraph& g, const VertexSet& side) {
  auto comp = components(g, &side);
  int edges = 0;
  for (int c = 0; c < comp.count; ++c) edges += comp.edges_in[c];
  return edges - static_cast<int>(side.size()) + comp.count;
}

inline CutWitness make_witness(const Multigraph& g, const VertexSet& side) {
  CutWitness w;
  w.cut = delta_cut(g, side);
  w.side_a = side;
  VertexSet other = side.complement();
  w.betti_a = induced_betti(g, side);
  w.betti_b = induced_betti(g, other);
  w.each_side_has_cycle = w.betti_a > 0 && w.betti_b > 0;
  w.each_side_nontrivial = side.size() >= 2 && other.size() >= 2;
  return w;
}

// Calls f on every k-subset of {0..m-1} (as a sorted id vector) until f
// returns false.
inline bool for_each_subset(int m, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == k) return f(idx);
    for (int i = start; i <= m - (k - pos); ++i) {
      idx[pos] = i;
      if (!rec(pos + 1, i + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

inline bool pairwise_independent(const Multigraph& g, const std::vector<int>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto a = g.ends(edges[i]);
    if (a.u == a.v) return false;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto b = g.ends(edges[j]);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
    }
  }
  return true;
}

// When removing `cut` leaves exactly two components and every cut edge runs
// between them, returns the component containing the lower vertex.
inline std::optional<VertexSet> bond_side(const Multigraph& g, const EdgeSet& cut) {
  auto comp = components(g, nullptr, &cut);
  if (comp.count != 2) return std::nullopt;
  for (EdgeId e : cut) {
    auto [u, v] = g.ends(e);
    if (comp.label[u] == comp.label[v]) return std::nullopt;
  }
  VertexSet side = g.empty_vertex_set();
  for (VertexId v = 0; v < g.order(); ++v)
    if (comp.label[v] == comp.label[0]) side.insert(v);
  return side;
}

// True when G - cut has at least two components that contain cycles.
inline bool separates_cycles(const Multigraph& g, const EdgeSet& cut) {
  auto comp = components(g, nullptr, &cut);
  int cyclic = 0;
  for (int c = 0; c < comp.count; ++c)
    if (comp.betti(c) > 0) ++cyclic;
  return cyclic >= 2;
}

}  // namespace detail

/// Bridges, cutvertices, and the loop convention: both ends of an edge that
/// hangs a loop-carrying vertex off the rest count as cutvertices.
inline BlockInfo bridges_and_blocks(const Multigraph& g) {
  BlockInfo info{g.empty_edge_set(), g.empty_vertex_set()};
  int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  // Iterative DFS keyed by parent edge so that parallel edges are handled.
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
    int children;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto darts = g.darts(f.v);
      if (f.next < darts.size()) {
        DartId d = darts[f.next++];
        EdgeId e = edge_of(d);
        if (e == f.via || g.is_loop(e)) continue;
        VertexId w = g.across(d);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, e, 0, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) info.cutvertices.insert(done.v);
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] > disc[parent.v]) info.bridges.insert(done.via);
      if (low[done.v] >= disc[parent.v] && parent.via != -1) info.cutvertices.insert(parent.v);
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!g.is_loop(e)) continue;
    VertexId u = g.ends(e).u;
    for (DartId d : g.darts(u)) {
      EdgeId b = edge_of(d);
      if (info.bridges.contains(b)) {
        info.cutvertices.insert(g.ends(b).u);
        info.cutvertices.insert(g.ends(b).v);
      }
    }
  }
  return info;
}

inline bool is_bridgeless(const Multigraph& g) { return bridges_and_blocks(g).bridges.empty(); }

/// No edge cut with fewer than three edges and no loops. For cubic graphs this
/// is the same as 3-connectivity.
inline bool is_three_connected(const Multigraph& g) {
  if (!is_connected(g) || g.has_loops()) return false;
  if (!is_bridgeless(g)) return false;
  for (EdgeId e = 0; e < g.size(); ++e) {
    EdgeSet gone = g.empty_edge_set();
    gone.insert(e);
    // Bridges of G - e are exactly the partners of e in 2-edge cuts.
    Multigraph rest(g.order());
    for (EdgeId f = 0; f < g.size(); ++f)
      if (f != e) rest.add_edge(g.ends(f).u, g.ends(f).v);
    if (!is_bridgeless(rest)) return false;
  }
  return true;
}

/// Every cycle-separating bond (an edge cut whose removal leaves exactly two
/// components, both containing a cycle) with at most k_max edges, by size and
/// then lexicographically by edge ids. `visit` may stop the walk by returning
/// false.
inline void for_each_cycle_separating_cut(const Multigraph& g, int k_max, const std::function<bool(const CutWitness&)>& visit) {
  require(k_max <= kCutCap, Errc::CapExceeded, "cut enumeration capped at " + std::to_string(kCutCap) + " edges");
  require(is_connected(g), Errc::Disconnected, "cut enumeration needs a connected graph");
  for (int k = 1; k <= k_max && k <= g.size(); ++k) {
    bool go_on = detail::for_each_subset(g.size(), k, [&](const std::vector<int>& ids) {
      EdgeSet cut(static_cast<std::size_t>(g.size()), ids);
      auto side = detail::bond_side(g, cut);
      if (!side) return true;
      auto w = detail::make_witness(g, *side);
      if (!w.each_side_has_cycle) return true;
      return visit(w);
    });
    if (!go_on) return;
  }
}

inline std::vector<CutWitness> cycle_separating_cuts(const Multigraph& g, int k_max) {
  std::vector<CutWitness> out;
  for_each_cycle_separating_cut(g, k_max, [&](const CutWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

/// Smallest cycle-separating matching of size k, if any. A minimum
/// cycle-separating edge set of a cubic graph is always a matching.
inline std::optional<CutWitness> cycle_separating_matching(const Multigraph& g, int k) {
  std::optional<CutWitness> found;
  detail::for_each_subset(g.size(), k, [&](const std::vector<int>& ids) {
    if (!detail::pairwise_independent(g, ids)) return true;
    EdgeSet cut(static_cast<std::size_t>(g.size()), ids);
    if (!detail::separates_cycles(g, cut)) return true;
    auto side = detail::bond_side(g, cut);
    if (!side) return true;
    found = detail::make_witness(g, *side);
    return false;
  });
  return found;
}

/// True iff no set of fewer than k edges is cycle-separating. Checks every
/// edge subset, not only matchings, so it is valid for any multigraph.
inline bool is_cyclically_k_edge_connected(const Multigraph& g, int k) {
  require(k - 1 <= kCutCap, Errc::CapExceeded, "cut enumeration capped at " + std::to_string(kCutCap) + " edges");
  for (int s = 1; s < k && s <= g.size(); ++s) {
    bool clean = detail::for_each_subset(g.size(), s, [&](const std::vector<int>& ids) {
      return !detail::separates_cycles(g, EdgeSet(static_cast<std::size_t>(g.size()), ids));
    });
    if (!clean) return false;
  }
  return true;
}

inline bool is_c4c(const Multigraph& g) { return is_connected(g) && is_cyclically_k_edge_connected(g, 4); }

inline CyclicConnectivityReport cyclic_connectivity(const Multigraph& g) {
  int beta = betti(g).value;
  for (int k = 1; k <= beta; ++k) {
    if (k > kCutCap) fail(Errc::CapExceeded, "no cycle-separating cut with at most " + std::to_string(kCutCap) + " edges");
    if (auto w = cycle_separating_matching(g, k)) return {k, std::move(w), false};
  }
  return {beta, std::nullopt, true};
}

struct OddCyclicReport {
  bool connected = true;
  std::optional<CutWitness> violation;
};

/// Odd-cyclic k-connectivity: every induced H whose coboundary is
/// cycle-separating and whose Betti number is odd has |δ(H)| >= k.
inline OddCyclicReport is_odd_cyclically_k_connected(const Multigraph& g, int k) {
  require(k - 1 <= kCutCap, Errc::CapExceeded, "cut enumeration capped at " + std::to_string(kCutCap) + " edges");
  require(is_connected(g), Errc::Disconnected, "odd-cyclic connectivity needs a connected graph");
  for (int s = 1; s < k && s <= g.size(); ++s) {
    std::optional<CutWitness> bad;
    detail::for_each_subset(g.size(), s, [&](const std::vector<int>& ids) {
      EdgeSet cut(static_cast<std::size_t>(g.size()), ids);
      if (!detail::separates_cycles(g, cut)) return true;
      auto comp = components(g, nullptr, &cut);
      // H is a union of components of G - cut whose coboundary is all of cut.
      for (int mask = 1; mask + 1 < (1 << comp.count); ++mask) {
        VertexSet side = g.empty_vertex_set();
        for (VertexId v = 0; v < g.order(); ++v)
          if (mask >> comp.label[v] & 1) side.insert(v);
        if (!(delta_cut(g, side) == cut)) continue;
        if (detail::induced_betti(g, side) % 2 != 0) {
          bad = detail::make_witness(g, side);
          return false;
        }
      }
      return true;
    });
    if (bad) return {false, bad};
  }
  return {true, std::nullopt};
}

/// All 3-edge cuts leaving two components with at least two vertices each.
inline std::vector<CutWitness> nontrivial_three_cuts(const Multigraph& g) {
  std::vector<CutWitness> out;
  detail::for_each_subset(g.size(), 3, [&](const std::vector<int>& ids) {
    EdgeSet cut(static_cast<std::size_t>(g.size()), ids);
    auto side = detail::bond_side(g, cut);
    if (side && side->size() >= 2 && side->size() + 2 <= static_cast<std::size_t>(g.order()))
      out.push_back(detail::make_witness(g, *side));
    return true;
  });
  return out;
}

}  // namespace decyc
