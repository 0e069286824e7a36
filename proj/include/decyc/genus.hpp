#pragma once

// Upper-embeddability: Xuong certificates for graphs that are, Nebesky
// witnesses for graphs that are not, and the amply/tightly refinement for
// two-face-embeddable graphs.

#include "decyc/connectivity.hpp"
#include "decyc/partition.hpp"
#include "decyc/xuong.hpp"

#include <optional>
#include <string>

namespace decyc {

// ---------------------------------------------------------------------------
// Nebesky witnesses.

struct NebeskyWitness {
  EdgeSet X;
  int ec = 0;
  int oc = 0;

  int margin() const { return ec + 2 * oc - 2 - static_cast<int>(X.size()); }
  bool valid() const { return margin() > 0; }
};

/// Counts cyclically even and odd components of G - X (isolated vertices and
/// trees are even).
inline NebeskyWitness evaluate_nebesky(const Multigraph& g, const EdgeSet& X) {
  NebeskyWitness w{X, 0, 0};
  auto comp = components(g, nullptr, &X);
  for (int c = 0; c < comp.count; ++c) {
    if (comp.betti(c) % 2 == 0) ++w.ec;
    else ++w.oc;
  }
  return w;
}

enum class WitnessStrategy { TriangleFreeEdges, Bridges, ExhaustiveCapped };

/// Edges lying on no triangle (a 3-cycle through three distinct vertices).
inline EdgeSet edges_off_triangles(const Multigraph& g) {
  EdgeSet X = g.empty_edge_set();
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto [u, v] = g.ends(e);
    bool on_triangle = false;
    if (u != v) {
      for (DartId d : g.darts(u)) {
        VertexId w = g.across(d);
        if (w == u || w == v) continue;
        if (g.multiplicity(w, v) > 0) on_triangle = true;
      }
    }
    if (!on_triangle) X.insert(e);
  }
  return X;
}

inline std::optional<NebeskyWitness> find_nebesky_witness(const Multigraph& g, WitnessStrategy strategy, int cap = 8) {
  switch (strategy) {
    case WitnessStrategy::TriangleFreeEdges: {
      auto w = evaluate_nebesky(g, edges_off_triangles(g));
      if (w.valid()) return w;
      return std::nullopt;
    }
    case WitnessStrategy::Bridges: {
      auto w = evaluate_nebesky(g, bridges_and_blocks(g).bridges);
      if (w.valid()) return w;
      return std::nullopt;
    }
    case WitnessStrategy::ExhaustiveCapped: {
      std::optional<NebeskyWitness> found;
      for (int k = 0; k <= std::min(cap, g.size()) && !found; ++k) {
        detail::for_each_subset(g.size(), k, [&](const std::vector<int>& ids) {
          auto w = evaluate_nebesky(g, EdgeSet(static_cast<std::size_t>(g.size()), ids));
          if (!w.valid()) return true;
          found = w;
          return false;
        });
      }
      return found;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classification.

enum class FaceClass { OneFace, TwoFace, NotUpperEmbeddable, Unknown };
enum class Ampleness { Amply, Tightly, Unknown };

constexpr std::string_view to_string(FaceClass c) {
  switch (c) {
    case FaceClass::OneFace: return "OneFace";
    case FaceClass::TwoFace: return "TwoFace";
    case FaceClass::NotUpperEmbeddable: return "NotUpperEmbeddable";
    case FaceClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

constexpr std::string_view to_string(Ampleness a) {
  switch (a) {
    case Ampleness::Amply: return "Amply";
    case Ampleness::Tightly: return "Tightly";
    case Ampleness::Unknown: return "Unknown";
  }
  return "Unknown";
}

/// Record of a completed exhaustive search backing a universal claim.
struct ExhaustionProof {
  std::string method;    // "spanning-trees" or "partition-backtracking"
  std::int64_t examined = 0;
  bool complete = false;
};

struct EmbeddabilityClass {
  FaceClass face = FaceClass::Unknown;
  Ampleness ample = Ampleness::Unknown;  // meaningful for TwoFace
  std::optional<XuongCertificate> xuong;
  std::optional<NebeskyWitness> witness;
  std::optional<int> xi;                 // exact deficiency when known
  std::optional<ExhaustionProof> proof;  // backs Tightly verdicts
};

struct GenusOptions {
  SearchOptions search;
  std::int64_t partition_budget = 20'000'000;
  int exact_cap = kSpanningTreeCap;
  int witness_cap = 8;
};

namespace detail {

inline std::optional<NebeskyWitness> quick_witness(const Multigraph& g) {
  if (auto w = find_nebesky_witness(g, WitnessStrategy::Bridges)) return w;
  if (auto w = find_nebesky_witness(g, WitnessStrategy::TriangleFreeEdges)) return w;
  return std::nullopt;
}

}  // namespace detail

inline EmbeddabilityClass classify_upper_embeddable(const CubicGraph& g, const GenusOptions& opt = {}) {
  require(is_connected(g), Errc::Disconnected, "classification needs a connected graph");
  EmbeddabilityClass out;
  int beta = betti(g).value;
  if (g.order() <= opt.exact_cap) {
    auto r = deficiency_unbounded(g, beta % 2 != 0);
    out.xi = r.xi;
    if (r.xi <= 1) {
      out.face = r.xi == 0 ? FaceClass::OneFace : FaceClass::TwoFace;
      if (out.face == FaceClass::TwoFace) {
        out.ample = r.heavy ? Ampleness::Amply : Ampleness::Tightly;
        out.xuong = r.heavy ? *r.heavy : r.best;
        if (!r.heavy) out.proof = ExhaustionProof{"spanning-trees", r.trees_examined, true};
      } else {
        out.xuong = r.best;
      }
      return out;
    }
    out.face = FaceClass::NotUpperEmbeddable;
    out.witness = detail::quick_witness(g);
    if (!out.witness) out.witness = find_nebesky_witness(g, WitnessStrategy::ExhaustiveCapped, g.size());
    require(out.witness.has_value(), Errc::InternalSearchFailure, "no Nebesky witness for a graph with deficiency >= 2");
    return out;
  }

  if (auto w = detail::quick_witness(g)) {
    out.face = FaceClass::NotUpperEmbeddable;
    out.witness = w;
    return out;
  }
  int target = beta % 2;
  if (auto cert = find_xuong_tree(g, target, opt.search)) {
    out.face = target == 0 ? FaceClass::OneFace : FaceClass::TwoFace;
    out.xi = target;
    out.xuong = cert;
    if (cert->heavy_two_face()) out.ample = Ampleness::Amply;
    return out;
  }
  auto q = stable_query(g);
  q.node_budget = opt.partition_budget;
  auto res = search_partition(g, q);
  if (res.found) {
    auto cert = xuong_from_partition(g, *res.found);
    out.face = target == 0 ? FaceClass::OneFace : FaceClass::TwoFace;
    out.xi = target;
    out.xuong = cert;
    if (cert.heavy_two_face()) out.ample = Ampleness::Amply;
    return out;
  }
  if (res.complete) {
    // No decycling set at the lower bound, so the graph is not upper-embeddable;
    // a witness must exist, try the capped exhaustive strategy for it.
    out.face = FaceClass::NotUpperEmbeddable;
    out.witness = find_nebesky_witness(g, WitnessStrategy::ExhaustiveCapped, opt.witness_cap);
    if (!out.witness) out.proof = ExhaustionProof{"partition-backtracking", res.nodes, true};
    return out;
  }
  if (auto w = find_nebesky_witness(g, WitnessStrategy::ExhaustiveCapped, opt.witness_cap)) {
    out.face = FaceClass::NotUpperEmbeddable;
    out.witness = w;
  }
  return out;
}

struct AmplenessResult {
  Ampleness verdict = Ampleness::Unknown;
  std::optional<XuongCertificate> heavy;  // for Amply
  std::optional<ExhaustionProof> proof;   // for Tightly
};

/// Amply iff some Xuong tree has a single odd component that is heavy.
/// Tightly only with a completed exhaustive search.
inline AmplenessResult classify_amply(const CubicGraph& g, const GenusOptions& opt = {}) {
  int beta = betti(g).value;
  require(beta % 2 != 0, Errc::WrongParity, "ampleness is defined here for odd Betti number");
  AmplenessResult out;
  if (g.order() <= opt.exact_cap) {
    auto r = deficiency_unbounded(g, true);
    require(r.xi == 1, Errc::PreconditionFailed, "graph is not two-face embeddable");
    if (r.heavy) {
      out.verdict = Ampleness::Amply;
      out.heavy = r.heavy;
    } else {
      out.verdict = Ampleness::Tightly;
      out.proof = ExhaustionProof{"spanning-trees", r.trees_examined, true};
    }
    return out;
  }
  if (auto cert = find_xuong_tree(g, 1, opt.search, true)) {
    out.verdict = Ampleness::Amply;
    out.heavy = cert;
    return out;
  }
  // A coherent partition whose J-edge is not a loop yields a heavy Xuong tree.
  auto q = coherent_query(g);
  q.node_budget = opt.partition_budget;
  q.accept = [&](const DecyclingPartition& p) {
    for (EdgeId e = 0; e < g.size(); ++e)
      if (g.is_loop(e) && p.J.contains(g.ends(e).u)) return false;
    return true;
  };
  auto res = search_partition(g, q);
  if (res.found) {
    out.verdict = Ampleness::Amply;
    out.heavy = xuong_from_partition(g, *res.found);
    return out;
  }
  if (res.complete) {
    out.verdict = Ampleness::Tightly;
    out.proof = ExhaustionProof{"partition-backtracking", res.nodes, true};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Removable pairs.

namespace detail {

// Deletes pendant vertices and suppresses 2-valent ones until neither
// remains; neither step changes the deficiency.
inline Multigraph homeomorphic_core(Multigraph h) {
  for (;;) {
    bool changed = false;
    for (VertexId v = 0; v < h.order() && !changed; ++v) {
      if (h.order() <= 1) break;
      if (h.degree(v) == 1 || h.degree(v) == 0) {
        if (h.degree(v) == 0 && h.order() == 1) break;
        VertexSet keep = VertexSet::full(static_cast<std::size_t>(h.order()));
        keep.erase(v);
        h = induced_subgraph(h, keep).graph;
        changed = true;
      } else if (h.degree(v) == 2 && h.multiplicity(v, v) == 0) {
        h = suppress_vertex(h, v);
        changed = true;
      }
    }
    if (!changed) return h;
  }
}

}  // namespace detail

/// {x, y} simply adjacent, xy not a bridge, and G - {x, y} connected and
/// upper-embeddable.
inline bool removable_pair(const CubicGraph& g, VertexId x, VertexId y) {
  require(x != y, Errc::InvalidArgument, "removable pair needs two distinct vertices");
  const Multigraph& G = g;
  if (G.multiplicity(x, y) != 1) return false;
  EdgeId xy = -1;
  for (DartId d : G.darts(x))
    if (G.across(d) == y) xy = edge_of(d);
  if (bridges_and_blocks(G).bridges.contains(xy)) return false;
  VertexSet gone = G.empty_vertex_set();
  gone.insert(x);
  gone.insert(y);
  auto rest = delete_vertices(G, gone);
  if (rest.component_count != 1) return false;
  auto core = detail::homeomorphic_core(rest.graph);
  return deficiency_unbounded(core).xi <= 1;
}

// ---------------------------------------------------------------------------
// Odd edges of two-face-embeddable graphs.

/// Edges e such that some Xuong tree has {e} as its single odd cotree
/// component. Exhaustive up to the enumeration cap.
inline EdgeSet odd_edges(const CubicGraph& g) {
  require(g.order() <= kSpanningTreeCap, Errc::TooLarge, "odd-edge detection is exhaustive and capped");
  EdgeSet out = g.graph().empty_edge_set();
  for_each_spanning_tree(g, [&](const EdgeSet& t) {
    auto c = analyze_tree(g, t);
    if (c.odd_count == 1) {
      const auto* b = c.odd_component();
      if (b->size == 1) out |= b->edges;
    }
    return true;
  });
  return out;
}

/// Whether edge e is the single odd component of some Xuong tree, by local
/// search for graphs above the enumeration cap (a negative is not a proof).
inline bool is_odd_edge(const CubicGraph& g, EdgeId e, const SearchOptions& opt = {}) {
  if (g.order() <= kSpanningTreeCap) return odd_edges(g).contains(e);
  std::mt19937_64 rng(opt.seed);
  for (int attempt = 0; attempt < 8; ++attempt)
    if (find_xuong_tree_with_odd_edge(g, e, {rng(), opt.budget})) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Maximum nonseparating independent sets.

inline constexpr int kIndependentSetCap = 16;

inline VertexSet max_nonseparating_independent_set(const CubicGraph& g, int cap = kIndependentSetCap) {
  require(g.order() <= cap, Errc::TooLarge, "nonseparating independent set search capped at n=" + std::to_string(cap));
  const Multigraph& G = g;
  int n = G.order();
  VertexSet best = G.empty_vertex_set();
  for (int k = n; k >= 1; --k) {
    bool hit = !detail::for_each_subset(n, k, [&](const std::vector<int>& ids) {
      VertexSet S(static_cast<std::size_t>(n), ids);
      for (VertexId v : S)
        for (DartId d : G.darts(v))
          if (S.contains(G.across(d))) return true;
      VertexSet rest = S.complement();
      if (components(G, &rest).count != 1) return true;
      best = S;
      return false;
    });
    if (hit) return best;
  }
  return best;
}

}  // namespace decyc
