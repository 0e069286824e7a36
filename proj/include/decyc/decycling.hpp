#pragma once

// Decycling numbers and the search for stable and coherent partitions.

#include "decyc/connectivity.hpp"
#include "decyc/genus.hpp"
#include "decyc/partition.hpp"

#include <limits>

namespace decyc {

inline constexpr int kDecyclingBruteCap = 20;

struct DecyclingNumber {
  int phi = 0;
  VertexSet J;
};

/// Smallest decycling set by backtracking over sizes from the lower bound up.
inline DecyclingNumber decycling_number_bruteforce(const CubicGraph& g, int cap = kDecyclingBruteCap) {
  require(g.order() <= cap, Errc::TooLarge, "brute-force decycling number capped at n=" + std::to_string(cap));
  for (int k = decycling_lower_bound(g.order()); k <= g.order(); ++k) {
    PartitionQuery q;
    q.j_size = k;
    q.max_e_J = g.size();
    q.node_budget = std::numeric_limits<std::int64_t>::max();
    auto r = search_partition(g, q);
    if (r.found) return {k, r.found->J};
  }
  fail(Errc::InternalSearchFailure, "no decycling set found");
}

/// phi = n/2 + 1 - gamma_M, with gamma_M taken from the exact deficiency.
inline int decycling_number_via_genus(const CubicGraph& g) {
  if (g.order() > kSpanningTreeCap) fail(Errc::GenusUnknown, "maximum genus not exactly known beyond n=14");
  auto r = deficiency_exact(g);
  return g.order() / 2 + 1 - r.max_genus;
}

enum class SearchStatus { Found, NoneExists, Unknown };

constexpr std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::NoneExists: return "NoneExists";
    case SearchStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct PartitionOutcome {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<DecyclingPartition> partition;
  std::optional<ExhaustionProof> proof;        // for NoneExists
  std::optional<NebeskyWitness> witness;       // NoneExists for stable partitions
  std::string route;                           // how the answer was obtained
};

struct PartitionOptions {
  GenusOptions genus;
  std::int64_t budget = 50'000'000;  // backtracking nodes
};

inline PartitionOutcome find_stable_partition(const CubicGraph& g, const PartitionOptions& opt = {}) {
  PartitionOutcome out;
  auto cls = classify_upper_embeddable(g, opt.genus);
  if (cls.xuong) {
    out.status = SearchStatus::Found;
    out.partition = partition_from_xuong(g, *cls.xuong);
    out.route = "xuong";
    return out;
  }
  auto q = stable_query(g);
  q.node_budget = opt.budget;
  auto r = search_partition(g, q);
  if (r.found) {
    out.status = SearchStatus::Found;
    out.partition = r.found;
    out.route = "backtracking";
  } else if (r.complete) {
    out.status = SearchStatus::NoneExists;
    out.proof = ExhaustionProof{"partition-backtracking", r.nodes, true};
    out.witness = cls.witness;
    out.route = "backtracking";
  } else if (cls.witness) {
    out.status = SearchStatus::NoneExists;
    out.witness = cls.witness;
    out.route = "nebesky";
  }
  return out;
}

/// Exhaustive search for a coherent partition (|J| at the lower bound, G[A] a
/// tree).
inline PartitionSearchResult search_coherent_partition(const CubicGraph& g, std::int64_t budget) {
  auto q = coherent_query(g);
  q.node_budget = budget;
  return search_partition(g, q);
}

inline PartitionOutcome find_coherent_partition(const CubicGraph& g, const PartitionOptions& opt = {}) {
  PartitionOutcome out;
  if (g.order() % 4 == 2) {
    out = find_stable_partition(g, opt);
    if (out.partition) require(out.partition->cls.coherent, Errc::InternalSearchFailure, "stable partition not coherent");
    return out;
  }
  if (g.order() <= opt.genus.exact_cap && !g.graph().has_loops()) {
    auto cls = classify_upper_embeddable(g, opt.genus);
    if (cls.xuong && cls.xuong->heavy_two_face()) {
      out.status = SearchStatus::Found;
      out.partition = partition_from_xuong(g, *cls.xuong);
      out.route = "heavy-xuong";
      return out;
    }
  }
  auto r = search_coherent_partition(g, opt.budget);
  out.route = "backtracking";
  if (r.found) {
    out.status = SearchStatus::Found;
    out.partition = r.found;
  } else if (r.complete) {
    out.status = SearchStatus::NoneExists;
    out.proof = ExhaustionProof{"partition-backtracking", r.nodes, true};
  }
  return out;
}

/// Stable partition with v in J for cyclically 4-edge-connected graphs.
inline DecyclingPartition find_partition_with_vertex(const CubicGraph& g, VertexId v, std::int64_t budget = 200'000'000) {
  require(v >= 0 && v < g.order(), Errc::InvalidArgument, "no vertex " + std::to_string(v));
  require(is_c4c(g), Errc::NotC4C, "graph is not cyclically 4-edge-connected");
  auto q = stable_query(g);
  q.forced_J = {v};
  q.node_budget = budget;
  auto r = search_partition(g, q);
  require(r.found.has_value(), Errc::InternalSearchFailure,
          "no stable partition with vertex " + std::to_string(v) + " in J");
  return *r.found;
}

}  // namespace decyc
