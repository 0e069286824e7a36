#pragma once

// Graphs and random constructions shared by the unit and acceptance tests.

#include "decyc/decyc.hpp"

#include <random>

namespace fixture {

using namespace decyc;

// Loopless 8-vertex graph with two bridges: two digon-triangles joined by a
// middle digon.
inline CubicGraph bridged8() {
  return build_graph(8, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}, {6, 7}});
}

inline CubicGraph loop_gadget() { return attach_loop_pendant(named("D2")); }

// Two copies of K33 joined across a 3-cut: zeta = 3 but odd-cyclically 4-connected.
inline CubicGraph k33_pair() { return three_sum(named("K33"), 0, named("K33"), 0).graph; }

struct RandomSum {
  CubicGraph graph;
  std::vector<CanonicalCode> factor_codes;  // sorted
};

// Iterated 3-sums of factors drawn from K4, Q3, K33, Petersen at random roots
// with random matchings.
inline RandomSum random_factor_sum(std::uint64_t seed, int factors) {
  static const std::vector<std::string> pool{"K4", "Q3", "K33", "Petersen"};
  std::mt19937_64 rng(seed);
  auto pick = [&] { return named(pool[rng() % pool.size()]); };
  RandomSum out;
  CubicGraph acc = pick();
  out.factor_codes.push_back(canonical_code(acc));
  for (int i = 1; i < factors; ++i) {
    CubicGraph f = pick();
    out.factor_codes.push_back(canonical_code(f));
    Matching3 m{0, 1, 2};
    std::shuffle(m.begin(), m.end(), rng);
    acc = three_sum(acc, static_cast<VertexId>(rng() % acc.order()), f, static_cast<VertexId>(rng() % f.order()), m).graph;
  }
  std::sort(out.factor_codes.begin(), out.factor_codes.end());
  out.graph = acc;
  return out;
}

// A cyclically 4-edge-connected simple graph grown from K4 or Q3 by random
// edge extensions that keep the property.
inline CubicGraph random_c4c_extension(std::uint64_t seed, int max_order) {
  std::mt19937_64 rng(seed);
  CubicGraph g = named(rng() % 2 ? "K4" : "Q3");
  while (g.order() + 2 <= max_order) {
    bool grown = false;
    for (int attempt = 0; attempt < 50 && !grown; ++attempt) {
      EdgeId e = static_cast<EdgeId>(rng() % g.size()), f = static_cast<EdgeId>(rng() % g.size());
      auto [a, b] = g.ends(e);
      auto [c, d] = g.ends(f);
      if (e == f || a == c || a == d || b == c || b == d) continue;
      auto ext = edge_extension(g, e, f);
      if (!ext.graph.graph().is_simple() || !is_c4c(ext.graph)) continue;
      g = ext.graph;
      grown = true;
    }
    if (!grown) break;
    if (rng() % 4 == 0) break;
  }
  return g;
}

}  // namespace fixture
