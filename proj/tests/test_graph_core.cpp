#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace decyc;

namespace {

Multigraph plain_edges(int n, std::initializer_list<EdgeEnds> edges) {
  Multigraph g(n);
  for (auto e : edges) g.add_edge(e.u, e.v);
  return g;
}

}  // namespace

TEST(BuildGraph, K4HasBettiThree) {
  auto g = named("K4");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(betti(g).value, 3);
  EXPECT_TRUE(betti(g).cyclically_odd());
}

TEST(BuildGraph, DipoleHasBettiTwo) {
  auto g = build_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(betti(g).value, 2);
  EXPECT_EQ(g.graph().multiplicity(0, 1), 3);
}

TEST(BuildGraph, DegreeAndParityErrors) {
  try {
    build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeViolation);
  }
  try {
    build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OddOrder);
  }
}

TEST(BuildGraph, DartNumberingFollowsInputOrder) {
  auto g = named("K4");
  for (EdgeId e = 0; e < g.size(); ++e) {
    EXPECT_EQ(g.graph().dart_vertex(dart_of(e, 0)), g.ends(e).u);
    EXPECT_EQ(g.graph().dart_vertex(dart_of(e, 1)), g.ends(e).v);
    EXPECT_EQ(opposite(opposite(dart_of(e, 0))), dart_of(e, 0));
  }
}

TEST(Betti, NamedGraphs) {
  EXPECT_EQ(betti(named("Q3")).value, 5);
  EXPECT_EQ(betti(named("Petersen")).value, 6);
  EXPECT_TRUE(betti(named("Petersen")).cyclically_even());
  for (const auto& name : named_graphs()) {
    auto g = named(name);
    EXPECT_EQ(betti(g).value, g.order() / 2 + 1) << name;
  }
}

TEST(Betti, DisconnectedRejected) {
  auto two = build_graph(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}});
  EXPECT_THROW(betti(two), Error);
}

TEST(DeltaCut, Examples) {
  auto k4 = named("K4");
  VertexSet a(4, {0});
  EXPECT_EQ(delta_cut(k4, a).size(), 3u);

  auto prism = named("prism");
  VertexSet tri(6, {0, 1, 2});
  EXPECT_EQ(delta_cut(prism, tri).to_vector(), (std::vector<int>{6, 7, 8}));

  auto d2 = named("D2");
  EXPECT_EQ(delta_cut(d2, VertexSet(2, {0})).size(), 3u);
  EXPECT_THROW(delta_cut(k4, VertexSet(4)), Error);
}

TEST(InducedSubgraph, Examples) {
  auto k4 = named("K4");
  auto tri = induced_subgraph(k4, VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(tri.graph.size(), 3);
  EXPECT_FALSE(tri.acyclic);

  auto empty = induced_subgraph(k4, VertexSet(4));
  EXPECT_EQ(empty.graph.order(), 0);
  EXPECT_EQ(empty.component_count, 0);

  // Figure-style coherent partition of the cube: A = {2,3,4,5,7} is a path.
  auto q3 = named("Q3");
  auto a = induced_subgraph(q3, VertexSet(8, {2, 3, 4, 5, 7}));
  EXPECT_TRUE(a.is_tree());
}

TEST(Subdivide, K4Edge) {
  auto k4 = named("K4");
  auto s = subdivide_edge(k4, 2);
  EXPECT_EQ(s.graph.order(), 5);
  EXPECT_EQ(s.graph.degree(s.vertex), 2);
  int two = 0;
  for (VertexId v = 0; v < 5; ++v) two += s.graph.degree(v) == 2;
  EXPECT_EQ(two, 1);
}

TEST(Subdivide, LoopBecomesDigon) {
  auto g = attach_loop_pendant(named("D2"));
  EdgeId loop = -1;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.is_loop(e)) loop = e;
  ASSERT_GE(loop, 0);
  VertexId u = g.ends(loop).u;
  auto s = subdivide_edge(g, loop);
  EXPECT_EQ(s.graph.multiplicity(u, s.vertex), 2);
  EXPECT_FALSE(s.graph.has_loops());
}

TEST(Suppress, PathAndDigon) {
  auto path = plain_edges(3, {{0, 1}, {1, 2}});
  auto p = suppress_vertex(path, 1);
  EXPECT_EQ(p.order(), 2);
  EXPECT_EQ(p.multiplicity(0, 1), 1);

  auto digon = plain_edges(2, {{0, 1}, {1, 0}});
  auto d = suppress_vertex(digon, 1);
  EXPECT_EQ(d.order(), 1);
  EXPECT_EQ(d.multiplicity(0, 0), 1);

  auto k4 = named("K4");
  EXPECT_THROW(suppress_vertex(k4.graph(), 0), Error);
}

TEST(Suppress, UndoesSubdivision) {
  for (const auto& name : named_graphs()) {
    auto g = named(name);
    for (EdgeId e = 0; e < g.size(); ++e) {
      auto s = subdivide_edge(g, e);
      auto back = suppress_vertex(s.graph, s.vertex);
      EXPECT_TRUE(oracle::isomorphic(back, g)) << name << " edge " << e;
    }
  }
}

TEST(SpanningTrees, CountsAgreeWithMatrixTree) {
  EXPECT_EQ(spanning_trees(named("K4")).size(), 16u);
  EXPECT_EQ(spanning_trees(named("D2")).size(), 3u);
  for (const auto& name : named_graphs()) {
    auto g = named(name);
    EXPECT_EQ(count_spanning_trees(g), oracle::matrix_tree_count(g)) << name;
  }
  EXPECT_EQ(count_spanning_trees(named("Petersen")), 2000);
}

TEST(SpanningTrees, CycleHasNTrees) {
  for (int n = 3; n <= 8; ++n) {
    Multigraph c(n);
    for (int i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n);
    EXPECT_EQ(count_spanning_trees(c), n);
  }
}

TEST(SpanningTrees, EveryTreeIsSpanningAndDistinct) {
  for (auto* name : {"Q3", "prism", "L4"}) {
    auto g = named(name);
    std::set<std::vector<int>> seen;
    for_each_spanning_tree(g, [&](const EdgeSet& t) {
      EXPECT_EQ(static_cast<int>(t.size()), g.order() - 1);
      EXPECT_TRUE(edge_subgraph(g, t).is_tree());
      EXPECT_TRUE(seen.insert(t.to_vector()).second);
      return true;
    });
    EXPECT_EQ(static_cast<long long>(seen.size()), oracle::matrix_tree_count(g)) << name;
  }
}

TEST(SpanningTrees, CapEnforced) {
  EXPECT_THROW(spanning_trees(random_cubic(16, 3)), Error);
}

TEST(CanonicalCode, RelabelInvariant) {
  auto p = named("Petersen");
  std::vector<VertexId> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(relabel(p, perm)), canonical_code(p));
  }
}

TEST(CanonicalCode, DistinguishesK4AndL4) { EXPECT_NE(canonical_code(named("K4")), canonical_code(named("L4"))); }

TEST(CanonicalCode, ExtensionOfK4IsK33) {
  auto k4 = named("K4");
  // Edges 01 and 23 are nonadjacent.
  auto ext = edge_extension(k4, 0, 5);
  EXPECT_EQ(canonical_code(ext.graph), canonical_code(named("K33")));
  // Explicit bipartition check of the 9-edge result.
  std::vector<int> colour(6, -1);
  colour[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e = 0; e < ext.graph.size(); ++e) {
      auto [u, v] = ext.graph.ends(e);
      if (colour[u] >= 0 && colour[v] < 0) colour[v] = 1 - colour[u], changed = true;
      if (colour[v] >= 0 && colour[u] < 0) colour[u] = 1 - colour[v], changed = true;
    }
  }
  for (EdgeId e = 0; e < ext.graph.size(); ++e) EXPECT_NE(colour[ext.graph.ends(e).u], colour[ext.graph.ends(e).v]);
}

TEST(CanonicalCode, AgreesWithBruteIsomorphismOnCensus) {
  std::vector<CubicGraph> all;
  for (int n = 2; n <= 6; n += 2)
    for (auto& g : oracle::cubic_census(n, true)) all.push_back(g);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      EXPECT_EQ(is_isomorphic(all[i], all[j]), oracle::isomorphic(all[i], all[j])) << i << " " << j;
}

TEST(CanonicalCode, LabelingIsAnIsomorphismWitness) {
  auto g = random_cubic(14, 9);
  auto f = canonical_form(g);
  std::vector<VertexId> perm(f.labeling.begin(), f.labeling.end());
  EXPECT_EQ(canonical_code(relabel(g, perm)), f.code);
}

TEST(Census, KnownCounts) {
  // Connected cubic simple graphs and multigraphs (loops allowed).
  std::vector<std::size_t> simple{1, 2, 5, 19};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(oracle::cubic_census(4 + 2 * i, false).size(), simple[i]);
  std::vector<std::size_t> multi{2, 5, 17, 71};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(oracle::cubic_census(2 + 2 * i, true).size(), multi[i]);
}

TEST(UnionFind, RollbackRestores) {
  UnionFind uf(5);
  uf.unite(0, 1);
  auto cp = uf.checkpoint();
  uf.unite(1, 2);
  uf.unite(3, 4);
  EXPECT_EQ(uf.find(0), uf.find(2));
  uf.rollback(cp);
  EXPECT_NE(uf.find(0), uf.find(2));
  EXPECT_EQ(uf.find(0), uf.find(1));
  EXPECT_NE(uf.find(3), uf.find(4));
}

TEST(IdSet, BasicAlgebra) {
  VertexSet a(6, {0, 2, 4}), b(6, {2, 3});
  EXPECT_EQ((a | b).to_vector(), (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ((a & b).to_vector(), (std::vector<int>{2}));
  EXPECT_EQ((a - b).to_vector(), (std::vector<int>{0, 4}));
  EXPECT_EQ(a.complement().to_vector(), (std::vector<int>{1, 3, 5}));
  EXPECT_TRUE(VertexSet(6, {2}).is_subset_of(b));
}
