#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace decyc;

namespace {

std::vector<CubicGraph> c4c_census(int max_n) {
  std::vector<CubicGraph> out;
  for (int n = 4; n <= max_n; n += 2)
    for (auto& g : oracle::cubic_census(n, false))
      if (is_c4c(g)) out.push_back(g);
  return out;
}

}  // namespace

TEST(ThreeSum, K4WithK4IsPrism) {
  auto s = three_sum(named("K4"), 0, named("K4"), 0);
  EXPECT_TRUE(is_isomorphic(s.graph, named("prism")));
  EXPECT_EQ(s.spec.principal_cut.size(), 3u);
  EXPECT_EQ(s.vmap1[0], -1);
  EXPECT_EQ(s.vmap2[0], -1);
  // Cut edges come last, in the root's dart order.
  EXPECT_EQ(s.spec.principal_cut.to_vector(), (std::vector<int>{6, 7, 8}));
}

TEST(ThreeSum, MatchingPairsRootDarts) {
  auto k33 = named("K33");
  for (Matching3 m : {Matching3{0, 1, 2}, Matching3{2, 0, 1}, Matching3{1, 2, 0}}) {
    auto s = three_sum(k33, 0, k33, 0, m);
    auto d1 = k33.darts(0);
    auto d2 = k33.darts(0);
    for (int i = 0; i < 3; ++i) {
      VertexId a = s.vmap1[k33.across(d1[i])];
      VertexId b = s.vmap2[k33.across(d2[m[i]])];
      EXPECT_GT(s.graph.graph().multiplicity(a, b), 0);
    }
  }
}

TEST(ThreeSum, Errors) {
  auto k4 = named("K4");
  auto expect_code = [](auto f, Errc code) {
    try {
      f();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  auto gadget = fixture::loop_gadget();
  expect_code([&] { three_sum(gadget, gadget.order() - 1, k4, 0); }, Errc::RootHasLoop);
  expect_code([&] { three_sum(gadget, 0, k4, 0); }, Errc::NotBridgeless);
  expect_code([&] { three_sum(k4, 0, k4, 0, {0, 0, 1}); }, Errc::InvalidArgument);
}

TEST(SplitAtThreeCut, InvertsThreeSum) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto a = fixture::random_factor_sum(seed, 2);
    auto cuts = nontrivial_three_cuts(a.graph);
    ASSERT_FALSE(cuts.empty());
    for (const auto& w : cuts) {
      auto split = split_at_three_cut(a.graph, w.cut);
      EXPECT_EQ(split.side1.order() + split.side2.order(), a.graph.order() + 2);
      EXPECT_EQ(split.root1, split.side1.order() - 1);
      EXPECT_EQ(split.root2, split.side2.order() - 1);
      // Root dart i of each side belongs to cut edge i.
      Matching3 m{0, 1, 2};
      auto back = three_sum(split.side1, split.root1, split.side2, split.root2, m);
      EXPECT_TRUE(is_isomorphic(back.graph, a.graph));
      for (VertexId v = 0; v < a.graph.order(); ++v)
        EXPECT_NE(split.vmap1[v] >= 0, split.vmap2[v] >= 0);
    }
  }
  EXPECT_THROW(split_at_three_cut(named("K4"), delta_cut(named("K4"), VertexSet(4, {0}))), Error);
}

TEST(CanonicalDecomposition, RecoversFactorMultiset) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto a = fixture::random_factor_sum(seed, 2 + static_cast<int>(seed % 3));
    for (auto order : {SplitOrder::First, SplitOrder::Last, SplitOrder::Random}) {
      auto t = canonical_decomposition(a.graph, {order, seed, 64});
      EXPECT_EQ(t.sorted_codes(), a.factor_codes) << "seed " << seed;
      for (const auto& f : t.factors()) EXPECT_TRUE(is_c4c(f));
    }
  }
}

TEST(CanonicalDecomposition, C4CGraphIsItsOwnFactor) {
  auto t = canonical_decomposition(named("Petersen"));
  ASSERT_EQ(t.factor_nodes.size(), 1u);
  EXPECT_EQ(t.odd_factor_count(), 0);
  EXPECT_THROW(canonical_decomposition(F1()), Error);
}

TEST(CanonicalDecomposition, OddFactorCount) {
  auto t = canonical_decomposition(named("prism"));
  EXPECT_EQ(t.factor_nodes.size(), 2u);
  EXPECT_EQ(t.odd_factor_count(), 2);
  EXPECT_EQ(canonical_decomposition(fixture::k33_pair()).odd_factor_count(), 0);
}

TEST(Recombination, RebuildsTheInput) {
  for (std::uint64_t seed = 40; seed < 55; ++seed) {
    auto a = fixture::random_factor_sum(seed, 3);
    auto t = canonical_decomposition(a.graph, {SplitOrder::Random, seed, 64});
    auto r = recombine(t);
    EXPECT_TRUE(recombination_matches(a.graph, r)) << seed;
    EXPECT_TRUE(is_isomorphic(r.graph, a.graph));
  }
}

TEST(EdgeExtension, ReductionUndoesExtension) {
  for (auto& g : c4c_census(10)) {
    for (EdgeId e = 0; e < g.size(); ++e)
      for (EdgeId f = e + 1; f < g.size(); ++f) {
        auto [a, b] = g.ends(e);
        auto [c, d] = g.ends(f);
        if (a == c || a == d || b == c || b == d) {
          EXPECT_THROW(edge_extension(g, e, f), Error);
          continue;
        }
        auto ext = edge_extension(g, e, f);
        EXPECT_EQ(ext.graph.order(), g.order() + 2);
        auto red = edge_reduction(ext.graph, ext.added);
        EXPECT_TRUE(oracle::isomorphic(red.graph, g));
      }
  }
}

TEST(ReductionChain, EndsInK4OrQ3) {
  for (auto& g : c4c_census(10)) {
    if (!g.graph().is_simple() || detail::is_named(g, "K4") || detail::is_named(g, "Q3")) continue;
    auto chain = find_reduction_chain(g);
    EXPECT_TRUE(chain.terminal == "K4" || chain.terminal == "Q3");
    int n = g.order();
    for (const auto& s : chain.steps) {
      EXPECT_EQ(s.result.order(), n - 2);
      EXPECT_TRUE(is_c4c(s.result));
      EXPECT_TRUE(s.result.graph().is_simple());
      n -= 2;
    }
  }
  EXPECT_EQ(find_reduction_chain(named("Petersen")).steps.size(), 3u);
  EXPECT_THROW(find_reduction_chain(named("prism")), Error);
  EXPECT_THROW(find_reduction_chain(named("Q3")), Error);
}

TEST(CoherentC4C, EveryC4CGraphUpToTen) {
  for (auto& g : c4c_census(10)) {
    auto p = coherent_partition_c4c(g);
    auto cls = classify_partition(g, p.A, p.J);
    EXPECT_TRUE(cls.coherent) << to_edgelist(g);
    EXPECT_EQ(cls.type, g.order() % 4 == 0 ? PartitionType::TreeNearIndependent : PartitionType::TreeIndependent);
  }
}

TEST(CoherentC4C, RandomExtensions) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = fixture::random_c4c_extension(seed, 14);
    auto p = coherent_partition_c4c(g);
    EXPECT_TRUE(classify_partition(g, p.A, p.J).coherent) << to_edgelist(g);
  }
}

TEST(Compose, CoherentPartitionSurvivesThreeSum) {
  auto pet = named("Petersen");
  auto ph = coherent_partition_c4c(pet);
  for (auto* name : {"K33", "Petersen"}) {
    auto k = named(name);
    for (VertexId x = 0; x < pet.order(); ++x) {
      auto c = compose_coherent_over_three_sum(pet, x, k, 0, {0, 1, 2}, ph);
      EXPECT_TRUE(classify_partition(c.sum.graph, c.partition.A, c.partition.J).coherent);
    }
  }
  EXPECT_THROW(compose_coherent_over_three_sum(pet, 0, named("K4"), 0, {0, 1, 2}, ph), Error);
}

TEST(Coherent3Connected, Routes) {
  auto pet = coherent_partition_3connected(named("Petersen"));
  EXPECT_EQ(pet.status, SearchStatus::Found);
  EXPECT_EQ(pet.route, "decomposition");

  auto pair = coherent_partition_3connected(fixture::k33_pair());
  ASSERT_EQ(pair.status, SearchStatus::Found);
  EXPECT_EQ(pair.partition->cls.type, PartitionType::TreeIndependent);

  auto prism = coherent_partition_3connected(named("prism"));
  EXPECT_EQ(prism.status, SearchStatus::Unknown);
  EXPECT_FALSE(prism.reason.empty());
  auto fb = coherent_partition_3connected(named("prism"), true);
  EXPECT_EQ(fb.status, SearchStatus::Found);
  EXPECT_EQ(fb.route, "fallback-search");
  EXPECT_THROW(coherent_partition_3connected(fixture::bridged8()), Error);
}

TEST(Coherent3Connected, RandomSumsWithEvenFactors) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto a = fixture::random_factor_sum(seed, 3);
    auto t = canonical_decomposition(a.graph);
    auto out = coherent_partition_3connected(a.graph);
    if (t.odd_factor_count() <= 1) {
      ASSERT_EQ(out.status, SearchStatus::Found) << seed;
      EXPECT_TRUE(classify_partition(a.graph, out.partition->A, out.partition->J).coherent);
    } else {
      EXPECT_FALSE(out.reason.empty());
    }
  }
}

TEST(TwoSum, LayoutAndCrossing) {
  auto k4 = named("K4");
  auto s = two_sum(k4, 0, k4, 0);
  EXPECT_EQ(s.graph.order(), 8);
  EXPECT_EQ(s.principal_cut.to_vector(), (std::vector<int>{10, 11}));
  auto x = two_sum(k4, 0, k4, 0, true);
  EXPECT_EQ(x.graph.ends(10).v, 5);
}

TEST(OddTwoSum, TightInputsGiveTightResult) {
  auto d = named("digon8");
  for (bool crossed : {false, true}) {
    auto s = odd_two_sum(d, 1, d, 1, crossed);
    EXPECT_EQ(s.graph.order(), 16);
    EXPECT_EQ(classify_upper_embeddable(s.graph).face, FaceClass::TwoFace);
    EXPECT_EQ(find_coherent_partition(s.graph).status, SearchStatus::NoneExists);
  }
  auto expect_not_odd = [](auto f) {
    try {
      f();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotOddEdge);
    }
  };
  expect_not_odd([&] { odd_two_sum(named("L4"), 0, named("L4"), 0); });
  expect_not_odd([&] { odd_two_sum(d, 0, d, 1); });
  expect_not_odd([&] { odd_two_sum(named("Petersen"), 0, d, 1); });
}
