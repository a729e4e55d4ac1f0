#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace ufact;
namespace g = ufact::graphs;

namespace {

UniversePtr mixed_universe() {
  return make_universe({EdgeKind::Unordered, EdgeKind::Ordered}, {2, 3}, {"red", "blue"});
}

Hypergraph random_mixed(std::mt19937& rng, int n) {
  UniversePtr u = mixed_universe();
  std::vector<Edge> all = candidate_edges(*u, n, [](const Edge&) { return true; }, 10'000);
  std::bernoulli_distribution coin(0.08);
  std::vector<Edge> edges;
  for (const Edge& e : all)
    if (coin(rng)) edges.push_back(e);
  return Hypergraph(u, n, edges);
}

}  // namespace

TEST(Universe, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(make_universe({EdgeKind::Unordered}, {1}, {"e"}), PreconditionError);
  EXPECT_THROW(make_universe({}, {2}, {"e"}), PreconditionError);
  EXPECT_THROW(make_universe({EdgeKind::Unordered}, {2}, {}), PreconditionError);
  EXPECT_THROW(make_universe({EdgeKind::Unordered}, {2}, {"a", "a"}), PreconditionError);
  UniversePtr u = make_universe({EdgeKind::Ordered, EdgeKind::Unordered, EdgeKind::Ordered}, {3, 2, 3}, {"x"});
  EXPECT_EQ(u->kinds().size(), 2u);
  EXPECT_EQ(u->arities(), (std::vector<int>{2, 3}));
  EXPECT_EQ(u->max_arity(), 3);
  EXPECT_EQ(u->find_colour("x"), 0);
  EXPECT_EQ(u->find_colour("y"), -1);
}

TEST(Universe, StructuralEquality) {
  EXPECT_TRUE(same_universe(simple_graph_universe(), make_universe({EdgeKind::Unordered}, {2}, {"e"})));
  EXPECT_FALSE(same_universe(simple_graph_universe(), mixed_universe()));
}

TEST(Hypergraph, ValidatesEdges) {
  UniversePtr u = simple_graph_universe();
  EXPECT_THROW(Hypergraph(u, 2, {make_edge(EdgeKind::Unordered, {0, 2})}), PreconditionError);
  EXPECT_THROW(Hypergraph(u, 2, {make_edge(EdgeKind::Unordered, {1, 1})}), PreconditionError);
  EXPECT_THROW(Hypergraph(u, 2, {make_edge(EdgeKind::Ordered, {0, 1})}), PreconditionError);
  EXPECT_THROW(Hypergraph(u, 3, {make_edge(EdgeKind::Unordered, {0, 1, 2})}), PreconditionError);
  EXPECT_THROW(Hypergraph(u, 2, {make_edge(EdgeKind::Unordered, {0, 1}, 1)}), PreconditionError);
  EXPECT_THROW(Hypergraph(u, 2, {make_edge(EdgeKind::Unordered, {0, 1}), make_edge(EdgeKind::Unordered, {1, 0})}),
               PreconditionError);
  EXPECT_THROW(Hypergraph(u, -1), PreconditionError);
}

TEST(Hypergraph, OrderedEdgesKeepDirection) {
  UniversePtr u = mixed_universe();
  Hypergraph h(u, 2, {make_edge(EdgeKind::Ordered, {1, 0}), make_edge(EdgeKind::Ordered, {0, 1})});
  EXPECT_EQ(h.size(), 2);
  Hypergraph one(u, 2, {make_edge(EdgeKind::Ordered, {1, 0})});
  EXPECT_FALSE(one.has_edge(make_edge(EdgeKind::Ordered, {0, 1})));
  EXPECT_TRUE(one.has_edge(make_edge(EdgeKind::Ordered, {1, 0})));
}

TEST(Hypergraph, InducedAndComponents) {
  Hypergraph c5 = g::cycle(5);
  Hypergraph p = induced(c5, {0, 1, 2});
  EXPECT_EQ(p, g::path(3));
  Hypergraph two = induced(c5, {0, 1, 3});
  EXPECT_EQ(two.size(), 1);
  EXPECT_EQ(connected_components(two).size(), 2u);
  EXPECT_TRUE(is_connected(c5));
  EXPECT_EQ(connected_components(g::empty(4)).size(), 4u);
  Hypergraph u = disjoint_union(g::complete(2), g::complete(3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.size(), 4);
  EXPECT_EQ(replicate(3, g::complete(2)), g::matching(3));
}

TEST(Hypergraph, ComponentsThroughHyperedges) {
  UniversePtr u = mixed_universe();
  Hypergraph h(u, 5, {make_edge(EdgeKind::Ordered, {4, 0, 2})});
  auto comps = connected_components(h);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (VertexSet{0, 2, 4}));
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph h = oracle::random_graph(rng, 1 + trial % 8, 0.4);
    Hypergraph r = oracle::random_relabel(rng, h);
    EXPECT_EQ(canonical_form(h), canonical_form(r));
    EXPECT_EQ(canonical_code(h), canonical_code(r));
  }
}

TEST(Canonical, MixedUniverseInvariantUnderRelabelling) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Hypergraph h = random_mixed(rng, 2 + trial % 5);
    EXPECT_EQ(canonical_form(h), canonical_form(oracle::random_relabel(rng, h)));
  }
}

TEST(Canonical, AgreesWithPermutationOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 5;
    Hypergraph a = oracle::random_graph(rng, n, 0.5);
    Hypergraph b = oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b));
  }
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 4;
    Hypergraph a = random_mixed(rng, n), b = random_mixed(rng, n);
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b));
  }
}

TEST(Canonical, RegularGraphsNeedIndividualisation) {
  // C6 and two triangles share degree sequences; the Petersen-free pair K3,3 vs prism too.
  EXPECT_FALSE(is_isomorphic(g::cycle(6), disjoint_union(g::cycle(3), g::cycle(3))));
  Hypergraph prism = g::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(is_isomorphic(prism, g::complete_bipartite(3, 3)));
  EXPECT_TRUE(is_isomorphic(g::cycle(6), relabel(g::cycle(6), {3, 5, 1, 0, 2, 4})));
}

TEST(Canonical, CanonicalSetDeduplicates) {
  std::vector<Hypergraph> in = {g::path(3), relabel(g::path(3), {1, 0, 2}), g::complete(2), g::empty(2)};
  EXPECT_EQ(canonical_set(in).size(), 3u);
}

TEST(Embed, CountsMatchOracle) {
  std::mt19937 rng(4321);
  for (int trial = 0; trial < 150; ++trial) {
    Hypergraph f = oracle::random_graph(rng, 1 + trial % 4, 0.5);
    Hypergraph h = oracle::random_graph(rng, 3 + trial % 4, 0.5);
    int count = 0;
    for_each_embedding(f, h, [&](const Embedding& e) {
      EXPECT_EQ(induced(h, e.image()).order(), f.order());
      ++count;
      return true;
    });
    EXPECT_EQ(count, oracle::count_embeddings(f, h));
    EXPECT_EQ(is_induced_subgraph(f, h), count > 0);
  }
}

TEST(Embed, MixedCountsMatchOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    Hypergraph h = random_mixed(rng, 4);
    Hypergraph f = induced(h, {0, 2, 3});
    int count = 0;
    for_each_embedding(f, h, [&](const Embedding&) {
      ++count;
      return true;
    });
    EXPECT_EQ(count, oracle::count_embeddings(f, h));
    EXPECT_GE(count, 1);
  }
}

TEST(Embed, InducedNotJustSubgraph) {
  EXPECT_FALSE(is_induced_subgraph(g::path(3), g::complete(3)));
  EXPECT_TRUE(is_induced_subgraph(g::path(3), g::cycle(4)));
  EXPECT_FALSE(is_induced_subgraph(g::empty(2), g::complete(4)));
  EXPECT_THROW(is_induced_subgraph(g::complete(2), Hypergraph(mixed_universe(), 2)), PreconditionError);
}

TEST(Embed, StopsWhenVisitorReturnsFalse) {
  int seen = 0;
  for_each_embedding(g::complete(2), g::complete(4), [&](const Embedding&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
}

TEST(Join, MemberCountAndParts) {
  std::vector<Hypergraph> parts = {g::complete(2), g::empty(1)};
  JoinStream stream(parts);
  EXPECT_EQ(stream.crossing_candidates().size(), 2u);
  std::vector<Hypergraph> members = join_members(parts);
  ASSERT_EQ(members.size(), 4u);
  for (const Hypergraph& m : members) {
    EXPECT_EQ(induced(m, {0, 1}), g::complete(2));
    EXPECT_EQ(induced(m, {2}), g::empty(1));
  }
  // Binary-counting order: candidate 0 toggles first.
  EXPECT_EQ(members[0].size(), 1);
  EXPECT_EQ(members[3].size(), 3);
  std::set<std::vector<Edge>> distinct;
  for (const Hypergraph& m : members) distinct.insert(m.edges());
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(Join, CrossingEdgesInHypergraphUniverse) {
  UniversePtr u = make_universe({EdgeKind::Unordered}, {3}, {"e"});
  std::vector<Hypergraph> parts = {Hypergraph(u, 2), Hypergraph(u, 2)};
  // Every 3-subset of 4 vertices meets both blocks.
  EXPECT_EQ(JoinStream(parts).crossing_candidates().size(), 4u);
}

TEST(Join, CapsAreEnforced) {
  std::vector<Hypergraph> parts = {g::empty(6), g::empty(6)};
  EXPECT_THROW(JoinStream(parts, 10), CapExceeded);
  std::vector<Hypergraph> big = {g::empty(10), g::empty(10)};
  EXPECT_THROW(JoinStream{big}, CapExceeded);
}

TEST(StandardGraphs, Describe) {
  EXPECT_EQ(g::describe(g::complete(3)), "K3");
  EXPECT_EQ(g::describe(g::cycle(5)), "C5");
  EXPECT_EQ(g::describe(g::matching(2)), "2K2");
  EXPECT_EQ(g::describe(g::empty(3)), "3K1");
  EXPECT_EQ(g::describe(g::path(4)), "P4");
  EXPECT_EQ(g::describe(relabel(g::cycle(4), {2, 0, 3, 1})), "C4");
}
