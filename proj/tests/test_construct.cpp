#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ufact;
namespace g = ufact::graphs;

namespace {

Property prop_t() { return Property::forbidden("T", simple_graph_universe(), {g::complete(3)}); }
Property prop_p3() { return Property::forbidden("P3free", simple_graph_universe(), {g::path(3)}); }

// Every decomposition of H whose restriction to copy 0 respects d0 must respect it uniformly.
void expect_construction1_postcondition(const Decomposer& dp, const CopyTracked& h, const Decomposition& d0) {
  for_each_partition(h.graph.order(), 1, h.graph.order(), true, [&](const Blocks& b) {
    Decomposition d(h.graph.order(), b);
    if (!respects(restrict_to_copy(d, h.copies[0]), d0)) return;
    if (!dp.is_decomposition(h.graph, d)) return;
    EXPECT_TRUE(respects_uniformly(d, d0, h.copies)) << to_string(d);
  });
}

}  // namespace

TEST(Construction1, K2GivesC4) {
  Decomposer t(prop_t());
  Decomposition d0(2, {{0}, {1}});
  CopyTracked h = construction1(g::complete(2), d0, t);
  EXPECT_TRUE(oracle::isomorphic(h.graph, g::cycle(4)));
  EXPECT_EQ(h.copy_count(), 2);
  EXPECT_TRUE(tracking_is_exact(h, g::complete(2)));
  EXPECT_EQ(h.vertex_class(), (std::vector<int>{0, 1, 0, 1}));
  expect_construction1_postcondition(t, h, d0);
}

TEST(Construction1, PostconditionOnSmallStrictGraphs) {
  for (const Property& p : {prop_t(), prop_p3()}) {
    Decomposer dp(p);
    for (const Hypergraph& base : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 4, 1})) {
      if (!dp.is_strict(base).strict) continue;
      for (const Decomposition& d0 : dp.all_decompositions(base, dp.dec(base).value)) {
        CopyTracked h = construction1(base, d0, dp);
        EXPECT_TRUE(member(p, h.graph));
        EXPECT_TRUE(tracking_is_exact(h, base));
        expect_construction1_postcondition(dp, h, d0);
      }
    }
  }
}

TEST(Construction1, Preconditions) {
  Decomposer t(prop_t());
  EXPECT_THROW(construction1(g::empty(1), Decomposition(1, {{0}}), t), PreconditionError);
  EXPECT_THROW(construction1(g::complete(2), Decomposition(3, {{0}, {1, 2}}), t), PreconditionError);
  Property o = Property::forbidden("O", simple_graph_universe(), {g::complete(2)});
  Decomposer oo(Property::product("OO", {o, o}));
  EXPECT_THROW(construction1(g::complete(2), Decomposition(2, {{0}, {1}}), oo), PreconditionError);
}

TEST(Construction2, TwoK2Gadget) {
  Decomposer t(prop_t());
  Hypergraph base = g::matching(2);
  Decomposition d0(4, {{0, 2}, {1, 3}});
  Decomposition dt(4, {{0, 3}, {1, 2}});
  Construction2Plan plan = construction2_plan(base, d0, dt, t);
  EXPECT_EQ(plan.k, 1);
  EXPECT_EQ(plan.classes.size(), 4u);
  CopyTracked h = construction2(base, d0, dt, t);
  EXPECT_EQ(h.graph.order(), 8);
  EXPECT_EQ(h.copy_count(), 2);
  EXPECT_TRUE(member(prop_t(), h.graph));
  EXPECT_TRUE(tracking_is_exact(h, base));
  // dt extended over both copies is no longer a decomposition.
  std::vector<int> lab = dt.labels();
  std::vector<int> ext(8);
  for (int c = 0; c < 2; ++c)
    for (Vertex v = 0; v < 4; ++v) ext[h.copies[c][v]] = lab[v];
  EXPECT_FALSE(t.is_decomposition(h.graph, Decomposition::from_labels(ext)));
  EXPECT_TRUE(t.is_decomposition(h.graph, h.extension(d0)));
  EXPECT_THROW(construction2(base, d0, d0, t), PreconditionError);
}

TEST(GStar, TwoK2) {
  Decomposer t(prop_t());
  Hypergraph base = g::matching(2);
  Decomposition d0(4, {{0, 2}, {1, 3}});
  CopyTracked h = g_star(base, d0, t);
  EXPECT_EQ(h.graph.order(), g_star_projected_size(4, 2, {1}));
  EXPECT_EQ(h.graph.order(), 16);
  EXPECT_TRUE(member(prop_t(), h.graph));
  EXPECT_TRUE(t.is_strict(h.graph).strict);
  EXPECT_TRUE(tracking_is_exact(h, base));
  auto scan = t.scan_decompositions(h.graph, 2);
  ASSERT_EQ(scan.size(), 1u);
  EXPECT_TRUE(scan.front().same_partition(h.extension(d0)));
  EXPECT_TRUE(respects_uniformly(scan.front(), d0, h.copies));
}

TEST(GStar, RespectingD0AlreadyUnique) {
  Decomposer t(prop_t());
  CopyTracked h = g_star(g::cycle(4), Decomposition(4, {{0, 2}, {1, 3}}), t);
  EXPECT_EQ(h.copy_count(), 1);
  EXPECT_EQ(h.graph, g::cycle(4));
}

TEST(GStar, SizeCap) {
  Decomposer t(prop_t());
  GStarOptions small;
  small.size_cap = 10;
  EXPECT_THROW(g_star(g::matching(2), Decomposition(4, {{0, 2}, {1, 3}}), t, small), CapExceeded);
  EXPECT_EQ(g_star_projected_size(5, 2, {}), 5);
  EXPECT_EQ(g_star_projected_size(4, 2, {1, 2}), 4 * (2 * 4 + 2));
}

TEST(UniqueSuper, Preconditions) {
  Decomposer t(prop_t());
  EXPECT_THROW(unique_super(g::matching(2), Decomposition(4, {{0, 1, 2, 3}}), t), PreconditionError);
}

TEST(UniqueRespectSuper, TwoK2) {
  Decomposer t(prop_t());
  Hypergraph base = g::matching(2);
  Decomposition d0(4, {{0, 2}, {1, 3}});
  CopyTracked h = unique_respect_super(base, d0, t);
  EXPECT_TRUE(tracking_is_exact(h, base));
  EXPECT_TRUE(t.is_uniquely_decomposable(h.graph));
  EXPECT_TRUE(t.is_strict(h.graph).strict);
  Decomposition u = t.unique_decomposition(h.graph);
  EXPECT_TRUE(respects_uniformly(u, d0, h.copies));
}

TEST(CopyTracked, ExtensionAndClasses) {
  Decomposer t(prop_t());
  CopyTracked h = construction1(g::complete(2), Decomposition(2, {{0}, {1}}), t);
  Decomposition ext = h.extension(Decomposition(2, {{0}, {1}}));
  EXPECT_EQ(ext.size(), 2);
  EXPECT_TRUE(t.is_decomposition(h.graph, ext));
  CopyTracked broken = h;
  std::swap(broken.copies[0][0], broken.copies[0][1]);
  EXPECT_TRUE(tracking_is_exact(broken, g::complete(2)));
  broken.copies[0] = {0, 0};
  EXPECT_FALSE(tracking_is_exact(broken, g::complete(2)));
}
