#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace ufact;
namespace g = ufact::graphs;

namespace {

Property forb(const std::string& name, std::vector<Hypergraph> fs) {
  return Property::forbidden(name, simple_graph_universe(), fs);
}
Property prop_o() { return forb("O", {g::complete(2)}); }
Property prop_t() { return forb("T", {g::complete(3)}); }
Property prop_p3() { return forb("P3free", {g::path(3)}); }
Property prop_oo() { return Property::product("OO", {prop_o(), prop_o()}); }

std::vector<Hypergraph> parts_of(const Hypergraph& h, const Blocks& blocks) {
  std::vector<Hypergraph> out;
  for (const VertexSet& b : blocks) out.push_back(induced(h, b));
  return out;
}

Blocks random_blocks(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<int> label(n);
  for (int& x : label) x = pick(rng);
  Blocks out(k);
  for (Vertex v = 0; v < n; ++v) out[label[v]].push_back(v);
  out.erase(std::remove_if(out.begin(), out.end(), [](const VertexSet& s) { return s.empty(); }), out.end());
  return out;
}

// Strictness from the definition: some member of G * K1 leaves P.
bool strict_by_join(const std::vector<Hypergraph>& forbidden, const Hypergraph& h) {
  if (!oracle::member(forbidden, h)) return false;
  std::vector<Hypergraph> parts = {h, g::empty(1)};
  for (const Hypergraph& m : join_members(parts))
    if (!oracle::member(forbidden, m)) return true;
  return false;
}

}  // namespace

TEST(Decomposition, Validation) {
  EXPECT_THROW(Decomposition(3, {{0, 1}}), PreconditionError);
  EXPECT_THROW(Decomposition(3, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(Decomposition(2, {{0, 1}, {}}), PreconditionError);
  Decomposition d(4, {{3, 1}, {2, 0}});
  EXPECT_EQ(d[0], (VertexSet{1, 3}));
  EXPECT_EQ(d.labels(), (std::vector<int>{1, 0, 1, 0}));
  EXPECT_TRUE(d.same_partition(Decomposition(4, {{0, 2}, {1, 3}})));
  EXPECT_EQ(to_string(d), "{1,3}|{0,2}");
  EXPECT_EQ(Decomposition::from_labels({0, 1, 0, 1}).parts(), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
}

TEST(Decomposer, ModeSelection) {
  EXPECT_EQ(Decomposer(prop_t()).mode(), JoinMode::Exact);
  EXPECT_EQ(Decomposer(prop_t()).confidence(), Confidence::Exact);
  Decomposer oo(prop_oo());
  EXPECT_EQ(oo.mode(), JoinMode::Bounded);
  EXPECT_EQ(oo.confidence(), Confidence::Bounded);
  EXPECT_EQ(oo.witness_size(), kDefaultMaxVertices);
  EXPECT_EQ(oo.family().size(), 3u);
}

TEST(JoinCriterion, ExactAgreesWithBruteForceOnRandomInputs) {
  std::mt19937 rng(31337);
  for (const Property& p : {prop_o(), prop_t(), prop_p3(), forb("X", {g::cycle(4), g::complete(3)})}) {
    Decomposer dp(p);
    int largest = 0;
    for (const Hypergraph& f : p.forbidden_graphs()) largest = std::max(largest, f.order());
    for (int trial = 0; trial < 150; ++trial) {
      Hypergraph h = oracle::random_graph(rng, 2 + trial % 5, 0.35);
      if (!member(p, h)) continue;
      auto parts = parts_of(h, random_blocks(rng, h.order(), 1 + trial % 3));
      EXPECT_EQ(dp.join_subset_of(parts).contained,
                join_subset_bruteforce(p, parts, largest, largest).contained)
          << p.name() << " " << g::describe(h);
    }
  }
}

TEST(JoinCriterion, BruteForceAgreesWithLiteralJoins) {
  // Tiny inputs where every join member can be listed.
  for (const Property& p : {prop_o(), prop_t(), prop_p3()}) {
    for (const Hypergraph& a : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 2, 1}))
      for (const Hypergraph& b : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 1, 1})) {
        std::vector<Hypergraph> parts = {a, b};
        bool literal = oracle::join_free(p.forbidden_graphs(), parts, 2);
        EXPECT_EQ(join_subset_bruteforce(p, parts, 2, 3).contained, literal);
        EXPECT_EQ(join_subset_literal(p, parts, 2), literal);
      }
  }
}

TEST(JoinCriterion, WitnessEmbedsInParts) {
  Decomposer t(prop_t());
  std::vector<Hypergraph> parts = {g::complete(2), g::empty(1)};
  JoinResult r = t.join_subset_of(parts);
  ASSERT_FALSE(r.contained);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(is_isomorphic(r.witness->forbidden, g::complete(3)));
  for (const Placement& pl : r.witness->placements)
    EXPECT_TRUE(is_induced_subgraph(induced(r.witness->forbidden, pl.vertices), parts[pl.part]));
}

TEST(Dec, KnownValues) {
  Decomposer t(prop_t()), o(prop_o());
  EXPECT_EQ(t.dec(g::complete(3)).value, 0);
  EXPECT_EQ(t.dec(g::complete(2)).value, 2);
  EXPECT_EQ(t.dec(g::cycle(4)).value, 2);
  EXPECT_EQ(t.dec(g::cycle(5)).value, 1);
  EXPECT_EQ(t.dec(g::matching(2)).value, 2);
  EXPECT_EQ(o.dec(g::empty(1)).value, 1);
  EXPECT_EQ(o.dec(g::empty(3)).value, 1);
  EXPECT_EQ(t.dec(Hypergraph()).value, 0);
  DecResult c4 = t.dec(g::cycle(4));
  ASSERT_TRUE(c4.best);
  EXPECT_TRUE(c4.best->same_partition(Decomposition(4, {{0, 2}, {1, 3}})));
}

TEST(Dec, LatticeMatchesDirectScan) {
  std::mt19937 rng(77);
  for (const Property& p : {prop_o(), prop_t(), prop_p3()}) {
    Decomposer dp(p);
    for (const Hypergraph& h : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 5, 1})) {
      if (!member(p, h)) continue;
      int best = 0;
      for (int n = 1; n <= h.order(); ++n) {
        auto lattice = dp.all_decompositions(h, n);
        auto scan = dp.scan_decompositions(h, n);
        ASSERT_EQ(lattice.size(), scan.size()) << p.name() << " " << g::describe(h) << " n=" << n;
        for (std::size_t i = 0; i < scan.size(); ++i) {
          bool found = std::any_of(lattice.begin(), lattice.end(),
                                   [&](const Decomposition& d) { return d.same_partition(scan[i]); });
          EXPECT_TRUE(found);
        }
        if (!scan.empty()) best = n;
      }
      EXPECT_EQ(dp.dec(h).value, best);
      EXPECT_LT(best, f_value(p));
    }
  }
}

TEST(Dec, BruteForceModeAgrees) {
  Decomposer exact(prop_t());
  JoinOptions o;
  o.witness_size = 3;
  Decomposer brute(prop_t(), JoinMode::BruteForce, o);
  for (const Hypergraph& h : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 4, 1})) {
    if (!member(prop_t(), h)) continue;
    EXPECT_EQ(exact.dec(h).value, brute.dec(h).value) << g::describe(h);
  }
}

TEST(Dec, BoundedModeForBipartite) {
  JoinOptions o;
  o.witness_size = 5;
  Decomposer oo(prop_oo(), o);
  EXPECT_EQ(oo.dec(g::cycle(4)).value, 2);
  EXPECT_EQ(oo.dec(g::empty(3)).value, 2);
  EXPECT_EQ(oo.dec(g::cycle(5)).value, 0);
  EXPECT_EQ(oo.dec(g::cycle(4)).confidence, Confidence::Bounded);
  EXPECT_TRUE(oo.is_uniquely_decomposable(g::path(4)));
  EXPECT_FALSE(oo.is_uniquely_decomposable(g::matching(2)));
}

TEST(Strict, MatchesJoinDefinition) {
  for (const Property& p : {prop_o(), prop_t(), prop_p3()}) {
    Decomposer dp(p);
    for (const Hypergraph& h : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 5, 1})) {
      StrictResult s = dp.is_strict(h);
      EXPECT_EQ(s.strict, strict_by_join(p.forbidden_graphs(), h)) << p.name() << " " << g::describe(h);
      if (s.strict) {
        ASSERT_TRUE(s.witness);
        VertexSet rest;
        for (Vertex v = 0; v < s.witness->forbidden.order(); ++v)
          if (v != s.witness->removed) rest.push_back(v);
        Hypergraph minus = induced(s.witness->forbidden, rest);
        EXPECT_TRUE(is_isomorphic(induced(h, s.witness->embedding.image()), minus));
      }
    }
  }
}

TEST(Strict, Strictify) {
  Decomposer t(prop_t());
  EXPECT_TRUE(t.is_strict(g::complete(2)).strict);
  EXPECT_FALSE(t.is_strict(g::empty(1)).strict);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph h = oracle::random_graph(rng, 1 + trial % 5, 0.3);
    if (!member(prop_t(), h)) continue;
    Hypergraph s = t.strictify(h);
    EXPECT_TRUE(t.is_strict(s).strict);
    EXPECT_TRUE(is_induced_subgraph(h, s));
    EXPECT_TRUE(member(prop_t(), s));
  }
  EXPECT_THROW(t.strictify(g::complete(3)), PreconditionError);
}

TEST(Strict, BruteForceModeUsesJoin) {
  JoinOptions o;
  o.witness_size = 3;
  Decomposer brute(prop_t(), JoinMode::BruteForce, o);
  Decomposer exact(prop_t());
  for (const Hypergraph& h : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 4, 1}))
    EXPECT_EQ(brute.is_strict(h).strict, exact.is_strict(h).strict);
}

TEST(Unique, DecompositionAndIndParts) {
  Decomposer t(prop_t());
  EXPECT_TRUE(t.is_uniquely_decomposable(g::cycle(4)));
  Decomposition d = t.unique_decomposition(g::cycle(4));
  EXPECT_TRUE(d.same_partition(Decomposition(4, {{0, 2}, {1, 3}})));
  auto parts = t.ind_parts(g::cycle(4));
  ASSERT_EQ(parts.size(), 2u);
  for (const Hypergraph& p : parts) EXPECT_TRUE(is_isomorphic(p, g::empty(2)));
  EXPECT_EQ(t.multiplicity(g::empty(2), g::cycle(4)), 2);
  EXPECT_EQ(t.multiplicity(g::complete(2), g::cycle(4)), 0);
  EXPECT_FALSE(t.is_uniquely_decomposable(g::complete(3)));
  EXPECT_FALSE(t.is_uniquely_decomposable(g::matching(2)));
  EXPECT_THROW(t.unique_decomposition(g::matching(2)), PreconditionError);
}

TEST(Coarsening, MergesOfDecompositionsAreDecompositions) {
  for (const Property& p : {prop_t(), prop_p3()}) {
    Decomposer dp(p);
    for (const Hypergraph& h : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 5, 2})) {
      if (!member(p, h)) continue;
      for_each_partition(h.order(), 2, h.order(), true, [&](const Blocks& blocks) {
        if (!dp.is_decomposition(h, Decomposition(h.order(), blocks))) return;
        for (std::size_t a = 1; a < blocks.size(); ++a) {
          Blocks merged = blocks;
          merged[0].insert(merged[0].end(), merged[a].begin(), merged[a].end());
          merged.erase(merged.begin() + a);
          EXPECT_TRUE(dp.is_decomposition(h, Decomposition(h.order(), merged)));
        }
      });
    }
  }
}

TEST(Respects, Helpers) {
  Decomposition d0(2, {{0}, {1}});
  EXPECT_TRUE(respects(Decomposition(2, {{0}, {1}}), d0));
  EXPECT_FALSE(respects(Decomposition(2, {{0, 1}}), d0));
  // Two copies of K2: vertices 0,1 and 2,3.
  std::vector<std::vector<Vertex>> copies = {{0, 1}, {2, 3}};
  EXPECT_TRUE(respects_uniformly(Decomposition(4, {{0, 2}, {1, 3}}), d0, copies));
  EXPECT_FALSE(respects_uniformly(Decomposition(4, {{0, 3}, {1, 2}}), d0, copies));
  EXPECT_TRUE(restrict_to_copy(Decomposition(4, {{0, 3}, {1, 2}}), copies[1]).same_partition(d0));
}
