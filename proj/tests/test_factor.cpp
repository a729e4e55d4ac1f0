#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ufact;
namespace g = ufact::graphs;

namespace {

Property forb(const std::string& name, std::vector<Hypergraph> fs) {
  return Property::forbidden(name, simple_graph_universe(), fs);
}
Property prop_o() { return forb("O", {g::complete(2)}); }
Property prop_t() { return forb("T", {g::complete(3)}); }
Property prop_oo() { return Property::product("OO", {prop_o(), prop_o()}); }
Property prop_bip() { return forb("B", {g::complete(3), g::cycle(5)}); }

}  // namespace

TEST(Verify, MatchesProductOracle) {
  std::vector<std::vector<Hypergraph>> fams = {{g::complete(2)}, {g::complete(2)}};
  VerifyResult r = verify_factorisation(prop_bip(), {prop_o(), prop_o()}, 5);
  bool oracle_equal = true;
  for (const Hypergraph& h : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 5, 0}))
    oracle_equal = oracle_equal && oracle::member({g::complete(3), g::cycle(5)}, h) == oracle::product_member(fams, h);
  EXPECT_EQ(r.equal, oracle_equal);
  EXPECT_TRUE(r.equal);
  VerifyResult bad = verify_factorisation(prop_t(), {prop_o(), prop_o()}, 5);
  EXPECT_FALSE(bad.equal);
  ASSERT_TRUE(bad.counterexample);
  EXPECT_NE(member(prop_t(), *bad.counterexample).member, member(prop_oo(), *bad.counterexample).member);
  EXPECT_THROW(verify_factorisation(prop_t(), {}, 3), PreconditionError);
}

TEST(DecBounds, SmallProperties) {
  DecBounds o = dec_bounds(prop_o(), 5);
  EXPECT_EQ(o.lower, 1);
  EXPECT_EQ(o.upper, 1);
  ASSERT_TRUE(o.upper_witness);
  EXPECT_TRUE(is_isomorphic(*o.upper_witness, g::empty(1)));
  DecBounds t = dec_bounds(prop_t(), 5);
  EXPECT_EQ(t.upper, 1);
  ASSERT_TRUE(t.upper_witness);
  EXPECT_TRUE(is_isomorphic(*t.upper_witness, g::cycle(5)));
  DecBounds oo = dec_bounds(prop_oo(), 5);
  EXPECT_EQ(oo.lower, 2);
  EXPECT_EQ(oo.upper, 2);
  EXPECT_EQ(oo.confidence, Confidence::Bounded);
}

TEST(DecBounds, UpperIsMinimumOverStrictGraphs) {
  Decomposer t(prop_t());
  int best = 0;
  for (const Hypergraph& h : enumerate_hypergraphs(EnumSpec{simple_graph_universe(), 5, 1}))
    if (t.is_strict(h).strict) {
      int d = t.dec(h).value;
      if (best == 0 || d < best) best = d;
    }
  EXPECT_EQ(dec_bounds(prop_t(), 5).upper, best);
}

TEST(Irreducibility, Verdicts) {
  IrreducibilityResult o = irreducibility_test(prop_o(), 5);
  EXPECT_EQ(o.verdict, Verdict::IrreducibleCertified);
  IrreducibilityResult t = irreducibility_test(prop_t(), 5);
  EXPECT_EQ(t.verdict, Verdict::IrreducibleCertified);
  IrreducibilityResult oo = irreducibility_test(prop_oo(), 5);
  EXPECT_EQ(oo.verdict, Verdict::Reducible);
  ASSERT_TRUE(oo.factorisation);
  EXPECT_EQ(oo.factorisation->factors.size(), 2u);
  EXPECT_EQ(to_string(Verdict::IrreducibleCertified), "IRREDUCIBLE_CERTIFIED");
}

TEST(Candidates, AntichainsOfConnectedGraphs) {
  auto c2 = candidate_factors(simple_graph_universe(), 2);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2.front().name(), "Q1");
  auto c3 = candidate_factors(simple_graph_universe(), 3);
  // Connected graphs on 2..3 vertices: K2, P3, K3. K2 lies in both others.
  EXPECT_EQ(c3.size(), 4u);
  for (const Property& q : c3) {
    const auto& fs = q.forbidden_graphs();
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (i != j) {
          EXPECT_FALSE(oracle::induced_subgraph(fs[i], fs[j]));
        }
  }
}

TEST(FactorSearch, BipartiteIsOTimesO) {
  auto found = factor_search(prop_bip(), 2, 5);
  ASSERT_EQ(found.size(), 1u);
  ASSERT_EQ(found.front().factors.size(), 2u);
  for (const Property& q : found.front().factors) EXPECT_TRUE(verify_factorisation(prop_o(), {q}, 5).equal);
  EXPECT_TRUE(verify_factorisation(prop_bip(), found.front().factors, 5).equal);
  EXPECT_EQ(found.front().dec_lower, 2);
}

TEST(FactorSearch, IrreduciblesHaveNoFactorisation) {
  EXPECT_TRUE(factor_search(prop_o(), 2, 5).empty());
  EXPECT_TRUE(factor_search(prop_t(), 3, 5).empty());
}

TEST(FactorSearch, ThreadCountDoesNotChangeResult) {
  FactorOptions one, many;
  many.threads = 4;
  auto a = factor_search(prop_bip(), 2, 5, one);
  auto b = factor_search(prop_bip(), 2, 5, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].factors, b[i].factors);
}

TEST(IndParts, FamilyForBipartite) {
  IndPartFamily fam = ind_part_family(prop_oo(), 5);
  EXPECT_EQ(fam.dec, 2);
  EXPECT_FALSE(fam.generators.empty());
  Decomposer dp(prop_oo());
  for (const Hypergraph& h : fam.generators) {
    EXPECT_TRUE(dp.is_strict(h).strict);
    EXPECT_TRUE(dp.is_uniquely_decomposable(h));
  }
  // Every ind-part of a bipartite graph is an independent set.
  for (const Hypergraph& part : fam.parts) EXPECT_EQ(part.size(), 0);
  EXPECT_THROW(ind_part_family(forb("X", {g::matching(2)}), 4), PreconditionError);
}

TEST(CaseSplit, BipartiteByEdgeless) {
  CaseSplit s = case_split(prop_oo(), g::empty(3), 5);
  EXPECT_EQ(s.multiplicity, 1);
  EXPECT_TRUE(s.with_f.is_generated());
  EXPECT_TRUE(s.without_f.is_generated());
  EXPECT_EQ(s.with_f.name(), "OO_F");
  EXPECT_THROW(case_split(prop_oo(), g::complete(2), 5), PreconditionError);
}
