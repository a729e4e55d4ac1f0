#ifndef UFACT_FACTOR_HPP
#define UFACT_FACTOR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ufact/decomp.hpp"

namespace ufact {

struct FactorOptions {
  int threads = 1;
  int enumeration_cap = kDefaultMaxVertices;
  // Non-member size searched by the bounded decomposition engine (0: engine default).
  int witness_size = 0;
  int candidate_cap = 4096;
};

inline JoinOptions join_options(const FactorOptions& o) {
  JoinOptions j;
  j.threads = o.threads;
  j.witness_size = o.witness_size;
  j.enumeration_cap = std::max(o.enumeration_cap, o.witness_size);
  return j;
}

struct VerifyResult {
  bool equal = true;
  int bound = 0;
  std::optional<Hypergraph> counterexample;  // first graph on which membership differs
  explicit operator bool() const { return equal; }
};

/// Bounded extensional equality P = factors[0] o ... o factors[k-1] over all
/// hypergraphs with at most n vertices.
inline VerifyResult verify_factorisation(const Property& p, const std::vector<Property>& factors, int n,
                                         const FactorOptions& options = {}) {
  if (factors.empty()) throw PreconditionError("verify_factorisation: no factors");
  EnumSpec spec{p.universe_ptr(), n, 0, false, options.enumeration_cap};
  std::vector<Hypergraph> graphs = enumerate_hypergraphs(spec);
  std::vector<char> differs(graphs.size(), 0);
  parallel_for(graphs.size(), options.threads, [&](std::size_t i) {
    bool in_p = member(p, graphs[i]).member;
    bool in_q = factors.size() == 1 ? member(factors[0], graphs[i]).member
                                    : partition_solve(graphs[i], factors).has_value();
    differs[i] = in_p != in_q;
  });
  VerifyResult r{true, n, std::nullopt};
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (differs[i]) {
      r.equal = false;
      r.counterexample = graphs[i];
      break;
    }
  return r;
}

struct DecBounds {
  int lower = 1;
  int upper = 1;
  int bound = 0;
  // Strict graph attaining the upper bound; absent when the fallback f(P) - 1 was used.
  std::optional<Hypergraph> upper_witness;
  Confidence confidence = Confidence::Exact;
};

/// Bracket for dec(P). The upper end is the least dec_P over strict graphs
/// with at most n vertices; the lower end counts factors, since a product
/// of k properties has dec at least k, and sums over product factors.
inline DecBounds dec_bounds(const Property& p, int n, const FactorOptions& options = {}) {
  DecBounds b;
  b.bound = n;
  if (p.is_product()) {
    int sum = 0;
    for (const Property& f : p.as_product().factors) sum += dec_bounds(f, n, options).lower;
    b.lower = std::max(static_cast<int>(p.as_product().factors.size()), sum);
  }
  Decomposer dp(p, join_options(options));
  b.confidence = dp.confidence();
  EnumSpec spec{p.universe_ptr(), n, 1, false, options.enumeration_cap};
  std::optional<int> best;
  for (const Hypergraph& g : enumerate_hypergraphs(spec)) {
    if (!dp.is_strict(g).strict) continue;
    int d = dp.dec(g).value;
    if (!best || d < *best) {
      best = d;
      b.upper_witness = g;
      if (d <= b.lower) break;
    }
  }
  if (best) {
    b.upper = *best;
  } else {
    std::optional<int> f = f_value_bounded(p, n, options.enumeration_cap);
    if (!f) throw CapExceeded("dec_bounds: no strict graph and no non-member within " + std::to_string(n) + " vertices");
    b.upper = *f - 1;
  }
  b.lower = std::min(b.lower, b.upper);
  return b;
}

enum class Verdict { IrreducibleCertified, Reducible, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IrreducibleCertified: return "IRREDUCIBLE_CERTIFIED";
    case Verdict::Reducible: return "REDUCIBLE";
    default: return "UNKNOWN";
  }
}

struct Factorisation {
  std::vector<Property> factors;
  int equality_bound = 0;
  int dec_lower = 1;
  int dec_upper = 1;
};

struct IrreducibilityResult {
  Verdict verdict = Verdict::Unknown;
  DecBounds bounds;
  std::optional<Factorisation> factorisation;
};

namespace detail {

// Membership of every hypergraph up to n vertices: equal signatures mean equal up to n.
inline std::vector<char> signature(const Property& p, const std::vector<Hypergraph>& graphs) {
  std::vector<char> sig(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) sig[i] = member(p, graphs[i]).member;
  return sig;
}

inline void antichains(const std::vector<Hypergraph>& graphs, std::size_t from, std::vector<std::size_t>& chosen,
                       std::vector<std::vector<std::size_t>>& out, std::size_t cap) {
  for (std::size_t i = from; i < graphs.size(); ++i) {
    bool comparable = false;
    for (std::size_t j : chosen)
      if (is_induced_subgraph(graphs[j], graphs[i]) || is_induced_subgraph(graphs[i], graphs[j])) comparable = true;
    if (comparable) continue;
    chosen.push_back(i);
    out.push_back(chosen);
    if (out.size() > cap) throw CapExceeded("factor_search: candidate cap exceeded");
    antichains(graphs, i + 1, chosen, out, cap);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Forbidden-form candidate factors: antichains of connected hypergraphs
/// with 2..size vertices, in canonical order.
inline std::vector<Property> candidate_factors(const UniversePtr& universe, int size, const FactorOptions& options = {}) {
  EnumSpec spec{universe, size, 2, true, options.enumeration_cap};
  std::vector<Hypergraph> connected = enumerate_hypergraphs(spec);
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> chosen;
  detail::antichains(connected, 0, chosen, sets, static_cast<std::size_t>(options.candidate_cap));
  std::vector<Property> out;
  for (const auto& s : sets) {
    std::vector<Hypergraph> fs;
    for (std::size_t i : s) fs.push_back(connected[i]);
    out.push_back(Property::forbidden("Q" + std::to_string(out.size() + 1), universe, fs));
  }
  return out;
}

inline std::vector<Factorisation> factor_search(const Property& p, int candidate_size, int bound,
                                                const FactorOptions& options = {});

/// IRREDUCIBLE_CERTIFIED when some strict graph has dec 1 (indecomposable,
/// hence irreducible); REDUCIBLE with a factorisation verified up to n;
/// UNKNOWN otherwise.
inline IrreducibilityResult irreducibility_test(const Property& p, int n, const FactorOptions& options = {},
                                                int candidate_size = 2) {
  IrreducibilityResult r;
  r.bounds = dec_bounds(p, n, options);
  if (r.bounds.upper == 1 && r.bounds.upper_witness) {
    r.verdict = Verdict::IrreducibleCertified;
    return r;
  }
  if (p.is_product()) {
    const auto& factors = p.as_product().factors;
    if (verify_factorisation(p, factors, n, options).equal) {
      r.verdict = Verdict::Reducible;
      r.factorisation = Factorisation{factors, n, r.bounds.lower, r.bounds.upper};
      return r;
    }
  }
  auto found = factor_search(p, candidate_size, n, options);
  if (!found.empty()) {
    r.verdict = Verdict::Reducible;
    r.factorisation = found.front();
  }
  return r;
}

/// Factorisations of P (up to equality_bound) into forbidden-form factors
/// with connected forbidden graphs of at most candidate_size vertices.
/// Verified pairs are split further while a factor is itself reducible;
/// results are deduplicated as multisets under bounded equality.
inline std::vector<Factorisation> factor_search(const Property& p, int candidate_size, int bound,
                                                const FactorOptions& options) {
  EnumSpec spec{p.universe_ptr(), bound, 0, false, options.enumeration_cap};
  std::vector<Hypergraph> graphs = enumerate_hypergraphs(spec);
  std::vector<char> sig_p = detail::signature(p, graphs);

  // Candidates inside P, one per bounded-equality class and different from P.
  std::vector<Property> candidates;
  std::vector<std::vector<char>> sigs;
  for (const Property& q : candidate_factors(p.universe_ptr(), candidate_size, options)) {
    std::vector<char> sig = detail::signature(q, graphs);
    bool inside = true;
    for (std::size_t i = 0; i < graphs.size() && inside; ++i)
      if (sig[i] && !sig_p[i]) inside = false;
    if (!inside || sig == sig_p || std::find(sigs.begin(), sigs.end(), sig) != sigs.end()) continue;
    candidates.push_back(q);
    sigs.push_back(std::move(sig));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < candidates.size(); ++a)
    for (std::size_t b = a; b < candidates.size(); ++b) pairs.emplace_back(a, b);
  std::vector<char> ok(pairs.size(), 0);
  FactorOptions inner = options;
  inner.threads = 1;
  parallel_for(pairs.size(), options.threads, [&](std::size_t i) {
    ok[i] = verify_factorisation(p, {candidates[pairs[i].first], candidates[pairs[i].second]}, bound, inner).equal;
  });

  DecBounds bracket = dec_bounds(p, bound, options);
  std::vector<Factorisation> out;
  std::vector<std::vector<std::vector<char>>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!ok[i]) continue;
    std::vector<Property> factors;
    for (std::size_t idx : {pairs[i].first, pairs[i].second}) {
      const Property& q = candidates[idx];
      auto sub = factor_search(q, candidate_size, bound, options);
      if (sub.empty()) factors.push_back(q);
      else factors.insert(factors.end(), sub.front().factors.begin(), sub.front().factors.end());
    }
    std::vector<std::vector<char>> key;
    for (const Property& q : factors) key.push_back(detail::signature(q, graphs));
    std::sort(key.begin(), key.end());
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    int lower = std::min(std::max(bracket.lower, static_cast<int>(factors.size())), bracket.upper);
    out.push_back(Factorisation{std::move(factors), bound, lower, bracket.upper});
  }
  return out;
}

/// Ind-parts of every strict, uniquely decomposable G with at most n
/// vertices and dec_P(G) equal to the upper end of dec_bounds.
struct IndPartFamily {
  int dec = 0;
  std::vector<Hypergraph> generators;  // the graphs G
  std::vector<Hypergraph> parts;       // canonical, deduplicated
};

inline IndPartFamily ind_part_family(const Property& p, int n, const FactorOptions& options = {}) {
  if (p.is_forbidden() && !is_additive(p)) throw PreconditionError("ind_part_family: property is not additive");
  IndPartFamily fam;
  fam.dec = dec_bounds(p, n, options).upper;
  Decomposer dp(p, join_options(options));
  EnumSpec spec{p.universe_ptr(), n, 1, false, options.enumeration_cap};
  std::vector<Hypergraph> all;
  for (const Hypergraph& g : enumerate_hypergraphs(spec)) {
    if (!dp.is_strict(g).strict || dp.dec(g).value != fam.dec || !dp.is_uniquely_decomposable(g)) continue;
    fam.generators.push_back(g);
    for (Hypergraph& part : dp.ind_parts(g)) all.push_back(std::move(part));
  }
  fam.parts = canonical_set(all);
  return fam;
}

struct CaseSplit {
  int multiplicity = 0;
  Property with_f;     // generated by the unions of ind-parts containing F
  Property without_f;  // generated by the unions of the other ind-parts
};

/// Splits P by the multiplicity k of F among the ind-parts of the family.
/// Requires k < dec; k = dec is the other case of the factorisation proof.
inline CaseSplit case_split(const Property& p, const Hypergraph& f, int n, const FactorOptions& options = {}) {
  IndPartFamily fam = ind_part_family(p, n, options);
  Decomposer dp(p, join_options(options));
  std::vector<int> mult;
  int k = 0;
  for (const Hypergraph& g : fam.generators) {
    mult.push_back(dp.multiplicity(f, g));
    k = std::max(k, mult.back());
  }
  if (k == 0) throw PreconditionError("case_split: F lies in no ind-part of the family");
  if (k >= fam.dec) throw PreconditionError("case_split: F has full multiplicity");
  std::vector<Hypergraph> with, without;
  for (std::size_t i = 0; i < fam.generators.size(); ++i) {
    if (mult[i] != k) continue;
    const Hypergraph& g = fam.generators[i];
    VertexSet in, out;
    Decomposition d = dp.unique_decomposition(g);
    for (const VertexSet& part : d.parts()) {
      VertexSet& target = is_induced_subgraph(f, induced(g, part)) ? in : out;
      target.insert(target.end(), part.begin(), part.end());
    }
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    with.push_back(induced(g, in));
    without.push_back(induced(g, out));
  }
  return CaseSplit{k, Property::generated(p.name() + "_F", p.universe_ptr(), with, n),
                   Property::generated(p.name() + "_notF", p.universe_ptr(), without, n)};
}

}  // namespace ufact

#endif  // UFACT_FACTOR_HPP
