#ifndef UFACT_PROPS_HPP
#define UFACT_PROPS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ufact/embed.hpp"
#include "ufact/enumerate.hpp"
#include "ufact/error.hpp"
#include "ufact/property.hpp"

namespace ufact {

struct MemberResult {
  bool member = true;
  // Forbidden-form failures carry the forbidden graph and where it sits in G.
  std::optional<Hypergraph> forbidden;
  std::optional<Embedding> embedding;

  explicit operator bool() const { return member; }
};

/// Assignment of every vertex to one factor; parts may be empty.
struct PartitionAssignment {
  std::vector<VertexSet> parts;

  bool operator==(const PartitionAssignment&) const = default;
};

inline MemberResult member(const Property& p, const Hypergraph& g);
inline std::optional<PartitionAssignment> partition_solve(const Hypergraph& g, const std::vector<Property>& factors);

namespace detail {

inline void check_universe(const Property& p, const Hypergraph& g, const char* op) {
  if (!same_universe(p.universe_ptr(), g.universe_ptr()))
    throw PreconditionError(std::string(op) + ": property and hypergraph over different universes");
}

inline int max_generator_order(const Property::Generated& gen) {
  int m = 0;
  for (const Hypergraph& h : gen.generators) m = std::max(m, h.order());
  return m;
}

// True when a part of this size can never be a member, whatever its edges.
inline bool certainly_too_large(const Property& p, int order) {
  return p.is_generated() && order > max_generator_order(p.as_generated());
}

class PartitionSolver {
 public:
  PartitionSolver(const Hypergraph& g, const std::vector<Property>& factors) : g_(g), factors_(factors) {}

  // Visits assignments in lexicographic order of the per-vertex factor index.
  void run(const std::function<bool(const PartitionAssignment&)>& visit) {
    parts_.assign(factors_.size(), {});
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

 private:
  void extend(Vertex v) {
    if (stop_) return;
    if (v == g_.order()) {
      if (!(*visit_)(PartitionAssignment{parts_})) stop_ = true;
      return;
    }
    for (std::size_t i = 0; i < factors_.size() && !stop_; ++i) {
      parts_[i].push_back(v);
      // Factors are induced-hereditary, so a failing partial part never recovers.
      bool ok = !certainly_too_large(factors_[i], static_cast<int>(parts_[i].size())) &&
                member(factors_[i], induced(g_, parts_[i])).member;
      if (ok) extend(v + 1);
      parts_[i].pop_back();
    }
  }

  const Hypergraph& g_;
  const std::vector<Property>& factors_;
  std::vector<VertexSet> parts_;
  const std::function<bool(const PartitionAssignment&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace detail

/// Membership test. K0 belongs to every property.
inline MemberResult member(const Property& p, const Hypergraph& g) {
  detail::check_universe(p, g, "member");
  if (g.order() == 0) return {};
  if (p.is_forbidden()) {
    for (const Hypergraph& f : p.as_forbidden().graphs) {
      if (f.order() > g.order()) continue;
      if (auto e = embed_induced(f, g)) return MemberResult{false, f, std::move(e)};
    }
    return {};
  }
  if (p.is_product()) {
    MemberResult r;
    r.member = partition_solve(g, p.as_product().factors).has_value();
    return r;
  }
  const auto& gen = p.as_generated();
  if (g.order() > gen.bound)
    throw CapExceeded("member: " + std::to_string(g.order()) + " vertices exceeds the bound " +
                      std::to_string(gen.bound) + " of generated property " + p.name());
  MemberResult r;
  r.member = std::any_of(gen.generators.begin(), gen.generators.end(),
                         [&](const Hypergraph& h) { return is_induced_subgraph(g, h); });
  return r;
}

/// Lexicographically least (by per-vertex factor index) partition of V(G)
/// whose i-th part induces a member of factors[i], or nothing.
inline std::optional<PartitionAssignment> partition_solve(const Hypergraph& g, const std::vector<Property>& factors) {
  if (factors.empty()) throw PreconditionError("partition_solve: no factors");
  for (const Property& f : factors) detail::check_universe(f, g, "partition_solve");
  std::optional<PartitionAssignment> found;
  detail::PartitionSolver(g, factors).run([&](const PartitionAssignment& a) {
    found = a;
    return false;
  });
  return found;
}

/// Every valid partition, in the solver's lexicographic order.
inline std::vector<PartitionAssignment> all_partitions(const Hypergraph& g, const std::vector<Property>& factors) {
  for (const Property& f : factors) detail::check_universe(f, g, "all_partitions");
  std::vector<PartitionAssignment> out;
  detail::PartitionSolver(g, factors).run([&](const PartitionAssignment& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

/// Additivity of a forbidden-form property: every minimal forbidden graph is connected.
///
/// If some minimal F = A + B is disconnected, A and B are proper induced
/// subgraphs of F and so lie in P while A + B does not. If all minimal
/// forbidden graphs are connected, any induced copy of one in G + H lies
/// inside G or inside H.
inline bool is_additive(const Property& p) {
  if (!p.is_forbidden()) throw PreconditionError("is_additive: needs a forbidden-form property");
  return std::all_of(p.as_forbidden().graphs.begin(), p.as_forbidden().graphs.end(),
                     [](const Hypergraph& f) { return is_connected(f); });
}

/// Smallest vertex count of a non-member (forbidden form: smallest forbidden graph).
inline int f_value(const Property& p) {
  if (!p.is_forbidden()) throw PreconditionError("f_value: needs a forbidden-form property");
  int best = p.as_forbidden().graphs.front().order();
  for (const Hypergraph& f : p.as_forbidden().graphs) best = std::min(best, f.order());
  return best;
}

/// Smallest non-member order for any representation, searched up to max_vertices.
inline std::optional<int> f_value_bounded(const Property& p, int max_vertices, int hard_cap = kDefaultMaxVertices) {
  if (p.is_forbidden()) return f_value(p);
  EnumSpec spec{p.universe_ptr(), max_vertices, 0, false, hard_cap};
  for (const Hypergraph& g : enumerate_hypergraphs(spec))
    if (!member(p, g).member) return g.order();
  return std::nullopt;
}

/// All induced-minimal non-members with at most n vertices, canonical and sorted.
inline std::vector<Hypergraph> forbidden_up_to(const Property& p, int n, int hard_cap = kDefaultMaxVertices) {
  if (p.is_generated()) n = std::min(n, p.as_generated().bound);
  EnumSpec spec{p.universe_ptr(), n, 0, false, hard_cap};
  std::vector<Hypergraph> out;
  for (const Hypergraph& g : enumerate_hypergraphs(spec)) {
    if (member(p, g).member) continue;
    bool minimal = true;
    VertexSet rest = all_vertices(g);
    for (Vertex v = 0; v < g.order() && minimal; ++v) {
      VertexSet without;
      for (Vertex u : rest)
        if (u != v) without.push_back(u);
      if (!member(p, induced(g, without)).member) minimal = false;
    }
    if (minimal) out.push_back(g);
  }
  return out;
}

}  // namespace ufact

#endif  // UFACT_PROPS_HPP
