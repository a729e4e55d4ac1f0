#ifndef UFACT_HYPERGRAPH_HPP
#define UFACT_HYPERGRAPH_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "ufact/error.hpp"
#include "ufact/universe.hpp"

namespace ufact {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

/// A coloured edge object. ORDERED edges keep their tuple order; UNORDERED
/// edges are stored with sorted vertices so equal sets compare equal.
struct Edge {
  EdgeKind kind = EdgeKind::Unordered;
  std::vector<Vertex> vertices;
  int colour = 0;

  int arity() const { return static_cast<int>(vertices.size()); }

  void normalize() {
    if (kind == EdgeKind::Unordered) std::sort(vertices.begin(), vertices.end());
  }

  bool contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

inline Edge make_edge(EdgeKind kind, std::vector<Vertex> vertices, int colour = 0) {
  Edge e{kind, std::move(vertices), colour};
  e.normalize();
  return e;
}

/// Finite hypergraph on vertices 0..n-1 with a set of edge objects drawn from
/// a universe. Immutable once constructed; the constructor validates every
/// edge and puts the edge set in sorted order.
class Hypergraph {
 public:
  Hypergraph() : universe_(simple_graph_universe()) {}

  Hypergraph(UniversePtr universe, int order, std::vector<Edge> edges = {})
      : universe_(std::move(universe)), order_(order), edges_(std::move(edges)) {
    if (!universe_) throw PreconditionError("hypergraph: null universe");
    if (order_ < 0) throw PreconditionError("hypergraph: negative vertex count");
    for (Edge& e : edges_) {
      validate(e);
      e.normalize();
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw PreconditionError("hypergraph: duplicate edge");
    build_incidence();
  }

  const UniversePtr& universe_ptr() const { return universe_; }
  const Universe& universe() const { return *universe_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return order_ == 0; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Indices into edges() of the edges containing v.
  const std::vector<int>& incident(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }

  bool has_edge(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  bool operator==(const Hypergraph& other) const {
    return order_ == other.order_ && edges_ == other.edges_ && same_universe(universe_, other.universe_);
  }

 private:
  void validate(const Edge& e) const {
    if (!universe_->has_kind(e.kind))
      throw PreconditionError("edge kind " + std::string(to_string(e.kind)) + " not in universe");
    if (!universe_->has_arity(e.arity()))
      throw PreconditionError("edge arity " + std::to_string(e.arity()) + " not in universe");
    if (e.colour < 0 || e.colour >= universe_->colour_count())
      throw PreconditionError("edge colour out of range");
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
      if (e.vertices[i] < 0 || e.vertices[i] >= order_)
        throw PreconditionError("edge vertex " + std::to_string(e.vertices[i]) + " out of range");
      for (std::size_t j = 0; j < i; ++j)
        if (e.vertices[i] == e.vertices[j]) throw PreconditionError("edge repeats a vertex (loop)");
    }
  }

  void build_incidence() {
    incidence_.assign(order_, {});
    for (int i = 0; i < size(); ++i)
      for (Vertex v : edges_[i].vertices) incidence_[v].push_back(i);
  }

  UniversePtr universe_;
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

inline Hypergraph null_graph(UniversePtr universe) { return Hypergraph(std::move(universe), 0); }

inline VertexSet all_vertices(const Hypergraph& g) {
  VertexSet out(g.order());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

/// G[U], relabelled 0..|U|-1 in ascending original order.
inline Hypergraph induced(const Hypergraph& g, const VertexSet& subset) {
  std::vector<int> relabel(g.order(), -1);
  int next = 0;
  for (Vertex v : subset) {
    if (v < 0 || v >= g.order()) throw PreconditionError("induced: vertex " + std::to_string(v) + " out of range");
    if (relabel[v] != -1) throw PreconditionError("induced: repeated vertex");
    relabel[v] = 0;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (relabel[v] == 0) relabel[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    bool inside = std::all_of(e.vertices.begin(), e.vertices.end(), [&](Vertex v) { return relabel[v] >= 0; });
    if (!inside) continue;
    Edge f{e.kind, {}, e.colour};
    for (Vertex v : e.vertices) f.vertices.push_back(relabel[v]);
    edges.push_back(std::move(f));
  }
  return Hypergraph(g.universe_ptr(), next, std::move(edges));
}

/// Applies a vertex permutation: vertex v becomes perm[v].
inline Hypergraph relabel(const Hypergraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    Edge f{e.kind, {}, e.colour};
    for (Vertex v : e.vertices) f.vertices.push_back(perm[v]);
    edges.push_back(std::move(f));
  }
  return Hypergraph(g.universe_ptr(), g.order(), std::move(edges));
}

inline Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  if (!same_universe(g.universe_ptr(), h.universe_ptr()))
    throw PreconditionError("disjoint_union: universe mismatch");
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) {
    Edge f = e;
    for (Vertex& v : f.vertices) v += g.order();
    edges.push_back(std::move(f));
  }
  return Hypergraph(g.universe_ptr(), g.order() + h.order(), std::move(edges));
}

/// kG, the k-fold disjoint union.
inline Hypergraph replicate(int k, const Hypergraph& g) {
  if (k < 1) throw PreconditionError("replicate: k must be positive");
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c)
    for (const Edge& e : g.edges()) {
      Edge f = e;
      for (Vertex& v : f.vertices) v += c * g.order();
      edges.push_back(std::move(f));
    }
  return Hypergraph(g.universe_ptr(), k * g.order(), std::move(edges));
}

/// Maximal vertex sets connected through shared edges, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Hypergraph& g) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges())
    for (std::size_t i = 1; i < e.vertices.size(); ++i) {
      int a = find(e.vertices[0]), b = find(e.vertices[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<VertexSet> out;
  std::vector<int> slot(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    int r = find(v);
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

inline bool is_connected(const Hypergraph& g) { return connected_components(g).size() == 1; }

}  // namespace ufact

#endif  // UFACT_HYPERGRAPH_HPP
