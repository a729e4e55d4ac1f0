#ifndef UFACT_CONSTRUCT_HPP
#define UFACT_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ufact/decomp.hpp"

namespace ufact {

inline constexpr std::int64_t kDefaultGStarSizeCap = 10'000;

/// A hypergraph built from copies of a base G. copies[c][v] is the vertex
/// playing base vertex v in copy c, and base_class[v] is the class of v in
/// the reference decomposition d0.
struct CopyTracked {
  Hypergraph graph;
  std::vector<std::vector<Vertex>> copies;
  std::vector<int> base_class;

  int copy_count() const { return static_cast<int>(copies.size()); }
  int base_order() const { return static_cast<int>(base_class.size()); }

  // Class of every vertex of the built graph.
  std::vector<int> vertex_class() const {
    std::vector<int> out(graph.order(), -1);
    for (const auto& copy : copies)
      for (std::size_t v = 0; v < copy.size(); ++v) out[copy[v]] = base_class[v];
    return out;
  }

  /// d0 repeated on every copy: part x collects class x of all copies.
  Decomposition extension(const Decomposition& d0) const {
    std::vector<int> cls = d0.labels();
    std::vector<VertexSet> parts(d0.size());
    for (const auto& copy : copies)
      for (std::size_t v = 0; v < copy.size(); ++v) parts[cls[v]].push_back(copy[v]);
    return Decomposition(graph.order(), std::move(parts));
  }

  bool operator==(const CopyTracked&) const = default;
};

/// Copies partition V and each copy induces exactly the base edges under its map.
inline bool tracking_is_exact(const CopyTracked& ct, const Hypergraph& base) {
  if (ct.base_order() != base.order()) return false;
  std::vector<int> owner(ct.graph.order(), -1);
  for (int c = 0; c < ct.copy_count(); ++c) {
    if (static_cast<int>(ct.copies[c].size()) != base.order()) return false;
    for (Vertex v : ct.copies[c]) {
      if (v < 0 || v >= ct.graph.order() || owner[v] != -1) return false;
      owner[v] = c;
    }
  }
  for (int o : owner)
    if (o < 0) return false;
  std::vector<std::set<Edge>> inside(ct.copy_count());
  for (const Edge& e : ct.graph.edges()) {
    int c = owner[e.vertices.front()];
    bool same = std::all_of(e.vertices.begin(), e.vertices.end(), [&](Vertex v) { return owner[v] == c; });
    if (same) inside[c].insert(e);
  }
  for (int c = 0; c < ct.copy_count(); ++c) {
    std::set<Edge> expected;
    for (Edge e : base.edges()) {
      for (Vertex& v : e.vertices) v = ct.copies[c][v];
      e.normalize();
      expected.insert(std::move(e));
    }
    if (expected != inside[c]) return false;
  }
  return true;
}

namespace detail {

class CopyBuilder {
 public:
  CopyBuilder(const Hypergraph& base, std::vector<int> base_class) : base_(base), base_class_(std::move(base_class)) {}

  int add_copy() {
    std::vector<Vertex> copy(base_.order());
    for (Vertex v = 0; v < base_.order(); ++v) copy[v] = order_++;
    for (Edge e : base_.edges()) {
      for (Vertex& v : e.vertices) v = copy[v];
      add_edge(std::move(e));
    }
    copies_.push_back(std::move(copy));
    return static_cast<int>(copies_.size()) - 1;
  }

  void add_edge(Edge e) {
    e.normalize();
    edges_.insert(std::move(e));
  }

  const std::vector<Vertex>& copy(int c) const { return copies_[c]; }
  int copy_count() const { return static_cast<int>(copies_.size()); }

  CopyTracked finish() const {
    return CopyTracked{Hypergraph(base_.universe_ptr(), order_, std::vector<Edge>(edges_.begin(), edges_.end())),
                       copies_, base_class_};
  }

 private:
  const Hypergraph& base_;
  std::vector<int> base_class_;
  int order_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<Vertex>> copies_;
};

inline constexpr Vertex kNewVertex = -1;

// Edges of F that contain the new vertex z of G * K1 (z written as kNewVertex),
// read off a strictness witness: z takes the removed vertex's place.
inline std::vector<Edge> extension_edges(const StrictWitness& w) {
  std::vector<Edge> out;
  for (const Edge& e : w.forbidden.edges()) {
    if (!e.contains(w.removed)) continue;
    Edge t = e;
    for (Vertex& v : t.vertices)
      v = v == w.removed ? kNewVertex : w.embedding.map[v < w.removed ? v : v - 1];
    out.push_back(std::move(t));
  }
  return out;
}

// Adds the bundle G^from => G^to: for every class x and every vertex w of
// class x in G^to, each template edge reaching outside class x is copied
// with w in place of z and its other vertices in G^from.
inline void add_bundle(CopyBuilder& b, const std::vector<Edge>& templates, const std::vector<int>& cls, int from,
                       int to) {
  for (Vertex w = 0; w < static_cast<Vertex>(cls.size()); ++w) {
    for (const Edge& t : templates) {
      bool leaves = std::any_of(t.vertices.begin(), t.vertices.end(),
                                [&](Vertex v) { return v != kNewVertex && cls[v] != cls[w]; });
      if (!leaves) continue;
      Edge e = t;
      for (Vertex& v : e.vertices) v = v == kNewVertex ? b.copy(to)[w] : b.copy(from)[v];
      b.add_edge(std::move(e));
    }
  }
}

inline void check_exact(const Decomposer& dp, const char* op) {
  if (dp.mode() != JoinMode::Exact) throw PreconditionError(std::string(op) + ": needs a forbidden-form property");
}

inline void check_d0(const Decomposer& dp, const Hypergraph& g, const Decomposition& d0, const char* op) {
  if (d0.order() != g.order() || !dp.is_decomposition(g, d0))
    throw PreconditionError(std::string(op) + ": d0 is not a decomposition of the hypergraph");
}

inline std::vector<Edge> strict_templates(const Decomposer& dp, const Hypergraph& g, const char* op) {
  StrictResult s = dp.is_strict(g);
  if (!s.strict || !s.witness) throw PreconditionError(std::string(op) + ": hypergraph is not strict");
  return extension_edges(*s.witness);
}

inline void assert_member(const Decomposer& dp, const Hypergraph& h, const char* op) {
  if (!member(dp.property(), h).member) throw std::logic_error(std::string(op) + ": built hypergraph left the property");
}

}  // namespace detail

/// G^i => G^j on two copies (copy 0 is G^i, copy 1 is G^j). Any
/// decomposition that respects d0 on G^i respects it uniformly on both.
inline CopyTracked construction1(const Hypergraph& g, const Decomposition& d0, const Decomposer& dp) {
  detail::check_exact(dp, "construction1");
  detail::check_d0(dp, g, d0, "construction1");
  std::vector<Edge> templates = detail::strict_templates(dp, g, "construction1");
  detail::CopyBuilder b(g, d0.labels());
  int i = b.add_copy(), j = b.add_copy();
  detail::add_bundle(b, templates, d0.labels(), i, j);
  CopyTracked out = b.finish();
  detail::assert_member(dp, out.graph, "construction1");
  return out;
}

/// Data behind m.k_t G: the cross-class edges of F_t on V(k_t G), where
/// vertex c*|G| + v is base vertex v in copy c.
struct Construction2Plan {
  int k = 1;
  DecWitness witness;
  std::vector<VertexSet> classes;  // the nonempty A_ij in (i, j) order
  std::vector<Edge> cross_edges;
};

inline Construction2Plan construction2_plan(const Hypergraph& g, const Decomposition& d0, const Decomposition& dt,
                                            const Decomposer& dp) {
  detail::check_exact(dp, "construction2");
  if (dt.order() != g.order()) throw PreconditionError("construction2: dt does not match the hypergraph");
  if (respects(dt, d0)) throw PreconditionError("construction2: dt respects d0");
  Construction2Plan plan;
  std::vector<Hypergraph> parts;
  for (const VertexSet& u : d0.parts())
    for (const VertexSet& v : dt.parts()) {
      VertexSet a;
      std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(a));
      if (a.empty()) continue;
      parts.push_back(induced(g, a));
      plan.classes.push_back(std::move(a));
    }
  auto w = find_split_witness(dp.family(), parts);
  if (!w) throw std::logic_error("construction2: the class family has no failing join");
  plan.witness = *w;
  plan.k = w->copies_needed;
  // Where each vertex of F lands in k_t G.
  std::vector<Vertex> at(w->forbidden.order());
  for (const Placement& pl : w->placements)
    for (std::size_t q = 0; q < pl.vertices.size(); ++q)
      at[pl.vertices[q]] = pl.copy * g.order() + plan.classes[pl.part][pl.map[q]];
  std::vector<int> cls = d0.labels();
  for (const Edge& e : w->forbidden.edges()) {
    std::set<int> touched;
    for (Vertex v : e.vertices) touched.insert(cls[at[v] % g.order()]);
    if (touched.size() < 2) continue;
    Edge moved = e;
    for (Vertex& v : moved.vertices) v = at[v];
    moved.normalize();
    plan.cross_edges.push_back(std::move(moved));
  }
  return plan;
}

/// m.k_t G: m copies H^1..H^m of k_t G (G-copy a*k_t + c is copy c of H^a)
/// plus, for each cross-class edge of F_t, an edge whose class-U_a
/// vertices sit in H^a.
inline CopyTracked construction2(const Hypergraph& g, const Decomposition& d0, const Decomposition& dt,
                                 const Decomposer& dp) {
  Construction2Plan plan = construction2_plan(g, d0, dt, dp);
  std::vector<int> cls = d0.labels();
  detail::CopyBuilder b(g, cls);
  for (int c = 0; c < d0.size() * plan.k; ++c) b.add_copy();
  for (const Edge& e : plan.cross_edges) {
    Edge placed = e;
    for (Vertex& v : placed.vertices) {
      int copy = v / g.order(), base = v % g.order();
      v = b.copy(cls[base] * plan.k + copy)[base];
    }
    b.add_edge(std::move(placed));
  }
  CopyTracked out = b.finish();
  detail::assert_member(dp, out.graph, "construction2");
  return out;
}

struct GStarOptions {
  std::int64_t size_cap = kDefaultGStarSizeCap;
};

/// Vertex count G* would have: |G| (prod m k_l + 2), or |G| when r = 0.
inline std::int64_t g_star_projected_size(int base_order, int m, const std::vector<int>& ks) {
  if (ks.empty()) return base_order;
  std::int64_t copies = 1;
  for (int k : ks) {
    copies *= static_cast<std::int64_t>(m) * k;
    if (copies > (std::int64_t{1} << 40)) return std::int64_t{1} << 50;
  }
  return base_order * (copies + 2);
}

/// A strict supergraph of G made of copies of G in which every
/// decomposition with dec_P(G) parts respects d0 uniformly.
inline CopyTracked g_star(const Hypergraph& g, const Decomposition& d0, const Decomposer& dp,
                          const GStarOptions& options = {}) {
  detail::check_exact(dp, "g_star");
  detail::check_d0(dp, g, d0, "g_star");
  std::vector<Edge> templates = detail::strict_templates(dp, g, "g_star");
  const int n = dp.dec(g).value;
  const int m = d0.size();
  const int order = g.order();
  std::vector<int> cls = d0.labels();

  std::vector<Decomposition> bad;
  for (const Decomposition& d : dp.all_decompositions(g, n))
    if (!respects(d, d0)) bad.push_back(d);
  if (bad.empty()) {
    detail::CopyBuilder b(g, cls);
    b.add_copy();
    return b.finish();
  }

  std::vector<CopyTracked> gadgets;
  std::vector<int> ks;
  for (const Decomposition& d : bad) {
    ks.push_back(construction2_plan(g, d0, d, dp).k);
    std::int64_t projected = g_star_projected_size(order, m, ks);
    if (projected > options.size_cap)
      throw CapExceeded("g_star: projected size " + std::to_string(projected) + " vertices exceeds cap " +
                        std::to_string(options.size_cap));
  }
  for (const Decomposition& d : bad) gadgets.push_back(construction2(g, d0, d, dp));

  // current = G(l); G(1) is the first gadget.
  CopyTracked current = gadgets.front();
  for (std::size_t l = 1; l < gadgets.size(); ++l) {
    const CopyTracked& gadget = gadgets[l];
    std::vector<int> owner(gadget.graph.order()), base_of(gadget.graph.order());
    for (int c = 0; c < gadget.copy_count(); ++c)
      for (Vertex v = 0; v < order; ++v) {
        owner[gadget.copies[c][v]] = c;
        base_of[gadget.copies[c][v]] = v;
      }
    const int inner = current.copy_count();
    const int inner_order = current.graph.order();
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> copies;
    for (int block = 0; block < gadget.copy_count(); ++block) {
      const int shift = block * inner_order;
      for (Edge e : current.graph.edges()) {
        for (Vertex& v : e.vertices) v += shift;
        edges.push_back(std::move(e));
      }
      for (auto copy : current.copies) {
        for (Vertex& v : copy) v += shift;
        copies.push_back(std::move(copy));
      }
    }
    for (const Edge& e : gadget.graph.edges()) {
      std::vector<int> blocks;
      for (Vertex v : e.vertices) blocks.push_back(owner[v]);
      std::vector<int> distinct = blocks;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      if (distinct.size() < 2) continue;
      // One inner copy of G per involved block, in every combination.
      std::vector<int> pick(distinct.size(), 0);
      while (true) {
        Edge placed = e;
        for (std::size_t q = 0; q < placed.vertices.size(); ++q) {
          int base = base_of[e.vertices[q]];
          int slot = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), blocks[q]) - distinct.begin());
          placed.vertices[q] = blocks[q] * inner_order + current.copies[pick[slot]][base];
        }
        placed.normalize();
        edges.push_back(std::move(placed));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == inner) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
    current = CopyTracked{Hypergraph(g.universe_ptr(), gadget.copy_count() * inner_order, std::move(edges)),
                          std::move(copies), cls};
  }

  detail::CopyBuilder b(g, cls);
  const int s = current.copy_count();
  for (int c = 0; c < s; ++c)
    if (b.copy(b.add_copy()) != current.copies[c]) throw std::logic_error("g_star: copy layout mismatch");
  for (const Edge& e : current.graph.edges()) b.add_edge(e);
  const int plus = b.add_copy(), minus = b.add_copy();
  detail::add_bundle(b, templates, cls, minus, plus);
  for (int i = 0; i < s; ++i) {
    detail::add_bundle(b, templates, cls, i, minus);
    detail::add_bundle(b, templates, cls, plus, i);
  }
  CopyTracked out = b.finish();
  detail::assert_member(dp, out.graph, "g_star");
  return out;
}

/// Strict supergraph with a unique decomposition into n = dec_P(G) parts,
/// that decomposition being d0 repeated on every copy.
inline CopyTracked unique_super(const Hypergraph& g, const Decomposition& d0, const Decomposer& dp,
                                const GStarOptions& options = {}) {
  if (d0.size() != dp.dec(g).value) throw PreconditionError("unique_super: d0 must have dec_P(G) parts");
  return g_star(g, d0, dp, options);
}

/// Uniquely decomposable strict supergraph whose ind-parts respect d0
/// uniformly: G* for d0, then unique_super for the first n-part
/// decomposition of G*. Copies are composed back to copies of G.
inline CopyTracked unique_respect_super(const Hypergraph& g, const Decomposition& d0, const Decomposer& dp,
                                        const GStarOptions& options = {}) {
  CopyTracked first = g_star(g, d0, dp, options);
  const int n = dp.dec(g).value;
  std::vector<Decomposition> ds = dp.all_decompositions(first.graph, n);
  if (ds.empty()) throw PreconditionError("unique_respect_super: G* has no decomposition with dec_P(G) parts");
  CopyTracked second = unique_super(first.graph, ds.front(), dp, options);
  CopyTracked out{second.graph, {}, first.base_class};
  for (const auto& outer : second.copies)
    for (const auto& inner : first.copies) {
      std::vector<Vertex> copy(inner.size());
      for (std::size_t v = 0; v < inner.size(); ++v) copy[v] = outer[inner[v]];
      out.copies.push_back(std::move(copy));
    }
  return out;
}

}  // namespace ufact

#endif  // UFACT_CONSTRUCT_HPP
