#ifndef UFACT_EMBED_HPP
#define UFACT_EMBED_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "ufact/hypergraph.hpp"

namespace ufact {

/// Injective vertex map F -> G whose image induces a copy of F:
/// map[f] is the G-vertex carrying F-vertex f.
struct Embedding {
  std::vector<Vertex> map;

  VertexSet image() const {
    VertexSet out = map;
    std::sort(out.begin(), out.end());
    return out;
  }
  bool operator==(const Embedding&) const = default;
};

namespace detail {

class InducedMatcher {
 public:
  InducedMatcher(const Hypergraph& f, const Hypergraph& g) : f_(f), g_(g) {}

  // Calls visit for every induced embedding until it returns false.
  void run(const std::function<bool(const Embedding&)>& visit) {
    if (f_.order() > g_.order() || f_.size() > g_.size()) return;
    order_ = search_order();
    map_.assign(f_.order(), -1);
    inv_.assign(g_.order(), -1);
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

 private:
  // Connected-first order: repeatedly take the unplaced vertex with most edges
  // into the placed set, breaking ties by degree.
  std::vector<Vertex> search_order() const {
    int n = f_.order();
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    std::vector<int> links(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == -1 || links[v] > links[best] ||
            (links[v] == links[best] && f_.degree(v) > f_.degree(best)))
          best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (int idx : f_.incident(best))
        for (Vertex u : f_.edges()[idx].vertices)
          if (!placed[u]) ++links[u];
    }
    return order;
  }

  bool consistent(Vertex fv, Vertex gv) const {
    if (f_.degree(fv) > g_.degree(gv)) return false;
    // Every F-edge at fv with all ends placed must be present in G.
    for (int idx : f_.incident(fv)) {
      const Edge& e = f_.edges()[idx];
      Edge mapped{e.kind, {}, e.colour};
      bool ready = true;
      for (Vertex u : e.vertices) {
        if (map_[u] < 0) {
          ready = false;
          break;
        }
        mapped.vertices.push_back(map_[u]);
      }
      if (!ready) continue;
      mapped.normalize();
      if (!g_.has_edge(mapped)) return false;
    }
    // Every G-edge at gv inside the image must come from an F-edge.
    for (int idx : g_.incident(gv)) {
      const Edge& e = g_.edges()[idx];
      Edge pre{e.kind, {}, e.colour};
      bool inside = true;
      for (Vertex u : e.vertices) {
        if (inv_[u] < 0) {
          inside = false;
          break;
        }
        pre.vertices.push_back(inv_[u]);
      }
      if (!inside) continue;
      pre.normalize();
      if (!f_.has_edge(pre)) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (stop_) return;
    if (depth == order_.size()) {
      if (!(*visit_)(Embedding{map_})) stop_ = true;
      return;
    }
    Vertex fv = order_[depth];
    for (Vertex gv = 0; gv < g_.order() && !stop_; ++gv) {
      if (inv_[gv] >= 0) continue;
      map_[fv] = gv;
      inv_[gv] = fv;
      if (consistent(fv, gv)) extend(depth + 1);
      map_[fv] = -1;
      inv_[gv] = -1;
    }
  }

  const Hypergraph& f_;
  const Hypergraph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_, inv_;
  const std::function<bool(const Embedding&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace detail

/// Finds an embedding witnessing F <= G (induced), if one exists. Complete search.
inline std::optional<Embedding> embed_induced(const Hypergraph& f, const Hypergraph& g) {
  if (!same_universe(f.universe_ptr(), g.universe_ptr()))
    throw PreconditionError("embed_induced: universe mismatch");
  std::optional<Embedding> found;
  detail::InducedMatcher(f, g).run([&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

inline bool is_induced_subgraph(const Hypergraph& f, const Hypergraph& g) {
  return embed_induced(f, g).has_value();
}

/// Visits every induced embedding of F into G; stop by returning false.
inline void for_each_embedding(const Hypergraph& f, const Hypergraph& g,
                               const std::function<bool(const Embedding&)>& visit) {
  if (!same_universe(f.universe_ptr(), g.universe_ptr()))
    throw PreconditionError("for_each_embedding: universe mismatch");
  detail::InducedMatcher(f, g).run(visit);
}

}  // namespace ufact

#endif  // UFACT_EMBED_HPP
