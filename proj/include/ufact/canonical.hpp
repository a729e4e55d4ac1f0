#ifndef UFACT_CANONICAL_HPP
#define UFACT_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ufact/hypergraph.hpp"

namespace ufact {

// Flat integer encoding of a labelled hypergraph: order, then every edge as
// (kind, arity, vertices..., colour) in sorted edge order. Two labelled
// hypergraphs over one universe are equal iff their codes are equal.
using GraphCode = std::vector<std::int32_t>;

inline GraphCode encode(const Hypergraph& g) {
  GraphCode code;
  code.reserve(1 + g.size() * 5);
  code.push_back(g.order());
  for (const Edge& e : g.edges()) {
    code.push_back(static_cast<std::int32_t>(e.kind));
    code.push_back(e.arity());
    code.insert(code.end(), e.vertices.begin(), e.vertices.end());
    code.push_back(e.colour);
  }
  return code;
}

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Hypergraph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    search(std::vector<int>(n_, 0));
    return best_perm_;
  }

 private:
  // Equitable-style refinement: a vertex's new colour is the rank of (old
  // colour, sorted multiset of incident edge signatures). Ranks are computed
  // from label-independent data only, so the procedure commutes with relabelling.
  void refine(std::vector<int>& colour) const {
    int cells = count_cells(colour);
    while (true) {
      std::vector<std::vector<std::int64_t>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<std::vector<std::int64_t>> parts;
        for (int idx : g_.incident(v)) {
          const Edge& e = g_.edges()[idx];
          std::vector<std::int64_t> s{static_cast<std::int64_t>(e.kind), e.arity(), e.colour};
          if (e.kind == EdgeKind::Ordered) {
            for (std::size_t p = 0; p < e.vertices.size(); ++p)
              if (e.vertices[p] == v) s.push_back(static_cast<std::int64_t>(p));
            for (Vertex u : e.vertices) s.push_back(colour[u]);
          } else {
            std::vector<std::int64_t> others;
            for (Vertex u : e.vertices)
              if (u != v) others.push_back(colour[u]);
            std::sort(others.begin(), others.end());
            s.push_back(-1);
            s.insert(s.end(), others.begin(), others.end());
          }
          parts.push_back(std::move(s));
        }
        std::sort(parts.begin(), parts.end());
        sig[v].push_back(colour[v]);
        for (auto& p : parts) {
          sig[v].push_back(static_cast<std::int64_t>(p.size()));
          sig[v].insert(sig[v].end(), p.begin(), p.end());
        }
      }
      rank_into(sig, colour);
      int now = count_cells(colour);
      if (now == cells) return;
      cells = now;
    }
  }

  template <typename Key>
  static void rank_into(const std::vector<Key>& keys, std::vector<int>& colour) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < keys.size(); ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }

  static int count_cells(const std::vector<int>& colour) {
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  }

  void search(std::vector<int> colour) {
    refine(colour);
    if (count_cells(colour) == n_) {
      leaf(colour);
      return;
    }
    // Target cell: smallest colour with more than one vertex.
    std::vector<int> cell_size(n_, 0);
    for (int c : colour) ++cell_size[c];
    int target = 0;
    while (cell_size[target] < 2) ++target;
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v)
      if (colour[v] == target) cell.push_back(v);

    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (equivalent_to_tried(v, tried)) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (Vertex u = 0; u < n_; ++u) next[u] = 2 * colour[u] + (u == v ? 0 : 1);
      rank_into(next, next);
      path_.push_back(v);
      search(std::move(next));
      path_.pop_back();
    }
  }

  // Orbit pruning: v can be skipped when an automorphism fixing the current
  // path pointwise maps an already explored sibling onto it.
  bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried) const {
    if (tried.empty() || autos_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : autos_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](Vertex p) { return a[p] == p; });
      if (!fixes) continue;
      for (Vertex u = 0; u < n_; ++u) {
        int x = find(u), y = find(a[u]);
        if (x != y) parent[x] = y;
      }
    }
    for (Vertex t : tried)
      if (find(t) == find(v)) return true;
    return false;
  }

  void leaf(const std::vector<int>& perm) {
    GraphCode code = encode(relabel(g_, perm));
    if (first_perm_.empty()) {
      first_perm_ = perm;
      first_code_ = code;
      best_perm_ = perm;
      best_code_ = std::move(code);
      return;
    }
    if (code == first_code_) record_automorphism(first_perm_, perm);
    else if (code == best_code_) record_automorphism(best_perm_, perm);
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_perm_ = perm;
    }
  }

  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    if (autos_.size() >= kMaxAutomorphisms) return;
    // u -> w where a[w] == b[u]
    std::vector<int> inv(n_);
    for (Vertex w = 0; w < n_; ++w) inv[a[w]] = w;
    std::vector<int> gamma(n_);
    for (Vertex u = 0; u < n_; ++u) gamma[u] = inv[b[u]];
    autos_.push_back(std::move(gamma));
  }

  static constexpr std::size_t kMaxAutomorphisms = 256;

  const Hypergraph& g_;
  int n_;
  std::vector<Vertex> path_;
  std::vector<int> first_perm_, best_perm_;
  GraphCode first_code_, best_code_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

/// Permutation (old vertex -> new vertex) producing the canonical representative.
inline std::vector<int> canonical_labeling(const Hypergraph& g) {
  return detail::CanonicalSearch(g).run();
}

inline Hypergraph canonical_form(const Hypergraph& g) { return relabel(g, canonical_labeling(g)); }

inline GraphCode canonical_code(const Hypergraph& g) { return encode(canonical_form(g)); }

inline bool is_isomorphic(const Hypergraph& g, const Hypergraph& h) {
  if (!same_universe(g.universe_ptr(), h.universe_ptr()))
    throw PreconditionError("is_isomorphic: universe mismatch");
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_code(g) == canonical_code(h);
}

/// Sorts and removes isomorphic duplicates, replacing every graph by its canonical form.
inline std::vector<Hypergraph> canonical_set(const std::vector<Hypergraph>& graphs) {
  std::map<GraphCode, Hypergraph> by_code;
  for (const Hypergraph& g : graphs) {
    Hypergraph c = canonical_form(g);
    by_code.emplace(encode(c), std::move(c));
  }
  std::vector<Hypergraph> out;
  out.reserve(by_code.size());
  for (auto& [code, g] : by_code) out.push_back(std::move(g));
  return out;
}

}  // namespace ufact

#endif  // UFACT_CANONICAL_HPP
