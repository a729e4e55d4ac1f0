#ifndef UFACT_STANDARD_GRAPHS_HPP
#define UFACT_STANDARD_GRAPHS_HPP

#include <string>
#include <vector>

#include "ufact/canonical.hpp"
#include "ufact/hypergraph.hpp"

namespace ufact::graphs {

inline Edge pair(Vertex a, Vertex b) { return make_edge(EdgeKind::Unordered, {a, b}); }

inline Hypergraph empty(int n) { return Hypergraph(simple_graph_universe(), n); }

inline Hypergraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back(pair(i, j));
  return Hypergraph(simple_graph_universe(), n, e);
}

inline Hypergraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back(pair(i, i + 1));
  return Hypergraph(simple_graph_universe(), n, e);
}

inline Hypergraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back(pair(i, i + 1));
  if (n >= 3) e.push_back(pair(0, n - 1));
  return Hypergraph(simple_graph_universe(), n, e);
}

// n disjoint edges; vertices 2i and 2i+1 are joined.
inline Hypergraph matching(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(pair(2 * i, 2 * i + 1));
  return Hypergraph(simple_graph_universe(), 2 * n, e);
}

inline Hypergraph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back(pair(i, a + j));
  return Hypergraph(simple_graph_universe(), a + b, e);
}

inline Hypergraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> e;
  for (auto [a, b] : pairs) e.push_back(pair(a, b));
  return Hypergraph(simple_graph_universe(), n, e);
}

/// Conventional name of a small simple graph (K3, C5, P4, 3K1, 2K2, K2,3),
/// falling back to vertex and edge counts.
inline std::string describe(const Hypergraph& g) {
  const int n = g.order(), m = g.size();
  auto fallback = [&] {
    return "hypergraph with " + std::to_string(n) + " vertices and " + std::to_string(m) + " edges";
  };
  if (!same_universe(g.universe_ptr(), simple_graph_universe())) return fallback();
  if (n == 0) return "K0";
  if (m == n * (n - 1) / 2) return "K" + std::to_string(n);
  if (m == 0) return std::to_string(n) + "K1";
  if (n >= 4 && m == n && is_isomorphic(g, cycle(n))) return "C" + std::to_string(n);
  if (m == n - 1 && is_isomorphic(g, path(n))) return "P" + std::to_string(n);
  if (n % 2 == 0 && 2 * m == n && is_isomorphic(g, matching(m))) return std::to_string(m) + "K2";
  for (int a = 1; a <= n / 2; ++a)
    if (a * (n - a) == m && is_isomorphic(g, complete_bipartite(a, n - a)))
      return "K" + std::to_string(a) + "," + std::to_string(n - a);
  return fallback();
}

}  // namespace ufact::graphs

#endif  // UFACT_STANDARD_GRAPHS_HPP
