#ifndef UFACT_ENUMERATE_HPP
#define UFACT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ufact/canonical.hpp"
#include "ufact/error.hpp"
#include "ufact/hypergraph.hpp"
#include "ufact/join.hpp"

namespace ufact {

inline constexpr int kDefaultMaxVertices = 7;

struct EnumSpec {
  UniversePtr universe = simple_graph_universe();
  int max_vertices = 0;
  int min_vertices = 0;
  bool connected_only = false;
  int hard_cap = kDefaultMaxVertices;
  // Upper limit on new-vertex edge candidates per augmentation step (2^limit subsets).
  int augment_edge_limit = 22;
};

/// One canonical representative per isomorphism class with min..max vertices,
/// ordered by vertex count and then canonical code.
///
/// Generation is by augmentation: every class on k+1 vertices arises from a
/// class on k vertices plus one vertex and a set of edges through it, so
/// adding all such edge sets to every level-k class and deduplicating by
/// canonical form reaches every class.
inline std::vector<Hypergraph> enumerate_hypergraphs(const EnumSpec& spec) {
  if (spec.max_vertices < 0 || spec.min_vertices < 0)
    throw PreconditionError("enumerate: negative vertex bound");
  if (spec.max_vertices > spec.hard_cap)
    throw CapExceeded("enumerate: " + std::to_string(spec.max_vertices) + " vertices exceeds cap " +
                      std::to_string(spec.hard_cap));
  std::vector<Hypergraph> out;
  std::vector<Hypergraph> level{null_graph(spec.universe)};
  auto emit = [&](const std::vector<Hypergraph>& graphs, int k) {
    if (k < spec.min_vertices) return;
    for (const Hypergraph& g : graphs)
      if (!spec.connected_only || is_connected(g)) out.push_back(g);
  };
  emit(level, 0);
  for (int k = 0; k < spec.max_vertices; ++k) {
    std::vector<Edge> through = candidate_edges(*spec.universe, k + 1,
        [&](const Edge& e) { return e.contains(k); }, std::int64_t{1} << spec.augment_edge_limit);
    if (static_cast<int>(through.size()) > spec.augment_edge_limit)
      throw CapExceeded("enumerate: " + std::to_string(through.size()) +
                        " candidate edges per new vertex exceeds limit");
    std::map<GraphCode, Hypergraph> next;
    const std::uint64_t subsets = std::uint64_t{1} << through.size();
    for (const Hypergraph& g : level) {
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::vector<Edge> edges = g.edges();
        for (std::size_t i = 0; i < through.size(); ++i)
          if (mask >> i & 1) edges.push_back(through[i]);
        Hypergraph c = canonical_form(Hypergraph(spec.universe, k + 1, std::move(edges)));
        GraphCode code = encode(c);
        next.try_emplace(std::move(code), std::move(c));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
    emit(level, k + 1);
  }
  return out;
}

/// Set partition of 0..n-1. Blocks are sorted and ordered by smallest element;
/// empty blocks, when present, trail the nonempty ones.
using Blocks = std::vector<VertexSet>;

namespace detail {

// Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
inline void partitions_rec(int n, int i, int used, int max_parts, std::vector<int>& label,
                           const std::function<void(const std::vector<int>&, int)>& fn) {
  if (i == n) {
    fn(label, used);
    return;
  }
  for (int b = 0; b <= used && b < max_parts; ++b) {
    label[i] = b;
    partitions_rec(n, i + 1, std::max(used, b + 1), max_parts, label, fn);
  }
}

}  // namespace detail

inline Blocks blocks_from_labels(const std::vector<int>& label, int parts) {
  Blocks out(parts);
  for (std::size_t v = 0; v < label.size(); ++v) out[label[v]].push_back(static_cast<Vertex>(v));
  return out;
}

/// Streams set partitions of 0..n-1 in restricted-growth-string order.
/// With nonempty=true every block is nonempty and the block count lies in
/// [min_parts, max_parts]. With nonempty=false each set partition with at
/// most max_parts blocks is reported once, padded with empty blocks to
/// max_parts.
inline void for_each_partition(int n, int min_parts, int max_parts, bool nonempty,
                               const std::function<void(const Blocks&)>& fn) {
  if (n < 0 || min_parts < 0 || min_parts > max_parts)
    throw PreconditionError("enumerate_partitions: need 0 <= min_parts <= max_parts");
  if (n == 0) {
    if (nonempty ? min_parts == 0 : true) fn(Blocks(nonempty ? 0 : max_parts));
    return;
  }
  std::vector<int> label(n, 0);
  detail::partitions_rec(n, 0, 0, max_parts, label, [&](const std::vector<int>& l, int used) {
    if (nonempty) {
      if (used >= min_parts) fn(blocks_from_labels(l, used));
    } else {
      fn(blocks_from_labels(l, max_parts));
    }
  });
}

inline std::vector<Blocks> enumerate_partitions(int n, int min_parts, int max_parts, bool nonempty) {
  std::vector<Blocks> out;
  for_each_partition(n, min_parts, max_parts, nonempty, [&](const Blocks& b) { out.push_back(b); });
  return out;
}

}  // namespace ufact

#endif  // UFACT_ENUMERATE_HPP
