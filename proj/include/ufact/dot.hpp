#ifndef UFACT_DOT_HPP
#define UFACT_DOT_HPP

#include <array>
#include <optional>
#include <string>

#include "ufact/construct.hpp"

namespace ufact::dot {

inline constexpr std::array<const char*, 12> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

inline const char* colour_of(int index) { return kPalette[static_cast<std::size_t>(index) % kPalette.size()]; }

namespace detail {

inline std::string edge_label(const Hypergraph& g, const Edge& e) {
  return g.universe().colour_count() > 1 ? " label=\"" + g.universe().colours()[e.colour] + "\"" : "";
}

inline std::string edges(const Hypergraph& g) {
  std::string out;
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    const bool ordered = e.kind == EdgeKind::Ordered;
    const std::string label = edge_label(g, e);
    if (e.arity() == 2) {
      out += "  v" + std::to_string(e.vertices[0]) + " -> v" + std::to_string(e.vertices[1]) + " [" +
             (ordered ? "" : "dir=none") + label + "];\n";
      continue;
    }
    // Larger edges get a point node joined to each member, numbered by tuple position when ordered.
    std::string hub = "e" + std::to_string(i);
    out += "  " + hub + " [shape=point" + label + "];\n";
    for (int p = 0; p < e.arity(); ++p) {
      out += "  " + hub + " -> v" + std::to_string(e.vertices[p]) + " [";
      out += ordered ? "taillabel=\"" + std::to_string(p + 1) + "\"" : "dir=none";
      out += "];\n";
    }
  }
  return out;
}

}  // namespace detail

/// G with vertices filled by part when a decomposition is given.
inline std::string export_graph(const Hypergraph& g, const std::optional<Decomposition>& d = std::nullopt) {
  std::vector<int> part = d ? d->labels() : std::vector<int>(g.order(), -1);
  std::string out = "digraph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"";
    if (part[v] >= 0) out += " style=filled fillcolor=\"" + std::string(colour_of(part[v])) + "\"";
    out += "];\n";
  }
  return out + detail::edges(g) + "}\n";
}

/// Copies as clusters; vertices shaded by their d0 class.
inline std::string export_copy_tracked(const CopyTracked& ct) {
  std::vector<int> cls = ct.vertex_class();
  std::string out = "digraph G {\n  node [shape=circle];\n";
  for (int c = 0; c < ct.copy_count(); ++c) {
    out += "  subgraph cluster_" + std::to_string(c) + " {\n    label=\"copy " + std::to_string(c) +
           "\";\n    color=\"" + colour_of(c) + "\";\n";
    for (Vertex v : ct.copies[c])
      out += "    v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\" style=filled fillcolor=\"" +
             colour_of(cls[v]) + "\"];\n";
    out += "  }\n";
  }
  return out + detail::edges(ct.graph) + "}\n";
}

}  // namespace ufact::dot

#endif  // UFACT_DOT_HPP
