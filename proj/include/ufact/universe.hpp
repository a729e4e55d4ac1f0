#ifndef UFACT_UNIVERSE_HPP
#define UFACT_UNIVERSE_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ufact/error.hpp"

namespace ufact {

enum class EdgeKind : std::uint8_t { Unordered = 0, Ordered = 1 };

inline std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::Ordered ? "ORDERED" : "UNORDERED";
}

/// The edge-object kinds, arities and colour alphabet that every hypergraph,
/// join and enumeration is taken over. Arities start at 2: there are no loops.
class Universe {
 public:
  Universe(std::vector<EdgeKind> kinds, std::vector<int> arities, std::vector<std::string> colours)
      : kinds_(std::move(kinds)), arities_(std::move(arities)), colours_(std::move(colours)) {
    std::sort(kinds_.begin(), kinds_.end());
    kinds_.erase(std::unique(kinds_.begin(), kinds_.end()), kinds_.end());
    std::sort(arities_.begin(), arities_.end());
    arities_.erase(std::unique(arities_.begin(), arities_.end()), arities_.end());
    if (kinds_.empty()) throw PreconditionError("universe: no edge kinds");
    if (arities_.empty()) throw PreconditionError("universe: no arities");
    if (arities_.front() < 2) throw PreconditionError("universe: arity below 2 would allow loops");
    if (colours_.empty()) throw PreconditionError("universe: empty colour alphabet");
    for (std::size_t i = 0; i < colours_.size(); ++i) {
      if (colours_[i].empty()) throw PreconditionError("universe: empty colour name");
      for (std::size_t j = 0; j < i; ++j)
        if (colours_[i] == colours_[j])
          throw PreconditionError("universe: duplicate colour '" + colours_[i] + "'");
    }
  }

  const std::vector<EdgeKind>& kinds() const { return kinds_; }
  const std::vector<int>& arities() const { return arities_; }
  const std::vector<std::string>& colours() const { return colours_; }
  int colour_count() const { return static_cast<int>(colours_.size()); }

  bool has_kind(EdgeKind kind) const {
    return std::find(kinds_.begin(), kinds_.end(), kind) != kinds_.end();
  }
  bool has_arity(int arity) const {
    return std::binary_search(arities_.begin(), arities_.end(), arity);
  }
  int max_arity() const { return arities_.back(); }

  // Index of a colour name, or -1.
  int find_colour(std::string_view name) const {
    for (std::size_t i = 0; i < colours_.size(); ++i)
      if (colours_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Universe&) const = default;

 private:
  std::vector<EdgeKind> kinds_;
  std::vector<int> arities_;
  std::vector<std::string> colours_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<EdgeKind> kinds, std::vector<int> arities,
                                 std::vector<std::string> colours) {
  return std::make_shared<const Universe>(std::move(kinds), std::move(arities), std::move(colours));
}

// Undirected uncoloured simple graphs.
inline UniversePtr simple_graph_universe() {
  static const UniversePtr u = make_universe({EdgeKind::Unordered}, {2}, {"e"});
  return u;
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace ufact

#endif  // UFACT_UNIVERSE_HPP
