#ifndef UFACT_JOIN_HPP
#define UFACT_JOIN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ufact/error.hpp"
#include "ufact/hypergraph.hpp"

namespace ufact {

inline constexpr std::int64_t kDefaultJoinEdgeCap = 1'000'000;

namespace detail {

// Calls fn for every r-subset (sorted) of 0..n-1.
template <typename Fn>
void for_each_subset(int n, int r, Fn&& fn) {
  if (r > n || r < 0) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Every edge object over `universe` on vertices 0..n-1 accepted by `keep`,
/// listed in sorted edge order. Fails once more than `cap` are collected.
template <typename Keep>
std::vector<Edge> candidate_edges(const Universe& universe, int n, Keep&& keep, std::int64_t cap) {
  std::vector<Edge> out;
  auto push = [&](Edge e) {
    if (!keep(e)) return;
    if (static_cast<std::int64_t>(out.size()) >= cap)
      throw CapExceeded("candidate edge count exceeds cap of " + std::to_string(cap));
    out.push_back(std::move(e));
  };
  for (EdgeKind kind : universe.kinds())
    for (int r : universe.arities())
      detail::for_each_subset(n, r, [&](const std::vector<int>& subset) {
        if (kind == EdgeKind::Unordered) {
          for (int c = 0; c < universe.colour_count(); ++c) push(Edge{kind, subset, c});
        } else {
          std::vector<int> tuple = subset;
          do {
            for (int c = 0; c < universe.colour_count(); ++c) push(Edge{kind, tuple, c});
          } while (std::next_permutation(tuple.begin(), tuple.end()));
        }
      });
  std::sort(out.begin(), out.end());
  return out;
}

/// Lazily streams G_1 * ... * G_n: every hypergraph on the concatenated vertex
/// set that induces G_i on the i-th block and whose extra edges each meet at
/// least two blocks. Members come in binary-counting order over the crossing
/// candidate list (candidate 0 toggles fastest), so the stream is deterministic
/// and duplicate-free.
class JoinStream {
 public:
  JoinStream(std::span<const Hypergraph> parts, std::int64_t edge_cap = kDefaultJoinEdgeCap) {
    if (parts.empty()) throw PreconditionError("join_members: empty part list");
    universe_ = parts.front().universe_ptr();
    for (const Hypergraph& p : parts) {
      if (!same_universe(universe_, p.universe_ptr()))
        throw PreconditionError("join_members: universe mismatch");
      for (const Edge& e : p.edges()) {
        Edge f = e;
        for (Vertex& v : f.vertices) v += order_;
        base_.push_back(std::move(f));
      }
      for (int i = 0; i < p.order(); ++i) block_.push_back(static_cast<int>(offsets_.size()));
      offsets_.push_back(order_);
      order_ += p.order();
    }
    crossing_ = candidate_edges(*universe_, order_, [&](const Edge& e) {
      for (Vertex v : e.vertices)
        if (block_[v] != block_[e.vertices.front()]) return true;
      return false;
    }, edge_cap);
    if (crossing_.size() >= 63)
      throw CapExceeded("join has 2^" + std::to_string(crossing_.size()) + " members; not enumerable");
    chosen_.assign(crossing_.size(), 0);
  }

  const std::vector<Edge>& crossing_candidates() const { return crossing_; }
  std::uint64_t member_count() const { return std::uint64_t{1} << crossing_.size(); }
  int order() const { return order_; }
  // Index of the part holding vertex v of a member.
  int block_of(Vertex v) const { return block_[v]; }
  int offset(int part) const { return offsets_[part]; }

  std::optional<Hypergraph> next() {
    if (done_) return std::nullopt;
    std::vector<Edge> edges = base_;
    for (std::size_t i = 0; i < crossing_.size(); ++i)
      if (chosen_[i]) edges.push_back(crossing_[i]);
    Hypergraph out(universe_, order_, std::move(edges));
    std::size_t i = 0;
    while (i < chosen_.size() && chosen_[i]) chosen_[i++] = 0;
    if (i == chosen_.size()) done_ = true;
    else chosen_[i] = 1;
    return out;
  }

 private:
  UniversePtr universe_;
  int order_ = 0;
  std::vector<Edge> base_;
  std::vector<int> block_;
  std::vector<int> offsets_;
  std::vector<Edge> crossing_;
  std::vector<char> chosen_;
  bool done_ = false;
};

inline std::vector<Hypergraph> join_members(std::span<const Hypergraph> parts,
                                            std::int64_t edge_cap = kDefaultJoinEdgeCap) {
  JoinStream stream(parts, edge_cap);
  std::vector<Hypergraph> out;
  while (auto h = stream.next()) out.push_back(std::move(*h));
  return out;
}

}  // namespace ufact

#endif  // UFACT_JOIN_HPP
