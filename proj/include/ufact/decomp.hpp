#ifndef UFACT_DECOMP_HPP
#define UFACT_DECOMP_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ufact/embed.hpp"
#include "ufact/enumerate.hpp"
#include "ufact/error.hpp"
#include "ufact/join.hpp"
#include "ufact/parallel.hpp"
#include "ufact/props.hpp"

namespace ufact {

/// Ordered list of nonempty, pairwise disjoint vertex sets covering V(G).
/// The order is kept (constructions refer to U_1..U_m by position); use
/// normalized() to compare as unordered partitions.
class Decomposition {
 public:
  Decomposition() = default;

  Decomposition(int order, std::vector<VertexSet> parts) : parts_(std::move(parts)) {
    std::vector<char> seen(order, 0);
    int covered = 0;
    for (VertexSet& p : parts_) {
      if (p.empty()) throw PreconditionError("decomposition: empty part");
      std::sort(p.begin(), p.end());
      for (Vertex v : p) {
        if (v < 0 || v >= order) throw PreconditionError("decomposition: vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw PreconditionError("decomposition: vertex " + std::to_string(v) + " in two parts");
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != order) throw PreconditionError("decomposition: parts do not cover every vertex");
    order_ = order;
  }

  static Decomposition from_labels(const std::vector<int>& label) {
    int parts = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    return Decomposition(static_cast<int>(label.size()), blocks_from_labels(label, parts));
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  const VertexSet& operator[](std::size_t i) const { return parts_[i]; }

  // part index of every vertex
  std::vector<int> labels() const {
    std::vector<int> out(order_, -1);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (Vertex v : parts_[i]) out[v] = static_cast<int>(i);
    return out;
  }

  Decomposition normalized() const {
    Decomposition d = *this;
    std::sort(d.parts_.begin(), d.parts_.end());
    return d;
  }

  bool same_partition(const Decomposition& other) const { return normalized() == other.normalized(); }

  bool operator==(const Decomposition&) const = default;

 private:
  int order_ = 0;
  std::vector<VertexSet> parts_;
};

inline std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

inline std::string to_string(const Decomposition& d) {
  std::string out;
  for (int i = 0; i < d.size(); ++i) out += (i ? "|" : "") + to_string(d[i]);
  return out;
}

/// One piece of a witness: the F-vertices `vertices` (a connected component,
/// or for brute-force witnesses a whole copy's worth) placed into copy `copy`
/// of part `part`, with map[j] the part vertex carrying vertices[j].
struct Placement {
  int part = 0;
  int copy = 0;
  VertexSet vertices;
  std::vector<Vertex> map;
};

/// Certificate that some k-fold join of the parts leaves the property: the
/// non-member `forbidden` sits inside kG_1 * ... * kG_n with vertex v in
/// part split[v], laid out as `placements`; k = copies_needed.
struct DecWitness {
  Hypergraph forbidden;
  std::vector<int> split;
  std::vector<Placement> placements;
  int copies_needed = 1;
};

enum class JoinMode { Exact, Bounded, BruteForce };
enum class Confidence { Exact, Bounded };

inline std::string to_string(Confidence c) { return c == Confidence::Exact ? "exact" : "bounded"; }

struct JoinOptions {
  int k_max = 3;
  // Largest non-member searched for; 0 picks the mode default (the largest
  // forbidden graph for forbidden-form properties, 7 otherwise).
  int witness_size = 0;
  int threads = 1;
  std::int64_t join_edge_cap = kDefaultJoinEdgeCap;
  int enumeration_cap = kDefaultMaxVertices;
};

struct JoinResult {
  bool contained = true;
  Confidence confidence = Confidence::Exact;
  std::optional<DecWitness> witness;
};

namespace detail {

inline std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

// Component of `start` inside F[mask], connectivity through edges lying in mask.
inline std::uint32_t component_in(const Hypergraph& f, std::uint32_t mask, Vertex start) {
  std::uint32_t comp = bit(start), frontier = bit(start);
  while (frontier) {
    Vertex v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (int idx : f.incident(v)) {
      std::uint32_t e = 0;
      for (Vertex u : f.edges()[idx].vertices) e |= bit(u);
      if ((e & mask) != e) continue;
      std::uint32_t fresh = e & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
  }
  return comp;
}

inline VertexSet mask_vertices(std::uint32_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Searches a split of V(F) over the parts in which every connected component
// of F[W_i] embeds induced into part i.
class SplitSearch {
 public:
  SplitSearch(const Hypergraph& f, std::span<const Hypergraph> parts) : f_(f), parts_(parts) {}

  std::optional<DecWitness> run() {
    if (f_.order() > 31) throw CapExceeded("split search: forbidden graph too large");
    label_.assign(f_.order(), -1);
    masks_.assign(parts_.size(), 0);
    if (!extend(0)) return std::nullopt;
    return build_witness();
  }

 private:
  bool embeds(std::size_t part, std::uint32_t comp) {
    std::uint64_t key = (static_cast<std::uint64_t>(part) << 32) | comp;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = parts_[part].order() >= std::popcount(comp) &&
              is_induced_subgraph(induced(f_, mask_vertices(comp)), parts_[part]);
    memo_.emplace(key, ok);
    return ok;
  }

  bool extend(Vertex v) {
    if (v == f_.order()) return true;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      masks_[p] |= bit(v);
      label_[v] = static_cast<int>(p);
      // A component that does not embed only grows as vertices are added, and
      // a connected supergraph of a non-embeddable graph cannot embed either.
      if (embeds(p, component_in(f_, masks_[p], v)) && extend(v + 1)) return true;
      masks_[p] &= ~bit(v);
    }
    label_[v] = -1;
    return false;
  }

  DecWitness build_witness() {
    DecWitness w{f_, label_, {}, 1};
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      std::uint32_t rest = masks_[p];
      int copy = 0;
      while (rest) {
        std::uint32_t comp = component_in(f_, masks_[p], std::countr_zero(rest));
        rest &= ~comp;
        VertexSet verts = mask_vertices(comp);
        auto e = embed_induced(induced(f_, verts), parts_[p]);
        w.placements.push_back(Placement{static_cast<int>(p), copy++, verts, e->map});
      }
      w.copies_needed = std::max(w.copies_needed, copy);
    }
    return w;
  }

  const Hypergraph& f_;
  std::span<const Hypergraph> parts_;
  std::vector<int> label_;
  std::vector<std::uint32_t> masks_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace detail

/// The finite criterion for "kG_1 * ... * kG_n is inside P for every k":
/// it fails exactly when some forbidden F splits as (W_1..W_n), empty blocks
/// allowed, with each connected component of F[W_i] embedding into G_i.
///
/// If F sits in a member H of the k-fold join, the vertices of F in the i-th
/// region induce a subgraph of kG_i whose components each live in one copy of
/// G_i. Conversely, placing every component in its own copy and adding F's
/// remaining edges (all of which meet two regions) yields a join member that
/// contains F, using k = max component count <= |V(F)|.
inline std::optional<DecWitness> find_split_witness(const std::vector<Hypergraph>& family,
                                                    std::span<const Hypergraph> parts) {
  for (const Hypergraph& f : family)
    if (auto w = detail::SplitSearch(f, parts).run()) return w;
  return std::nullopt;
}

namespace detail {

// Non-increasing lists of nonempty masks of one part, at most k of them,
// total popcount at most `budget`.
inline void piece_lists(int part_order, int k, int budget, std::vector<std::uint32_t>& current,
                        std::vector<std::vector<std::uint32_t>>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == k) return;
  std::uint32_t top = current.empty() ? (bit(part_order) - 1) : current.back();
  for (std::uint32_t m = top; m >= 1; --m) {
    int c = std::popcount(m);
    if (c > budget) continue;
    current.push_back(m);
    piece_lists(part_order, k, budget - c, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Brute force over the definition: for every k <= k_max, every way of
/// choosing at most `witness_size` vertices of kG_1 + ... + kG_n (up to
/// permuting copies) and every crossing-edge completion on them, test
/// membership. By induced-heredity a join member leaves P iff one of its
/// induced subhypergraphs does, so for a forbidden-form P with witness_size
/// at least its largest forbidden graph this decides the first k_max joins
/// exactly. Sound for "not contained"; "contained" is only up to the bounds.
inline JoinResult join_subset_bruteforce(const Property& p, std::span<const Hypergraph> parts, int k_max,
                                         int witness_size, std::int64_t edge_cap = kDefaultJoinEdgeCap) {
  if (parts.empty()) throw PreconditionError("join_subset_of: no parts");
  for (const Hypergraph& g : parts) {
    detail::check_universe(p, g, "join_subset_of");
    if (g.order() > 30) throw CapExceeded("brute-force join: part too large");
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> lists(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::uint32_t> cur;
    detail::piece_lists(parts[i].order(), k_max, witness_size, cur, lists[i]);
  }
  JoinResult result{true, Confidence::Bounded, std::nullopt};
  std::vector<std::size_t> pick(parts.size(), 0);

  auto test = [&]() -> bool {
    int total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::uint32_t m : lists[i][pick[i]]) total += std::popcount(m);
    if (total == 0 || total > witness_size) return false;
    std::vector<Hypergraph> blocks;
    std::vector<int> block_part;
    std::vector<std::vector<std::pair<int, std::uint32_t>>> block_pieces;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& pieces = lists[i][pick[i]];
      if (pieces.empty()) continue;
      Hypergraph acc = null_graph(p.universe_ptr());
      std::vector<std::pair<int, std::uint32_t>> meta;
      for (std::size_t c = 0; c < pieces.size(); ++c) {
        acc = disjoint_union(acc, induced(parts[i], detail::mask_vertices(pieces[c])));
        meta.emplace_back(static_cast<int>(c), pieces[c]);
      }
      blocks.push_back(std::move(acc));
      block_part.push_back(static_cast<int>(i));
      block_pieces.push_back(std::move(meta));
    }
    JoinStream stream(blocks, edge_cap);
    while (auto h = stream.next()) {
      if (member(p, *h).member) continue;
      DecWitness w{*h, std::vector<int>(h->order()), {}, 1};
      for (Vertex v = 0; v < h->order(); ++v) w.split[v] = block_part[stream.block_of(v)];
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        Vertex at = stream.offset(static_cast<int>(b));
        for (auto [copy, mask] : block_pieces[b]) {
          Placement pl{block_part[b], copy, {}, detail::mask_vertices(mask)};
          for (std::size_t j = 0; j < pl.map.size(); ++j) pl.vertices.push_back(at++);
          w.placements.push_back(std::move(pl));
        }
        w.copies_needed = std::max(w.copies_needed, static_cast<int>(block_pieces[b].size()));
      }
      result.contained = false;
      result.witness = std::move(w);
      return true;
    }
    return false;
  };

  // Odometer over the per-part piece lists.
  while (true) {
    if (test()) return result;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == lists[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return result;
}

/// Literal definition check over whole join members, for tiny inputs only:
/// enumerates every member of kG_1 * ... * kG_n for k = 1..k_max.
inline bool join_subset_literal(const Property& p, std::span<const Hypergraph> parts, int k_max,
                                std::int64_t edge_cap = kDefaultJoinEdgeCap) {
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Hypergraph> copies;
    for (const Hypergraph& g : parts) copies.push_back(g.order() ? replicate(k, g) : g);
    JoinStream stream(copies, edge_cap);
    while (auto h = stream.next())
      if (!member(p, *h).member) return false;
  }
  return true;
}

/// Witness that G is P-strict: the non-member F0 minus vertex `removed`
/// embeds into G via `embedding` (indexed by the vertices of F0 - removed).
struct StrictWitness {
  Hypergraph forbidden;
  Vertex removed = 0;
  Embedding embedding;
};

struct StrictResult {
  bool strict = false;
  std::optional<StrictWitness> witness;
  explicit operator bool() const { return strict; }
};

struct DecResult {
  int value = 0;
  std::optional<Decomposition> best;  // first optimal decomposition in canonical order
  Confidence confidence = Confidence::Exact;
};

/// Decomposition engine for one property. Forbidden-form properties are
/// handled exactly; products and generated properties are checked against
/// every non-member with at most witness_size vertices, and every answer
/// says which of the two it is.
class Decomposer {
 public:
  explicit Decomposer(Property p, JoinOptions options = {})
      : Decomposer(std::move(p), JoinMode::Exact, options, true) {}

  Decomposer(Property p, JoinMode mode, JoinOptions options = {}) : Decomposer(std::move(p), mode, options, false) {}

  const Property& property() const { return p_; }
  JoinMode mode() const { return mode_; }
  const JoinOptions& options() const { return options_; }
  Confidence confidence() const { return mode_ == JoinMode::Exact ? Confidence::Exact : Confidence::Bounded; }
  // Non-members the criterion searches for.
  const std::vector<Hypergraph>& family() const { return family_; }
  int witness_size() const { return witness_size_; }

  JoinResult join_subset_of(std::span<const Hypergraph> parts) const {
    if (parts.empty()) throw PreconditionError("join_subset_of: no parts");
    for (const Hypergraph& g : parts) detail::check_universe(p_, g, "join_subset_of");
    if (mode_ == JoinMode::BruteForce)
      return join_subset_bruteforce(p_, parts, options_.k_max, witness_size_, options_.join_edge_cap);
    JoinResult r{true, confidence(), find_split_witness(family_, parts)};
    r.contained = !r.witness.has_value();
    return r;
  }

  JoinResult check_decomposition(const Hypergraph& g, const Decomposition& d) const {
    if (d.order() != g.order()) throw PreconditionError("decomposition does not match the hypergraph");
    std::vector<Hypergraph> parts;
    for (const VertexSet& s : d.parts()) parts.push_back(induced(g, s));
    return join_subset_of(parts);
  }

  bool is_decomposition(const Hypergraph& g, const Decomposition& d) const {
    return check_decomposition(g, d).contained;
  }

  /// Valid decompositions level by level (index = number of parts), from
  /// the one-part partition downwards through the partition lattice. A
  /// partition is only tested if every merge of two of its parts is valid:
  /// merging two parts of a decomposition gives a decomposition, because each
  /// member of the coarser join is also a member of the finer one.
  std::vector<std::vector<Decomposition>> decomposition_levels(const Hypergraph& g, int max_parts) const {
    std::vector<std::vector<Decomposition>> levels(1);
    if (g.order() == 0 || max_parts < 1) return levels;
    std::set<std::vector<int>> valid;
    std::vector<int> one(g.order(), 0);
    Decomposition whole = Decomposition::from_labels(one);
    if (!is_decomposition(g, whole)) return levels;
    levels.push_back({whole});
    valid.insert(one);
    for (int k = 1; k < max_parts && k < g.order(); ++k) {
      std::set<std::vector<int>> candidates;
      for (const std::vector<int>& label : valid) refine_once(label, k, candidates);
      std::vector<std::vector<int>> todo;
      for (const auto& c : candidates)
        if (all_merges_valid(c, k + 1, valid)) todo.push_back(c);
      std::vector<char> ok(todo.size(), 0);
      parallel_for(todo.size(), options_.threads,
                   [&](std::size_t i) { ok[i] = is_decomposition(g, Decomposition::from_labels(todo[i])); });
      std::set<std::vector<int>> next;
      std::vector<Decomposition> level;
      for (std::size_t i = 0; i < todo.size(); ++i)
        if (ok[i]) {
          next.insert(todo[i]);
          level.push_back(Decomposition::from_labels(todo[i]));
        }
      if (level.empty()) break;
      levels.push_back(std::move(level));
      valid = std::move(next);
    }
    return levels;
  }

  /// dec_P(G): largest number of parts in a P-decomposition; 0 when there is none.
  DecResult dec(const Hypergraph& g) const {
    detail::check_universe(p_, g, "dec");
    DecResult r{0, std::nullopt, confidence()};
    if (g.order() == 0 || !member(p_, g).member) return r;
    auto levels = decomposition_levels(g, g.order());
    r.value = static_cast<int>(levels.size()) - 1;
    if (r.value > 0) r.best = levels.back().front();
    if (p_.is_forbidden() && r.value >= f_value(p_))
      throw std::logic_error("dec bound violated: dec_P(G) must stay below f(P)");
    return r;
  }

  /// All decompositions with exactly n parts, in canonical order.
  std::vector<Decomposition> all_decompositions(const Hypergraph& g, int n) const {
    if (n < 1) return {};
    auto levels = decomposition_levels(g, n);
    if (static_cast<int>(levels.size()) <= n) return {};
    return levels[n];
  }

  /// Direct scan of every set partition into n nonempty parts (no lattice pruning).
  std::vector<Decomposition> scan_decompositions(const Hypergraph& g, int n) const {
    std::vector<Blocks> all = enumerate_partitions(g.order(), n, n, true);
    std::vector<char> ok(all.size(), 0);
    parallel_for(all.size(), options_.threads,
                 [&](std::size_t i) { ok[i] = is_decomposition(g, Decomposition(g.order(), all[i])); });
    std::vector<Decomposition> out;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (ok[i]) out.emplace_back(g.order(), all[i]);
    return out;
  }

  /// Exactly one decomposition with dec_P(G) parts; indecomposable members count.
  bool is_uniquely_decomposable(const Hypergraph& g) const {
    int n = dec(g).value;
    if (n == 0) return false;
    if (n == 1) return true;
    return all_decompositions(g, n).size() == 1;
  }

  /// The unique maximal decomposition.
  Decomposition unique_decomposition(const Hypergraph& g) const {
    int n = dec(g).value;
    if (n == 0) throw PreconditionError("unique decomposition: hypergraph is not in the property");
    auto all = all_decompositions(g, n);
    if (all.size() != 1) throw PreconditionError("hypergraph is not uniquely decomposable");
    return all.front();
  }

  std::vector<Hypergraph> ind_parts(const Hypergraph& g) const {
    std::vector<Hypergraph> out;
    Decomposition d = unique_decomposition(g);
    for (const VertexSet& s : d.parts()) out.push_back(induced(g, s));
    return out;
  }

  /// Number of ind-parts of G containing F as an induced subhypergraph.
  int multiplicity(const Hypergraph& f, const Hypergraph& g) const {
    int m = 0;
    for (const Hypergraph& part : ind_parts(g))
      if (is_induced_subgraph(f, part)) ++m;
    return m;
  }

  /// G is in P and some one-vertex extension in G * K1 leaves P. That
  /// happens exactly when a forbidden F has a vertex v with F - v <= G: such
  /// an extension must use the new vertex, and conversely the new vertex can
  /// copy v's edges onto an embedded F - v.
  StrictResult is_strict(const Hypergraph& g) const {
    detail::check_universe(p_, g, "is_strict");
    if (!member(p_, g).member) return {};
    if (mode_ == JoinMode::BruteForce) return strict_bruteforce(g);
    for (const Hypergraph& f : family_)
      for (Vertex v = 0; v < f.order(); ++v) {
        if (f.order() - 1 > g.order()) continue;
        VertexSet rest;
        for (Vertex u = 0; u < f.order(); ++u)
          if (u != v) rest.push_back(u);
        if (auto e = embed_induced(induced(f, rest), g)) return {true, StrictWitness{f, v, std::move(*e)}};
      }
    return {};
  }

  /// A P-strict supergraph of G with fewer than |V(G)| + f(P) vertices. New
  /// vertices are added one at a time carrying the edges of a smallest
  /// non-member F among themselves; after at most |V(F)| - 1 steps the next
  /// extension would contain F, so the last member reached is strict.
  Hypergraph strictify(const Hypergraph& g) const {
    detail::check_universe(p_, g, "strictify");
    if (!member(p_, g).member) throw PreconditionError("strictify: hypergraph is not in the property");
    if (family_.empty()) throw CapExceeded("strictify: no non-member known within the witness bound");
    const Hypergraph* smallest = &family_.front();
    for (const Hypergraph& f : family_)
      if (f.order() < smallest->order()) smallest = &f;
    Hypergraph current = g;
    for (int i = 0; i <= smallest->order(); ++i) {
      if (is_strict(current).strict) return current;
      std::vector<Edge> edges = current.edges();
      for (const Edge& e : smallest->edges()) {
        if (*std::max_element(e.vertices.begin(), e.vertices.end()) != i) continue;
        Edge moved = e;
        for (Vertex& v : moved.vertices) v += g.order();
        edges.push_back(std::move(moved));
      }
      Hypergraph next(g.universe_ptr(), current.order() + 1, std::move(edges));
      if (!member(p_, next).member) return current;
      current = std::move(next);
    }
    throw std::logic_error("strictify: did not reach a strict hypergraph");
  }

 private:
  Decomposer(Property p, JoinMode mode, JoinOptions options, bool auto_mode)
      : p_(std::move(p)), mode_(mode), options_(options) {
    if (auto_mode) mode_ = p_.is_forbidden() ? JoinMode::Exact : JoinMode::Bounded;
    if (mode_ == JoinMode::Exact && !p_.is_forbidden())
      throw PreconditionError("exact join containment needs a forbidden-form property");
    int largest = 0;
    for (const Hypergraph& f : p_.forbidden_graphs()) largest = std::max(largest, f.order());
    witness_size_ = options_.witness_size > 0 ? options_.witness_size
                    : p_.is_forbidden()       ? largest
                                              : options_.enumeration_cap;
    if (p_.is_forbidden()) {
      for (const Hypergraph& f : p_.forbidden_graphs())
        if (mode_ == JoinMode::Exact || f.order() <= witness_size_) family_.push_back(f);
    } else {
      family_ = forbidden_up_to(p_, witness_size_, std::max(options_.enumeration_cap, witness_size_));
    }
  }

  // Splits one block of an RGS labelling with k blocks into two, in every way.
  static void refine_once(const std::vector<int>& label, int k, std::set<std::vector<int>>& out) {
    for (int b = 0; b < k; ++b) {
      std::vector<Vertex> members;
      for (std::size_t v = 0; v < label.size(); ++v)
        if (label[v] == b) members.push_back(static_cast<Vertex>(v));
      if (members.size() < 2 || members.size() > 30) continue;
      // The smallest member stays; every nonempty subset of the rest moves out.
      const std::uint32_t span = std::uint32_t{1} << (members.size() - 1);
      for (std::uint32_t m = 1; m < span; ++m) {
        std::vector<int> next = label;
        for (std::size_t j = 1; j < members.size(); ++j)
          if (m >> (j - 1) & 1) next[members[j]] = k;
        out.insert(normalize_labels(next));
      }
    }
  }

  static std::vector<int> normalize_labels(const std::vector<int>& label) {
    std::vector<int> map(label.size() + 1, -1), out(label.size());
    int next = 0;
    for (std::size_t v = 0; v < label.size(); ++v) {
      if (map[label[v]] < 0) map[label[v]] = next++;
      out[v] = map[label[v]];
    }
    return out;
  }

  static bool all_merges_valid(const std::vector<int>& label, int k, const std::set<std::vector<int>>& valid) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        std::vector<int> merged = label;
        for (int& x : merged)
          if (x == b) x = a;
        if (!valid.contains(normalize_labels(merged))) return false;
      }
    return true;
  }

  StrictResult strict_bruteforce(const Hypergraph& g) const {
    std::vector<Hypergraph> parts{g, Hypergraph(g.universe_ptr(), 1)};
    JoinStream stream(parts, options_.join_edge_cap);
    while (auto h = stream.next())
      if (!member(p_, *h).member) return {true, std::nullopt};
    return {};
  }

  Property p_;
  JoinMode mode_;
  JoinOptions options_;
  int witness_size_ = 0;
  std::vector<Hypergraph> family_;
};

/// Every part of d lies inside a single part of d0 (same ground set).
inline bool respects(const Decomposition& d, const Decomposition& d0) {
  if (d.order() != d0.order()) throw PreconditionError("respects: decompositions of different vertex sets");
  std::vector<int> cls = d0.labels();
  for (const VertexSet& part : d.parts())
    for (Vertex v : part)
      if (cls[v] != cls[part.front()]) return false;
  return true;
}

/// d is a decomposition of a hypergraph made of copies of a base G:
/// copies[c][v] is the vertex carrying base vertex v in copy c. d respects
/// d0 (a decomposition of the base) uniformly if each part of d meets every
/// copy inside one and the same class of d0.
inline bool respects_uniformly(const Decomposition& d, const Decomposition& d0,
                               const std::vector<std::vector<Vertex>>& copies) {
  std::vector<int> cls = d0.labels();
  std::vector<int> part_of = d.labels();
  std::vector<int> class_of_part(d.size(), -1);
  for (const auto& copy : copies) {
    if (static_cast<int>(copy.size()) != d0.order())
      throw PreconditionError("respects_uniformly: copy does not match the base decomposition");
    for (Vertex v = 0; v < d0.order(); ++v) {
      if (copy[v] < 0 || copy[v] >= d.order()) throw PreconditionError("respects_uniformly: copy vertex out of range");
      int part = part_of[copy[v]];
      if (class_of_part[part] == -1) class_of_part[part] = cls[v];
      else if (class_of_part[part] != cls[v]) return false;
    }
  }
  return true;
}

/// Decomposition of copy c induced by d, expressed on base vertices.
inline Decomposition restrict_to_copy(const Decomposition& d, const std::vector<Vertex>& copy) {
  std::vector<int> part_of = d.labels();
  std::vector<int> label(copy.size());
  for (std::size_t v = 0; v < copy.size(); ++v) label[v] = part_of[copy[v]];
  std::vector<int> map(d.size(), -1);
  int next = 0;
  for (int& x : label) {
    if (map[x] < 0) map[x] = next++;
    x = map[x];
  }
  return Decomposition::from_labels(label);
}

}  // namespace ufact

#endif  // UFACT_DECOMP_HPP
