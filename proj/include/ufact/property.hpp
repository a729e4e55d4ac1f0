#ifndef UFACT_PROPERTY_HPP
#define UFACT_PROPERTY_HPP

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "ufact/canonical.hpp"
#include "ufact/embed.hpp"
#include "ufact/error.hpp"
#include "ufact/hypergraph.hpp"

namespace ufact {

/// Removes duplicates (up to isomorphism) and every graph that contains
/// another member as an induced subhypergraph. Result is canonical and sorted.
inline std::vector<Hypergraph> minimize_forbidden(const std::vector<Hypergraph>& graphs) {
  std::vector<Hypergraph> unique = canonical_set(graphs);
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < unique.size() && !dominated; ++j)
      if (i != j && unique[j].order() <= unique[i].order() && is_induced_subgraph(unique[j], unique[i]))
        dominated = true;
    if (!dominated) out.push_back(unique[i]);
  }
  return out;
}

/// An induced-hereditary property in one of three representations:
///  - forbidden: hypergraphs with no induced copy of a listed minimal graph;
///  - product: hypergraphs admitting a vertex partition whose i-th block
///    induces a member of the i-th factor (blocks may be empty);
///  - generated: induced subhypergraphs of listed generators, only decidable
///    on hypergraphs with at most `bound` vertices.
class Property {
 public:
  struct Forbidden {
    std::vector<Hypergraph> graphs;
  };
  struct Product {
    std::vector<Property> factors;
  };
  struct Generated {
    std::vector<Hypergraph> generators;
    int bound = 0;
  };

  static Property forbidden(std::string name, UniversePtr universe, const std::vector<Hypergraph>& graphs) {
    for (const Hypergraph& g : graphs) {
      if (!same_universe(universe, g.universe_ptr()))
        throw PreconditionError("property " + name + ": forbidden graph over a different universe");
      if (g.order() < 2)
        throw PreconditionError("property " + name + ": forbidding K0 or K1 leaves no property");
    }
    if (graphs.empty()) throw PreconditionError("property " + name + ": empty forbidden set");
    return Property(std::move(name), std::move(universe), Forbidden{minimize_forbidden(graphs)});
  }

  static Property product(std::string name, std::vector<Property> factors) {
    if (factors.size() < 2) throw PreconditionError("property " + name + ": a product needs two or more factors");
    UniversePtr u = factors.front().universe_ptr();
    for (const Property& f : factors)
      if (!same_universe(u, f.universe_ptr()))
        throw PreconditionError("property " + name + ": factors over different universes");
    return Property(std::move(name), std::move(u), Product{std::move(factors)});
  }

  static Property generated(std::string name, UniversePtr universe, const std::vector<Hypergraph>& generators,
                            int bound) {
    if (bound < 0) throw PreconditionError("property " + name + ": negative bound");
    for (const Hypergraph& g : generators)
      if (!same_universe(universe, g.universe_ptr()))
        throw PreconditionError("property " + name + ": generator over a different universe");
    // Generators that sit inside another generator add nothing.
    std::vector<Hypergraph> gens = canonical_set(generators);
    std::vector<Hypergraph> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool inside = false;
      for (std::size_t j = 0; j < gens.size() && !inside; ++j)
        if (gens[j].order() > gens[i].order() && is_induced_subgraph(gens[i], gens[j])) inside = true;
      if (!inside) kept.push_back(gens[i]);
    }
    return Property(std::move(name), std::move(universe), Generated{std::move(kept), bound});
  }

  const std::string& name() const { return name_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const Universe& universe() const { return *universe_; }

  bool is_forbidden() const { return std::holds_alternative<Forbidden>(repr_); }
  bool is_product() const { return std::holds_alternative<Product>(repr_); }
  bool is_generated() const { return std::holds_alternative<Generated>(repr_); }

  const Forbidden& as_forbidden() const { return std::get<Forbidden>(repr_); }
  const Product& as_product() const { return std::get<Product>(repr_); }
  const Generated& as_generated() const { return std::get<Generated>(repr_); }

  // Forbidden-form graphs only; empty otherwise.
  const std::vector<Hypergraph>& forbidden_graphs() const {
    static const std::vector<Hypergraph> none;
    return is_forbidden() ? as_forbidden().graphs : none;
  }

  Property renamed(std::string name) const {
    Property p = *this;
    p.name_ = std::move(name);
    return p;
  }

  // Structural equality (same representation and same canonical data).
  bool operator==(const Property& other) const {
    if (name_ != other.name_ || !same_universe(universe_, other.universe_)) return false;
    if (repr_.index() != other.repr_.index()) return false;
    if (is_forbidden()) return as_forbidden().graphs == other.as_forbidden().graphs;
    if (is_product()) return as_product().factors == other.as_product().factors;
    return as_generated().generators == other.as_generated().generators &&
           as_generated().bound == other.as_generated().bound;
  }

 private:
  Property(std::string name, UniversePtr universe, std::variant<Forbidden, Product, Generated> repr)
      : name_(std::move(name)), universe_(std::move(universe)), repr_(std::move(repr)) {}

  std::string name_;
  UniversePtr universe_;
  std::variant<Forbidden, Product, Generated> repr_;
};

}  // namespace ufact

#endif  // UFACT_PROPERTY_HPP
