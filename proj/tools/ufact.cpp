// Command-line front end for the ufact library.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ufact/ufact.hpp"

using namespace ufact;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCap = 3 };

struct Globals {
  std::string config_path;
  std::optional<int> parallelism;
  std::string format;
  Config config;
};

Hypergraph load_graph(const std::string& path) {
  try {
    return io::read_hypergraph(path);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

Property load_property(const std::string& path) {
  try {
    return io::read_property(path);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

Decomposition load_decomposition(const std::string& path, int order) {
  try {
    return io::read_decomposition(path, order);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string witness_text(const Hypergraph& f, const VertexSet& where) {
  return graphs::describe(f) + " at " + to_string(where);
}

JoinOptions join_options(const Config& c) {
  JoinOptions o;
  o.k_max = c.k_max;
  o.witness_size = c.witness_size;
  o.threads = c.parallelism;
  o.join_edge_cap = c.join_edge_cap;
  o.enumeration_cap = std::max(c.max_vertices, c.witness_size);
  return o;
}

FactorOptions factor_options(const Config& c) {
  FactorOptions o;
  o.threads = c.parallelism;
  o.enumeration_cap = c.max_vertices;
  o.witness_size = c.witness_size;
  return o;
}

std::string describe_property(const Property& p) {
  if (p.is_forbidden()) {
    std::string out = "forbidden {";
    for (std::size_t i = 0; i < p.as_forbidden().graphs.size(); ++i)
      out += (i ? ", " : "") + graphs::describe(p.as_forbidden().graphs[i]);
    return out + "}";
  }
  if (p.is_product()) {
    std::string out = "product of ";
    for (std::size_t i = 0; i < p.as_product().factors.size(); ++i)
      out += (i ? ", " : "") + p.as_product().factors[i].name();
    return out;
  }
  return "generated by " + std::to_string(p.as_generated().generators.size()) + " graphs, bound " +
         std::to_string(p.as_generated().bound);
}

int cmd_member(const std::string& prop, const std::string& graph) {
  Property p = load_property(prop);
  Hypergraph h = load_graph(graph);
  MemberResult r = member(p, h);
  if (r.member) {
    std::cout << "member\n";
    return kOk;
  }
  if (r.forbidden) std::cout << "non-member, witness: " << witness_text(*r.forbidden, r.embedding->image()) << "\n";
  else std::cout << "non-member\n";
  return kNegative;
}

int cmd_partition(const std::string& graph, const std::vector<std::string>& props) {
  Hypergraph h = load_graph(graph);
  std::vector<Property> factors;
  for (const std::string& f : props) factors.push_back(load_property(f));
  auto r = partition_solve(h, factors);
  if (!r) {
    std::cout << "no partition\n";
    return kNegative;
  }
  std::cout << "partition: ";
  for (std::size_t i = 0; i < r->parts.size(); ++i) std::cout << (i ? "|" : "") << to_string(r->parts[i]);
  std::cout << "\n";
  return kOk;
}

int cmd_dec(const Globals& g, const std::string& graph, const std::string& prop) {
  Decomposer dp(load_property(prop), join_options(g.config));
  Hypergraph h = load_graph(graph);
  DecResult r = dp.dec(h);
  std::cout << "dec=" << r.value;
  if (r.best) std::cout << ", parts=" << to_string(*r.best);
  std::cout << ", confidence=" << to_string(r.confidence) << "\n";
  return r.value > 0 ? kOk : kNegative;
}

int cmd_strict(const Globals& g, const std::string& graph, const std::string& prop) {
  Decomposer dp(load_property(prop), join_options(g.config));
  Hypergraph h = load_graph(graph);
  StrictResult r = dp.is_strict(h);
  if (!r.strict) {
    std::cout << "not strict, confidence=" << to_string(dp.confidence()) << "\n";
    return kNegative;
  }
  const StrictWitness& w = *r.witness;
  std::cout << "strict, witness: " << graphs::describe(w.forbidden) << " minus vertex " << w.removed << " at "
            << to_string(w.embedding.image()) << "\n";
  return kOk;
}

int cmd_decompositions(const Globals& g, const std::string& graph, const std::string& prop, int parts) {
  Decomposer dp(load_property(prop), join_options(g.config));
  Hypergraph h = load_graph(graph);
  auto all = dp.all_decompositions(h, parts);
  for (const Decomposition& d : all) std::cout << to_string(d) << "\n";
  std::cout << "count=" << all.size() << ", confidence=" << to_string(dp.confidence()) << "\n";
  return all.empty() ? kNegative : kOk;
}

int cmd_construct(const Globals& g, const std::string& kind, const std::string& graph, const std::string& prop,
                  const std::string& d0_path, const std::string& dt_path, const std::string& out_path) {
  Decomposer dp(load_property(prop), join_options(g.config));
  Hypergraph h = load_graph(graph);
  Decomposition d0 = load_decomposition(d0_path, h.order());
  GStarOptions opts{g.config.gstar_size_cap};
  CopyTracked ct;
  if (kind == "c1") {
    ct = construction1(h, d0, dp);
  } else if (kind == "c2") {
    if (dt_path.empty()) throw PreconditionError("construct c2 needs --dt");
    ct = construction2(h, d0, load_decomposition(dt_path, h.order()), dp);
  } else if (kind == "gstar") {
    ct = g_star(h, d0, dp, opts);
  } else if (kind == "unique-super") {
    ct = unique_super(h, d0, dp, opts);
  } else {
    ct = unique_respect_super(h, d0, dp, opts);
  }
  std::string text = g.config.format == "dot" ? dot::export_copy_tracked(ct) : io::write_copy_tracked(ct);
  if (out_path.empty()) std::cout << text;
  else io::write_file(out_path, text);
  std::cerr << "built " << ct.graph.order() << " vertices in " << ct.copy_count() << " copies\n";
  return kOk;
}

int cmd_factorize(const Globals& g, const std::string& prop, int size, int bound, const std::string& emit) {
  Property p = load_property(prop);
  FactorOptions fo = factor_options(g.config);
  DecBounds b = dec_bounds(p, bound, fo);
  std::vector<Factorisation> found = factor_search(p, size, bound, fo);
  std::string report;
  report += "property: " + p.name() + "\n";
  report += "equality bound: " + std::to_string(bound) + "\n";
  report += "candidate forbidden size: " + std::to_string(size) + "\n";
  report += "dec bracket: [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
  if (b.upper_witness)
    report += ", upper witness: strict " + graphs::describe(*b.upper_witness) + " with dec " + std::to_string(b.upper);
  else
    report += ", upper from f(P) - 1";
  report += ", confidence=" + to_string(b.confidence) + "\n";
  report += "factorisations: " + std::to_string(found.size()) + "\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    report += "factorisation " + std::to_string(i + 1) + ":";
    for (std::size_t j = 0; j < found[i].factors.size(); ++j) {
      const Property& q = found[i].factors[j];
      IrreducibilityResult ir = irreducibility_test(q, bound, fo);
      report += "\n  factor " + std::to_string(j + 1) + ": " + describe_property(q) + ", " + to_string(ir.verdict);
      if (ir.verdict == Verdict::IrreducibleCertified)
        report += " (strict " + graphs::describe(*ir.bounds.upper_witness) + " with dec 1)";
      if (!emit.empty()) {
        fs::create_directories(emit);
        io::write_file(fs::path(emit) / ("factorisation_" + std::to_string(i + 1) + "_factor_" +
                                         std::to_string(j + 1) + ".prop"),
                       io::write_property(q.renamed("F" + std::to_string(i + 1) + "_" + std::to_string(j + 1))));
      }
    }
    report += "\n";
  }
  if (found.empty()) {
    IrreducibilityResult ir = irreducibility_test(p, bound, fo, size);
    report += "verdict: " + to_string(ir.verdict);
    if (ir.verdict == Verdict::IrreducibleCertified)
      report += " (strict " + graphs::describe(*ir.bounds.upper_witness) + " with dec 1)";
    report += "\n";
  }
  std::cout << report;
  if (!emit.empty()) {
    fs::create_directories(emit);
    io::write_file(fs::path(emit) / "summary.txt", report);
  }
  return found.empty() ? kNegative : kOk;
}

int cmd_enumerate(const Globals& g, int vertices, bool connected, const std::string& universe) {
  UniversePtr u = universe.empty() ? simple_graph_universe() : io::detail::parse_universe(universe, 1);
  EnumSpec spec{u, vertices, 0, connected, g.config.max_vertices};
  auto all = enumerate_hypergraphs(spec);
  for (const Hypergraph& h : all) std::cout << io::write_hypergraph(h, false) << "\n";
  std::cout << "count=" << all.size() << "\n";
  return kOk;
}

int cmd_export_dot(const std::string& graph, const std::string& decomposition, const std::string& tracked) {
  if (!tracked.empty()) {
    std::cout << dot::export_copy_tracked(io::parse_copy_tracked(io::read_file(tracked)));
    return kOk;
  }
  if (graph.empty()) throw PreconditionError("export-dot needs -g or --tracked");
  Hypergraph h = load_graph(graph);
  std::optional<Decomposition> d;
  if (!decomposition.empty()) d = load_decomposition(decomposition, h.order());
  std::cout << dot::export_graph(h, d);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ufact: decompositions and factorisations of hereditary hypergraph properties"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "key=value config file (default: $UFACT_CONFIG)");
  app.add_option("--parallelism", g.parallelism, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "dot"}));

  std::string prop, graph, d0, dt, out, emit, universe, tracked, decomposition, kind;
  std::vector<std::string> props;
  int parts = 0, size = 2, bound = 5, vertices = 0;
  bool connected = false;

  auto* member_cmd = app.add_subcommand("member", "membership test");
  member_cmd->add_option("-p,--property", prop)->required();
  member_cmd->add_option("-g,--graph", graph)->required();

  auto* partition_cmd = app.add_subcommand("partition", "vertex partition into members of the given factors");
  partition_cmd->add_option("-g,--graph", graph)->required();
  partition_cmd->add_option("-p,--property", props)->required();

  auto* dec_cmd = app.add_subcommand("dec", "decomposability number");
  dec_cmd->add_option("-g,--graph", graph)->required();
  dec_cmd->add_option("-p,--property", prop)->required();

  auto* strict_cmd = app.add_subcommand("strict", "strictness test");
  strict_cmd->add_option("-g,--graph", graph)->required();
  strict_cmd->add_option("-p,--property", prop)->required();

  auto* decs_cmd = app.add_subcommand("decompositions", "all decompositions with a given number of parts");
  decs_cmd->add_option("-g,--graph", graph)->required();
  decs_cmd->add_option("-p,--property", prop)->required();
  decs_cmd->add_option("--parts", parts)->required()->check(CLI::PositiveNumber);

  auto* construct_cmd = app.add_subcommand("construct", "copy constructions");
  construct_cmd->add_option("kind", kind)->required()->check(
      CLI::IsMember({"c1", "c2", "gstar", "unique-super", "unique-respect"}));
  construct_cmd->add_option("-g,--graph", graph)->required();
  construct_cmd->add_option("-p,--property", prop)->required();
  construct_cmd->add_option("-d,--d0", d0, "reference decomposition (JSON)")->required();
  construct_cmd->add_option("--dt", dt, "decomposition not respecting d0 (c2 only)");
  construct_cmd->add_option("-o,--output", out);

  auto* factor_cmd = app.add_subcommand("factorize", "bounded factor search");
  factor_cmd->add_option("-p,--property", prop)->required();
  factor_cmd->add_option("--forbidden-size", size)->check(CLI::Range(2, 7));
  factor_cmd->add_option("--bound", bound)->check(CLI::Range(1, 12));
  factor_cmd->add_option("--emit", emit, "directory for factor files and summary");

  auto* enum_cmd = app.add_subcommand("enumerate", "isomorphism classes up to a vertex count");
  enum_cmd->add_option("--vertices", vertices)->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--connected", connected);
  enum_cmd->add_option("--universe", universe, "e.g. \"kinds=UNORDERED arities=2 colours=e\"");

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  dot_cmd->add_option("-g,--graph", graph);
  dot_cmd->add_option("-d,--decomposition", decomposition);
  dot_cmd->add_option("--tracked", tracked, "copy-tracked construction output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g.config_path.empty())
      if (const char* env = std::getenv("UFACT_CONFIG")) g.config_path = env;
    if (!g.config_path.empty()) {
      try {
        g.config = load_config(g.config_path);
      } catch (const ParseError& e) {
        throw Error(g.config_path + ": " + e.what());
      }
    }
    if (g.parallelism) g.config.parallelism = *g.parallelism;
    if (!g.format.empty()) g.config.format = g.format;

    if (*member_cmd) return cmd_member(prop, graph);
    if (*partition_cmd) return cmd_partition(graph, props);
    if (*dec_cmd) return cmd_dec(g, graph, prop);
    if (*strict_cmd) return cmd_strict(g, graph, prop);
    if (*decs_cmd) return cmd_decompositions(g, graph, prop, parts);
    if (*construct_cmd) return cmd_construct(g, kind, graph, prop, d0, dt, out);
    if (*factor_cmd) return cmd_factorize(g, prop, size, bound, emit);
    if (*enum_cmd) return cmd_enumerate(g, vertices, connected, universe);
    if (*dot_cmd) return cmd_export_dot(graph, decomposition, tracked);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
