#ifndef UFACT_IO_HPP
#define UFACT_IO_HPP

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ufact/construct.hpp"
#include "ufact/error.hpp"
#include "ufact/property.hpp"

namespace ufact::io {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline int to_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  }
}

// Meaningful lines (comments and blanks dropped) with their 1-based numbers.
class Lines {
 public:
  explicit Lines(std::string_view text) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string line = trim(text.substr(start, end - start));
      if (!line.empty() && line[0] != '#') lines_.emplace_back(number, std::move(line));
      start = end + 1;
    }
    last_ = number;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const std::string& peek() const { return lines_[pos_].second; }
  int line() const { return done() ? last_ : lines_[pos_].first; }
  std::pair<int, std::string> next() { return lines_[pos_++]; }

 private:
  std::vector<std::pair<int, std::string>> lines_;
  std::size_t pos_ = 0;
  int last_ = 0;
};

// "key: value" split; throws on lines without a colon.
inline std::pair<std::string, std::string> key_value(const std::pair<int, std::string>& l) {
  std::size_t colon = l.second.find(':');
  if (colon == std::string::npos) throw ParseError(l.first, "expected 'key: value', got '" + l.second + "'");
  return {trim(std::string_view(l.second).substr(0, colon)), trim(std::string_view(l.second).substr(colon + 1))};
}

inline EdgeKind parse_kind(const std::string& s, int line) {
  if (s == "UNORDERED") return EdgeKind::Unordered;
  if (s == "ORDERED") return EdgeKind::Ordered;
  throw ParseError(line, "unknown edge kind '" + s + "'");
}

inline UniversePtr parse_universe(const std::string& value, int line) {
  std::vector<EdgeKind> kinds;
  std::vector<int> arities;
  std::vector<std::string> colours;
  std::set<std::string> seen;
  for (const std::string& field : words(value)) {
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw ParseError(line, "universe field '" + field + "' lacks '='");
    std::string key = field.substr(0, eq), list = field.substr(eq + 1);
    if (!seen.insert(key).second) throw ParseError(line, "universe field '" + key + "' repeated");
    for (const std::string& item : split(list, ',')) {
      if (key == "kinds") kinds.push_back(parse_kind(item, line));
      else if (key == "arities") arities.push_back(to_int(item, line, "arity"));
      else if (key == "colours") colours.push_back(item);
      else throw ParseError(line, "unknown universe field '" + key + "'");
    }
  }
  if (seen.size() != 3) throw ParseError(line, "universe needs kinds=, arities= and colours=");
  try {
    return make_universe(kinds, arities, colours);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

inline std::string universe_line(const Universe& u) {
  std::string out = "universe: kinds=";
  for (std::size_t i = 0; i < u.kinds().size(); ++i) out += (i ? "," : "") + std::string(to_string(u.kinds()[i]));
  out += " arities=";
  for (std::size_t i = 0; i < u.arities().size(); ++i) out += (i ? "," : "") + std::to_string(u.arities()[i]);
  out += " colours=";
  for (std::size_t i = 0; i < u.colours().size(); ++i) out += (i ? "," : "") + u.colours()[i];
  return out;
}

// One hypergraph block starting at "hypergraph v1"; stops before "end" or
// the next "hypergraph v1". Inside a property the universe line may be
// omitted and defaults to `inherited`.
inline Hypergraph parse_hypergraph_block(Lines& in, const UniversePtr& inherited) {
  if (in.done()) throw ParseError(in.line(), "expected 'hypergraph v1', got end of input");
  auto header = in.next();
  if (header.second != "hypergraph v1") throw ParseError(header.first, "expected 'hypergraph v1'");
  UniversePtr universe;
  std::optional<int> order;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (!in.done() && in.peek() != "end" && in.peek() != "hypergraph v1" && in.peek().rfind("begin ", 0) != 0) {
    auto l = in.next();
    auto [key, value] = key_value(l);
    if (key == "universe") {
      if (universe || order) throw ParseError(l.first, "universe must come first and once");
      universe = parse_universe(value, l.first);
      if (inherited && !same_universe(universe, inherited))
        throw ParseError(l.first, "hypergraph universe differs from the enclosing property");
    } else if (key == "vertices") {
      if (order) throw ParseError(l.first, "vertices given twice");
      order = to_int(value, l.first, "vertex count");
      if (*order < 0) throw ParseError(l.first, "negative vertex count");
    } else if (key == "edge") {
      if (!order) throw ParseError(l.first, "edge before vertices");
      if (!universe) universe = inherited;
      if (!universe) throw ParseError(l.first, "edge before universe");
      std::size_t semi = value.find(';');
      if (semi == std::string::npos) throw ParseError(l.first, "edge lacks '; colour'");
      std::vector<std::string> parts = words(value.substr(0, semi));
      std::string colour = trim(std::string_view(value).substr(semi + 1));
      if (parts.empty()) throw ParseError(l.first, "edge lacks a kind");
      Edge e{parse_kind(parts[0], l.first), {}, universe->find_colour(colour)};
      if (e.colour < 0) throw ParseError(l.first, "colour '" + colour + "' not in universe");
      for (std::size_t i = 1; i < parts.size(); ++i) e.vertices.push_back(to_int(parts[i], l.first, "vertex"));
      try {
        Hypergraph check(universe, *order, {e});
      } catch (const Error& err) {
        throw ParseError(l.first, err.what());
      }
      e.normalize();
      if (!seen.insert(e).second) throw ParseError(l.first, "duplicate edge");
      edges.push_back(std::move(e));
    } else {
      throw ParseError(l.first, "unknown key '" + key + "'");
    }
  }
  if (!universe) universe = inherited;
  if (!universe) throw ParseError(header.first, "hypergraph without universe line");
  if (!order) throw ParseError(header.first, "hypergraph without vertices line");
  return Hypergraph(universe, *order, std::move(edges));
}

inline void expect_end(Lines& in, const char* block) {
  if (in.done() || in.peek() != "end") throw ParseError(in.line(), std::string("expected 'end' closing ") + block);
  in.next();
}

inline void expect_done(const Lines& in) {
  if (!in.done()) throw ParseError(in.line(), "unexpected trailing content");
}

}  // namespace detail

inline std::string write_hypergraph(const Hypergraph& g, bool with_universe = true) {
  std::string out = "hypergraph v1\n";
  if (with_universe) out += detail::universe_line(g.universe()) + "\n";
  out += "vertices: " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "edge: " + std::string(to_string(e.kind));
    for (Vertex v : e.vertices) out += " " + std::to_string(v);
    out += " ; " + g.universe().colours()[e.colour] + "\n";
  }
  return out;
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  detail::Lines in(text);
  Hypergraph g = detail::parse_hypergraph_block(in, nullptr);
  detail::expect_done(in);
  return g;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << content;
}

inline Hypergraph read_hypergraph(const std::filesystem::path& path) { return parse_hypergraph(read_file(path)); }

namespace detail {

inline Property parse_property_block(Lines& in, const std::filesystem::path& base_dir, int depth);

inline Property load_property_file(const std::filesystem::path& path, int line, int depth) {
  if (depth > 16) throw ParseError(line, "factor files nested too deeply");
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  Lines in(text);
  try {
    Property p = parse_property_block(in, path.parent_path(), depth + 1);
    expect_done(in);
    return p;
  } catch (const ParseError& e) {
    std::string what = e.what();
    throw ParseError(line, "in " + path.string() + ", " + what);
  }
}

inline Property parse_property_block(Lines& in, const std::filesystem::path& base_dir, int depth) {
  if (in.done()) throw ParseError(in.line(), "expected 'property v1', got end of input");
  auto header = in.next();
  if (header.second != "property v1") throw ParseError(header.first, "expected 'property v1'");
  std::optional<std::string> name, repr;
  std::optional<int> bound;
  UniversePtr universe;
  std::vector<Hypergraph> graphs;
  std::vector<Property> factors;
  bool have_block = false;
  while (!in.done() && in.peek() != "end") {
    const std::string& peek = in.peek();
    if (peek.rfind("begin ", 0) == 0) {
      auto l = in.next();
      std::string block = trim(std::string_view(l.second).substr(6));
      if (!repr) throw ParseError(l.first, "block before repr line");
      if (block == "factor") {
        if (*repr != "product") throw ParseError(l.first, "factor block in a non-product property");
        factors.push_back(parse_property_block(in, base_dir, depth + 1));
        expect_end(in, "factor");
        continue;
      }
      std::string wanted = *repr == "forbidden" ? "forbidden" : *repr == "generated" ? "generators" : "";
      if (block != wanted) throw ParseError(l.first, "unexpected block '" + block + "'");
      if (have_block) throw ParseError(l.first, "block '" + block + "' repeated");
      if (!universe) throw ParseError(l.first, "universe line must precede the block");
      have_block = true;
      while (!in.done() && in.peek() != "end") graphs.push_back(parse_hypergraph_block(in, universe));
      expect_end(in, block.c_str());
      continue;
    }
    auto l = in.next();
    auto [key, value] = key_value(l);
    if (key == "name") {
      if (name) throw ParseError(l.first, "name given twice");
      if (value.empty()) throw ParseError(l.first, "empty name");
      name = value;
    } else if (key == "repr") {
      if (repr) throw ParseError(l.first, "repr given twice");
      auto w = words(value);
      if (w.empty()) throw ParseError(l.first, "empty repr");
      repr = w[0];
      if (*repr == "generated") {
        if (w.size() != 2 || w[1].rfind("bound=", 0) != 0) throw ParseError(l.first, "expected 'generated bound=N'");
        bound = to_int(w[1].substr(6), l.first, "bound");
      } else if ((*repr == "forbidden" || *repr == "product") && w.size() == 1) {
      } else {
        throw ParseError(l.first, "unknown repr '" + value + "'");
      }
    } else if (key == "universe") {
      if (universe) throw ParseError(l.first, "universe given twice");
      universe = parse_universe(value, l.first);
    } else if (key == "factor") {
      if (!repr || *repr != "product") throw ParseError(l.first, "factor line in a non-product property");
      std::filesystem::path path = value;
      if (path.is_relative()) path = base_dir / path;
      factors.push_back(load_property_file(path, l.first, depth));
    } else {
      throw ParseError(l.first, "unknown key '" + key + "'");
    }
  }
  if (!name) throw ParseError(header.first, "property without name");
  if (!repr) throw ParseError(header.first, "property without repr");
  try {
    if (*repr == "product") {
      if (universe)
        for (const Property& f : factors)
          if (!same_universe(universe, f.universe_ptr()))
            throw ParseError(header.first, "factor universe differs from the product universe");
      return Property::product(*name, factors);
    }
    if (!universe) throw ParseError(header.first, "property without universe");
    if (!have_block) throw ParseError(header.first, "property without its graph block");
    if (*repr == "forbidden") return Property::forbidden(*name, universe, graphs);
    return Property::generated(*name, universe, graphs, *bound);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(header.first, e.what());
  }
}

}  // namespace detail

/// Self-contained text: product factors are written inline.
inline std::string write_property(const Property& p) {
  std::string out = "property v1\nname: " + p.name() + "\n";
  if (p.is_forbidden()) {
    out += "repr: forbidden\n" + detail::universe_line(p.universe()) + "\nbegin forbidden\n";
    for (const Hypergraph& g : p.as_forbidden().graphs) out += write_hypergraph(g, false);
    out += "end\n";
  } else if (p.is_generated()) {
    out += "repr: generated bound=" + std::to_string(p.as_generated().bound) + "\n" +
           detail::universe_line(p.universe()) + "\nbegin generators\n";
    for (const Hypergraph& g : p.as_generated().generators) out += write_hypergraph(g, false);
    out += "end\n";
  } else {
    out += "repr: product\n";
    for (const Property& f : p.as_product().factors) out += "begin factor\n" + write_property(f) + "end\n";
  }
  return out;
}

inline Property parse_property(std::string_view text, const std::filesystem::path& base_dir = ".") {
  detail::Lines in(text);
  Property p = detail::parse_property_block(in, base_dir, 0);
  detail::expect_done(in);
  return p;
}

inline Property read_property(const std::filesystem::path& path) {
  return parse_property(read_file(path), path.parent_path().empty() ? "." : path.parent_path());
}

/// {"parts": [[0,2],[1,3]]}
inline std::string write_decomposition(const Decomposition& d) {
  nlohmann::json j;
  j["parts"] = d.parts();
  return j.dump() + "\n";
}

inline Decomposition parse_decomposition(std::string_view text, int order) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, "malformed decomposition JSON");
  }
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array() || j.size() != 1)
    throw ParseError(1, "decomposition JSON must be {\"parts\": [[...], ...]}");
  std::vector<VertexSet> parts;
  for (const auto& part : j["parts"]) {
    if (!part.is_array()) throw ParseError(1, "each part must be an array of vertices");
    VertexSet s;
    for (const auto& v : part) {
      if (!v.is_number_integer()) throw ParseError(1, "vertices must be integers");
      s.push_back(v.get<int>());
    }
    parts.push_back(std::move(s));
  }
  try {
    return Decomposition(order, std::move(parts));
  } catch (const Error& e) {
    throw ParseError(1, e.what());
  }
}

inline Decomposition read_decomposition(const std::filesystem::path& path, int order) {
  return parse_decomposition(read_file(path), order);
}

/// Hypergraph block followed by one "copy:" line per copy (vertex of each
/// base vertex) and one "class:" line (d0 class of each base vertex).
inline std::string write_copy_tracked(const CopyTracked& ct) {
  std::string out = write_hypergraph(ct.graph);
  for (const auto& copy : ct.copies) {
    out += "copy:";
    for (Vertex v : copy) out += " " + std::to_string(v);
    out += "\n";
  }
  out += "class:";
  for (int c : ct.base_class) out += " " + std::to_string(c);
  return out + "\n";
}

inline CopyTracked parse_copy_tracked(std::string_view text) {
  // Annotation lines are lifted out first so line numbers stay intact.
  std::string graph_text;
  std::vector<std::pair<int, std::string>> notes;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line = detail::trim(text.substr(start, end - start));
    if (line.rfind("copy:", 0) == 0 || line.rfind("class:", 0) == 0) {
      notes.emplace_back(number, line);
      graph_text += "\n";
    } else {
      graph_text += std::string(text.substr(start, end - start)) + "\n";
    }
    start = end + 1;
  }
  CopyTracked ct{parse_hypergraph(graph_text), {}, {}};
  bool have_class = false;
  for (const auto& note : notes) {
    auto [key, value] = detail::key_value(note);
    std::vector<int> nums;
    for (const std::string& w : detail::words(value)) nums.push_back(detail::to_int(w, note.first, "vertex"));
    if (key == "copy") {
      ct.copies.push_back(std::move(nums));
    } else {
      if (have_class) throw ParseError(note.first, "class line given twice");
      have_class = true;
      ct.base_class = std::move(nums);
    }
  }
  if (!have_class) throw ParseError(number, "missing class line");
  std::vector<char> used(ct.graph.order(), 0);
  for (std::size_t c = 0; c < ct.copies.size(); ++c) {
    if (ct.copies[c].size() != ct.base_class.size()) throw ParseError(number, "copy size differs from class line");
    for (Vertex v : ct.copies[c]) {
      if (v < 0 || v >= ct.graph.order() || used[v]) throw ParseError(number, "copies must partition the vertices");
      used[v] = 1;
    }
  }
  for (char u : used)
    if (!u) throw ParseError(number, "copies must partition the vertices");
  return ct;
}

}  // namespace ufact::io

#endif  // UFACT_IO_HPP
