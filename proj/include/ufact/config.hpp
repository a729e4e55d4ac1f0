#ifndef UFACT_CONFIG_HPP
#define UFACT_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "ufact/construct.hpp"
#include "ufact/error.hpp"
#include "ufact/io.hpp"

namespace ufact {

struct Config {
  int max_vertices = kDefaultMaxVertices;
  std::int64_t join_edge_cap = kDefaultJoinEdgeCap;
  std::int64_t gstar_size_cap = kDefaultGStarSizeCap;
  int k_max = 3;
  int parallelism = 1;
  std::string format = "text";
  // Largest non-member searched for products and generated properties (0: engine default).
  int witness_size = 0;
};

/// key = value lines; '#' starts a comment. Unknown keys and non-positive caps are errors.
inline Config parse_config(std::string_view text, Config base = {}) {
  io::detail::Lines in(text);
  while (!in.done()) {
    auto [line, content] = in.next();
    std::size_t eq = content.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value");
    std::string key = io::detail::trim(std::string_view(content).substr(0, eq));
    std::string value = io::detail::trim(std::string_view(content).substr(eq + 1));
    if (key == "format") {
      if (value != "text" && value != "dot") throw ParseError(line, "format must be text or dot");
      base.format = value;
      continue;
    }
    std::int64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError(line, "bad number '" + value + "'");
    }
    if (n < (key == "witness_size" ? 0 : 1)) throw ParseError(line, key + " must be positive");
    if (key == "max_vertices") base.max_vertices = static_cast<int>(n);
    else if (key == "join_edge_cap") base.join_edge_cap = n;
    else if (key == "gstar_size_cap") base.gstar_size_cap = n;
    else if (key == "k_max") base.k_max = static_cast<int>(n);
    else if (key == "parallelism") base.parallelism = static_cast<int>(n);
    else if (key == "witness_size") base.witness_size = static_cast<int>(n);
    else throw ParseError(line, "unknown key '" + key + "'");
  }
  return base;
}

inline Config load_config(const std::filesystem::path& path) { return parse_config(io::read_file(path)); }

}  // namespace ufact

#endif  // UFACT_CONFIG_HPP
