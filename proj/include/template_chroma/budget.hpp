#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "template_chroma/error.hpp"

namespace template_chroma {

/// Size and work caps shared by the enumerators and solvers. Exceeding any
/// cap raises ErrorKind::BudgetExceeded; nothing is silently truncated.
struct Budget {
  std::size_t max_dim = 4;             // enumeration: coordinates
  std::size_t max_points = 6;          // enumeration: points per template
  std::size_t max_template_points = 8;  // canonical labelling is factorial in k
  std::size_t max_vertices = 5000;     // grid / point-set size
  std::uint64_t max_nodes = 100'000'000;  // backtracking nodes and k-subsets
  std::size_t max_symmetrize_points = 5;  // k! copies in symmetrized polynomials

  /// Reads overrides from a "key=value,key=value" string. Keys: dim, points,
  /// template_points, vertices, nodes, symmetrize.
  static Budget parse(std::string_view spec) {
    Budget b;
    while (!spec.empty()) {
      auto comma = spec.find(',');
      auto item = spec.substr(0, comma);
      spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorKind::InvalidArgument,
                    "budget entry '" + std::string(item) + "' is not key=value");
      }
      auto key = item.substr(0, eq);
      auto text = item.substr(eq + 1);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "budget value '" + std::string(text) + "' is not a natural number");
      }
      if (key == "dim") b.max_dim = value;
      else if (key == "points") b.max_points = value;
      else if (key == "template_points") b.max_template_points = value;
      else if (key == "vertices") b.max_vertices = value;
      else if (key == "nodes") b.max_nodes = value;
      else if (key == "symmetrize") b.max_symmetrize_points = value;
      else throw Error(ErrorKind::InvalidArgument, "unknown budget key '" + std::string(key) + "'");
    }
    return b;
  }

  /// Defaults, overridden by TEMPLATE_CHROMA_BUDGET when set.
  static Budget from_env() {
    const char* env = std::getenv("TEMPLATE_CHROMA_BUDGET");
    return env ? parse(env) : Budget{};
  }
};

}  // namespace template_chroma
