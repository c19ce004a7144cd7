#pragma once

#include <string>
#include <string_view>

namespace springer {

/// Classical series: B = SO(2n+1), C = Sp(2n), D = SO(2n).
enum class Series { B, C, D };

std::string to_string(Series s);
Series parse_series(std::string_view text);

/// Dimension of the defining representation for rank n.
constexpr int defining_dimension(Series s, int rank) {
  return s == Series::B ? 2 * rank + 1 : 2 * rank;
}

/// Parity of the part sizes that index generators of the component group:
/// even parts for C, odd parts for B and D.
constexpr bool is_component_parity(Series s, int part) {
  return s == Series::C ? part % 2 == 0 : part % 2 != 0;
}

}  // namespace springer
