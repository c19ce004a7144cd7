#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "springer/partition.hpp"
#include "springer/series.hpp"

namespace springer {

/// An element prod z_i^{a_i} of the component group, stored as the sorted
/// set of part sizes i with a_i = 1.  The group is elementary abelian of
/// exponent 2, so multiplication is symmetric difference.
///
/// Entries <= 0 may appear transiently (z_{i-2} for i = 2, or i = 1 in the
/// orthogonal series); canonicalization removes them.
class ComponentElement {
 public:
  ComponentElement() = default;
  ComponentElement(std::initializer_list<int> support);
  explicit ComponentElement(std::vector<int> support);

  static ComponentElement identity() { return {}; }

  const std::vector<int>& support() const { return support_; }
  bool is_identity() const { return support_.empty(); }
  bool contains(int i) const;
  int cardinality() const { return static_cast<int>(support_.size()); }

  friend bool operator==(const ComponentElement&, const ComponentElement&) = default;
  /// Colexicographic order: the element containing the largest generator
  /// of the symmetric difference is larger.  Over a fixed generator set this
  /// is the binary-counter order id, z2, z4, z2*z4, ...
  friend std::strong_ordering operator<=>(const ComponentElement& a,
                                          const ComponentElement& b) {
    return std::lexicographical_compare_three_way(a.support_.rbegin(), a.support_.rend(),
                                                  b.support_.rbegin(), b.support_.rend());
  }

 private:
  std::vector<int> support_;  // sorted ascending, no duplicates
};

ComponentElement multiply(const ComponentElement& z, const ComponentElement& w);
inline ComponentElement operator*(const ComponentElement& z, const ComponentElement& w) {
  return multiply(z, w);
}

/// Drops every generator z_i that is trivial for (lambda, s): m_i = 0, wrong
/// parity for the series, or i <= 0.
ComponentElement canonical_z(const ComponentElement& raw, const Partition& lambda, Series s);

/// True iff z is canonical for (lambda, s) and, for B and D, has even
/// cardinality, i.e. z lies in A(lambda) rather than only in the larger group.
bool in_component_group(const ComponentElement& z, const Partition& lambda, Series s);

/// A(lambda) in colexicographic order, identity first.
std::vector<ComponentElement> enumerate_A(const Partition& lambda, Series s);

/// "id" or "z2*z4".
std::string format_z(const ComponentElement& z);
ComponentElement parse_z(std::string_view text);

}  // namespace springer
