#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "springer/series.hpp"

namespace springer {

/// A partition stored as weakly decreasing positive parts.  Used as the Jordan
/// type of a nilpotent element of the defining representation.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; throws ContractViolation on a part < 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const;  ///< sum of the parts
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  int multiplicity(int i) const;
  /// Number of parts strictly larger than i.
  int multiplicity_above(int i) const;

  /// Distinct part sizes, largest first.
  std::vector<int> distinct_parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order on the descending parts.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Result of a surgery.  std::nullopt is the formally-zero symbol produced
/// by inserting a negative part (lambda<1 -> -1>).
using SurgeryResult = std::optional<Partition>;

struct ValidityReport {
  bool valid = false;
  bool very_even = false;
  std::string reason;
};

/// Parses "2,2,1,1" (any order, surrounding blanks allowed).
Partition parse_partition(std::string_view text);

ValidityReport validate(const Partition& lambda, Series s);

/// Removes `removed` from lambda and adds `inserted`.  Inserted zeros are
/// dropped; any negative inserted entry yields std::nullopt.
SurgeryResult surgery(const Partition& lambda, std::span<const int> removed,
                      std::span<const int> inserted);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// All partitions valid for s of the size belonging to rank n.
std::vector<Partition> valid_partitions(Series s, int rank);

/// "2,2,1,1" with a custom separator; "()" style is left to callers.
std::string join_parts(const Partition& lambda, std::string_view sep = ",");

}  // namespace springer
