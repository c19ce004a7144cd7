#pragma once

#include <map>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "springer/compgroup.hpp"
#include "springer/partition.hpp"
#include "springer/polynomial.hpp"
#include "springer/series.hpp"

namespace springer {

/// One summand coeff * Q_x(child, child_z) of a restriction expansion.
/// A null child stands for the formally-zero symbol lambda<1 -> -1>.
struct RestrictionTerm {
  Poly coeff;
  SurgeryResult child;
  ComponentElement child_z;

  bool is_null() const { return !child.has_value(); }
};

struct RestrictionExpansion {
  Series series = Series::C;
  Partition source;
  ComponentElement source_z;
  std::vector<RestrictionTerm> terms;  ///< merged, nonzero, null children last

  /// Sum of all coefficients, null terms included.
  Poly coefficient_sum() const;
};

/// One application of the restriction formula to the parabolic W' of rank
/// n-1.  Terms sharing (child, child_z) are merged and zero terms dropped.
/// Throws ContractViolation unless lambda is valid for s and z is in A(lambda).
RestrictionExpansion expand_restriction(const Partition& lambda, const ComponentElement& z,
                                        Series s);

/// Memoizing evaluator for the graded trace sum_k tr(z, H^{2k}(B_N)) x^k.
///
/// Thread-safe: lookups take a shared lock, insertions an exclusive one.
/// Values do not depend on the order in which the memo is populated.
class Evaluator {
 public:
  Poly graded_trace(const Partition& lambda, const ComponentElement& z, Series s);

  std::size_t memo_size() const;

  /// Process-wide instance used by the free functions below.
  static Evaluator& shared();

 private:
  using Key = std::tuple<Series, Partition, ComponentElement>;

  Poly compute(const Partition& lambda, const ComponentElement& z, Series s);

  mutable std::shared_mutex mutex_;
  std::map<Key, Poly> memo_;
};

/// Q_x(lambda, z) at the identity of W.  For very even lambda in series D
/// this is the common value of the two orbits lambda+ and lambda-.
Poly graded_trace(const Partition& lambda, const ComponentElement& z, Series s);

/// [b_0, b_2, b_4, ...]: ascending coefficients of graded_trace(lambda, id).
std::vector<Integer> betti_numbers(const Partition& lambda, Series s);

struct TableRow {
  Partition lambda;
  ComponentElement z;
  Poly value;
  bool very_even = false;
};

/// Every valid (lambda, z) for the rank, partitions in reverse lexicographic
/// order and z in colexicographic order.  `threads` > 1 evaluates rows in
/// parallel; the row order never depends on it.
std::vector<TableRow> full_table(Series s, int rank, unsigned threads = 1);
std::vector<TableRow> full_table(Evaluator& evaluator, Series s, int rank, unsigned threads = 1);

}  // namespace springer
