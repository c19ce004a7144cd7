#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "springer/compgroup.hpp"
#include "springer/partition.hpp"
#include "springer/polynomial.hpp"
#include "springer/series.hpp"

namespace springer {

/// Integer matrices whose entries are read modulo the characteristic.
using IntMatrix = Eigen::MatrixXi;

/// Position of a basis vector v^i_{s,t} of the adapted basis: part size i,
/// string s in [1, m_i], position t in [1, i].  N maps (i,s,t) to (i,s,t+1).
struct BasisLabel {
  int part = 0;
  int string = 0;
  int position = 0;
};

/// Explicit nilpotent of Jordan type lambda in the defining representation,
/// with its adapted basis, invariant form and the involutions z~_i that
/// represent the generators of the component group.  All entries lie in
/// {-1, 0, 1} (up to conjugation for reflected models), so the coordinate
/// Frobenius fixes the form, N and every basis vector: N is untwisted.
struct StandardModel {
  Series series = Series::C;
  Partition lambda;
  int characteristic = 3;
  int dim = 0;
  std::vector<BasisLabel> basis;
  IntMatrix gram;       ///< gram(a, b) = <e_a, e_b>
  IntMatrix nilpotent;  ///< column a is N e_a
  std::map<int, IntMatrix> twists;  ///< part size i -> z~_i

  /// Complete isotropic flags (V_1, ..., V_L) parametrizing Borel subgroups:
  /// L = rank for B and C, rank - 1 for D.
  int flag_length() const;
  bool symmetric() const { return series != Series::C; }
};

/// Builds the standard model over the prime field of q.  Throws
/// ContractViolation for an invalid partition or an even / non prime power q.
StandardModel build_standard_model(const Partition& lambda, Series s, long q);

/// Outcome of the constructive model checks; `failures` names each broken
/// invariant (empty when the model is sound).
struct ModelCheck {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ModelCheck check_standard_model(const StandardModel& model);

/// Jordan type of the model's nilpotent, from the ranks of its powers over
/// the prime field.
Partition jordan_type(const StandardModel& model);

/// Conjugates the model by an orthogonal reflection in a non-isotropic
/// vector of the prime field (an element of O_{2n} - SO_{2n}).  For a very
/// even partition the result realizes the other orbit.
StandardModel reflect_model(const StandardModel& model);

struct CountOptions {
  unsigned threads = 1;
};

/// Number of complete isotropic flags stable under N and fixed by z~ o F,
/// where F raises coordinates to the q-th power.  For z = id this counts
/// flags over GF(q); otherwise flags over GF(q^2), which contains every
/// fixed flag because (z~ F)^2 = F^2.  Throws ContractViolation when z uses
/// a generator the model has no twist for, or q does not match the model.
std::uint64_t count_fixed_flags(const StandardModel& model, const ComponentElement& z, long q,
                                const CountOptions& options = {});

struct FlagCountReport {
  Partition lambda;
  ComponentElement z;
  long q = 0;
  std::uint64_t count = 0;
  Integer predicted;
  bool match = false;
  bool very_even = false;
  /// Count for the reflected model (other orbit), recorded for very even
  /// partitions only.  A difference is reported, never treated as failure.
  std::optional<std::uint64_t> alternate_count;
  bool alternate_discrepancy() const { return alternate_count && *alternate_count != count; }
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Twisted counts run over GF(q^2); ranks above this are refused.
  int max_twisted_rank = 2;
};

/// Compares count_fixed_flags with eval(graded_trace(lambda, z, s), q).
FlagCountReport verify(const Partition& lambda, const ComponentElement& z, Series s, long q,
                       const VerifyOptions& options = {});

}  // namespace springer
