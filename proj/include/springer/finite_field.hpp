#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace springer {

/// GF(p^k) with table-driven arithmetic, for the small fields the flag
/// counter needs (order <= 1024).
///
/// Elements are integers in [0, order): the base-p digits are the
/// coefficients of a residue polynomial modulo a fixed monic irreducible
/// polynomial, lowest degree first.  The prime subfield is therefore
/// {0, ..., p-1} with its usual labels.  The modulus is the first
/// irreducible polynomial in digit order, so the encoding is deterministic.
class FiniteField {
 public:
  using Element = int;

  static constexpr int kMaxOrder = 1024;

  /// Throws ContractViolation unless order is a prime power <= kMaxOrder.
  explicit FiniteField(int order);

  int order() const { return order_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  Element add(Element a, Element b) const { return add_[index(a, b)]; }
  Element sub(Element a, Element b) const { return add_[index(a, neg_[b])]; }
  Element neg(Element a) const { return neg_[a]; }
  Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
  /// Throws ContractViolation on zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Element from_int(long v) const;

  /// Coefficients of the monic modulus, lowest degree first (size k + 1).
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(b);
  }
  bool build_multiplication(std::span<const int> modulus);

  int order_ = 0;
  int p_ = 0;
  int k_ = 0;
  std::vector<int> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

/// Returns (p, k) with order = p^k, or (0, 0) if order is not a prime power.
std::pair<int, int> prime_power_decomposition(long order);

}  // namespace springer
