#include "springer/finite_field.hpp"

#include <string>

#include "springer/error.hpp"

namespace springer {

std::pair<int, int> prime_power_decomposition(long order) {
  if (order < 2) return {0, 0};
  long p = 2;
  while (p * p <= order && order % p != 0) ++p;
  if (order % p != 0) p = order;  // order itself is prime
  int k = 0;
  while (order % p == 0) {
    order /= p;
    ++k;
  }
  if (order != 1) return {0, 0};
  return {static_cast<int>(p), k};
}

namespace {

std::vector<int> digits(int value, int p, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (auto& x : d) {
    x = value % p;
    value /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

FiniteField::FiniteField(int order) : order_(order) {
  auto [p, k] = prime_power_decomposition(order);
  if (p == 0 || order > kMaxOrder) {
    throw ContractViolation("field order " + std::to_string(order) +
                            " is not a prime power <= " + std::to_string(kMaxOrder));
  }
  p_ = p;
  k_ = k;

  const auto n = static_cast<std::size_t>(order);
  add_.resize(n * n);
  neg_.resize(n);
  for (int a = 0; a < order; ++a) {
    auto da = digits(a, p, k);
    std::vector<int> dn(da.size());
    for (std::size_t j = 0; j < da.size(); ++j) dn[j] = (p - da[j]) % p;
    neg_[static_cast<std::size_t>(a)] = undigits(dn, p);
    for (int b = 0; b < order; ++b) {
      auto db = digits(b, p, k);
      for (std::size_t j = 0; j < da.size(); ++j) db[j] = (da[j] + db[j]) % p;
      add_[index(a, b)] = undigits(db, p);
    }
  }

  // Monic candidates x^k + c_{k-1} x^{k-1} + ... + c_0 in digit order of
  // (c_0, ..., c_{k-1}); the first one giving a field is kept.
  for (int tail = 0; tail < order; ++tail) {
    std::vector<int> candidate = digits(tail, p, k);
    candidate.push_back(1);
    if (build_multiplication(candidate)) {
      modulus_ = candidate;
      return;
    }
  }
  throw ContractViolation("no irreducible polynomial found for order " + std::to_string(order));
}

bool FiniteField::build_multiplication(std::span<const int> modulus) {
  const int p = p_;
  const int k = k_;
  const auto n = static_cast<std::size_t>(order_);
  mul_.assign(n * n, 0);
  for (int a = 0; a < order_; ++a) {
    auto da = digits(a, p, k);
    for (int b = a; b < order_; ++b) {
      auto db = digits(b, p, k);
      std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      // Reduce by the monic modulus from the top degree down.
      for (int d = 2 * k - 2; d >= k; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        for (int j = 0; j <= k; ++j) {
          prod[d - k + j] = ((prod[d - k + j] - c * modulus[j]) % p + p) % p;
        }
      }
      prod.resize(static_cast<std::size_t>(k));
      const int v = undigits(prod, p);
      mul_[index(a, b)] = v;
      mul_[index(b, a)] = v;
    }
  }
  inv_.assign(n, 0);
  for (int a = 1; a < order_; ++a) {
    int found = 0;
    for (int b = 1; b < order_ && !found; ++b) {
      if (mul_[index(a, b)] == 1) found = b;
    }
    if (!found) return false;
    inv_[static_cast<std::size_t>(a)] = found;
  }
  return true;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw ContractViolation("inverse of zero");
  return inv_[static_cast<std::size_t>(a)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

FiniteField::Element FiniteField::from_int(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

}  // namespace springer
