#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace springer {

using Rational = mpq_class;
using Integer = mpz_class;

/// Univariate polynomial in x with exact rational coefficients.
///
/// Stored densely by ascending degree with no trailing zero coefficient, so
/// the zero polynomial has no coefficients and equality is structural.
class Poly {
 public:
  Poly() = default;
  Poly(long constant);  // NOLINT(google-explicit-constructor): 1, 0 read naturally
  explicit Poly(Rational constant);
  explicit Poly(std::vector<Rational> ascending);

  static Poly monomial(Rational c, int degree);
  static Poly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Poly scale(const Poly& p, const Rational& c) { return p * c; }

/// x^k.
Poly x_pow(int k);

/// 1 + x + ... + x^{m-1}, i.e. (x^m - 1)/(x - 1); geom(0) = 0.
Poly geom(int m);

Rational eval_at(const Poly& p, const Rational& a);
Rational eval_at_integer(const Poly& p, long a);

struct IntegralityReport {
  bool integral = false;
  bool nonneg = false;
};
IntegralityReport is_integral_nonneg(const Poly& p);

/// Descending-degree text form: "x^4 + 2*x^3 - 1/2*x + 1", zero is "0".
std::string format_poly(const Poly& p);
/// Inverse of format_poly; also accepts terms in any order and repeated
/// degrees.  Throws ParseError.
Poly parse_poly(std::string_view text);

/// Exact coefficient strings by ascending degree ("3", "-1/2").
std::vector<std::string> coefficient_strings(const Poly& p);

}  // namespace springer
