#include "springer/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "springer/error.hpp"

namespace springer {

Poly::Poly(long constant) : coeffs_{Rational(constant)} { trim(); }

Poly::Poly(Rational constant) : coeffs_{std::move(constant)} { trim(); }

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(Rational c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (sgn(coeffs_[a]) == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Poly x_pow(int k) { return Poly::monomial(Rational(1), k); }

Poly geom(int m) {
  return m <= 0 ? Poly() : Poly(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
}

Rational eval_at(const Poly& p, const Rational& a) {
  Rational acc(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it;
  return acc;
}

Rational eval_at_integer(const Poly& p, long a) { return eval_at(p, Rational(a)); }

IntegralityReport is_integral_nonneg(const Poly& p) {
  IntegralityReport r;
  r.integral = std::all_of(p.coefficients().begin(), p.coefficients().end(),
                           [](const Rational& c) { return c.get_den() == 1; });
  r.nonneg = r.integral && std::all_of(p.coefficients().begin(), p.coefficients().end(),
                                       [](const Rational& c) { return sgn(c) >= 0; });
  return r;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

Rational parse_rational(std::string_view token) {
  std::string s(token);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw ParseError("bad coefficient '" + s + "'");
  }
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

Poly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  Poly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected + or - in '" + s + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string_view term(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw ParseError("empty term in '" + s + "'");

    Rational c(1);
    int degree = 0;
    auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      c = parse_rational(term);
    } else {
      auto head = term.substr(0, xpos);
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' before x in '" + std::string(term) + "'");
        c = parse_rational(head.substr(0, head.size() - 1));
      }
      auto tail = term.substr(xpos + 1);
      degree = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw ParseError("unexpected text after x in '" + std::string(term) + "'");
        auto e = parse_rational(tail.substr(1));
        if (e.get_den() != 1 || sgn(e) < 0 || e > 100000) {
          throw ParseError("bad exponent in '" + std::string(term) + "'");
        }
        degree = static_cast<int>(e.get_num().get_si());
      }
    }
    out += Poly::monomial(c * sign, degree);
  }
  return out;
}

std::vector<std::string> coefficient_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

}  // namespace springer
