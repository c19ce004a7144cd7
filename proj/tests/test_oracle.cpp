#include "doctest.h"
#include "springer/error.hpp"
#include "springer/oracle.hpp"
#include "springer/recursion.hpp"

using namespace springer;

namespace {

// Lagrange interpolation through (q_k, counts_k); test-only oracle that
// recovers a polynomial from flag counts alone.
Poly interpolate(const std::vector<long>& qs, const std::vector<std::uint64_t>& counts) {
  Poly out;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    Poly basis(1);
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (j == k) continue;
      Rational scale(1, qs[k] - qs[j]);
      scale.canonicalize();  // gmp requires a positive denominator
      basis *= (Poly::x() - Poly(qs[j])) * scale;
    }
    out += basis * Rational(static_cast<unsigned long>(counts[k]));
  }
  return out;
}

std::uint64_t geometric(long q, int m) {
  std::uint64_t s = 0, pw = 1;
  for (int k = 0; k < m; ++k, pw *= static_cast<std::uint64_t>(q)) s += pw;
  return s;
}

}  // namespace

TEST_CASE("standard model for (1,1,1,1) in Sp4") {
  auto m = build_standard_model(Partition({1, 1, 1, 1}), Series::C, 3);
  CHECK(m.dim == 4);
  CHECK(m.nilpotent.isZero());
  CHECK(m.gram == -m.gram.transpose());
  // strings pair s with 5 - s: antidiagonal, +1 on the lower half, -1 above.
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) CHECK((m.gram(a, b) != 0) == (a + b == 3));
  }
  CHECK(m.gram(0, 3) == 1);
  CHECK(m.gram(3, 0) == -1);
  CHECK(m.twists.empty());
  CHECK(m.flag_length() == 2);
}

TEST_CASE("standard model for (2) and (2,2) in Sp") {
  auto m = build_standard_model(Partition({2}), Series::C, 3);
  CHECK(m.dim == 2);
  CHECK(m.nilpotent(1, 0) == 1);
  CHECK(m.nilpotent(0, 1) == 0);
  CHECK(m.gram(0, 1) == 1);
  REQUIRE(m.twists.contains(2));
  CHECK(m.twists.at(2) == -IntMatrix::Identity(2, 2));

  auto m2 = build_standard_model(Partition({2, 2}), Series::C, 3);
  const IntMatrix& t = m2.twists.at(2);
  // basis order v_{1,1}, v_{1,2}, v_{2,1}, v_{2,2}: the twist swaps strings
  IntMatrix swap = IntMatrix::Zero(4, 4);
  swap(2, 0) = swap(3, 1) = swap(0, 2) = swap(1, 3) = 1;
  CHECK(t == swap);
}

TEST_CASE("standard models satisfy their invariants") {
  for (Series s : {Series::B, Series::C, Series::D}) {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& p : partitions_of(n)) {
        if (!validate(p, s).valid) continue;
        CAPTURE(to_string(s));
        CAPTURE(join_parts(p));
        auto model = build_standard_model(p, s, 3);
        auto check = check_standard_model(model);
        CHECK(check.ok());
        for (const auto& f : check.failures) MESSAGE(f);
        // also sound in characteristic 5
        CHECK(check_standard_model(build_standard_model(p, s, 5)).ok());
      }
    }
  }
}

TEST_CASE("reflected model keeps the Jordan type and form") {
  auto model = build_standard_model(Partition({2, 2}), Series::D, 3);
  auto other = reflect_model(model);
  CHECK(check_standard_model(other).ok());
  CHECK(jordan_type(other) == Partition({2, 2}));
  CHECK_THROWS_AS(reflect_model(build_standard_model(Partition({2}), Series::C, 3)), ContractViolation);
}

TEST_CASE("flag counts from the examples") {
  CHECK(count_fixed_flags(build_standard_model(Partition({1, 1, 1, 1}), Series::C, 3), {}, 3) == 160);
  CHECK(count_fixed_flags(build_standard_model(Partition({2, 1, 1}), Series::C, 3), {}, 3) == 16);
  CHECK(count_fixed_flags(build_standard_model(Partition({2, 2}), Series::C, 3), {2}, 3) == 4);
}

TEST_CASE("verify examples") {
  auto r = verify(Partition({2, 2, 1, 1}), {}, Series::C, 3);
  CHECK(r.predicted == 5 * 81 + 9 * 27 + 6 * 9 + 3 * 3 + 1);
  CHECK(r.predicted == 712);
  CHECK(r.count == 712);
  CHECK(r.match);

  r = verify(Partition({3, 1}), {}, Series::D, 3);
  CHECK(r.predicted == 1);
  CHECK(r.match);

  r = verify(Partition({1, 1, 1}), {}, Series::B, 3);
  CHECK(r.predicted == 4);
  CHECK(r.match);
}

TEST_CASE("polynomials interpolated from flag counts") {
  const std::vector<long> qs{3, 5, 7};
  auto counts = [&](const Partition& p, Series s) {
    std::vector<std::uint64_t> out;
    for (long q : qs) out.push_back(count_fixed_flags(build_standard_model(p, s, q), {}, q));
    return out;
  };
  CHECK(interpolate(qs, counts(Partition({1, 1, 1}), Series::B)) == parse_poly("x + 1"));
  CHECK(interpolate(qs, counts(Partition({2, 2}), Series::D)) == parse_poly("x + 1"));
  CHECK(interpolate(qs, counts(Partition({2, 2}), Series::C)) == parse_poly("3*x + 1"));
}

TEST_CASE("very even partitions: both orbits counted") {
  auto r = verify(Partition({2, 2}), {}, Series::D, 3);
  CHECK(r.very_even);
  REQUIRE(r.alternate_count.has_value());
  CHECK(*r.alternate_count == r.count);
  CHECK_FALSE(r.alternate_discrepancy());
  CHECK(r.count == 4);
}

TEST_CASE("zero nilpotent counts the whole flag variety") {
  for (long q : {3L, 5L}) {
    for (int n = 1; n <= 3; ++n) {
      std::uint64_t bc = 1;
      for (int i = 1; i <= n; ++i) bc *= geometric(q, 2 * i);
      std::uint64_t d = geometric(q, n);
      for (int i = 1; i < n; ++i) d *= geometric(q, 2 * i);

      const Partition ones_c(std::vector<int>(static_cast<std::size_t>(2 * n), 1));
      const Partition ones_b(std::vector<int>(static_cast<std::size_t>(2 * n + 1), 1));
      CHECK(count_fixed_flags(build_standard_model(ones_c, Series::C, q), {}, q) == bc);
      CHECK(count_fixed_flags(build_standard_model(ones_b, Series::B, q), {}, q) == bc);
      CHECK(count_fixed_flags(build_standard_model(ones_c, Series::D, q), {}, q) == d);
    }
  }
}

TEST_CASE("threaded counts equal serial counts") {
  auto model = build_standard_model(Partition({2, 2, 1, 1, 1}), Series::B, 3);
  CHECK(count_fixed_flags(model, {}, 3, {1}) == count_fixed_flags(model, {}, 3, {4}));
}

TEST_CASE("oracle errors") {
  CHECK_THROWS_AS(build_standard_model(Partition({2, 2}), Series::C, 4), ContractViolation);
  CHECK_THROWS_AS(build_standard_model(Partition({2, 2}), Series::C, 6), ContractViolation);
  CHECK_THROWS_AS(build_standard_model(Partition({2, 1}), Series::C, 3), ContractViolation);
  auto model = build_standard_model(Partition({2, 2}), Series::C, 3);
  CHECK_THROWS_AS(count_fixed_flags(model, {4}, 3), ContractViolation);
  CHECK_THROWS_AS(count_fixed_flags(model, {}, 5), ContractViolation);
  CHECK_THROWS_AS(verify(Partition({2, 2, 2}), {2}, Series::C, 3), ContractViolation);  // rank 3 > 2
  CHECK(verify(Partition({2, 2, 2}), {2}, Series::C, 3, {1, 3}).match);
}
