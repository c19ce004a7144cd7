#include "doctest.h"
#include "springer/error.hpp"
#include "springer/recursion.hpp"

#include <algorithm>

using namespace springer;

namespace {

Poly P(std::string_view text) { return parse_poly(text); }

const RestrictionTerm* find_term(const RestrictionExpansion& e, const SurgeryResult& child,
                                 const ComponentElement& z) {
  for (const auto& t : e.terms) {
    if (t.child == child && t.child_z == z) return &t;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("expansion of (2,2) in Sp4") {
  auto e = expand_restriction(Partition({2, 2}), {}, Series::C);
  REQUIRE(e.terms.size() == 3);
  const auto* a = find_term(e, Partition({1, 1}), {});
  const auto* b = find_term(e, Partition({2}), {});
  const auto* c = find_term(e, Partition({2}), {2});
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(c);
  CHECK(a->coeff == Poly(2));
  CHECK(b->coeff == P("1/2*x - 1/2"));
  CHECK(c->coeff == P("1/2*x - 1/2"));
  // term order: children reverse-lex, then z
  CHECK(e.terms[0].child == Partition({2}));
  CHECK(e.terms[0].child_z.is_identity());
  CHECK(e.terms[2].child == Partition({1, 1}));

  auto ez = expand_restriction(Partition({2, 2}), {2}, Series::C);
  REQUIRE(ez.terms.size() == 2);  // the (1,1) coefficient 1 + (-1)^1 vanishes
  CHECK(find_term(ez, Partition({2}), {})->coeff == P("1/2*x + 1/2"));
  CHECK(find_term(ez, Partition({2}), {2})->coeff == P("1/2*x + 1/2"));
}

TEST_CASE("expansion of (2,2,1,1) contains the x^3 + x^2 term") {
  auto e = expand_restriction(Partition({2, 2, 1, 1}), {}, Series::C);
  const auto* t = find_term(e, Partition({2, 2}), {});
  REQUIRE(t);
  CHECK(t->coeff == P("x^3 + x^2"));
  CHECK(find_term(e, Partition({1, 1, 1, 1}), {})->coeff == Poly(2));
}

TEST_CASE("expansion of (4) with z4 in Sp4") {
  auto e = expand_restriction(Partition({4}), {4}, Series::C);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].coeff == Poly(1));
  CHECK(e.terms[0].child == Partition({2}));
  CHECK(e.terms[0].child_z == ComponentElement{2});
}

TEST_CASE("expansion of (1,1,1) in SO3 keeps null terms") {
  // i = 1, m_1 = 3: geom(2) on (1), then (x^2 +- x)/2 on the zero symbol
  // with z and z*z1 respectively.
  auto e = expand_restriction(Partition({1, 1, 1}), {}, Series::B);
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0].child == Partition({1}));
  CHECK(e.terms[0].coeff == P("x + 1"));
  CHECK(e.terms[1].is_null());
  CHECK(e.terms[1].child_z.is_identity());
  CHECK(e.terms[1].coeff == P("1/2*x^2 + 1/2*x"));
  CHECK(e.terms[2].is_null());
  CHECK(e.terms[2].child_z == ComponentElement{1});
  CHECK(e.terms[2].coeff == P("1/2*x^2 - 1/2*x"));
  CHECK(e.coefficient_sum() == geom(3));
}

TEST_CASE("expand_restriction rejects invalid input") {
  CHECK_THROWS_AS(expand_restriction(Partition({2, 1}), {}, Series::C), ContractViolation);
  CHECK_THROWS_AS(expand_restriction(Partition({2, 2}), {4}, Series::C), ContractViolation);
  CHECK_THROWS_AS(expand_restriction(Partition({3, 1}), {1}, Series::D), ContractViolation);
  CHECK_THROWS_AS(graded_trace(Partition({2, 1, 1, 1}), {}, Series::B), ContractViolation);
}

TEST_CASE("graded traces from the Sp4 and Sp6 examples") {
  CHECK(graded_trace(Partition({2, 2}), {}, Series::C) == P("3*x + 1"));
  CHECK(graded_trace(Partition({2, 2, 1, 1}), {}, Series::C) == P("5*x^4 + 9*x^3 + 6*x^2 + 3*x + 1"));
  CHECK(graded_trace(Partition({4, 2}), {2}, Series::C) == P("2*x + 1"));
  CHECK(graded_trace(Partition({1, 1, 1, 1, 1, 1}), {}, Series::C) ==
        P("x^9 + 3*x^8 + 5*x^7 + 7*x^6 + 8*x^5 + 8*x^4 + 7*x^3 + 5*x^2 + 3*x + 1"));
}

TEST_CASE("orthogonal small cases") {
  // Frozen from flag counts (see test_oracle: interpolation over q = 3, 5, 7).
  CHECK(graded_trace(Partition({1, 1, 1}), {}, Series::B) == P("x + 1"));
  CHECK(graded_trace(Partition({2, 2}), {}, Series::D) == P("x + 1"));
  CHECK(graded_trace(Partition({1, 1}), {}, Series::D) == Poly(1));
  CHECK(graded_trace(Partition({1}), {}, Series::B) == Poly(1));
}

TEST_CASE("betti numbers") {
  auto b = betti_numbers(Partition({2, 1, 1}), Series::C);
  CHECK(b == std::vector<Integer>{1, 2, 1});
  CHECK(betti_numbers(Partition({8}), Series::C) == std::vector<Integer>{1});
  CHECK(betti_numbers(Partition({1, 1, 1, 1}), Series::C) == std::vector<Integer>{1, 2, 2, 2, 1});
}

TEST_CASE("full table for Sp2 is the initial condition") {
  auto rows = full_table(Series::C, 1);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].lambda == Partition({2}));
  CHECK(rows[0].z.is_identity());
  CHECK(rows[0].value == Poly(1));
  CHECK(rows[1].z == ComponentElement{2});
  CHECK(rows[1].value == Poly(1));
  CHECK(rows[2].lambda == Partition({1, 1}));
  CHECK(rows[2].value == P("x + 1"));
  CHECK_THROWS_AS(full_table(Series::C, 0), ContractViolation);
}

TEST_CASE("full table for SO4 marks the very even row") {
  auto rows = full_table(Series::D, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].lambda == Partition({3, 1}));
  CHECK(rows[1].lambda == Partition({3, 1}));
  CHECK(rows[1].z == ComponentElement{1, 3});
  CHECK(rows[2].lambda == Partition({2, 2}));
  CHECK(rows[2].very_even);
  CHECK(rows[3].lambda == Partition({1, 1, 1, 1}));
  CHECK(rows[3].value == P("x^2 + 2*x + 1"));
}

TEST_CASE("memo order does not change results") {
  Evaluator forward, backward;
  std::vector<std::pair<Partition, ComponentElement>> keys;
  for (int rank = 1; rank <= 4; ++rank) {
    for (const auto& p : valid_partitions(Series::B, rank)) {
      for (const auto& z : enumerate_A(p, Series::B)) keys.emplace_back(p, z);
    }
  }
  std::vector<Poly> a, b(keys.size());
  for (const auto& [p, z] : keys) a.push_back(forward.graded_trace(p, z, Series::B));
  for (std::size_t k = keys.size(); k-- > 0;) {
    b[k] = backward.graded_trace(keys[k].first, keys[k].second, Series::B);
  }
  CHECK(a == b);
  CHECK(forward.memo_size() == backward.memo_size());
}

TEST_CASE("threaded table equals serial table") {
  for (Series s : {Series::B, Series::C, Series::D}) {
    Evaluator one, many;
    auto serial = full_table(one, s, 5, 1);
    auto threaded = full_table(many, s, 5, 8);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      CHECK(serial[k].lambda == threaded[k].lambda);
      CHECK(serial[k].z == threaded[k].z);
      CHECK(serial[k].value == threaded[k].value);
    }
  }
}

TEST_CASE("regular nilpotents give 1") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& z : enumerate_A(Partition({2 * n}), Series::C)) {
      CHECK(graded_trace(Partition({2 * n}), z, Series::C) == Poly(1));
    }
    for (const auto& z : enumerate_A(Partition({2 * n + 1}), Series::B)) {
      CHECK(graded_trace(Partition({2 * n + 1}), z, Series::B) == Poly(1));
    }
    if (n >= 2) {
      const Partition d({2 * n - 1, 1});
      for (const auto& z : enumerate_A(d, Series::D)) CHECK(graded_trace(d, z, Series::D) == Poly(1));
    }
  }
}
