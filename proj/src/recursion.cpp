#include "springer/recursion.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "springer/error.hpp"

namespace springer {

namespace {

void require_valid(const Partition& lambda, const ComponentElement& z, Series s) {
  auto report = validate(lambda, s);
  if (!report.valid) {
    throw ContractViolation("partition (" + join_parts(lambda) + ") is not valid for series " +
                            to_string(s) + ": " + report.reason);
  }
  if (!in_component_group(z, lambda, s)) {
    throw ContractViolation("component element " + format_z(z) + " is not in A(" +
                            join_parts(lambda) + ") for series " + to_string(s));
  }
}

// Merge key ordering: real children in reverse lexicographic order, then the
// null child; ties broken by child_z.
struct TermKeyLess {
  bool operator()(const std::pair<SurgeryResult, ComponentElement>& a,
                  const std::pair<SurgeryResult, ComponentElement>& b) const {
    if (a.first.has_value() != b.first.has_value()) return a.first.has_value();
    if (a.first && *a.first != *b.first) return *a.first > *b.first;
    return a.second < b.second;
  }
};

class TermCollector {
 public:
  TermCollector(const Partition& lambda, Series s) : lambda_(lambda), series_(s) {}

  void add(const Poly& coeff, std::span<const int> removed, std::span<const int> inserted,
           const ComponentElement& raw_z) {
    if (coeff.is_zero()) return;
    SurgeryResult child = surgery(lambda_, removed, inserted);
    ComponentElement child_z;
    if (child) {
      child_z = canonical_z(raw_z, *child, series_);
    } else {
      std::vector<int> positive;
      for (int i : raw_z.support()) {
        if (i > 0) positive.push_back(i);
      }
      child_z = ComponentElement(std::move(positive));
    }
    terms_[{std::move(child), std::move(child_z)}] += coeff;
  }

  std::vector<RestrictionTerm> finish() && {
    std::vector<RestrictionTerm> out;
    for (auto& [key, coeff] : terms_) {
      if (coeff.is_zero()) continue;
      out.push_back({std::move(coeff), key.first, key.second});
    }
    return out;
  }

 private:
  const Partition& lambda_;
  Series series_;
  std::map<std::pair<SurgeryResult, ComponentElement>, Poly, TermKeyLess> terms_;
};

}  // namespace

Poly RestrictionExpansion::coefficient_sum() const {
  Poly sum;
  for (const auto& t : terms) sum += t.coeff;
  return sum;
}

RestrictionExpansion expand_restriction(const Partition& lambda, const ComponentElement& z,
                                        Series s) {
  require_valid(lambda, z, s);

  TermCollector collect(lambda, s);
  const Rational half(1, 2);

  for (int i : lambda.distinct_parts()) {
    const int m = lambda.multiplicity(i);
    const Poly shift = x_pow(lambda.multiplicity_above(i));
    const std::array<int, 2> pair_removed{i, i};
    const std::array<int, 2> pair_inserted{i - 1, i - 1};
    const std::array<int, 1> single_removed{i};
    const std::array<int, 1> single_inserted{i - 2};

    if (!is_component_parity(s, i)) {
      collect.add(shift * geom(m), pair_removed, pair_inserted, z);
      continue;
    }

    const bool a = z.contains(i);
    const ComponentElement flip{i, i - 2};  // z_i z_{i-2}
    const ComponentElement z_keep = a ? z * flip : z;
    const ComponentElement z_flip = a ? z : z * flip;

    if (m % 2 != 0) {
      const Poly top = x_pow(m - 1);
      const Poly mid = x_pow((m - 1) / 2);
      collect.add(shift * geom(m - 1), pair_removed, pair_inserted, z);
      collect.add(shift * (top + mid) * half, single_removed, single_inserted, z_keep);
      collect.add(shift * (top - mid) * half, single_removed, single_inserted, z_flip);
    } else {
      const Poly top = x_pow(m - 1);
      const Poly mid = a ? -x_pow(m / 2 - 1) : x_pow(m / 2 - 1);  // (-1)^{a_i} x^{m/2-1}
      collect.add(shift * (geom(m - 1) + mid), pair_removed, pair_inserted, z);
      const Poly side = shift * (top - mid) * half;
      collect.add(side, single_removed, single_inserted, z_keep);
      collect.add(side, single_removed, single_inserted, z_flip);
    }
  }

  RestrictionExpansion out{s, lambda, z, std::move(collect).finish()};

  for (const auto& t : out.terms) {
    if (t.is_null()) continue;
    if (t.child->size() != lambda.size() - 2 || !validate(*t.child, s).valid) {
      throw std::logic_error("expansion of (" + join_parts(lambda) + ") produced invalid child (" +
                             join_parts(*t.child) + ")");
    }
    if (s != Series::C && t.child_z.cardinality() % 2 != 0) {
      throw std::logic_error("expansion of (" + join_parts(lambda) + ", " + format_z(z) +
                             ") produced " + format_z(t.child_z) + " outside A(" +
                             join_parts(*t.child) + ")");
    }
  }
  return out;
}

Evaluator& Evaluator::shared() {
  static Evaluator instance;
  return instance;
}

std::size_t Evaluator::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Poly Evaluator::graded_trace(const Partition& lambda, const ComponentElement& z, Series s) {
  Key key{s, lambda, z};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  Poly value = compute(lambda, z, s);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

Poly Evaluator::compute(const Partition& lambda, const ComponentElement& z, Series s) {
  require_valid(lambda, z, s);
  // Base cases: rank 0 for C, SO(3) line (1) for B, and (1,1) for D.
  if (lambda.empty()) return Poly(1);
  if (s == Series::B && lambda == Partition({1})) return Poly(1);
  if (s == Series::D && lambda == Partition({1, 1})) return Poly(1);

  Poly total;
  for (const auto& term : expand_restriction(lambda, z, s).terms) {
    if (term.is_null()) continue;
    total += term.coeff * graded_trace(*term.child, term.child_z, s);
  }
  return total;
}

Poly graded_trace(const Partition& lambda, const ComponentElement& z, Series s) {
  return Evaluator::shared().graded_trace(lambda, z, s);
}

std::vector<Integer> betti_numbers(const Partition& lambda, Series s) {
  Poly p = graded_trace(lambda, ComponentElement::identity(), s);
  std::vector<Integer> out;
  for (const auto& c : p.coefficients()) {
    if (c.get_den() != 1) {
      throw std::logic_error("non-integral Poincare polynomial for (" + join_parts(lambda) + ")");
    }
    out.push_back(c.get_num());
  }
  return out;
}

std::vector<TableRow> full_table(Series s, int rank, unsigned threads) {
  return full_table(Evaluator::shared(), s, rank, threads);
}

std::vector<TableRow> full_table(Evaluator& evaluator, Series s, int rank, unsigned threads) {
  if (rank < 1) throw ContractViolation("rank must be at least 1");
  std::vector<TableRow> rows;
  for (const auto& lambda : valid_partitions(s, rank)) {
    const bool very_even = validate(lambda, s).very_even;
    for (const auto& z : enumerate_A(lambda, s)) rows.push_back({lambda, z, Poly(), very_even});
  }

  auto fill = [&](std::size_t k) {
    rows[k].value = evaluator.graded_trace(rows[k].lambda, rows[k].z, s);
  };
  if (threads <= 1) {
    for (std::size_t k = 0; k < rows.size(); ++k) fill(k);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < rows.size(); k = next++) fill(k);
    });
  }
  pool.clear();  // joins
  return rows;
}

}  // namespace springer
