#include "springer/oracle.hpp"

#include <atomic>
#include <thread>

#include "springer/error.hpp"
#include "springer/finite_field.hpp"
#include "springer/recursion.hpp"

namespace springer {

namespace {

using Vec = std::vector<int>;

int sign_of_parity(int k) { return k % 2 == 0 ? 1 : -1; }  // (-1)^k

// Dense matrices over a FiniteField, row-major.
struct FieldMatrix {
  int rows = 0;
  int cols = 0;
  Vec data;

  int& operator()(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
  int operator()(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
};

FieldMatrix lift(const FiniteField& field, const IntMatrix& m) {
  FieldMatrix out{static_cast<int>(m.rows()), static_cast<int>(m.cols()),
                  Vec(static_cast<std::size_t>(m.size()))};
  for (int r = 0; r < out.rows; ++r) {
    for (int c = 0; c < out.cols; ++c) out(r, c) = field.from_int(m(r, c));
  }
  return out;
}

// Row reduction in place; returns pivot columns.  Rows end up in reduced
// echelon form with zero rows removed.
std::vector<int> row_reduce(const FiniteField& f, std::vector<Vec>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(c)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const int scale = f.inv(rows[rank][static_cast<std::size_t>(c)]);
    for (auto& x : rows[rank]) x = f.mul(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int factor = rows[r][static_cast<std::size_t>(c)];
      if (r == rank || factor == 0) continue;
      for (int k = 0; k < cols; ++k) {
        auto& x = rows[r][static_cast<std::size_t>(k)];
        x = f.sub(x, f.mul(factor, rows[rank][static_cast<std::size_t>(k)]));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

int rank_of(const FiniteField& f, const FieldMatrix& m) {
  std::vector<Vec> rows;
  for (int r = 0; r < m.rows; ++r) {
    rows.emplace_back(m.data.begin() + r * m.cols, m.data.begin() + (r + 1) * m.cols);
  }
  return static_cast<int>(row_reduce(f, rows, m.cols).size());
}

// Basis of {v : A v = 0}.
std::vector<Vec> nullspace(const FiniteField& f, std::vector<Vec> constraints, int cols) {
  auto pivots = row_reduce(f, constraints, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = f.neg(constraints[r][static_cast<std::size_t>(free)]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix mod_p(const IntMatrix& m, int p) {
  return m.unaryExpr([p](int x) { return ((x % p) + p) % p; });
}

bool congruent(const IntMatrix& a, const IntMatrix& b, int p) {
  return mod_p(a - b, p).isZero();
}

// Depth-first enumeration of N-stable isotropic flags fixed by sigma.
class FlagCounter {
 public:
  FlagCounter(const StandardModel& model, const ComponentElement& z, long q)
      : field_(static_cast<int>(z.is_identity() ? q : q * q)),
        dim_(model.dim),
        target_(model.flag_length()),
        symmetric_(model.symmetric()),
        twisted_(!z.is_identity()),
        gram_(lift(field_, model.gram)),
        nilpotent_(lift(field_, model.nilpotent)) {
    if (twisted_) {
      IntMatrix t = IntMatrix::Identity(model.dim, model.dim);
      for (int i : z.support()) t = t * model.twists.at(i);
      twist_ = lift(field_, t);
      frobenius_.resize(static_cast<std::size_t>(field_.order()));
      for (int a = 0; a < field_.order(); ++a) {
        frobenius_[static_cast<std::size_t>(a)] = field_.pow(a, static_cast<std::uint64_t>(q));
      }
    }
  }

  std::uint64_t count(unsigned threads) const {
    if (target_ == 0) return 1;
    Flag root;
    auto lines = extensions(root);
    if (target_ == 1) return lines.size();
    if (threads <= 1) {
      std::uint64_t total = 0;
      for (const auto& v : lines) total += descend(extend(root, v));
      return total;
    }
    std::vector<std::uint64_t> partial(lines.size(), 0);
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t k = next++; k < lines.size(); k = next++) {
            partial[k] = descend(extend(root, lines[k]));
          }
        });
      }
    }
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return total;
  }

 private:
  struct Flag {
    std::vector<Vec> rows;  // reduced echelon basis of V_k
    std::vector<int> pivots;
  };

  std::uint64_t descend(const Flag& flag) const {
    if (static_cast<int>(flag.rows.size()) == target_) return 1;
    std::uint64_t total = 0;
    for (const auto& v : extensions(flag)) total += descend(extend(flag, v));
    return total;
  }

  int form(const Vec& u, const Vec& v) const {
    int acc = 0;
    for (int a = 0; a < dim_; ++a) {
      if (u[static_cast<std::size_t>(a)] == 0) continue;
      int inner = 0;
      for (int b = 0; b < dim_; ++b) {
        inner = field_.add(inner, field_.mul(gram_(a, b), v[static_cast<std::size_t>(b)]));
      }
      acc = field_.add(acc, field_.mul(u[static_cast<std::size_t>(a)], inner));
    }
    return acc;
  }

  Vec reduce(const Flag& flag, Vec u) const {
    for (std::size_t j = 0; j < flag.rows.size(); ++j) {
      const int c = u[static_cast<std::size_t>(flag.pivots[j])];
      if (c == 0) continue;
      for (int k = 0; k < dim_; ++k) {
        auto& x = u[static_cast<std::size_t>(k)];
        x = field_.sub(x, field_.mul(c, flag.rows[j][static_cast<std::size_t>(k)]));
      }
    }
    return u;
  }

  // Representatives (normalized, reduced mod V_k) of the lines l in V/V_k
  // such that V_k + l is isotropic, N-stable and sigma-stable.
  std::vector<Vec> extensions(const Flag& flag) const {
    std::vector<Vec> constraints;
    for (const auto& w : flag.rows) {
      Vec row(static_cast<std::size_t>(dim_), 0);
      for (int b = 0; b < dim_; ++b) {
        int acc = 0;
        for (int a = 0; a < dim_; ++a) {
          acc = field_.add(acc, field_.mul(w[static_cast<std::size_t>(a)], gram_(a, b)));
        }
        row[static_cast<std::size_t>(b)] = acc;
      }
      constraints.push_back(std::move(row));
    }
    // (N v) reduced mod V_k vanishes at every non-pivot coordinate r.
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim_), false);
    for (int c : flag.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int r = 0; r < dim_; ++r) {
      if (is_pivot[static_cast<std::size_t>(r)]) continue;
      Vec row(static_cast<std::size_t>(dim_));
      for (int b = 0; b < dim_; ++b) {
        int acc = nilpotent_(r, b);
        for (std::size_t j = 0; j < flag.rows.size(); ++j) {
          acc = field_.sub(acc, field_.mul(flag.rows[j][static_cast<std::size_t>(r)],
                                           nilpotent_(flag.pivots[j], b)));
        }
        row[static_cast<std::size_t>(b)] = acc;
      }
      constraints.push_back(std::move(row));
    }

    std::vector<Vec> complement;
    for (auto& v : nullspace(field_, std::move(constraints), dim_)) {
      complement.push_back(reduce(flag, std::move(v)));
    }
    row_reduce(field_, complement, dim_);
    const int r = static_cast<int>(complement.size());

    std::vector<Vec> out;
    const int order = field_.order();
    for (int lead = 0; lead < r; ++lead) {
      const int free = r - lead - 1;
      std::uint64_t combos = 1;
      for (int k = 0; k < free; ++k) combos *= static_cast<std::uint64_t>(order);
      for (std::uint64_t code = 0; code < combos; ++code) {
        Vec v = complement[static_cast<std::size_t>(lead)];
        std::uint64_t rest = code;
        for (int j = lead + 1; j < r; ++j) {
          const int a = static_cast<int>(rest % static_cast<std::uint64_t>(order));
          rest /= static_cast<std::uint64_t>(order);
          if (a == 0) continue;
          for (int k = 0; k < dim_; ++k) {
            auto& x = v[static_cast<std::size_t>(k)];
            x = field_.add(x, field_.mul(a, complement[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]));
          }
        }
        if (symmetric_ && form(v, v) != 0) continue;
        if (twisted_ && !sigma_stable(flag, v)) continue;
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  bool sigma_stable(const Flag& flag, const Vec& v) const {
    Vec image(static_cast<std::size_t>(dim_), 0);
    for (int a = 0; a < dim_; ++a) {
      int acc = 0;
      for (int b = 0; b < dim_; ++b) {
        acc = field_.add(acc, field_.mul(twist_(a, b), frobenius_[static_cast<std::size_t>(v[static_cast<std::size_t>(b)])]));
      }
      image[static_cast<std::size_t>(a)] = acc;
    }
    image = reduce(flag, std::move(image));
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;  // v is normalized: v[lead] == 1
    const int scalar = image[lead];
    for (int k = 0; k < dim_; ++k) {
      if (image[static_cast<std::size_t>(k)] != field_.mul(scalar, v[static_cast<std::size_t>(k)])) {
        return false;
      }
    }
    return true;
  }

  Flag extend(const Flag& flag, const Vec& v) const {
    Flag out = flag;
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    for (auto& row : out.rows) {
      const int c = row[lead];
      if (c == 0) continue;
      for (int k = 0; k < dim_; ++k) {
        auto& x = row[static_cast<std::size_t>(k)];
        x = field_.sub(x, field_.mul(c, v[static_cast<std::size_t>(k)]));
      }
    }
    out.rows.push_back(v);
    out.pivots.push_back(static_cast<int>(lead));
    return out;
  }

  FiniteField field_;
  int dim_;
  int target_;
  bool symmetric_;
  bool twisted_;
  FieldMatrix gram_;
  FieldMatrix nilpotent_;
  FieldMatrix twist_;
  std::vector<int> frobenius_;
};

}  // namespace

int StandardModel::flag_length() const {
  const int rank = dim / 2;
  return series == Series::D ? rank - 1 : rank;
}

StandardModel build_standard_model(const Partition& lambda, Series s, long q) {
  auto report = validate(lambda, s);
  if (!report.valid) {
    throw ContractViolation("partition (" + join_parts(lambda) + ") is not valid for series " +
                            to_string(s) + ": " + report.reason);
  }
  auto [p, k] = prime_power_decomposition(q);
  if (p == 0 || p == 2) {
    throw ContractViolation("q = " + std::to_string(q) + " must be an odd prime power");
  }

  StandardModel model;
  model.series = s;
  model.lambda = lambda;
  model.characteristic = p;
  model.dim = lambda.size();

  // Index of v^i_{s,t}: blocks by decreasing part size, then string, then position.
  std::map<int, int> block_start;
  for (int i : lambda.distinct_parts()) {
    block_start[i] = static_cast<int>(model.basis.size());
    for (int str = 1; str <= lambda.multiplicity(i); ++str) {
      for (int t = 1; t <= i; ++t) model.basis.push_back({i, str, t});
    }
  }
  auto index_of = [&](int i, int str, int t) { return block_start.at(i) + (str - 1) * i + (t - 1); };

  const int n = model.dim;
  model.gram = IntMatrix::Zero(n, n);
  model.nilpotent = IntMatrix::Zero(n, n);
  for (const auto& b : model.basis) {
    const int i = b.part;
    const int m = lambda.multiplicity(i);
    const int self = index_of(i, b.string, b.position);
    const int partner = index_of(i, m + 1 - b.string, i + 1 - b.position);
    // Parts without component group (odd parts for C, even parts for B, D)
    // pair the lower half of the strings with the upper half with opposite signs.
    const bool split_sign = !is_component_parity(s, i);
    int value = sign_of_parity(b.position + 1);
    if (split_sign && 2 * b.string > m) value = sign_of_parity(b.position);
    model.gram(self, partner) = value;
    if (b.position < i) model.nilpotent(index_of(i, b.string, b.position + 1), self) = 1;
  }

  for (int i : lambda.distinct_parts()) {
    if (!is_component_parity(s, i)) continue;
    const int m = lambda.multiplicity(i);
    IntMatrix twist = IntMatrix::Identity(n, n);
    if (m % 2 != 0) {
      for (int t = 1; t <= i; ++t) {
        const int a = index_of(i, (m + 1) / 2, t);
        twist(a, a) = -1;
      }
    } else {
      for (int t = 1; t <= i; ++t) {
        const int a = index_of(i, m / 2, t);
        const int b = index_of(i, m / 2 + 1, t);
        twist(a, a) = 0;
        twist(b, b) = 0;
        twist(a, b) = 1;
        twist(b, a) = 1;
      }
    }
    model.twists.emplace(i, std::move(twist));
  }
  return model;
}

Partition jordan_type(const StandardModel& model) {
  FiniteField field(model.characteristic);
  const int n = model.dim;
  std::vector<int> ranks{n};
  IntMatrix power = IntMatrix::Identity(n, n);
  while (ranks.back() > 0) {
    power = mod_p(model.nilpotent * power, model.characteristic);
    ranks.push_back(rank_of(field, lift(field, power)));
    if (static_cast<int>(ranks.size()) > n + 1) break;  // not nilpotent
  }
  // Blocks of size >= k: ranks[k-1] - ranks[k]; blocks of size exactly k follow.
  std::vector<int> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int at_least = ranks[k - 1] - ranks[k];
    const int longer = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (int c = 0; c < at_least - longer; ++c) parts.push_back(static_cast<int>(k));
  }
  return Partition(std::move(parts));
}

ModelCheck check_standard_model(const StandardModel& model) {
  ModelCheck check;
  const int p = model.characteristic;
  const int n = model.dim;
  const IntMatrix& g = model.gram;
  const IntMatrix& nil = model.nilpotent;

  if (model.symmetric() ? !congruent(g, g.transpose(), p) : !congruent(g, -g.transpose(), p)) {
    check.failures.push_back(model.symmetric() ? "gram not symmetric" : "gram not alternating");
  }
  FiniteField field(p);
  if (rank_of(field, lift(field, g)) != n) check.failures.push_back("gram degenerate");
  if (!mod_p(nil.transpose() * g + g * nil, p).isZero()) {
    check.failures.push_back("nilpotent not skew for the form");
  }
  if (jordan_type(model) != model.lambda) check.failures.push_back("Jordan type mismatch");

  for (const auto& [i, t] : model.twists) {
    const std::string name = "z~" + std::to_string(i);
    if (!congruent(t.transpose() * g * t, g, p)) check.failures.push_back(name + " does not preserve the form");
    if (!congruent(t * nil, nil * t, p)) check.failures.push_back(name + " does not commute with N");
    if (!congruent(t * t, IntMatrix::Identity(n, n), p)) check.failures.push_back(name + " is not an involution");
  }
  return check;
}

StandardModel reflect_model(const StandardModel& model) {
  if (!model.symmetric()) throw ContractViolation("reflections only exist for orthogonal series");
  const IntMatrix& g = model.gram;
  for (int a = 0; a < model.dim; ++a) {
    for (int b = 0; b < model.dim; ++b) {
      if (a == b || g(a, b) == 0 || g(a, a) != 0 || g(b, b) != 0) continue;
      // v = e_a + e_b has <v, v> = 2 g(a, b) with g(a, b) = +-1, so the
      // reflection u -> u - 2<v,u>/<v,v> v is I - g(a,b) v v^T G.
      Eigen::VectorXi v = Eigen::VectorXi::Zero(model.dim);
      v(a) = 1;
      v(b) = 1;
      const IntMatrix r = IntMatrix::Identity(model.dim, model.dim) - g(a, b) * v * (v.transpose() * g);
      StandardModel out = model;
      out.nilpotent = mod_p(r * model.nilpotent * r, model.characteristic);
      for (auto& [i, t] : out.twists) t = mod_p(r * t * r, model.characteristic);
      return out;
    }
  }
  throw ContractViolation("no hyperbolic pair available for a reflection");
}

std::uint64_t count_fixed_flags(const StandardModel& model, const ComponentElement& z, long q,
                                const CountOptions& options) {
  auto [p, k] = prime_power_decomposition(q);
  if (p != model.characteristic) {
    throw ContractViolation("q = " + std::to_string(q) + " does not match the model characteristic " +
                            std::to_string(model.characteristic));
  }
  for (int i : z.support()) {
    if (!model.twists.contains(i)) {
      throw ContractViolation("component element " + format_z(z) + " uses z" + std::to_string(i) +
                              ", which the model for (" + join_parts(model.lambda) + ") does not have");
    }
  }
  return FlagCounter(model, z, q).count(options.threads);
}

FlagCountReport verify(const Partition& lambda, const ComponentElement& z, Series s, long q,
                       const VerifyOptions& options) {
  StandardModel model = build_standard_model(lambda, s, q);
  if (!in_component_group(z, lambda, s)) {
    throw ContractViolation("component element " + format_z(z) + " is not in A(" +
                            join_parts(lambda) + ")");
  }
  const int rank = model.dim / 2;
  if (!z.is_identity() && rank > options.max_twisted_rank) {
    throw ContractViolation("twisted counts are limited to rank <= " +
                            std::to_string(options.max_twisted_rank) + " (rank " +
                            std::to_string(rank) + " requested)");
  }

  FlagCountReport report;
  report.lambda = lambda;
  report.z = z;
  report.q = q;
  report.very_even = validate(lambda, s).very_even;
  report.count = count_fixed_flags(model, z, q, {options.threads});

  Rational value = eval_at_integer(graded_trace(lambda, z, s), q);
  if (value.get_den() != 1 || sgn(value) < 0) {
    throw std::logic_error("graded trace at q is not a nonnegative integer");
  }
  report.predicted = value.get_num();
  report.match = Integer(static_cast<unsigned long>(report.count)) == report.predicted;

  if (report.very_even) {
    report.alternate_count = count_fixed_flags(reflect_model(model), z, q, {options.threads});
  }
  return report;
}

}  // namespace springer
