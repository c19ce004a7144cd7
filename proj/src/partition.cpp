#include "springer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "springer/error.hpp"

namespace springer {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw ContractViolation("part must be positive, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

int Partition::multiplicity_above(int i) const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p > i; }));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  for (int p : parts_) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (trim(text).empty()) throw ParseError("empty partition");
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("not an integer: '" + std::string(token) + "'");
    }
    if (value < 1) {
      throw ParseError("part must be positive: '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

ValidityReport validate(const Partition& lambda, Series s) {
  ValidityReport report;
  const int n = lambda.size();
  const bool odd_size = n % 2 != 0;
  if (s == Series::B && !odd_size) {
    report.reason = "size " + std::to_string(n) + " is even (series B needs odd size)";
    return report;
  }
  if (s != Series::B && odd_size) {
    report.reason = "size " + std::to_string(n) + " is odd (series " + to_string(s) +
                    " needs even size)";
    return report;
  }
  // C: odd parts need even multiplicity; B, D: even parts do.
  for (int i : lambda.distinct_parts()) {
    const int m = lambda.multiplicity(i);
    const bool constrained = s == Series::C ? i % 2 != 0 : i % 2 == 0;
    if (constrained && m % 2 != 0) {
      report.reason = "m_" + std::to_string(i) + " = " + std::to_string(m) + " odd";
      return report;
    }
  }
  report.valid = true;
  if (s == Series::D) {
    const auto& parts = lambda.parts();
    report.very_even = std::none_of(parts.begin(), parts.end(), [](int p) { return p % 2 != 0; });
  }
  return report;
}

SurgeryResult surgery(const Partition& lambda, std::span<const int> removed,
                      std::span<const int> inserted) {
  std::vector<int> parts = lambda.parts();
  for (int r : removed) {
    auto it = std::find(parts.begin(), parts.end(), r);
    if (it == parts.end()) {
      throw ContractViolation("surgery removes part " + std::to_string(r) +
                              " which is not in (" + join_parts(lambda) + ")");
    }
    parts.erase(it);
  }
  for (int b : inserted) {
    if (b < 0) return std::nullopt;
    if (b > 0) parts.push_back(b);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  // Depth-first with non-increasing parts, largest first gives reverse lex order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> valid_partitions(Series s, int rank) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(defining_dimension(s, rank))) {
    if (validate(p, s).valid) out.push_back(std::move(p));
  }
  return out;
}

std::string join_parts(const Partition& lambda, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < lambda.parts().size(); ++k) {
    if (k) out += sep;
    out += std::to_string(lambda.parts()[k]);
  }
  return out;
}

std::string to_string(Series s) {
  switch (s) {
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
  }
  return "?";
}

Series parse_series(std::string_view text) {
  if (text == "B" || text == "b") return Series::B;
  if (text == "C" || text == "c") return Series::C;
  if (text == "D" || text == "d") return Series::D;
  throw ParseError("unknown series '" + std::string(text) + "' (expected B, C or D)");
}

}  // namespace springer
