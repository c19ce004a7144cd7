#include "springer/compgroup.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "springer/error.hpp"

namespace springer {

ComponentElement::ComponentElement(std::initializer_list<int> support)
    : ComponentElement(std::vector<int>(support)) {}

ComponentElement::ComponentElement(std::vector<int> support) {
  // Repeated entries cancel in pairs.
  std::sort(support.begin(), support.end());
  for (std::size_t k = 0; k < support.size();) {
    std::size_t run = k;
    while (run < support.size() && support[run] == support[k]) ++run;
    if ((run - k) % 2 != 0) support_.push_back(support[k]);
    k = run;
  }
}

bool ComponentElement::contains(int i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

ComponentElement multiply(const ComponentElement& z, const ComponentElement& w) {
  std::vector<int> out;
  std::set_symmetric_difference(z.support().begin(), z.support().end(), w.support().begin(),
                                w.support().end(), std::back_inserter(out));
  return ComponentElement(std::move(out));
}

ComponentElement canonical_z(const ComponentElement& raw, const Partition& lambda, Series s) {
  std::vector<int> kept;
  for (int i : raw.support()) {
    if (i > 0 && is_component_parity(s, i) && lambda.multiplicity(i) > 0) kept.push_back(i);
  }
  return ComponentElement(std::move(kept));
}

bool in_component_group(const ComponentElement& z, const Partition& lambda, Series s) {
  if (canonical_z(z, lambda, s) != z) return false;
  return s == Series::C || z.cardinality() % 2 == 0;
}

std::vector<ComponentElement> enumerate_A(const Partition& lambda, Series s) {
  std::vector<int> generators;
  for (int i : lambda.distinct_parts()) {
    if (is_component_parity(s, i)) generators.push_back(i);
  }
  std::sort(generators.begin(), generators.end());
  const std::size_t k = generators.size();
  std::vector<ComponentElement> out;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    std::vector<int> support;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (1UL << b)) support.push_back(generators[b]);
    }
    if (s != Series::C && support.size() % 2 != 0) continue;
    out.emplace_back(std::move(support));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_z(const ComponentElement& z) {
  if (z.is_identity()) return "id";
  std::string out;
  for (int i : z.support()) {
    if (!out.empty()) out += '*';
    out += 'z';
    out += std::to_string(i);
  }
  return out;
}

ComponentElement parse_z(std::string_view text) {
  if (text == "id" || text.empty()) return {};
  std::vector<int> support;
  while (true) {
    auto star = text.find('*');
    auto token = text.substr(0, star);
    if (token.size() < 2 || token.front() != 'z') {
      throw ParseError("bad component element factor '" + std::string(token) +
                       "' (expected id or z<i>*z<j>...)");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
      throw ParseError("bad component element factor '" + std::string(token) + "'");
    }
    support.push_back(value);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return ComponentElement(std::move(support));
}

}  // namespace springer
