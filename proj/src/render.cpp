#include "springer/render.hpp"

#include <algorithm>
#include <sstream>

#include "springer/error.hpp"

namespace springer {

namespace {

nlohmann::json parts_json(const Partition& lambda) { return lambda.parts(); }

nlohmann::json betti_json(const Poly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string child_text(const RestrictionTerm& t) {
  return t.child ? partition_text(*t.child) : std::string("null");
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw ParseError("unknown format '" + std::string(text) + "' (expected text, json or csv)");
}

std::string partition_text(const Partition& lambda) { return "(" + join_parts(lambda) + ")"; }

std::string partition_csv(const Partition& lambda) { return join_parts(lambda, "."); }

std::string betti_csv(const Poly& p) {
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ';';
    out += c.get_str();
  }
  return out;
}

nlohmann::json value_json(Series s, const Partition& lambda, const ComponentElement& z,
                          const Poly& value) {
  return {{"series", to_string(s)},
          {"partition", parts_json(lambda)},
          {"z", z.support()},
          {"poly", coefficient_strings(value)},
          {"betti", betti_json(value)}};
}

std::string render_value(OutputFormat f, Series s, const Partition& lambda,
                         const ComponentElement& z, const Poly& value) {
  switch (f) {
    case OutputFormat::text:
      return format_poly(value) + "\n";
    case OutputFormat::json:
      return value_json(s, lambda, z, value).dump() + "\n";
    case OutputFormat::csv:
      return "partition,z,polynomial,betti\n" + partition_csv(lambda) + "," + format_z(z) + "," +
             format_poly(value) + "," + betti_csv(value) + "\n";
  }
  return {};
}

std::string render_table(OutputFormat f, Series s, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::csv:
      out << "partition,z,polynomial,betti\n";
      for (const auto& r : rows) {
        out << partition_csv(r.lambda) << ',' << format_z(r.z) << ',' << format_poly(r.value) << ','
            << betti_csv(r.value) << '\n';
      }
      break;
    case OutputFormat::json: {
      out << "[\n";
      for (std::size_t k = 0; k < rows.size(); ++k) {
        auto obj = value_json(s, rows[k].lambda, rows[k].z, rows[k].value);
        if (rows[k].very_even) obj["very_even"] = true;
        out << "  " << obj.dump() << (k + 1 < rows.size() ? ",\n" : "\n");
      }
      out << "]\n";
      break;
    }
    case OutputFormat::text: {
      std::size_t wp = 0;
      std::size_t wz = 0;
      for (const auto& r : rows) {
        wp = std::max(wp, partition_text(r.lambda).size());
        wz = std::max(wz, format_z(r.z).size());
      }
      for (const auto& r : rows) {
        out << pad(partition_text(r.lambda), wp) << "  " << pad(format_z(r.z), wz) << "  "
            << format_poly(r.value);
        if (r.very_even) out << "  [very even: common value of both orbits]";
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string render_expansion(OutputFormat f, const RestrictionExpansion& e, bool show_null) {
  std::ostringstream out;
  std::vector<const RestrictionTerm*> shown;
  for (const auto& t : e.terms) {
    if (show_null || !t.is_null()) shown.push_back(&t);
  }
  switch (f) {
    case OutputFormat::text:
      for (const auto* t : shown) {
        out << format_poly(t->coeff) << "  " << child_text(*t) << "  " << format_z(t->child_z) << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "coefficient,child,child_z\n";
      for (const auto* t : shown) {
        out << format_poly(t->coeff) << ',' << (t->child ? partition_csv(*t->child) : "null") << ','
            << format_z(t->child_z) << '\n';
      }
      break;
    case OutputFormat::json: {
      auto terms = nlohmann::json::array();
      for (const auto* t : shown) {
        terms.push_back({{"coeff", coefficient_strings(t->coeff)},
                         {"child", t->child ? parts_json(*t->child) : nlohmann::json(nullptr)},
                         {"child_z", t->child_z.support()}});
      }
      nlohmann::json doc{{"series", to_string(e.series)},
                         {"partition", parts_json(e.source)},
                         {"z", e.source_z.support()},
                         {"terms", terms}};
      out << doc.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_reports(OutputFormat f, Series s, const std::vector<FlagCountReport>& reports) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::text:
      for (const auto& r : reports) {
        out << (r.match ? "ok      " : "MISMATCH") << "  " << to_string(s) << "  "
            << partition_text(r.lambda) << "  " << format_z(r.z) << "  q=" << r.q
            << "  count=" << r.count << "  predicted=" << r.predicted.get_str();
        if (r.alternate_count) {
          out << "  other-orbit=" << *r.alternate_count
              << (r.alternate_discrepancy() ? " (differs)" : "");
        }
        out << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "partition,z,q,count,predicted,match\n";
      for (const auto& r : reports) {
        out << partition_csv(r.lambda) << ',' << format_z(r.z) << ',' << r.q << ',' << r.count << ','
            << r.predicted.get_str() << ',' << (r.match ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::json: {
      out << "[\n";
      for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto& r = reports[k];
        nlohmann::json obj{{"series", to_string(s)},
                           {"partition", parts_json(r.lambda)},
                           {"z", r.z.support()},
                           {"q", r.q},
                           {"count", r.count},
                           {"predicted", r.predicted.get_str()},
                           {"match", r.match}};
        if (r.alternate_count) obj["other_orbit_count"] = *r.alternate_count;
        out << "  " << obj.dump() << (k + 1 < reports.size() ? ",\n" : "\n");
      }
      out << "]\n";
      break;
    }
  }
  return out.str();
}

}  // namespace springer
