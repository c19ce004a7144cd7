#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "springer/oracle.hpp"
#include "springer/recursion.hpp"

namespace springer {

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(std::string_view text);

/// "(2,2,1,1)"; the empty partition is "()".
std::string partition_text(const Partition& lambda);
/// "2.2.1.1" so CSV fields never contain commas.
std::string partition_csv(const Partition& lambda);
/// "1;2;1" from the ascending coefficients.
std::string betti_csv(const Poly& p);

/// {"series","partition","z","poly","betti"}; coefficients as exact strings.
nlohmann::json value_json(Series s, const Partition& lambda, const ComponentElement& z,
                          const Poly& value);

std::string render_value(OutputFormat f, Series s, const Partition& lambda,
                         const ComponentElement& z, const Poly& value);

/// Whole table.  csv: header "partition,z,polynomial,betti" plus one line per
/// row; json: an array of value objects; text: aligned columns.
std::string render_table(OutputFormat f, Series s, const std::vector<TableRow>& rows);

std::string render_expansion(OutputFormat f, const RestrictionExpansion& e, bool show_null);

std::string render_reports(OutputFormat f, Series s, const std::vector<FlagCountReport>& reports);

}  // namespace springer
