// Command-line front end: eval, table, expand and verify.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "springer/error.hpp"
#include "springer/finite_field.hpp"
#include "springer/oracle.hpp"
#include "springer/recursion.hpp"
#include "springer/render.hpp"

namespace {

using namespace springer;

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

// Accepts an optional ":+" / ":-" orbit label, meaningful only for very even
// partitions in series D; identity values of both orbits coincide.
Partition parse_partition_arg(const std::string& text, Series s) {
  auto colon = text.find(':');
  Partition lambda = parse_partition(text.substr(0, colon));
  if (colon != std::string::npos) {
    const std::string label = text.substr(colon + 1);
    if (label != "+" && label != "-") throw ParseError("bad orbit label ':" + label + "'");
    if (s != Series::D || !validate(lambda, s).very_even) {
      throw ParseError("orbit label only applies to very even partitions in series D");
    }
    std::cerr << "note: orbit label '" << label
              << "' ignored; both orbits have the same graded trace at the identity\n";
  }
  auto report = validate(lambda, s);
  if (!report.valid) {
    throw ContractViolation("partition " + partition_text(lambda) + " is not valid for series " +
                            to_string(s) + ": " + report.reason);
  }
  return lambda;
}

ComponentElement parse_z_arg(const std::string& text, const Partition& lambda, Series s) {
  ComponentElement z = parse_z(text);
  if (!in_component_group(z, lambda, s)) {
    throw ContractViolation(format_z(z) + " is not an element of A" + partition_text(lambda) +
                            " for series " + to_string(s));
  }
  return z;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded traces of Springer representations at the identity for classical groups"};
  app.require_subcommand(1);

  std::string series_text;
  std::string partition_text_arg;
  std::string z_text = "id";
  std::string format_text = "text";
  unsigned threads = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--series", series_text, "B (SO(2n+1)), C (Sp(2n)) or D (SO(2n))")->required();
    cmd->add_option("--format", format_text, "text, json or csv")->capture_default_str();
  };

  auto* eval_cmd = app.add_subcommand("eval", "Graded trace Q_x(lambda, z) at the identity");
  add_common(eval_cmd);
  eval_cmd->add_option("--partition", partition_text_arg, "Jordan type, e.g. 2,2,1,1")->required();
  eval_cmd->add_option("--z", z_text, "component element: id or z2*z4")->capture_default_str();

  int rank = 0;
  auto* table_cmd = app.add_subcommand("table", "All valid (lambda, z) of a given rank");
  add_common(table_cmd);
  table_cmd->add_option("--n", rank, "rank")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  bool show_null = false;
  auto* expand_cmd = app.add_subcommand("expand", "One step of the restriction formula");
  add_common(expand_cmd);
  expand_cmd->add_option("--partition", partition_text_arg, "Jordan type")->required();
  expand_cmd->add_option("--z", z_text, "component element")->capture_default_str();
  expand_cmd->add_flag("--show-null", show_null, "also print terms on the zero symbol");

  int max_size = 0;
  long q = 3;
  bool twisted = false;
  int max_twisted_rank = 2;
  auto* verify_cmd = app.add_subcommand("verify", "Compare flag counts over finite fields with Q_q");
  add_common(verify_cmd);
  verify_cmd->add_option("--max-size", max_size, "largest partition size")->required();
  verify_cmd->add_option("--q", q, "odd prime power")->capture_default_str();
  verify_cmd->add_flag("--twisted", twisted, "also count under z~F for every z in A(lambda)");
  verify_cmd->add_option("--max-twisted-rank", max_twisted_rank, "rank limit for twisted counts")
      ->capture_default_str();
  verify_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const Series s = parse_series(series_text);
    const OutputFormat format = parse_output_format(format_text);

    if (*eval_cmd) {
      Partition lambda = parse_partition_arg(partition_text_arg, s);
      ComponentElement z = parse_z_arg(z_text, lambda, s);
      std::cout << render_value(format, s, lambda, z, graded_trace(lambda, z, s));
      return 0;
    }
    if (*table_cmd) {
      std::cout << render_table(format, s, full_table(s, rank, threads));
      return 0;
    }
    if (*expand_cmd) {
      Partition lambda = parse_partition_arg(partition_text_arg, s);
      ComponentElement z = parse_z_arg(z_text, lambda, s);
      std::cout << render_expansion(format, expand_restriction(lambda, z, s), show_null);
      return 0;
    }
    if (*verify_cmd) {
      std::vector<FlagCountReport> reports;
      bool all_match = true;
      VerifyOptions options{threads, max_twisted_rank};
      auto [p, k] = prime_power_decomposition(q);
      if (p == 0 || p == 2) throw ContractViolation("--q must be an odd prime power");
      for (int r = 1; defining_dimension(s, r) <= max_size; ++r) {
        for (const auto& lambda : valid_partitions(s, r)) {
          for (const auto& z : enumerate_A(lambda, s)) {
            if (!z.is_identity() && !twisted) continue;
            try {
              reports.push_back(verify(lambda, z, s, q, options));
              all_match = all_match && reports.back().match;
            } catch (const std::exception& e) {
              std::cerr << "error: " << partition_text(lambda) << " " << format_z(z) << ": "
                        << e.what() << '\n';
              all_match = false;
            }
          }
        }
      }
      std::cout << render_reports(format, s, reports);
      return all_match ? 0 : kMismatch;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
