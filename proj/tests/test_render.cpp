#include "doctest.h"
#include "springer/error.hpp"
#include "springer/render.hpp"

using namespace springer;

TEST_CASE("csv table") {
  auto text = render_table(OutputFormat::csv, Series::C, full_table(Series::C, 2));
  CHECK(text ==
        "partition,z,polynomial,betti\n"
        "4,id,1,1\n"
        "4,z4,1,1\n"
        "2.2,id,3*x + 1,1;3\n"
        "2.2,z2,x + 1,1;1\n"
        "2.1.1,id,x^2 + 2*x + 1,1;2;1\n"
        "2.1.1,z2,x^2 + 2*x + 1,1;2;1\n"
        "1.1.1.1,id,x^4 + 2*x^3 + 2*x^2 + 2*x + 1,1;2;2;2;1\n");
}

TEST_CASE("json value schema") {
  const Partition p({2, 2});
  auto j = value_json(Series::C, p, {2}, graded_trace(p, {2}, Series::C));
  CHECK(j["series"] == "C");
  CHECK(j["partition"] == nlohmann::json::array({2, 2}));
  CHECK(j["z"] == nlohmann::json::array({2}));
  CHECK(j["poly"] == nlohmann::json::array({"1", "1"}));
  CHECK(j["betti"] == nlohmann::json::array({"1", "1"}));
}

TEST_CASE("expansion rendering hides null terms unless asked") {
  auto e = expand_restriction(Partition({1, 1, 1}), {}, Series::B);
  CHECK(render_expansion(OutputFormat::text, e, false) == "x + 1  (1)  id\n");
  CHECK(render_expansion(OutputFormat::text, e, true) ==
        "x + 1  (1)  id\n"
        "1/2*x^2 + 1/2*x  null  id\n"
        "1/2*x^2 - 1/2*x  null  z1\n");
  auto j = nlohmann::json::parse(render_expansion(OutputFormat::json, e, true));
  CHECK(j["terms"].size() == 3);
  CHECK(j["terms"][1]["child"].is_null());
}

TEST_CASE("table text annotates very even rows") {
  auto text = render_table(OutputFormat::text, Series::D, full_table(Series::D, 2));
  CHECK(text.find("(2,2)") != std::string::npos);
  CHECK(text.find("very even") != std::string::npos);
}

TEST_CASE("every rendered polynomial parses back") {
  for (Series s : {Series::B, Series::C, Series::D}) {
    for (const auto& row : full_table(s, 4)) CHECK(parse_poly(format_poly(row.value)) == row.value);
  }
}

TEST_CASE("format names") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_output_format("xml"), ParseError);
  CHECK(partition_text(Partition()) == "()");
}
