#include "doctest.h"

#include "twodist/table.hpp"

using namespace twodist;

TEST_CASE("cell text forms") {
  TableCell c;
  c.status = TableCell::Status::NotWellDefined;
  CHECK(c.text() == "--");

  c.status = TableCell::Status::Value;
  c.lower = c.upper = Int(56);
  c.upper_tag = "lp";
  CHECK(c.text() == "56^lp");
  c.equidistant = true;
  c.upper_tag = "d2";
  CHECK(c.text() == "56^e,d2");

  c.status = TableCell::Status::Range;
  c.lower = Int(12);
  c.upper = Int(19);
  c.upper_tag = "dd";
  c.equidistant = false;
  CHECK(c.text() == "12-19^dd");
}

TEST_CASE("cells combine bounds and constructions") {
  const auto a = compute_cell({2, 9, 4, 2});
  CHECK(a.status == TableCell::Status::Value);
  CHECK(*a.upper == 16);
  CHECK(a.upper_tag == "d2");
  CHECK(*a.lower == 16);

  const auto b = compute_cell({2, 9, 3, 4});
  CHECK(b.status == TableCell::Status::NotWellDefined);

  const auto c = compute_cell({3, 6, 1, 2});
  CHECK(c.text() == "6^exact");

  CellOptions opt;
  opt.oracle_max_vertices = 2000;
  const auto d = compute_cell({2, 7, 2, 2}, opt);
  CHECK(*d.lower == 22);
  CHECK(*d.upper == 22);
  CHECK(d.upper_tag == "oracle");
}

TEST_CASE("search can raise a lower bound but never above the upper bound") {
  CellOptions opt;
  opt.search_restarts = 200;
  const auto c = compute_cell({2, 10, 4, 2}, opt);
  REQUIRE(c.lower);
  REQUIRE(c.upper);
  CHECK(*c.lower <= *c.upper);
  CHECK(*c.lower >= 16);
}

TEST_CASE("JSON round-trip") {
  TableSpec spec;
  spec.n_min = 7;
  spec.n_max = 10;
  for (const auto& c : compute_table(spec)) {
    const TableCell back = cell_from_json(to_json(c));
    CHECK(back == c);
  }
  nlohmann::json bad = to_json(compute_cell({2, 9, 4, 2}));
  bad["status"] = "maybe";
  CHECK_THROWS_AS(cell_from_json(bad), std::invalid_argument);
}

TEST_CASE("table rendering") {
  TableSpec spec;
  spec.n_min = 7;
  spec.n_max = 9;
  spec.format = TableFormat::csv;
  const std::string csv = render_table(spec);
  CHECK(csv.rfind("q,n,d,delta,lower,lower_tag,upper,upper_tag,status\n", 0) == 0);
  CHECK(csv.find("2,9,4,2,16,") != std::string::npos);

  spec.format = TableFormat::markdown;
  CHECK(render_table(spec).find("| 9 |") != std::string::npos);
  spec.format = TableFormat::latex;
  const std::string tex = render_table(spec);
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.find("16$^{d2}$") != std::string::npos);
  spec.format = TableFormat::json;
  CHECK(nlohmann::json::parse(render_table(spec)).at("cells").size() == compute_table(spec).size());

  CHECK(parse_table_format("md") == TableFormat::markdown);
  CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
  spec.q = 10;
  CHECK_THROWS_AS(compute_table(spec), std::invalid_argument);
}

TEST_CASE("cells cover every (n, d) with d + delta <= n") {
  TableSpec spec;
  spec.q = 3;
  spec.delta = 3;
  spec.n_min = 7;
  spec.n_max = 9;
  const auto cells = compute_table(spec);
  std::size_t expected = 0;
  for (int n = 7; n <= 9; ++n) expected += static_cast<std::size_t>(n - 3);
  CHECK(cells.size() == expected);
  for (const auto& c : cells) {
    if (c.lower && c.upper) CHECK(*c.lower <= *c.upper);
  }
}
