#include <doctest.h>

#include <phorma/spec_file.hpp>

using namespace phorma;

TEST_SUITE_BEGIN("spec_file");

TEST_CASE("parses bounds and where") {
  const SpecFile file = parse_spec_file("bounds: 7 5 7 5\nwhere: a1>=a2\n");
  CHECK(file.bounds == std::vector<int>{7, 5, 7, 5});
  CHECK(file.where == "a1>=a2");
  const PhormaSpec spec = to_spec(file);
  CHECK(spec.dimension() == 4);
  CHECK(spec.max_bound() == 7);
}

TEST_CASE("comments, blank lines and missing where") {
  const SpecFile file = parse_spec_file(
      "# symmetric pair\n"
      "\n"
      "bounds: 3 3   # inline comment\n");
  CHECK(file.bounds == std::vector<int>{3, 3});
  CHECK(file.where.empty());
  CHECK(to_spec(file).where.kind == ExprTree::Kind::True);
}

TEST_CASE("carriage returns are tolerated") {
  const SpecFile file = parse_spec_file("bounds: 2 2\r\nwhere: a1>=a2\r\n");
  CHECK(file.bounds == std::vector<int>{2, 2});
  CHECK(file.where == "a1>=a2");
}

TEST_CASE("malformed files are rejected with line numbers") {
  CHECK_THROWS_WITH_AS(parse_spec_file("where: a1>=a2\n"),
                       doctest::Contains("missing required key 'bounds'"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_spec_file("bounds: 2 x\n"), doctest::Contains("line 1"),
                       std::runtime_error);
  CHECK_THROWS_AS(parse_spec_file("bounds: \n"), std::runtime_error);
  CHECK_THROWS_AS(parse_spec_file("bounds: 0 2\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_spec_file("bounds: 2 2\nbounds: 3 3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_spec_file("bounds: 2 2\nscale: 3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_spec_file("bounds 2 2\n"), std::runtime_error);
}

TEST_CASE("restriction errors surface through to_spec") {
  CHECK_THROWS_AS(to_spec(SpecFile{{2, 2}, "a1>=a3"}), ParseError);
  CHECK_THROWS_AS(to_spec(SpecFile{{2, 2}, "a1>="}), ParseError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_spec_file("/nonexistent/path.phorma"), std::runtime_error);
}

TEST_SUITE_END();
