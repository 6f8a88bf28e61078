#include "carrymix/carries_chain.hpp"
#include "carrymix/errors.hpp"
#include "carrymix/serialize.hpp"
#include "carrymix/shuffling.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace carrymix;
using oracle::frac;

TEST_CASE("matrix csv and json") {
  const RationalMatrix p = build_P({2, 2});
  CHECK(matrix_to_csv(p) == "3/4,1/4\n1/4,3/4\n");
  CHECK(matrix_to_json(p) == R"([["3/4","1/4"],["1/4","3/4"]])");
  CHECK(matrix_from_json(matrix_to_json(build_P({4, 7}))) == build_P({4, 7}));
  CHECK_THROWS_AS(matrix_from_json(R"([["1"],["1","2"]])"), ValidationError);
  CHECK_THROWS_AS(matrix_from_json("not json"), ValidationError);
  CHECK(vector_to_csv({frac(1, 6), frac(2, 3), 1}) == "1/6,2/3,1\n");
  CHECK(vector_to_json({frac(1, 2), 0}) == R"(["1/2","0"])");
}

TEST_CASE("distribution json") {
  const DistributionTable d = exhaustive_shuffle_dist(3, 2);
  const std::string text = distribution_to_json(d);
  CHECK(text.find("\"1 2 3\":\"1/2\"") != std::string::npos);
  CHECK(distribution_from_json(text) == d);
}

TEST_CASE("column array files") {
  const std::string text =
      "# worked example\n"
      "6 3 3\n"
      "012\n012\n112\n111\n212\n121\n";
  const ColumnArray a = parse_column_array(text);
  CHECK(a.n() == 6);
  CHECK(a.m() == 3);
  CHECK(a.base() == 3);
  CHECK(a.column(0) == std::vector<int>{2, 2, 2, 1, 2, 1});
  CHECK(parse_column_array(format_column_array(a)) == a);
  CHECK(parse_column_array("2 2 10\n1 9\n0 3\n") == ColumnArray::from_rows({{1, 9}, {0, 3}}, 10));
  const ColumnArray wide = ColumnArray::from_rows({{40, 0}, {3, 99}}, 100);
  CHECK(format_column_array(wide) == "2 2 100\n40 0\n3 99\n");
  CHECK(parse_column_array(format_column_array(wide)) == wide);
  CHECK_THROWS_AS(parse_column_array("2 2 3\n01\n"), ValidationError);
  CHECK_THROWS_AS(parse_column_array("1 2 3\n013\n"), ValidationError);
  CHECK_THROWS_AS(parse_column_array("1 2 3\n03\n"), ValidationError);
  CHECK_THROWS_AS(parse_column_array("1 1\n0\n"), ValidationError);
  CHECK_THROWS_AS(parse_column_array(""), ValidationError);
  CHECK_THROWS_AS(parse_column_array("1 1 2\n0\n1\n"), ValidationError);
}
