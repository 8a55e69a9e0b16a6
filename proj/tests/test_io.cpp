#include <doctest.h>

#include "web_fixtures.hpp"
#include "webweave/bijection.hpp"
#include "webweave/errors.hpp"
#include "webweave/io.hpp"

using namespace webweave;

namespace {

RowStrictTableau T(const std::vector<std::vector<int>>& rows) { return RowStrictTableau::from_rows(rows); }

}  // namespace

TEST_CASE("tableau text format") {
  CHECK(parse_tableau_text("1 2 3\n1 4 5\n3 6 7") == T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}}));
  CHECK(parse_tableau_text("1 2 3\n1 4 5\n3 6 7\n") == T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}}));
  CHECK(parse_tableau_text("  1   3\t4\r\n2 3\n4 5\n\n") == T({{1, 3, 4}, {2, 3}, {4, 5}}));
  CHECK(parse_tableau_text("").empty());
  CHECK(format_tableau_text(T({{1, 2, 4}, {2, 3}, {3, 5}})) == "1 2 4\n2 3\n3 5\n");
  const auto skew = RowStrictTableau::from_rows(Shape({1}), {{1, 3}, {1, 2, 3}, {3}});
  CHECK(format_tableau_text(skew) == ". 1 3\n1 2 3\n3\n");
  CHECK(parse_tableau_text(". 1 3\n1 2 3\n3\n") == skew);
}

TEST_CASE("tableau text errors carry positions") {
  try {
    parse_tableau_text("1 2\n3 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_tableau_text("1 2\n\n3 4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_tableau_text("1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tableau_text("1 . 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tableau_text("2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_tableau_text("1\n2 3\n"), ParseError);
}

TEST_CASE("tableau JSON format") {
  const auto t = T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}});
  CHECK(tableau_to_json(t).dump() == R"({"rows":[[1,2,3],[1,4,5],[3,6,7]]})");
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
  const auto skew = RowStrictTableau::from_rows(Shape({2, 1}), {{1}, {2, 3}, {3, 4}});
  CHECK(tableau_to_json(skew).dump() == R"({"rows":[[1],[2,3],[3,4]],"inner":[2,1]})");
  CHECK(tableau_from_json(tableau_to_json(skew)) == skew);
  CHECK(parse_tableau(R"( {"rows": [[1, 3], [2, 4]]} )") == T({{1, 3}, {2, 4}}));
  CHECK(parse_tableau("1 3\n2 4\n") == T({{1, 3}, {2, 4}}));
}

TEST_CASE("JSON errors") {
  try {
    parse_json("{\n  \"rows\": [1,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    tableau_from_json(parse_json(R"({"row": []})"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 0);
    CHECK(std::string(e.what()).find("rows") != std::string::npos);
  }
  CHECK_THROWS_AS(tableau_from_json(parse_json(R"({"rows": [[2, 1]]})")), ParseError);
  CHECK_THROWS_AS(tableau_from_json(parse_json(R"({"rows": "no"})")), ParseError);
}

TEST_CASE("matching JSON format") {
  const Matching m(2, {{1, 2}, {3, 4}});
  CHECK(matching_to_json(m).dump() == R"({"n":2,"pairs":[[1,2],[3,4]]})");
  CHECK(matching_from_json(matching_to_json(m)) == m);
  CHECK(matching_to_json(Matching()).dump() == R"({"n":0,"pairs":[]})");
  CHECK_THROWS_AS(matching_from_json(parse_json(R"({"n":2,"pairs":[[1,3],[2,4]]})")), ParseError);
}

TEST_CASE("web JSON format") {
  const Web tripod = testing_support::tripod();
  CHECK(web_to_json(tripod).dump() ==
        R"({"boundary":[{"color":"black"},{"color":"black"},{"color":"black"}],"internal_count":1,)"
        R"("internal_colors":["white"],"edges":[["b0","i0"],["b1","i0"],["b2","i0"]],)"
        R"("rotation":[[0],[2],[4],[1,3,5]]})");
  CHECK(web_from_json(web_to_json(tripod)) == tripod);
  const Web w = russell_web(RowStrictTableau::from_rows({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}}));
  CHECK(web_from_json(parse_json(web_to_json(w).dump())) == w);
}

TEST_CASE("web JSON schema errors") {
  CHECK_THROWS_AS(web_from_json(parse_json(R"({"boundary":[]})")), ParseError);
  CHECK_THROWS_AS(web_from_json(parse_json(R"({"boundary":[{"color":"red"}],"internal_count":0,)"
                                           R"("internal_colors":[],"edges":[],"rotation":[[]]})")),
                  ParseError);
  CHECK_THROWS_AS(web_from_json(parse_json(R"({"boundary":[{"color":"black"}],"internal_count":0,)"
                                           R"("internal_colors":[],"edges":[["b0","i3"]],"rotation":[[0]]})")),
                  ParseError);
  CHECK_THROWS_AS(web_from_json(parse_json(R"({"boundary":[{"color":"black"},{"color":"white"}],"internal_count":0,)"
                                           R"("internal_colors":[],"edges":[["b0","b1"]],"rotation":[[0],[0]]})")),
                  ParseError);
}

TEST_CASE("words and shapes") {
  CHECK(parse_word("5 6 8 3 4 7 2 2 5 1 1 3") == Word{5, 6, 8, 3, 4, 7, 2, 2, 5, 1, 1, 3});
  CHECK(parse_word("") == Word{});
  CHECK(format_word({2, 3, 4}) == "2 3 4");
  CHECK_THROWS_AS(parse_word("1 -2"), ParseError);
  CHECK(parse_shape("3,3,3") == Shape({3, 3, 3}));
  CHECK_THROWS_AS(parse_shape("3,,3"), ParseError);
  CHECK_THROWS_AS(parse_shape("2,3"), ParseError);
}
