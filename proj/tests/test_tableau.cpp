#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "webweave/errors.hpp"
#include "webweave/tableau.hpp"

using namespace webweave;

namespace {

RowStrictTableau T(const std::vector<std::vector<int>>& rows) { return RowStrictTableau::from_rows(rows); }

}  // namespace

TEST_CASE("shapes reject bad parts") {
  CHECK_THROWS_AS(Shape({2, 3}), ShapeError);
  CHECK_THROWS_AS(Shape({2, 0}), ShapeError);
  CHECK(Shape({3, 2, 2}).size() == 7);
  CHECK(Shape().empty());
  CHECK(Shape().is_rectangle());
  CHECK(Shape({3, 2, 2}).column_lengths() == std::vector<int>{3, 3, 1});
  CHECK(Shape::rectangle(3, 4) == Shape({4, 4, 4}));
}

TEST_CASE("skew shapes require containment and compare by their boxes") {
  CHECK_THROWS_AS(SkewShape(Shape({2}), Shape({3})), ShapeError);
  CHECK_THROWS_AS(SkewShape(Shape({2, 1}), Shape({1, 1, 1})), ShapeError);
  const SkewShape s(Shape({3, 2}), Shape({1}));
  CHECK(s.size() == 4);
  CHECK_FALSE(s.contains({1, 1}));
  CHECK(s.contains({1, 2}));
  CHECK(s.cells() == std::vector<Cell>{{1, 2}, {1, 3}, {2, 1}, {2, 2}});
  // (2,1)/(1,1) and (2)/(1) hold the same single box
  CHECK(SkewShape(Shape({2, 1}), Shape({1, 1})) == SkewShape(Shape({2}), Shape({1})));
}

TEST_CASE("tableaux enforce row-strict invariants") {
  CHECK_THROWS_AS(T({{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(T({{2, 3}, {1, 4}}), PreconditionError);
  CHECK_THROWS_AS(T({{1}, {2, 3}}), ShapeError);
  CHECK_NOTHROW(T({{1, 2}, {1, 3}, {3, 4}}));
  const auto t = RowStrictTableau::from_rows(Shape({1}), {{1, 3}, {1, 2, 3}, {3}});
  CHECK(t.at({1, 1}) == 0);
  CHECK(t.at({1, 2}) == 1);
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 3}, {1, 2, 3}, {3}});
  CHECK(t.max_entry() == 3);
  CHECK(RowStrictTableau::from_grid(t.grid()) == t);
}

TEST_CASE("is_standard") {
  CHECK(is_standard(T({{1, 3}, {2, 4}, {5, 6}})));
  CHECK_FALSE(is_standard(T({{1, 2}, {1, 3}, {3, 4}})));
  CHECK(is_standard(T({{1}})));
  CHECK_FALSE(is_standard(T({{1, 2}, {3, 5}})));
}

TEST_CASE("russell_repetition") {
  CHECK(russell_repetition(T({{1, 2}, {1, 3}, {3, 4}})) == 2);
  CHECK(russell_repetition(T({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(russell_repetition(T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}})) == 2);
  CHECK_THROWS_AS(russell_repetition(T({{1, 2}, {3, 4}})), NotRussellError);
  CHECK_THROWS_AS(russell_repetition(T({{1, 3}, {1, 4}, {3, 5}})), NotRussellError);  // 2 missing
  CHECK_THROWS_AS(russell_repetition(T({{1}, {1}, {1}})), NotRussellError);          // 1 three times
  CHECK_FALSE(is_russell(T({{1, 2}})));
}

TEST_CASE("standardize") {
  CHECK(standardize(T({{1, 2}, {1, 3}, {3, 4}})) == T({{1, 3}, {2, 4}, {5, 6}}));
  CHECK(standardize(T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}})) == T({{1, 3, 4}, {2, 6, 7}, {5, 8, 9}}));
  CHECK(standardize(T({{1, 2}, {3, 4}, {5, 6}})) == T({{1, 2}, {3, 4}, {5, 6}}));
  CHECK_THROWS_AS(standardize(T({{1, 3}, {1, 4}, {3, 5}})), NotRussellError);
}

TEST_CASE("rotate_complement") {
  CHECK(rotate_complement(T({{1, 2, 3, 5}, {1, 2, 4, 6}, {3, 5, 7, 8}}), 8) ==
        T({{1, 2, 4, 6}, {3, 5, 7, 8}, {4, 6, 7, 8}}));
  CHECK(rotate_complement(T({{1}}), 1) == T({{1}}));
  CHECK(rotate_complement(T({{1, 2, 5}, {3, 4, 6}}), 6) == T({{1, 3, 4}, {2, 5, 6}}));
  CHECK_THROWS_AS(rotate_complement(T({{1, 2}, {3}}), 3), ShapeError);
  CHECK_THROWS(rotate_complement(T({{1, 2}, {3, 4}}), 3));
}

TEST_CASE("rotate_complement is an involution on row-strict rectangles") {
  for (const auto& shape : {std::vector<int>{2, 2}, std::vector<int>{2, 2, 2}, std::vector<int>{3, 3}}) {
    for (const auto& rows : oracle::row_strict_fillings(shape, 5)) {
      const auto t = T(rows);
      CHECK(rotate_complement(rotate_complement(t, 5), 5) == t);
    }
  }
}

TEST_CASE("enumerate_standard matches the corner-removal count") {
  CHECK(enumerate_standard(Shape({2, 2})).size() == 2);
  CHECK(enumerate_standard(Shape({3, 3})).size() == 5);
  CHECK(enumerate_standard(Shape({3, 3, 3})).size() == 42);
  CHECK(enumerate_standard(Shape()).size() == 1);
  // every partition of at most 12
  std::function<void(std::vector<int>, int, int)> partitions = [&](std::vector<int> parts, int left, int cap) {
    if (left == 0) {
      const Shape s(parts);
      const auto all = enumerate_standard(s);
      CHECK(all.size() == oracle::count_syt(parts));
      CHECK(count_standard(s) == oracle::count_syt(parts));
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      auto next = parts;
      next.push_back(p);
      partitions(next, left - p, p);
    }
  };
  for (int n = 0; n <= 12; ++n) {
    partitions({}, n, n);
  }
}

TEST_CASE("enumerate_standard gives distinct standard tableaux of the shape") {
  const Shape s({4, 3, 1});
  const auto all = enumerate_standard(s);
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& t : all) {
    CHECK(is_standard(t));
    CHECK(t.shape() == SkewShape(s));
    seen.insert(t.rows());
  }
  CHECK(seen.size() == all.size());
}

TEST_CASE("count_standard") {
  CHECK(count_standard(Shape({4, 4})) == 14);
  CHECK(count_standard(Shape()) == 1);
  CHECK(count_standard(Shape({4, 4, 4})) == 462);
  CHECK(count_standard(Shape({5, 5, 5})) == oracle::count_syt({5, 5, 5}));
  CHECK_THROWS_AS(count_standard(Shape::rectangle(12, 12)), std::overflow_error);
}

TEST_CASE("enumerate_russell small cases") {
  CHECK(enumerate_russell(1, 0) == std::vector<RowStrictTableau>{T({{1}, {2}, {3}})});
  const auto h1 = enumerate_russell(1, 1);
  CHECK(h1.size() == 2);
  CHECK(std::find(h1.begin(), h1.end(), T({{1}, {1}, {2}})) != h1.end());
  CHECK(std::find(h1.begin(), h1.end(), T({{1}, {2}, {2}})) != h1.end());
  const auto k3 = enumerate_russell(3, 2);
  CHECK(std::find(k3.begin(), k3.end(), T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}})) != k3.end());
  CHECK(enumerate_russell(1, 2).empty());
}

TEST_CASE("enumerate_russell agrees with a brute-force filter for k <= 2") {
  for (int k = 1; k <= 2; ++k) {
    for (int h = 0; h <= 3 * k - 1; ++h) {
      std::set<std::vector<std::vector<int>>> got;
      for (const auto& t : enumerate_russell(k, h)) {
        CHECK(russell_repetition(t) == h);
        got.insert(t.rows());
      }
      CHECK_MESSAGE(got == oracle::russell_by_filter(k, h), "k=", k, " h=", h);
    }
  }
}

TEST_CASE("enumerate_russell with h = 0 is the standard enumeration") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(enumerate_russell(k, 0) == enumerate_standard(Shape::rectangle(3, k)));
  }
}

TEST_CASE("standardize yields standard tableaux of the same shape") {
  for (int k = 1; k <= 3; ++k) {
    for (int h = 0; h <= 3 * k - 1; ++h) {
      for (const auto& t : enumerate_russell(k, h)) {
        const auto s = standardize(t);
        CHECK(is_standard(s));
        CHECK(s.shape() == t.shape());
        if (h == 0) {
          CHECK(s == t);
        }
      }
    }
  }
}
