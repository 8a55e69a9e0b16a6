#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "web_fixtures.hpp"
#include "webweave/bijection.hpp"
#include "webweave/errors.hpp"

using namespace webweave;
using testing_support::relabel;
using testing_support::square_web;
using testing_support::tripod;

namespace {

RowStrictTableau T(const std::vector<std::vector<int>>& rows) { return RowStrictTableau::from_rows(rows); }

const Color W = Color::white;
const Color B = Color::black;

std::vector<Web> small_webs() {
  std::vector<Web> out;
  for (int k = 1; k <= 2; ++k) {
    for (int h = 0; h < 3 * k; ++h) {
      for (const auto& t : enumerate_russell(k, h)) {
        out.push_back(russell_web(t));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("matchings must be noncrossing and perfect") {
  CHECK_NOTHROW(Matching(3, {{2, 3}, {1, 4}, {5, 6}}));
  CHECK_THROWS_AS(Matching(2, {{1, 3}, {2, 4}}), PreconditionError);
  CHECK_THROWS_AS(Matching(2, {{1, 2}}), PreconditionError);
  CHECK_THROWS_AS(Matching(1, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Matching(1, {{1, 3}}), PreconditionError);
  const Matching m(3, {{4, 1}, {3, 2}, {5, 6}});
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {5, 6}});
  CHECK(m.partner(3) == 2);
  CHECK(m.partner(6) == 5);
}

TEST_CASE("reflect_matching") {
  CHECK(reflect_matching(Matching(1, {{1, 2}})) == Matching(1, {{1, 2}}));
  CHECK(reflect_matching(Matching(3, {{2, 3}, {1, 4}, {5, 6}})) == Matching(3, {{4, 5}, {3, 6}, {1, 2}}));
  CHECK(reflect_matching(Matching(2, {{1, 2}, {3, 4}})) == Matching(2, {{3, 4}, {1, 2}}));
  CHECK(reflect_matching(Matching()) == Matching());
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_standard(Shape::rectangle(2, n))) {
      const Matching m = web_of_2row(t);
      CHECK(reflect_matching(reflect_matching(m)) == m);
    }
  }
}

TEST_CASE("web construction rejects malformed half-edge data") {
  CHECK_THROWS_AS(Web({B, W}, 1, {{0, 2}}, {{0}, {1}}), StructuralError);
  CHECK_THROWS_AS(Web({B, W}, 1, {{0, 1}}, {{0}, {0}}), StructuralError);
  CHECK_THROWS_AS(Web({B, W}, 1, {{0, 1}}, {{0}, {}}), StructuralError);
  CHECK_THROWS_AS(Web({B, W}, 1, {{0, 1}}, {{0}}), StructuralError);
  CHECK_THROWS_AS(Web({B, W}, 1, {{0, 1}}, {{1}, {0}}), StructuralError);
}

TEST_CASE("validate_web accepts a tripod") {
  CHECK(validate_web(tripod()).ok());
  CHECK(validate_web(Web()).ok());
}

TEST_CASE("validate_web reports a square face") {
  const auto report = validate_web(square_web());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.has(ViolationKind::small_face));
  CHECK(report.violations.front().detail.find("face of size 4 < 6") != std::string::npos);
}

TEST_CASE("validate_web reports each kind of violation") {
  CHECK(validate_web(tripod(B)).ok());
  CHECK(validate_web(Web({B, B, B, B}, 3, {{0, 3}, {1, 3}, {2, 3}}, {{0}, {2}, {4}, {1, 3, 5}}))
            .has(ViolationKind::not_bipartite));
  // centre of degree 2 and a bare boundary vertex
  const Web thin({B, B, B, W}, 3, {{0, 3}, {1, 3}}, {{0}, {2}, {}, {1, 3}});
  CHECK(validate_web(thin).has(ViolationKind::internal_degree));
  CHECK(validate_web(thin).has(ViolationKind::boundary_degree));
  // clockwise centre against counterclockwise boundary
  const Web twisted({B, B, B, W}, 3, {{0, 3}, {1, 3}, {2, 3}}, {{0}, {2}, {4}, {1, 5, 3}});
  CHECK(validate_web(twisted).has(ViolationKind::non_planar));
  // two internal vertices joined twice
  const Web doubled({W, B, W, B}, 2, {{0, 3}, {1, 2}, {2, 3}, {2, 3}}, {{0}, {2}, {3, 4, 6}, {1, 7, 5}});
  CHECK(validate_web(doubled).has(ViolationKind::multi_edge));
  // a tripod plus a separate internal edge
  const Web loose({B, B, B, W, W, B}, 3, {{0, 3}, {1, 3}, {2, 3}, {4, 5}}, {{0}, {2}, {4}, {1, 3, 5}, {6}, {7}});
  CHECK(validate_web(loose).has(ViolationKind::detached_component));
}

TEST_CASE("canonicalize ignores internal names") {
  std::mt19937 rng(3);
  const Web a = tripod();
  const Web b({B, B, B, W}, 3, {{3, 2}, {0, 3}, {1, 3}}, {{2}, {4}, {1}, {3, 5, 0}});
  CHECK(canonicalize(a) == canonicalize(b));
  for (const Web& w : small_webs()) {
    CHECK(canonicalize(relabel(w, rng)) == canonicalize(w));
  }
}

TEST_CASE("canonicalize distinguishes mirror embeddings") {
  const Web mirrored({B, B, B, W}, 3, {{0, 3}, {1, 3}, {2, 3}}, {{0}, {2}, {4}, {1, 5, 3}});
  CHECK(canonicalize(tripod()) != canonicalize(mirrored));
}

TEST_CASE("canonicalize is deterministic on the worked example") {
  const auto t = T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}});
  CHECK(canonicalize(russell_web(t)) == canonicalize(russell_web(t)));
}

TEST_CASE("canonicalize rejects components away from the boundary") {
  const Web loose({B, B, B, W, W, B}, 3, {{0, 3}, {1, 3}, {2, 3}, {4, 5}}, {{0}, {2}, {4}, {1, 3, 5}, {6}, {7}});
  CHECK_THROWS_AS(canonicalize(loose), PreconditionError);
}

TEST_CASE("canonical equality agrees with an isomorphism search") {
  std::mt19937 rng(5);
  std::vector<Web> webs;
  for (const Web& w : small_webs()) {
    if (w.vertex_count() <= 12) {
      webs.push_back(w);
    }
  }
  webs.push_back(tripod());
  webs.push_back(Web({B, B, B, W}, 3, {{0, 3}, {1, 3}, {2, 3}}, {{0}, {2}, {4}, {1, 5, 3}}));
  REQUIRE(webs.size() > 10);
  for (std::size_t i = 0; i < webs.size(); ++i) {
    const Web copy = relabel(webs[i], rng);
    CHECK(oracle::isomorphic(webs[i], copy));
    for (std::size_t j = 0; j < webs.size(); ++j) {
      const bool same = canonicalize(webs[i]) == canonicalize(webs[j]);
      CHECK(same == oracle::isomorphic(webs[i], webs[j]));
      CHECK(same == oracle::isomorphic(copy, webs[j]));
    }
  }
}

TEST_CASE("expand_white on an all-black boundary changes nothing") {
  const auto e = expand_white(tripod());
  CHECK(e.contractible.empty());
  CHECK(same_web(e.web, tripod()));
  CHECK_THROWS_AS(expand_white(square_web()), PreconditionError);
}

TEST_CASE("expand_white on the worked example") {
  const Web w = russell_web(T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}}));
  const auto e = expand_white(w);
  CHECK(e.web.boundary_count() == 9);
  CHECK(e.web.boundary_colors() == std::vector<Color>(9, B));
  CHECK(e.contractible == std::vector<int>{1, 4});
  CHECK(validate_web(e.web).ok());
  CHECK(same_web(e.web, tymoczko_web(T({{1, 3, 4}, {2, 6, 7}, {5, 8, 9}}))));
  CHECK(same_web(contract_all(e), w));
}

TEST_CASE("expand then contract is the identity") {
  for (const Web& w : small_webs()) {
    const auto e = expand_white(w);
    CHECK(same_web(contract_all(e), w));
  }
}

TEST_CASE("contract_pair on a tripod") {
  const Web c = contract_pair(tripod(), 1);
  CHECK(c.boundary_count() == 2);
  CHECK(c.boundary_colors() == std::vector<Color>{W, B});
  CHECK(c.internal_count() == 0);
  CHECK(c.edge_count() == 1);
  CHECK(validate_web(c).ok());
  const auto again = expand_white(c);
  CHECK(same_web(again.web, tripod()));
  CHECK(same_web(contract_all(again), c));
}

TEST_CASE("contract_pair wraps around the boundary") {
  const Web c = contract_pair(tripod(), 3);
  CHECK(c.boundary_count() == 2);
  CHECK(validate_web(c).ok());
}

TEST_CASE("contract_pair needs a shared white neighbour") {
  const Web w = tymoczko_web(T({{1, 2}, {3, 4}, {5, 6}}));
  int failures = 0;
  for (int p = 1; p <= 6; ++p) {
    try {
      contract_pair(w, p);
    } catch (const PreconditionError&) {
      ++failures;
    }
  }
  CHECK(failures > 0);
  CHECK_THROWS_AS(contract_pair(contract_pair(tripod(), 1), 1), PreconditionError);
}

TEST_CASE("contracting the worked example's pairs") {
  const Web u = tymoczko_web(T({{1, 3, 4}, {2, 6, 7}, {5, 8, 9}}));
  const Web w = contract_all({u, {1, 4}});
  CHECK(w.boundary_colors() == std::vector<Color>{W, B, W, B, B, B, B});
  CHECK(validate_web(w).ok());
}

TEST_CASE("reflect_web") {
  CHECK(same_web(reflect_web(tripod()), tripod()));
  const Web w = russell_web(T({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}}));
  CHECK(same_web(reflect_web(reflect_web(w)), w));
  CHECK(same_web(reflect_web(w), russell_web(T({{1, 2, 5}, {3, 4, 7}, {5, 6, 7}}))));
}

TEST_CASE("reflect_web is a validity-preserving involution that reverses boundary colors") {
  for (int k = 1; k <= 3; ++k) {
    for (int h = 0; h < 3 * k; ++h) {
      for (const auto& t : enumerate_russell(k, h)) {
        const Web w = russell_web(t);
        const Web r = reflect_web(w);
        CHECK(validate_web(r).ok());
        CHECK(same_web(reflect_web(r), w));
        auto colors = w.boundary_colors();
        std::reverse(colors.begin(), colors.end());
        CHECK(r.boundary_colors() == colors);
      }
    }
  }
}
