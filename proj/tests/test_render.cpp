#include <doctest.h>

#include <regex>
#include <string>
#include <vector>

#include "web_fixtures.hpp"
#include "webweave/errors.hpp"
#include "webweave/render.hpp"
#include "xml_check.hpp"

using namespace webweave;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

// Colors of the boundary dots, in document order.
std::vector<std::string> boundary_dot_colors(const std::string& svg) {
  static const std::regex dot(R"re(class="boundary-vertex (black|white)")re");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), dot); it != std::sregex_iterator(); ++it) {
    out.push_back((*it)[1]);
  }
  return out;
}

}  // namespace

TEST_CASE("tripod rendering") {
  const std::string svg = render_web_svg(testing_support::tripod());
  CHECK(testing_support::well_formed_xml(svg));
  CHECK(boundary_dot_colors(svg) == std::vector<std::string>{"black", "black", "black"});
  CHECK(count(svg, "class=\"internal-vertex white\"") == 1);
  CHECK(count(svg, "class=\"internal-vertex black\"") == 0);
  for (const char* label : {">1</text>", ">2</text>", ">3</text>"}) {
    CHECK(count(svg, label) == 1);
  }
  CHECK(count(svg, "class=\"disk\"") == 1);
}

TEST_CASE("worked example rendering") {
  const Web w = russell_web(RowStrictTableau::from_rows({{1, 2, 3}, {1, 4, 5}, {3, 6, 7}}));
  const std::string svg = render_web_svg(w);
  CHECK(testing_support::well_formed_xml(svg));
  CHECK(boundary_dot_colors(svg) ==
        std::vector<std::string>{"white", "black", "white", "black", "black", "black", "black"});
  CHECK(count(svg, "class=\"edge\"") == w.edge_count());
  CHECK(render_web_svg(w) == svg);
}

TEST_CASE("matching and m-diagram rendering") {
  const std::string chords = render_matching_svg(Matching(2, {{1, 4}, {2, 3}}));
  CHECK(testing_support::well_formed_xml(chords));
  CHECK(count(chords, "class=\"edge\"") == 2);
  CHECK(count(chords, "class=\"boundary-vertex") == 4);
  const auto d = m_diagram(RowStrictTableau::from_rows({{1, 3, 4}, {2, 6, 7}, {5, 8, 9}}));
  const std::string arcs = render_mdiagram_svg(d);
  CHECK(testing_support::well_formed_xml(arcs));
  CHECK(count(arcs, "class=\"arc\"") == 6);
  CHECK(count(arcs, "class=\"crossing\"") == 3);
  CHECK(render_mdiagram_svg(d) == arcs);
}

TEST_CASE("invalid webs are not laid out") {
  CHECK_THROWS_AS(render_web_svg(testing_support::square_web()), PreconditionError);
}

TEST_CASE("the XML check itself rejects broken documents") {
  CHECK_FALSE(testing_support::well_formed_xml("<svg><g></svg>"));
  CHECK_FALSE(testing_support::well_formed_xml("<svg a=\"1></svg>"));
  CHECK_FALSE(testing_support::well_formed_xml("<svg></svg><svg/>"));
  CHECK(testing_support::well_formed_xml("<?xml version=\"1.0\"?>\n<svg><g a='x'/><text>1 &amp; 2</text></svg>\n"));
}
