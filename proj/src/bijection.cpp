#include "webweave/bijection.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <string>

#include "webweave/errors.hpp"
#include "webweave/jdt.hpp"

namespace webweave {

// ---------------------------------------------------------------------------
// Catalan bijection

Pairing catalan_pairing(std::span<const int> top, std::span<const int> bottom) {
  if (top.size() != bottom.size()) {
    throw PreconditionError("rows to pair must have equal length");
  }
  for (auto row : {top, bottom}) {
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i] <= row[i - 1]) {
        throw PreconditionError("rows to pair must be strictly increasing");
      }
    }
  }
  // Merge the rows by value; true marks an upper-row value.
  std::vector<std::pair<int, bool>> merged;
  for (int t : top) {
    merged.emplace_back(t, true);
  }
  for (int b : bottom) {
    merged.emplace_back(b, false);
  }
  std::sort(merged.begin(), merged.end());
  Pairing result;
  std::vector<int> open;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const auto [value, upper] = merged[i];
    if (i > 0 && merged[i - 1].first == value) {
      throw PreconditionError("value " + std::to_string(value) + " appears in both rows");
    }
    if (upper) {
      open.push_back(value);
    } else if (open.empty()) {
      throw PreconditionError("lower-row value " + std::to_string(value) + " has no smaller unpaired partner");
    } else {
      result.pairs.emplace_back(open.back(), value);
      open.pop_back();
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

namespace {

void require_rectangle(const RowStrictTableau& t, int rows, const char* what) {
  const SkewShape& shape = t.shape();
  if (!shape.is_straight() || shape.outer().rows() != rows || !shape.outer().is_rectangle()) {
    throw ShapeError(std::string(what) + " needs a straight " + std::to_string(rows) + "-row rectangle");
  }
  if (!is_standard(t)) {
    throw PreconditionError(std::string(what) + " needs a standard tableau");
  }
}

}  // namespace

Matching web_of_2row(const RowStrictTableau& t) {
  if (t.empty()) {
    return Matching{};
  }
  require_rectangle(t, 2, "web_of_2row");
  const auto rows = t.rows();
  return Matching(static_cast<int>(rows[0].size()), catalan_pairing(rows[0], rows[1]).pairs);
}

// ---------------------------------------------------------------------------
// m-diagrams and crossings

ArcDiagram m_diagram(const RowStrictTableau& u) {
  require_rectangle(u, 3, "m_diagram");
  const auto rows = u.rows();
  const Pairing upper = catalan_pairing(rows[0], rows[1]);
  const Pairing lower = catalan_pairing(rows[1], rows[2]);
  ArcDiagram d;
  d.points = u.size();
  for (int i : rows[1]) {
    const auto up = std::find_if(upper.pairs.begin(), upper.pairs.end(), [i](const auto& p) { return p.second == i; });
    const auto down = std::find_if(lower.pairs.begin(), lower.pairs.end(), [i](const auto& p) { return p.first == i; });
    d.arcs.push_back({up->first, i, i});
    d.arcs.push_back({i, down->second, i});
  }
  return d;
}

std::vector<Crossing> find_crossings(const ArcDiagram& d) {
  std::vector<Crossing> result;
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    for (std::size_t b = 0; b < d.arcs.size(); ++b) {
      const Arc& outer = d.arcs[a];
      const Arc& inner = d.arcs[b];
      const std::int64_t i = outer.left;
      const std::int64_t j = outer.right;
      const std::int64_t k = inner.left;
      const std::int64_t l = inner.right;
      if (i < k && k < j && j < l) {
        result.push_back({a, b, Rational(k * l - i * j, (k + l) - (i + j))});
      }
    }
  }
  std::sort(result.begin(), result.end(),
            [](const Crossing& x, const Crossing& y) { return std::tie(x.first, x.second) < std::tie(y.first, y.second); });
  return result;
}

std::vector<std::vector<std::size_t>> crossings_along_arcs(const ArcDiagram& d,
                                                           const std::vector<Crossing>& crossings) {
  std::vector<std::vector<std::size_t>> along(d.arcs.size());
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    along[crossings[c].first].push_back(c);
    along[crossings[c].second].push_back(c);
  }
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    auto& list = along[a];
    // Abscissa is monotone along a semicircle.
    const bool rightward = d.arcs[a].middle == d.arcs[a].left;
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
      return rightward ? crossings[x].x < crossings[y].x : crossings[y].x < crossings[x].x;
    });
    for (std::size_t n = 1; n < list.size(); ++n) {
      if (crossings[list[n]].x == crossings[list[n - 1]].x) {
        throw Error("three arcs meet at one point; crossing order is ambiguous");
      }
    }
  }
  return along;
}

// ---------------------------------------------------------------------------
// Tymoczko and Russell bijections

namespace {

// Half-edge slots are filled as edges are created, then assembled into
// rotations.
class WebAssembly {
 public:
  int add_vertex(Color c) {
    colors_.push_back(c);
    return static_cast<int>(colors_.size()) - 1;
  }

  // Joins the two endpoints and records the half-edge at each in its slot.
  void connect(int a, int& slot_a, int b, int& slot_b) {
    const int e = static_cast<int>(edges_.size());
    edges_.emplace_back(a, b);
    slot_a = 2 * e;
    slot_b = 2 * e + 1;
  }

  Web finish(int boundary_count, std::vector<std::vector<int>> rotation) {
    return Web(std::move(colors_), boundary_count, std::move(edges_), std::move(rotation));
  }

 private:
  std::vector<Color> colors_;
  std::vector<std::pair<int, int>> edges_;
};

struct Tripod {
  int vertex = -1;
  int left_arm = -1;
  int leg = -1;
  int right_arm = -1;
};

// The H replacing a crossing: black X joined to the two germs toward the
// strands' tripod ends, white Y joined to the two germs toward the boundary.
struct HResolution {
  int x = -1;
  int y = -1;
  std::array<int, 2> x_germ{-1, -1};  // indexed by strand: 0 = first arc, 1 = second
  std::array<int, 2> y_germ{-1, -1};
  int x_bar = -1;
  int y_bar = -1;
};

}  // namespace

Web tymoczko_web(const RowStrictTableau& u) {
  const ArcDiagram d = m_diagram(u);
  const auto crossings = find_crossings(d);
  const auto along = crossings_along_arcs(d, crossings);

  WebAssembly web;
  const int points = d.points;
  std::vector<int> boundary_slot(static_cast<std::size_t>(points), -1);
  for (int p = 0; p < points; ++p) {
    web.add_vertex(Color::black);
  }
  // Arcs come in (left arm, right arm) pairs per middle point.
  std::vector<Tripod> tripods(d.arcs.size() / 2);
  for (auto& t : tripods) {
    t.vertex = web.add_vertex(Color::white);
  }
  std::vector<HResolution> hs(crossings.size());
  for (auto& h : hs) {
    h.x = web.add_vertex(Color::black);
    h.y = web.add_vertex(Color::white);
    web.connect(h.x, h.x_bar, h.y, h.y_bar);
  }

  for (std::size_t t = 0; t < tripods.size(); ++t) {
    Tripod& tripod = tripods[t];
    const int middle = d.arcs[2 * t].middle;
    web.connect(tripod.vertex, tripod.leg, middle - 1, boundary_slot[static_cast<std::size_t>(middle - 1)]);
    for (std::size_t a : {2 * t, 2 * t + 1}) {
      const Arc& arc = d.arcs[a];
      int vertex = tripod.vertex;
      int* slot = arc.far_end() < arc.middle ? &tripod.left_arm : &tripod.right_arm;
      for (std::size_t c : along[a]) {
        const std::size_t strand = crossings[c].first == a ? 0 : 1;
        HResolution& h = hs[c];
        web.connect(vertex, *slot, h.x, h.x_germ[strand]);
        vertex = h.y;
        slot = &h.y_germ[strand];
      }
      const int far = arc.far_end() - 1;
      web.connect(vertex, *slot, far, boundary_slot[static_cast<std::size_t>(far)]);
    }
  }

  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(points + tripods.size() + 2 * hs.size()));
  for (int p = 0; p < points; ++p) {
    rotation[static_cast<std::size_t>(p)] = {boundary_slot[static_cast<std::size_t>(p)]};
  }
  for (const auto& t : tripods) {
    rotation[static_cast<std::size_t>(t.vertex)] = {t.left_arm, t.leg, t.right_arm};
  }
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const Arc& first = d.arcs[crossings[c].first];
    const Arc& second = d.arcs[crossings[c].second];
    // Counterclockwise around the crossing point: first toward its right end,
    // second toward its right end, first toward its left end, second toward
    // its left end.
    const int first_white = first.middle == first.right ? 0 : 2;
    const int second_white = second.middle == second.right ? 1 : 3;
    const HResolution& h = hs[c];
    auto germ_at = [&](int position, bool white_side) {
      const std::size_t strand = position % 2 == 0 ? 0 : 1;
      return white_side ? h.x_germ[strand] : h.y_germ[strand];
    };
    // X's germs are cyclically adjacent; `lead` is the one whose successor is the other.
    const int lead = (first_white + 1) % 4 == second_white ? first_white : second_white;
    rotation[static_cast<std::size_t>(h.x)] = {germ_at(lead, true), germ_at((lead + 1) % 4, true), h.x_bar};
    rotation[static_cast<std::size_t>(h.y)] = {germ_at((lead + 2) % 4, false), germ_at((lead + 3) % 4, false), h.y_bar};
  }
  return web.finish(points, std::move(rotation));
}

Web russell_web(const RowStrictTableau& t) {
  russell_repetition(t);
  const RowStrictTableau u = standardize(t);
  Web w = tymoczko_web(u);

  // Doubled values of t sit where u holds j and j+1.
  std::vector<int> positions;
  std::map<int, std::vector<int>> standardized;
  for (const Cell cell : t.shape().cells()) {
    standardized[t.at(cell)].push_back(u.at(cell));
  }
  for (const auto& [value, images] : standardized) {
    if (images.size() == 2) {
      positions.push_back(std::min(images[0], images[1]));
    }
  }
  std::sort(positions.begin(), positions.end());
  int removed = 0;
  for (int j : positions) {
    w = contract_pair(w, j - removed);
    ++removed;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Families and the inverse map

std::vector<RowStrictTableau> Family::tableaux() const {
  if (kind == Kind::two_row) {
    return enumerate_standard(Shape::rectangle(2, size));
  }
  if (repetition) {
    return enumerate_russell(size, *repetition);
  }
  std::vector<RowStrictTableau> all;
  for (int h = 0; h <= 3 * size - 1; ++h) {
    auto part = enumerate_russell(size, h);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

std::string Family::describe() const {
  const int rows = kind == Kind::two_row ? 2 : 3;
  std::string text = "shape ";
  for (int r = 0; r < rows; ++r) {
    text += (r ? "," : "") + std::to_string(size);
  }
  if (kind == Kind::three_row) {
    text += " repetition " + (repetition ? std::to_string(*repetition) : std::string("all"));
  }
  return text;
}

InverseTable::InverseTable(const Family& family) : family_(family), tableaux_(family.tableaux()) {
  for (std::size_t i = 0; i < tableaux_.size(); ++i) {
    if (family_.kind == Family::Kind::two_row) {
      matchings_.emplace(web_of_2row(tableaux_[i]).pairs(), i);
    } else {
      webs_.emplace(canonicalize(russell_web(tableaux_[i])), i);
    }
  }
}

const RowStrictTableau& InverseTable::lookup(const Matching& m) const {
  const auto it = matchings_.find(m.pairs());
  if (it == matchings_.end()) {
    throw NotFoundError("matching is not in the image of " + family_.describe());
  }
  return tableaux_[it->second];
}

const RowStrictTableau& InverseTable::lookup(const Web& w) const {
  const auto it = webs_.find(canonicalize(w));
  if (it == webs_.end()) {
    throw NotFoundError("web is not in the image of " + family_.describe());
  }
  return tableaux_[it->second];
}

RowStrictTableau tableau_of_web(const Matching& m, const Family& family) {
  return InverseTable(family).lookup(m);
}

RowStrictTableau tableau_of_web(const Web& w, const Family& family) {
  return InverseTable(family).lookup(w);
}

}  // namespace webweave
