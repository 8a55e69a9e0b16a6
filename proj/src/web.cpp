#include "webweave/web.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "webweave/errors.hpp"

namespace webweave {

// ---------------------------------------------------------------------------
// Matching

Matching::Matching(int n, std::vector<std::pair<int, int>> pairs) : n_(n) {
  if (n < 0) {
    throw PreconditionError("matching size must be nonnegative");
  }
  if (static_cast<int>(pairs.size()) != n) {
    throw PreconditionError("a matching on 2n points needs exactly n pairs");
  }
  std::vector<int> seen(static_cast<std::size_t>(2 * n) + 1, 0);
  for (auto& [i, j] : pairs) {
    if (i > j) {
      std::swap(i, j);
    }
    if (i < 1 || j > 2 * n || i == j) {
      throw PreconditionError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") is out of range");
    }
    if (seen[static_cast<std::size_t>(i)]++ || seen[static_cast<std::size_t>(j)]++) {
      throw PreconditionError("point used twice in matching");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      if (i < k && k < j && j < l) {
        throw PreconditionError("pairs (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                                std::to_string(k) + "," + std::to_string(l) + ") cross");
      }
    }
  }
  pairs_ = std::move(pairs);
}

int Matching::partner(int point) const {
  for (const auto& [i, j] : pairs_) {
    if (i == point) {
      return j;
    }
    if (j == point) {
      return i;
    }
  }
  throw PreconditionError("point " + std::to_string(point) + " is not in the matching");
}

Matching reflect_matching(const Matching& m) {
  const int top = 2 * m.n() + 1;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m.pairs().size());
  for (const auto& [i, j] : m.pairs()) {
    pairs.emplace_back(top - j, top - i);
  }
  return Matching(m.n(), std::move(pairs));
}

// ---------------------------------------------------------------------------
// Web

Web::Web(std::vector<Color> colors, int boundary_count, std::vector<std::pair<int, int>> edges,
         std::vector<std::vector<int>> rotation)
    : colors_(std::move(colors)), boundary_count_(boundary_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  const int v = static_cast<int>(colors_.size());
  if (boundary_count_ < 0 || boundary_count_ > v) {
    throw StructuralError("boundary count out of range");
  }
  if (static_cast<int>(rotation_.size()) != v) {
    throw StructuralError("one rotation list per vertex is required");
  }
  for (const auto& [a, b] : edges_) {
    if (a < 0 || a >= v || b < 0 || b >= v) {
      throw StructuralError("edge endpoint out of range");
    }
  }
  std::vector<int> seen(2 * edges_.size(), 0);
  for (int u = 0; u < v; ++u) {
    for (int h : rotation_[static_cast<std::size_t>(u)]) {
      if (h < 0 || h >= static_cast<int>(seen.size())) {
        throw StructuralError("half-edge id out of range at vertex " + std::to_string(u));
      }
      if (seen[static_cast<std::size_t>(h)]++) {
        throw StructuralError("half-edge " + std::to_string(h) + " listed twice");
      }
      if (vertex_of(h) != u) {
        throw StructuralError("half-edge " + std::to_string(h) + " listed at the wrong vertex");
      }
    }
  }
  for (std::size_t h = 0; h < seen.size(); ++h) {
    if (!seen[h]) {
      throw StructuralError("half-edge " + std::to_string(h) + " missing from every rotation");
    }
  }
}

std::vector<Color> Web::boundary_colors() const {
  return {colors_.begin(), colors_.begin() + boundary_count_};
}

int Web::vertex_of(int half_edge) const {
  const auto& e = edges_.at(static_cast<std::size_t>(half_edge / 2));
  return (half_edge & 1) ? e.second : e.first;
}

// ---------------------------------------------------------------------------
// Validation

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::boundary_degree:
      return "boundary_degree";
    case ViolationKind::internal_degree:
      return "internal_degree";
    case ViolationKind::not_bipartite:
      return "not_bipartite";
    case ViolationKind::multi_edge:
      return "multi_edge";
    case ViolationKind::detached_component:
      return "detached_component";
    case ViolationKind::non_planar:
      return "non_planar";
    case ViolationKind::small_face:
      return "small_face";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

ValidationReport validate_web(const Web& w) {
  ValidationReport report;
  auto add = [&report](ViolationKind kind, std::string detail) { report.violations.push_back({kind, std::move(detail)}); };
  auto name = [&w](int v) {
    return w.is_boundary(v) ? "boundary " + std::to_string(v + 1) : "internal " + std::to_string(v - w.boundary_count());
  };

  const int vertices = w.vertex_count();
  const int j = w.boundary_count();
  for (int v = 0; v < vertices; ++v) {
    if (w.is_boundary(v) && w.degree(v) != 1) {
      add(ViolationKind::boundary_degree, name(v) + " has degree " + std::to_string(w.degree(v)));
    }
    if (!w.is_boundary(v) && w.degree(v) != 3) {
      add(ViolationKind::internal_degree, name(v) + " has degree " + std::to_string(w.degree(v)));
    }
  }
  std::set<std::pair<int, int>> seen_edges;
  for (const auto& [a, b] : w.edges()) {
    if (w.color(a) == w.color(b)) {
      add(ViolationKind::not_bipartite, "edge " + name(a) + " - " + name(b) + " joins equal colors");
    }
    if (!seen_edges.insert(std::minmax(a, b)).second) {
      add(ViolationKind::multi_edge, "repeated edge " + name(a) + " - " + name(b));
    }
  }
  if (vertices == 0) {
    return report;
  }

  // Attach the boundary cycle: arc i joins boundary i to boundary i+1 (mod j),
  // with half-edge base+2i at i and base+2i+1 at i+1. Around a boundary
  // vertex the counterclockwise order is (arc to next, interior, arc to previous).
  const int base = 2 * w.edge_count();
  const int total_half_edges = base + 2 * j;
  std::vector<int> owner(static_cast<std::size_t>(total_half_edges));
  for (int h = 0; h < base; ++h) {
    owner[static_cast<std::size_t>(h)] = w.vertex_of(h);
  }
  for (int i = 0; i < j; ++i) {
    owner[static_cast<std::size_t>(base + 2 * i)] = i;
    owner[static_cast<std::size_t>(base + 2 * i + 1)] = (i + 1) % j;
  }
  std::vector<std::vector<int>> rotation = w.rotations();
  for (int i = 0; i < j; ++i) {
    auto& rot = rotation[static_cast<std::size_t>(i)];
    rot.insert(rot.begin(), base + 2 * i);
    rot.push_back(base + 2 * ((i + j - 1) % j) + 1);
  }
  std::vector<int> position(static_cast<std::size_t>(total_half_edges));
  for (const auto& rot : rotation) {
    for (std::size_t k = 0; k < rot.size(); ++k) {
      position[static_cast<std::size_t>(rot[k])] = static_cast<int>(k);
    }
  }
  // Face successor: step across the edge, then turn to the previous half-edge
  // in the rotation at the far end.
  auto face_next = [&](int h) {
    const int m = h ^ 1;
    const auto& rot = rotation[static_cast<std::size_t>(owner[static_cast<std::size_t>(m)])];
    const int k = position[static_cast<std::size_t>(m)];
    return rot[static_cast<std::size_t>((k + static_cast<int>(rot.size()) - 1) % static_cast<int>(rot.size()))];
  };

  DisjointSets components(vertices);
  for (const auto& [a, b] : w.edges()) {
    components.unite(a, b);
  }
  for (int i = 1; i < j; ++i) {
    components.unite(0, i);
  }
  std::map<int, int> euler;  // component root -> V - E + F
  for (int v = 0; v < vertices; ++v) {
    euler[components.find(v)] += 1;
    if (rotation[static_cast<std::size_t>(v)].empty()) {
      euler[components.find(v)] += 1;  // an isolated vertex bounds one face
    }
  }
  for (int h = 0; h < total_half_edges; h += 2) {
    euler[components.find(owner[static_cast<std::size_t>(h)])] -= 1;
  }

  std::vector<char> visited(static_cast<std::size_t>(total_half_edges), 0);
  for (int start = 0; start < total_half_edges; ++start) {
    if (visited[static_cast<std::size_t>(start)]) {
      continue;
    }
    int length = 0;
    bool touches_boundary = false;
    for (int h = start; !visited[static_cast<std::size_t>(h)]; h = face_next(h)) {
      visited[static_cast<std::size_t>(h)] = 1;
      ++length;
      touches_boundary = touches_boundary || h >= base;
    }
    euler[components.find(owner[static_cast<std::size_t>(start)])] += 1;
    if (!touches_boundary && length < 6) {
      add(ViolationKind::small_face, "internal face of size " + std::to_string(length) + " < 6");
    }
  }

  const int boundary_root = j > 0 ? components.find(0) : -1;
  for (const auto& [root, chi] : euler) {
    if (root != boundary_root) {
      add(ViolationKind::detached_component, "a component does not reach the boundary");
    }
    if (chi != 2) {
      add(ViolationKind::non_planar, "component has Euler characteristic " + std::to_string(chi));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Canonical form

CanonicalWeb canonicalize(const Web& w) {
  const int vertices = w.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(vertices), -1);
  std::vector<int> entry(static_cast<std::size_t>(vertices), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(vertices));
  for (int b = 0; b < w.boundary_count(); ++b) {
    label[static_cast<std::size_t>(b)] = b;
    if (w.degree(b) > 0) {
      entry[static_cast<std::size_t>(b)] = w.rotation(b).front();
    }
    order.push_back(b);
  }

  // Rotation of v read from its entry half-edge.
  auto rotated = [&](int v) {
    std::vector<int> rot = w.rotation(v);
    const auto start = std::find(rot.begin(), rot.end(), entry[static_cast<std::size_t>(v)]);
    if (start != rot.end()) {
      std::rotate(rot.begin(), start, rot.end());
    }
    return rot;
  };

  for (std::size_t next = 0; next < order.size(); ++next) {
    const int v = order[next];
    for (int h : rotated(v)) {
      const int u = w.neighbor(h);
      if (label[static_cast<std::size_t>(u)] < 0) {
        label[static_cast<std::size_t>(u)] = static_cast<int>(order.size());
        entry[static_cast<std::size_t>(u)] = Web::mate(h);
        order.push_back(u);
      }
    }
  }
  if (static_cast<int>(order.size()) != vertices) {
    throw PreconditionError("web has a component not connected to the boundary");
  }

  std::vector<int> slot(2 * static_cast<std::size_t>(w.edge_count()), 0);
  std::vector<std::vector<int>> rotations(static_cast<std::size_t>(vertices));
  for (int v : order) {
    auto rot = rotated(v);
    for (std::size_t k = 0; k < rot.size(); ++k) {
      slot[static_cast<std::size_t>(rot[k])] = static_cast<int>(k);
    }
    rotations[static_cast<std::size_t>(v)] = std::move(rot);
  }

  std::string code = "j" + std::to_string(w.boundary_count());
  for (int v : order) {
    code += w.color(v) == Color::black ? "|B" : "|W";
    for (int h : rotations[static_cast<std::size_t>(v)]) {
      code += ' ';
      code += std::to_string(label[static_cast<std::size_t>(w.neighbor(h))]);
      code += '.';
      code += std::to_string(slot[static_cast<std::size_t>(Web::mate(h))]);
    }
  }
  return CanonicalWeb{std::move(code)};
}

// ---------------------------------------------------------------------------
// Expansion, contraction, reflection

namespace {

// A web under construction; vertex ids are arbitrary until finish().
struct Draft {
  std::vector<Color> colors;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;

  explicit Draft(const Web& w) : colors(w.colors()), edges(w.edges()), rotation(w.rotations()) {}

  int add_vertex(Color c) {
    colors.push_back(c);
    rotation.emplace_back();
    return static_cast<int>(colors.size()) - 1;
  }
  // Returns the half-edge at `a`; its mate is at `b`.
  int add_edge(int a, int b) {
    edges.emplace_back(a, b);
    return 2 * (static_cast<int>(edges.size()) - 1);
  }

  // `order` lists the surviving vertices, boundary first. Edges in `removed`
  // are dropped and their half-edges leave every rotation.
  Web finish(const std::vector<int>& order, int boundary_count, const std::set<int>& removed = {}) const {
    std::vector<int> new_vertex(colors.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      new_vertex[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    std::vector<int> new_edge(edges.size(), -1);
    std::vector<std::pair<int, int>> out_edges;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (removed.count(static_cast<int>(e))) {
        continue;
      }
      new_edge[e] = static_cast<int>(out_edges.size());
      out_edges.emplace_back(new_vertex[static_cast<std::size_t>(edges[e].first)],
                             new_vertex[static_cast<std::size_t>(edges[e].second)]);
    }
    std::vector<Color> out_colors;
    std::vector<std::vector<int>> out_rotation;
    for (int v : order) {
      out_colors.push_back(colors[static_cast<std::size_t>(v)]);
      std::vector<int> rot;
      for (int h : rotation[static_cast<std::size_t>(v)]) {
        const int e = new_edge[static_cast<std::size_t>(h / 2)];
        if (e >= 0) {
          rot.push_back(2 * e + (h & 1));
        }
      }
      out_rotation.push_back(std::move(rot));
    }
    return Web(std::move(out_colors), boundary_count, std::move(out_edges), std::move(out_rotation));
  }
};

void require_valid(const Web& w, const char* what) {
  const auto report = validate_web(w);
  if (!report.ok()) {
    throw PreconditionError(std::string(what) + " requires a valid web: " + to_string(report.violations.front().kind) +
                            " (" + report.violations.front().detail + ")");
  }
}

}  // namespace

ExpandedWeb expand_white(const Web& w) {
  require_valid(w, "expand_white");
  Draft draft(w);
  std::vector<int> boundary;
  std::vector<int> contractible;
  for (int b = 0; b < w.boundary_count(); ++b) {
    if (w.color(b) == Color::black) {
      boundary.push_back(b);
      continue;
    }
    // Around the now-internal white vertex the counterclockwise order is
    // (old edge, left new boundary vertex, right new boundary vertex).
    const int left = draft.add_vertex(Color::black);
    const int right = draft.add_vertex(Color::black);
    const int to_left = draft.add_edge(left, b);
    const int to_right = draft.add_edge(right, b);
    draft.rotation[static_cast<std::size_t>(left)] = {to_left};
    draft.rotation[static_cast<std::size_t>(right)] = {to_right};
    auto& rot = draft.rotation[static_cast<std::size_t>(b)];
    rot.push_back(Web::mate(to_left));
    rot.push_back(Web::mate(to_right));
    contractible.push_back(static_cast<int>(boundary.size()) + 1);
    boundary.push_back(left);
    boundary.push_back(right);
  }
  std::vector<int> order = boundary;
  for (int v = 0; v < w.vertex_count(); ++v) {
    if (w.is_boundary(v) && w.color(v) == Color::white) {
      order.push_back(v);
    }
  }
  for (int v = w.boundary_count(); v < w.vertex_count(); ++v) {
    order.push_back(v);
  }
  return ExpandedWeb{draft.finish(order, static_cast<int>(boundary.size())), std::move(contractible)};
}

Web contract_pair(const Web& w, int p) {
  const int j = w.boundary_count();
  if (j < 2 || p < 1 || p > j) {
    throw PreconditionError("contraction position " + std::to_string(p) + " out of range");
  }
  const int a = p - 1;
  const int b = p % j;
  for (int v : {a, b}) {
    if (w.color(v) != Color::black || w.degree(v) != 1) {
      throw PreconditionError("contraction needs two black boundary vertices of degree 1");
    }
  }
  const int ha = w.rotation(a).front();
  const int hb = w.rotation(b).front();
  const int white = w.neighbor(ha);
  if (white != w.neighbor(hb) || w.is_boundary(white) || w.color(white) != Color::white || w.degree(white) != 3) {
    throw PreconditionError("boundary vertices " + std::to_string(p) + " and " + std::to_string(b + 1) +
                            " have no common white neighbour");
  }
  const auto& rot = w.rotation(white);
  const auto k = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), Web::mate(ha)) - rot.begin());
  if (rot[(k + 1) % 3] != Web::mate(hb)) {
    throw PreconditionError("boundary vertices " + std::to_string(p) + " and " + std::to_string(b + 1) +
                            " are not consecutive around their white neighbour");
  }

  std::vector<int> order;
  for (int q = 0; q < j; ++q) {
    if (q == a) {
      order.push_back(white);
    } else if (q != b) {
      order.push_back(q);
    }
  }
  for (int v = j; v < w.vertex_count(); ++v) {
    if (v != white) {
      order.push_back(v);
    }
  }
  return Draft(w).finish(order, j - 1, {ha / 2, hb / 2});
}

Web contract_all(const ExpandedWeb& e) {
  std::vector<int> positions = e.contractible;
  std::sort(positions.rbegin(), positions.rend());
  Web result = e.web;
  for (int p : positions) {
    result = contract_pair(result, p);
  }
  return result;
}

Web reflect_web(const Web& w) {
  const ExpandedWeb expanded = expand_white(w);
  const Web& e = expanded.web;
  const int m = e.boundary_count();

  Draft draft(e);
  for (auto& rot : draft.rotation) {
    std::reverse(rot.begin(), rot.end());
  }
  std::vector<int> order;
  for (int b = m - 1; b >= 0; --b) {
    order.push_back(b);
  }
  for (int v = m; v < e.vertex_count(); ++v) {
    order.push_back(v);
  }
  ExpandedWeb mirrored{draft.finish(order, m), {}};
  for (int p : expanded.contractible) {
    mirrored.contractible.push_back(m - p);
  }
  return contract_all(mirrored);
}

}  // namespace webweave
