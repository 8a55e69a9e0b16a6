#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace webweave {

enum class Color : std::uint8_t { black, white };

inline Color opposite(Color c) noexcept { return c == Color::black ? Color::white : Color::black; }

/// An sl2 web: a noncrossing perfect matching of boundary points 1..2n.
class Matching {
 public:
  Matching() = default;
  /// Throws PreconditionError unless `pairs` is a noncrossing perfect
  /// matching of {1..2n}. Pairs are stored as (i<j), sorted by i.
  Matching(int n, std::vector<std::pair<int, int>> pairs);

  int n() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
  int partner(int point) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

/// Pairs (i,j) map to (2n+1-i, 2n+1-j).
Matching reflect_matching(const Matching& m);

/// An sl3 web stored as a combinatorial map.
///
/// Vertices 0..boundary_count()-1 are the boundary vertices in label order
/// (label = index + 1, increasing counterclockwise); the rest are internal.
/// Edge e owns half-edges 2e (at its first endpoint) and 2e+1 (at its second),
/// so mate(h) = h ^ 1. rotation(v) lists v's half-edges counterclockwise.
class Web {
 public:
  Web() = default;
  /// Throws StructuralError if an edge endpoint is out of range or the
  /// rotations do not list every half-edge exactly once at its own vertex.
  Web(std::vector<Color> colors, int boundary_count, std::vector<std::pair<int, int>> edges,
      std::vector<std::vector<int>> rotation);

  int vertex_count() const noexcept { return static_cast<int>(colors_.size()); }
  int boundary_count() const noexcept { return boundary_count_; }
  int internal_count() const noexcept { return vertex_count() - boundary_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  bool is_boundary(int v) const noexcept { return v < boundary_count_; }

  Color color(int v) const { return colors_.at(static_cast<std::size_t>(v)); }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  std::vector<Color> boundary_colors() const;
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& rotation(int v) const { return rotation_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<int>>& rotations() const noexcept { return rotation_; }
  int degree(int v) const { return static_cast<int>(rotation(v).size()); }

  static int mate(int half_edge) noexcept { return half_edge ^ 1; }
  int vertex_of(int half_edge) const;
  /// Vertex at the far end of `half_edge`.
  int neighbor(int half_edge) const { return vertex_of(mate(half_edge)); }

  friend bool operator==(const Web&, const Web&) = default;

 private:
  std::vector<Color> colors_;
  int boundary_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> rotation_;
};

enum class ViolationKind {
  boundary_degree,
  internal_degree,
  not_bipartite,
  multi_edge,
  detached_component,
  non_planar,
  small_face,
};

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const noexcept;
};

/// Checks degrees, bipartite coloring, simplicity, planarity of the rotation
/// system with the boundary cycle attached (Euler characteristic per
/// component), and that every internal face has at least 6 sides. Faces that
/// touch the boundary cycle are exempt.
ValidationReport validate_web(const Web& w);

/// Encoding that is equal for two webs exactly when they are the same planar
/// map with the same labeled boundary. Built by breadth-first search from the
/// boundary vertices in label order, reading each rotation from the half-edge
/// the vertex was discovered through.
struct CanonicalWeb {
  std::string code;

  friend auto operator<=>(const CanonicalWeb&, const CanonicalWeb&) = default;
};

/// Throws PreconditionError if some vertex is not connected to the boundary.
CanonicalWeb canonicalize(const Web& w);

inline bool same_web(const Web& a, const Web& b) { return canonicalize(a) == canonicalize(b); }

/// An all-black-boundary web together with the positions p whose boundary
/// pair (p, p+1) came from expanding a white boundary vertex.
struct ExpandedWeb {
  Web web;
  std::vector<int> contractible;
};

/// Replaces every white boundary vertex by two black boundary vertices joined
/// to it; the white vertex becomes internal. Throws PreconditionError on an
/// invalid web.
ExpandedWeb expand_white(const Web& w);

/// Deletes black boundary vertices p and p+1 (cyclically, 1-indexed) and puts
/// their common white neighbour on the boundary in their place. Throws
/// PreconditionError when they have no common white neighbour.
Web contract_pair(const Web& w, int p);

/// Contracts every recorded pair of an expansion.
Web contract_all(const ExpandedWeb& e);

/// Mirror image across the diameter through the midpoint of the boundary arc
/// from the last vertex to the first: expand white boundary vertices, relabel
/// i -> m+1-i, reverse every rotation, and contract the mirrored pairs.
Web reflect_web(const Web& w);

}  // namespace webweave
