#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "webweave/tableau.hpp"
#include "webweave/web.hpp"

namespace webweave {

using Rational = boost::rational<std::int64_t>;

/// Pairs (t, b) with t from the upper row, b from the lower row, t < b.
/// Sorted by t.
struct Pairing {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// Parenthesis matching of two strictly increasing rows: scanning values in
/// increasing order, each lower-row value closes the most recent unpaired
/// upper-row value. Throws PreconditionError when no complete pairing exists.
Pairing catalan_pairing(std::span<const int> top, std::span<const int> bottom);

/// Catalan bijection from standard (n,n) tableaux to noncrossing matchings.
/// The empty tableau gives the empty matching.
Matching web_of_2row(const RowStrictTableau& t);

/// An arc over boundary points on a line. `middle` is the endpoint that came
/// from the middle tableau row (the tripod end).
struct Arc {
  int left = 0;
  int right = 0;
  int middle = 0;

  int far_end() const noexcept { return middle == left ? right : left; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ArcDiagram {
  int points = 0;
  std::vector<Arc> arcs;
};

/// For each middle-row entry i (left to right) of a standard (k,k,k) tableau,
/// arcs {j1,i} and {i,j2} to its partners in the upper and lower pairings.
ArcDiagram m_diagram(const RowStrictTableau& u);

/// Two interleaving arcs: arcs[first] = (i,j), arcs[second] = (k,l) with
/// i < k < j < l. Drawn as semicircles over the line, they meet once at
/// abscissa x = (kl - ij) / ((k+l) - (i+j)).
struct Crossing {
  std::size_t first = 0;
  std::size_t second = 0;
  Rational x;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Every crossing, ordered by (first, second).
std::vector<Crossing> find_crossings(const ArcDiagram& d);

/// For each arc, indices into `crossings` ordered from its middle end toward
/// its far end. Throws Error if two crossings on one arc coincide.
std::vector<std::vector<std::size_t>> crossings_along_arcs(const ArcDiagram& d, const std::vector<Crossing>& crossings);

/// Tymoczko bijection for standard (k,k,k) tableaux: m-diagram, tripods at the
/// middle points, H-resolution of each crossing. Boundary is all black.
Web tymoczko_web(const RowStrictTableau& u);

/// Russell bijection: the Tymoczko web of the standardization, with the
/// boundary pair (j, j+1) contracted for every doubled value.
Web russell_web(const RowStrictTableau& t);

/// A finite domain of the bijections.
struct Family {
  enum class Kind { two_row, three_row };

  Kind kind = Kind::two_row;
  /// n for shape (n,n); k for shape (k,k,k).
  int size = 0;
  /// Three-row only. Empty means every repetition.
  std::optional<int> repetition = 0;

  static Family two_row(int n) { return {Kind::two_row, n, 0}; }
  static Family three_row(int k, std::optional<int> repetition = 0) { return {Kind::three_row, k, repetition}; }

  /// Members sorted by reading word (per repetition when all are included).
  std::vector<RowStrictTableau> tableaux() const;
  /// e.g. "shape 3,3,3 repetition all".
  std::string describe() const;
};

/// The inverse map by table lookup over an enumerated family. Immutable after
/// construction.
class InverseTable {
 public:
  explicit InverseTable(const Family& family);

  const Family& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return tableaux_.size(); }
  /// Throw NotFoundError when the web is not the image of a family member.
  const RowStrictTableau& lookup(const Matching& m) const;
  const RowStrictTableau& lookup(const Web& w) const;

 private:
  Family family_;
  std::vector<RowStrictTableau> tableaux_;
  std::map<std::vector<std::pair<int, int>>, std::size_t> matchings_;
  std::map<CanonicalWeb, std::size_t> webs_;
};

RowStrictTableau tableau_of_web(const Matching& m, const Family& family);
RowStrictTableau tableau_of_web(const Web& w, const Family& family);

}  // namespace webweave
