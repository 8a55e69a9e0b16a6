#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "webweave/tableau.hpp"

namespace webweave {

/// Entries read down each column, rightmost column first.
Word reading_word(const RowStrictTableau& t);

/// Cells a jeu de taquin slide may start from: the removable corners of the
/// (normalized) inner shape. Each shares its right or bottom edge with a box.
std::vector<Cell> slide_targets(const SkewShape& shape);

/// One jeu de taquin slide into the empty cell `target`. The hole moves to the
/// smaller of its right and lower neighbours; on a tie the right neighbour
/// moves, which keeps rows strict. Throws PreconditionError if `target` is not
/// in slide_targets(t.shape()).
RowStrictTableau jdt_slide(const RowStrictTableau& t, Cell target);

/// Picks the index of the next slide target among the candidates.
using SlideOrder = std::function<std::size_t(const std::vector<Cell>& targets)>;

/// Slides until the shape is straight, always taking the lexicographically
/// last target in (row, column).
RowStrictTableau rectify(const RowStrictTableau& t);
RowStrictTableau rectify(const RowStrictTableau& t, const SlideOrder& order);

/// Removes the boxes holding 1 (the top of the first column), decrements the
/// rest, and slides into the vacated cells from the bottom one up.
/// Throws PreconditionError on an empty or skew tableau.
RowStrictTableau delta(const RowStrictTableau& t);

/// Evacuation: the boxes dropped by the i-th application of delta receive
/// n+1-i, where n is the largest entry. The empty tableau maps to itself.
RowStrictTableau evacuate(const RowStrictTableau& t);

/// Greene–Kleitman invariants Δ_1..Δ_m of a word.
struct GKProfile {
  std::vector<int> values;

  friend bool operator==(const GKProfile&, const GKProfile&) = default;
};

/// Longest word length accepted by gk_profile.
inline constexpr std::size_t kMaxGkWordLength = 14;

/// Δ_i(w) is the longest subword that splits into i disjoint weakly increasing
/// subwords. Exhaustive search memoized on (position, multiset of chain ends);
/// words longer than kMaxGkWordLength are rejected with PreconditionError.
GKProfile gk_profile(std::span<const int> word, int m);

}  // namespace webweave
