#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace webweave {

/// A sequence of positive integers; reading words, rows, columns.
using Word = std::vector<int>;

/// A box position, 1-indexed, row 1 at the top (English notation).
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An integer partition, stored as its weakly decreasing positive parts.
class Shape {
 public:
  Shape() = default;
  /// Throws ShapeError unless parts are positive and weakly decreasing.
  explicit Shape(std::vector<int> parts);

  static Shape rectangle(int rows, int cols);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int columns() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  /// Length of row `row` (1-indexed); zero past the last row.
  int part(int row) const noexcept;
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  bool contains(Cell cell) const noexcept;
  /// True for k×c rectangles, including the empty shape.
  bool is_rectangle() const noexcept;
  /// Column lengths, left to right.
  std::vector<int> column_lengths() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
};

/// outer / inner. Always stored normalized: any cell of `inner` that is also a
/// removable corner of `outer` is dropped from both, so two skew shapes with the
/// same set of boxes compare equal.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws ShapeError unless inner ⊆ outer.
  SkewShape(Shape outer, Shape inner = {});

  const Shape& outer() const noexcept { return outer_; }
  const Shape& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool is_straight() const noexcept { return inner_.empty(); }
  /// True when `cell` is a box of outer minus inner.
  bool contains(Cell cell) const noexcept { return outer_.contains(cell) && !inner_.contains(cell); }
  /// Boxes in row-major order.
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Shape outer_;
  Shape inner_;
};

/// A filling of a skew shape with positive integers, rows strictly increasing
/// and columns weakly increasing. Immutable once built.
class RowStrictTableau {
 public:
  /// The empty tableau.
  RowStrictTableau() = default;

  /// Straight shape from its rows, top to bottom. Throws on any invariant violation.
  static RowStrictTableau from_rows(const std::vector<std::vector<int>>& rows);
  /// Skew shape: row r holds the boxes in columns inner[r]+1, inner[r]+2, ...
  static RowStrictTableau from_rows(const Shape& inner, const std::vector<std::vector<int>>& rows);
  /// Build from a box -> entry assignment over `shape`. Cells missing from
  /// `entries` are an error; entries are indexed in shape.cells() order.
  static RowStrictTableau from_cells(const SkewShape& shape, const std::vector<int>& entries);
  /// Row r of `grid` spans the outer shape's row r; 0 marks an inner (empty) cell.
  static RowStrictTableau from_grid(std::vector<std::vector<int>> grid);

  const SkewShape& shape() const noexcept { return shape_; }
  /// Entry at `cell`, or 0 if the cell is not a box of the tableau.
  int at(Cell cell) const noexcept;
  /// Entries of each row's boxes, left to right (inner cells omitted).
  std::vector<std::vector<int>> rows() const;
  int size() const noexcept { return shape_.size(); }
  bool empty() const noexcept { return shape_.size() == 0; }
  int max_entry() const noexcept;
  /// The outer-shape grid with 0 on inner cells (see from_grid).
  const std::vector<std::vector<int>>& grid() const noexcept { return grid_; }

  friend bool operator==(const RowStrictTableau&, const RowStrictTableau&) = default;

 private:
  RowStrictTableau(SkewShape shape, std::vector<std::vector<int>> grid);
  void check_invariants() const;

  SkewShape shape_;
  // grid_[r][c] for every cell of the outer shape, 0 on inner cells.
  std::vector<std::vector<int>> grid_;
};

bool is_standard(const RowStrictTableau& t);

/// Number of values appearing twice in a Russell tableau (shape (k,k,k), every
/// value 1..M present once or twice). Throws NotRussellError naming the reason.
int russell_repetition(const RowStrictTableau& t);
bool is_russell(const RowStrictTableau& t) noexcept;

/// Splits each duplicated value, smallest first: later values shift up by one
/// and the instance in the lower row becomes i+1.
RowStrictTableau standardize(const RowStrictTableau& t);

/// Rotate a rectangular tableau by 180 degrees and replace x by n+1-x.
RowStrictTableau rotate_complement(const RowStrictTableau& t, int n);

/// Every standard tableau of a straight shape, sorted lexicographically by
/// reading word.
std::vector<RowStrictTableau> enumerate_standard(const Shape& shape);

/// Every Russell tableau of shape (k,k,k) with repetition h, sorted
/// lexicographically by reading word.
std::vector<RowStrictTableau> enumerate_russell(int k, int h);

/// Hook length formula. Throws std::overflow_error past 64 bits.
std::uint64_t count_standard(const Shape& shape);

}  // namespace webweave
