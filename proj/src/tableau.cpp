#include "webweave/tableau.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "webweave/errors.hpp"
#include "webweave/jdt.hpp"

namespace webweave {

// ---------------------------------------------------------------------------
// Shape

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw ShapeError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ShapeError("partition parts must be weakly decreasing");
    }
  }
}

Shape Shape::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) {
    throw ShapeError("rectangle dimensions must be nonnegative");
  }
  if (rows == 0 || cols == 0) {
    return Shape{};
  }
  return Shape(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Shape::part(int row) const noexcept {
  if (row < 1 || row > rows()) {
    return 0;
  }
  return parts_[static_cast<std::size_t>(row - 1)];
}

int Shape::size() const noexcept {
  int total = 0;
  for (int p : parts_) {
    total += p;
  }
  return total;
}

bool Shape::contains(Cell cell) const noexcept {
  return cell.row >= 1 && cell.col >= 1 && cell.col <= part(cell.row);
}

bool Shape::is_rectangle() const noexcept {
  return parts_.empty() || parts_.front() == parts_.back();
}

std::vector<int> Shape::column_lengths() const {
  std::vector<int> lengths(static_cast<std::size_t>(columns()), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) {
      ++lengths[static_cast<std::size_t>(c)];
    }
  }
  return lengths;
}

// ---------------------------------------------------------------------------
// SkewShape

SkewShape::SkewShape(Shape outer, Shape inner) {
  if (inner.rows() > outer.rows()) {
    throw ShapeError("inner shape has more rows than outer shape");
  }
  std::vector<int> out = outer.parts();
  std::vector<int> in = inner.parts();
  for (std::size_t r = 0; r < in.size(); ++r) {
    if (in[r] > out[r]) {
      throw ShapeError("inner shape is not contained in outer shape");
    }
  }
  in.resize(out.size(), 0);

  // Drop inner cells that are removable corners of the outer shape.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < out.size(); ++r) {
      const int below = r + 1 < out.size() ? out[r + 1] : 0;
      if (out[r] > 0 && out[r] == in[r] && below < out[r]) {
        --out[r];
        --in[r];
        changed = true;
      }
    }
  }
  while (!out.empty() && out.back() == 0) {
    out.pop_back();
  }
  while (!in.empty() && in.back() == 0) {
    in.pop_back();
  }
  outer_ = Shape(std::move(out));
  inner_ = Shape(std::move(in));
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> result;
  for (int r = 1; r <= outer_.rows(); ++r) {
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) {
      result.push_back({r, c});
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// RowStrictTableau

RowStrictTableau::RowStrictTableau(SkewShape shape, std::vector<std::vector<int>> grid)
    : shape_(std::move(shape)), grid_(std::move(grid)) {
  check_invariants();
}

void RowStrictTableau::check_invariants() const {
  for (const Cell cell : shape_.cells()) {
    const int x = at(cell);
    if (x <= 0) {
      throw PreconditionError("tableau entries must be positive integers");
    }
    const Cell right{cell.row, cell.col + 1};
    if (shape_.contains(right) && at(right) <= x) {
      throw PreconditionError("row " + std::to_string(cell.row) + " is not strictly increasing");
    }
    const Cell below{cell.row + 1, cell.col};
    if (shape_.contains(below) && at(below) < x) {
      throw PreconditionError("column " + std::to_string(cell.col) + " is not weakly increasing");
    }
  }
}

RowStrictTableau RowStrictTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  return from_rows(Shape{}, rows);
}

RowStrictTableau RowStrictTableau::from_rows(const Shape& inner, const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> grid;
  grid.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> row(static_cast<std::size_t>(inner.part(static_cast<int>(r) + 1)), 0);
    row.insert(row.end(), rows[r].begin(), rows[r].end());
    grid.push_back(std::move(row));
  }
  if (inner.rows() > static_cast<int>(rows.size())) {
    throw ShapeError("inner shape has more rows than the tableau");
  }
  return from_grid(std::move(grid));
}

RowStrictTableau RowStrictTableau::from_cells(const SkewShape& shape, const std::vector<int>& entries) {
  const auto cells = shape.cells();
  if (cells.size() != entries.size()) {
    throw ShapeError("entry count does not match the number of boxes");
  }
  std::vector<std::vector<int>> grid;
  for (int r = 1; r <= shape.outer().rows(); ++r) {
    grid.emplace_back(static_cast<std::size_t>(shape.outer().part(r)), 0);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    grid[static_cast<std::size_t>(cells[i].row - 1)][static_cast<std::size_t>(cells[i].col - 1)] = entries[i];
  }
  return RowStrictTableau(shape, std::move(grid));
}

RowStrictTableau RowStrictTableau::from_grid(std::vector<std::vector<int>> grid) {
  std::vector<int> outer;
  std::vector<int> inner;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const auto& row = grid[r];
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) {
      ++lead;
    }
    for (std::size_t c = lead; c < row.size(); ++c) {
      if (row[c] <= 0) {
        throw PreconditionError("row " + std::to_string(r + 1) + " has an empty or negative cell after a box");
      }
    }
    outer.push_back(static_cast<int>(row.size()));
    inner.push_back(static_cast<int>(lead));
  }
  while (!outer.empty() && outer.back() == 0) {
    outer.pop_back();
    inner.pop_back();
    grid.pop_back();
  }
  for (std::size_t r = 0; r < outer.size(); ++r) {
    if (outer[r] == 0) {
      throw ShapeError("empty row above a nonempty row");
    }
  }
  while (!inner.empty() && inner.back() == 0) {
    inner.pop_back();
  }
  SkewShape shape(Shape(std::move(outer)), Shape(std::move(inner)));
  grid.resize(static_cast<std::size_t>(shape.outer().rows()));
  for (int r = 1; r <= shape.outer().rows(); ++r) {
    grid[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(shape.outer().part(r)));
  }
  return RowStrictTableau(std::move(shape), std::move(grid));
}

int RowStrictTableau::at(Cell cell) const noexcept {
  if (!shape_.contains(cell)) {
    return 0;
  }
  return grid_[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)];
}

std::vector<std::vector<int>> RowStrictTableau::rows() const {
  std::vector<std::vector<int>> result;
  for (int r = 1; r <= shape_.outer().rows(); ++r) {
    const auto& row = grid_[static_cast<std::size_t>(r - 1)];
    result.emplace_back(row.begin() + shape_.inner().part(r), row.end());
  }
  return result;
}

int RowStrictTableau::max_entry() const noexcept {
  int m = 0;
  for (const auto& row : grid_) {
    for (int x : row) {
      m = std::max(m, x);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Standard and Russell tableaux

bool is_standard(const RowStrictTableau& t) {
  const auto cells = t.shape().cells();
  std::vector<bool> seen(cells.size() + 1, false);
  for (const Cell cell : cells) {
    const int x = t.at(cell);
    if (x < 1 || x > static_cast<int>(cells.size()) || seen[static_cast<std::size_t>(x)]) {
      return false;
    }
    seen[static_cast<std::size_t>(x)] = true;
    // Row strictness is a tableau invariant; with distinct entries, weak
    // column increase is strict.
  }
  return true;
}

int russell_repetition(const RowStrictTableau& t) {
  const SkewShape& shape = t.shape();
  if (!shape.is_straight() || shape.outer().rows() != 3 || !shape.outer().is_rectangle()) {
    throw NotRussellError("shape is not a three-row rectangle (k,k,k)");
  }
  const int m = t.max_entry();
  std::vector<int> count(static_cast<std::size_t>(m) + 1, 0);
  for (const Cell cell : shape.cells()) {
    ++count[static_cast<std::size_t>(t.at(cell))];
  }
  int doubled = 0;
  for (int v = 1; v <= m; ++v) {
    const int c = count[static_cast<std::size_t>(v)];
    if (c == 0) {
      throw NotRussellError("value " + std::to_string(v) + " is missing");
    }
    if (c > 2) {
      throw NotRussellError("value " + std::to_string(v) + " appears " + std::to_string(c) + " times");
    }
    if (c == 2) {
      ++doubled;
    }
  }
  return doubled;
}

bool is_russell(const RowStrictTableau& t) noexcept {
  try {
    russell_repetition(t);
    return true;
  } catch (const NotRussellError&) {
    return false;
  }
}

RowStrictTableau standardize(const RowStrictTableau& t) {
  russell_repetition(t);
  auto grid = t.grid();
  for (;;) {
    // Smallest duplicated value and the row of its lower instance.
    std::map<int, std::vector<Cell>> where;
    for (std::size_t r = 0; r < grid.size(); ++r) {
      for (std::size_t c = 0; c < grid[r].size(); ++c) {
        where[grid[r][c]].push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
      }
    }
    auto dup = std::find_if(where.begin(), where.end(), [](const auto& kv) { return kv.second.size() > 1; });
    if (dup == where.end()) {
      break;
    }
    const int i = dup->first;
    const Cell lower = std::max(dup->second[0], dup->second[1]);
    for (auto& row : grid) {
      for (int& x : row) {
        if (x > i) {
          ++x;
        }
      }
    }
    grid[static_cast<std::size_t>(lower.row - 1)][static_cast<std::size_t>(lower.col - 1)] = i + 1;
  }
  return RowStrictTableau::from_grid(std::move(grid));
}

RowStrictTableau rotate_complement(const RowStrictTableau& t, int n) {
  const SkewShape& shape = t.shape();
  if (!shape.is_straight() || !shape.outer().is_rectangle()) {
    throw ShapeError("rotate_complement requires a rectangular straight shape");
  }
  if (n < t.max_entry()) {
    throw PreconditionError("alphabet size " + std::to_string(n) + " is below the largest entry");
  }
  const auto& grid = t.grid();
  std::vector<std::vector<int>> out(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const auto& src = grid[grid.size() - 1 - r];
    out[r].reserve(src.size());
    for (auto it = src.rbegin(); it != src.rend(); ++it) {
      out[r].push_back(n + 1 - *it);
    }
  }
  return RowStrictTableau::from_grid(std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void sort_by_reading_word(std::vector<RowStrictTableau>& tableaux) {
  std::vector<std::pair<Word, std::size_t>> keyed;
  keyed.reserve(tableaux.size());
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    keyed.emplace_back(reading_word(tableaux[i]), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<RowStrictTableau> sorted;
  sorted.reserve(tableaux.size());
  for (const auto& [word, index] : keyed) {
    sorted.push_back(std::move(tableaux[index]));
  }
  tableaux = std::move(sorted);
}

}  // namespace

std::vector<RowStrictTableau> enumerate_standard(const Shape& shape) {
  std::vector<RowStrictTableau> result;
  const int n = shape.size();
  std::vector<std::vector<int>> grid;
  for (int p : shape.parts()) {
    grid.emplace_back(static_cast<std::size_t>(p), 0);
  }
  std::vector<int> filled(static_cast<std::size_t>(shape.rows()), 0);

  // Place 1, 2, ..., n one at a time; value v may go at the end of row r when
  // the row above is already longer.
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      result.push_back(RowStrictTableau::from_grid(grid));
      return;
    }
    for (std::size_t r = 0; r < filled.size(); ++r) {
      if (filled[r] == shape.parts()[r]) {
        continue;
      }
      if (r > 0 && filled[r - 1] <= filled[r]) {
        continue;
      }
      grid[r][static_cast<std::size_t>(filled[r])] = v;
      ++filled[r];
      place(v + 1);
      --filled[r];
      grid[r][static_cast<std::size_t>(filled[r])] = 0;
    }
  };
  place(1);
  sort_by_reading_word(result);
  return result;
}

std::vector<RowStrictTableau> enumerate_russell(int k, int h) {
  std::vector<RowStrictTableau> result;
  if (k < 1 || h < 0 || h > 3 * k - 1) {
    return result;
  }
  const int n = 3 * k;
  const auto standard = enumerate_standard(Shape::rectangle(3, k));

  // Invert standardization: choose h disjoint merge positions j (j and j+1
  // collapse to one value) such that j+1 sits in a strictly lower row.
  std::vector<int> merges;
  for (const auto& u : standard) {
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
    for (const Cell cell : u.shape().cells()) {
      row_of[static_cast<std::size_t>(u.at(cell))] = cell.row;
    }
    std::function<void(int)> choose = [&](int next) {
      if (static_cast<int>(merges.size()) == h) {
        auto grid = u.grid();
        for (auto& row : grid) {
          for (int& x : row) {
            const int shift = static_cast<int>(std::count_if(merges.begin(), merges.end(), [x](int j) { return j < x; }));
            x -= shift;
          }
        }
        result.push_back(RowStrictTableau::from_grid(std::move(grid)));
        return;
      }
      for (int j = next; j < n; ++j) {
        if (row_of[static_cast<std::size_t>(j) + 1] > row_of[static_cast<std::size_t>(j)]) {
          merges.push_back(j);
          choose(j + 2);
          merges.pop_back();
        }
      }
    };
    choose(1);
  }
  sort_by_reading_word(result);
  return result;
}

std::uint64_t count_standard(const Shape& shape) {
  const int n = shape.size();
  // Prime exponents of n! / prod(hooks).
  std::vector<int> exponent(static_cast<std::size_t>(n) + 1, 0);
  auto add_factors = [&](int value, int sign) {
    for (int p = 2; value > 1; ++p) {
      while (value % p == 0) {
        exponent[static_cast<std::size_t>(p)] += sign;
        value /= p;
      }
    }
  };
  for (int i = 2; i <= n; ++i) {
    add_factors(i, +1);
  }
  const auto columns = shape.column_lengths();
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = 1; c <= shape.part(r); ++c) {
      const int arm = shape.part(r) - c;
      const int leg = columns[static_cast<std::size_t>(c - 1)] - r;
      add_factors(arm + leg + 1, -1);
    }
  }
  std::uint64_t result = 1;
  for (int p = 2; p <= n; ++p) {
    for (int e = 0; e < exponent[static_cast<std::size_t>(p)]; ++e) {
      if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
        throw std::overflow_error("standard tableau count exceeds 64 bits");
      }
      result *= static_cast<std::uint64_t>(p);
    }
  }
  return result;
}

}  // namespace webweave
