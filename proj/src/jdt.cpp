#include "webweave/jdt.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "webweave/errors.hpp"

namespace webweave {

Word reading_word(const RowStrictTableau& t) {
  Word word;
  word.reserve(static_cast<std::size_t>(t.size()));
  const SkewShape& shape = t.shape();
  for (int c = shape.outer().columns(); c >= 1; --c) {
    for (int r = 1; r <= shape.outer().rows(); ++r) {
      if (shape.contains({r, c})) {
        word.push_back(t.at({r, c}));
      }
    }
  }
  return word;
}

std::vector<Cell> slide_targets(const SkewShape& shape) {
  std::vector<Cell> targets;
  const Shape& inner = shape.inner();
  for (int r = 1; r <= inner.rows(); ++r) {
    const int c = inner.part(r);
    if (inner.part(r + 1) < c) {
      targets.push_back({r, c});
    }
  }
  return targets;
}

namespace {

using Grid = std::vector<std::vector<int>>;

bool is_box(const Grid& grid, Cell cell) {
  const auto r = static_cast<std::size_t>(cell.row - 1);
  const auto c = static_cast<std::size_t>(cell.col - 1);
  return r < grid.size() && c < grid[r].size() && grid[r][c] > 0;
}

int& entry(Grid& grid, Cell cell) {
  return grid[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)];
}

RowStrictTableau slide_unchecked(const RowStrictTableau& t, Cell target) {
  Grid grid = t.grid();
  Cell hole = target;
  for (;;) {
    const Cell right{hole.row, hole.col + 1};
    const Cell below{hole.row + 1, hole.col};
    const bool has_right = is_box(grid, right);
    const bool has_below = is_box(grid, below);
    if (!has_right && !has_below) {
      break;
    }
    Cell from = has_right ? right : below;
    if (has_right && has_below && entry(grid, below) < entry(grid, right)) {
      from = below;
    }
    entry(grid, hole) = entry(grid, from);
    entry(grid, from) = 0;
    hole = from;
  }
  // The hole ends at the end of its row.
  auto& row = grid[static_cast<std::size_t>(hole.row - 1)];
  row.resize(static_cast<std::size_t>(hole.col - 1));
  return RowStrictTableau::from_grid(std::move(grid));
}

}  // namespace

RowStrictTableau jdt_slide(const RowStrictTableau& t, Cell target) {
  const auto targets = slide_targets(t.shape());
  if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
    throw PreconditionError("cell (" + std::to_string(target.row) + "," + std::to_string(target.col) +
                            ") is not a valid slide target");
  }
  return slide_unchecked(t, target);
}

RowStrictTableau rectify(const RowStrictTableau& t) {
  return rectify(t, [](const std::vector<Cell>& targets) {
    return static_cast<std::size_t>(std::max_element(targets.begin(), targets.end()) - targets.begin());
  });
}

RowStrictTableau rectify(const RowStrictTableau& t, const SlideOrder& order) {
  RowStrictTableau current = t;
  while (!current.shape().is_straight()) {
    const auto targets = slide_targets(current.shape());
    const std::size_t pick = order(targets);
    if (pick >= targets.size()) {
      throw PreconditionError("slide order returned an out-of-range target");
    }
    current = slide_unchecked(current, targets[pick]);
  }
  return current;
}

RowStrictTableau delta(const RowStrictTableau& t) {
  if (t.empty()) {
    throw PreconditionError("delta of the empty tableau");
  }
  if (!t.shape().is_straight()) {
    throw PreconditionError("delta requires a straight shape");
  }
  Grid grid = t.grid();
  int z = 0;
  for (auto& row : grid) {
    for (int& x : row) {
      if (x == 1) {
        x = 0;
        ++z;
      } else {
        --x;
      }
    }
  }
  RowStrictTableau current = RowStrictTableau::from_grid(std::move(grid));
  for (int r = z; r >= 1; --r) {
    // Normalization already absorbed cells with nothing right of or below them.
    if (current.shape().inner().contains({r, 1})) {
      current = jdt_slide(current, {r, 1});
    }
  }
  return current;
}

RowStrictTableau evacuate(const RowStrictTableau& t) {
  if (t.empty()) {
    return t;
  }
  if (!t.shape().is_straight()) {
    throw PreconditionError("evacuation requires a straight shape");
  }
  const int n = t.max_entry();
  Grid out;
  for (int p : t.shape().outer().parts()) {
    out.emplace_back(static_cast<std::size_t>(p), 0);
  }
  RowStrictTableau current = t;
  for (int i = 1; i <= n; ++i) {
    RowStrictTableau next = delta(current);
    for (const Cell cell : current.shape().cells()) {
      if (!next.shape().contains(cell)) {
        entry(out, cell) = n + 1 - i;
      }
    }
    current = std::move(next);
  }
  return RowStrictTableau::from_grid(std::move(out));
}

GKProfile gk_profile(std::span<const int> word, int m) {
  if (m < 1) {
    throw PreconditionError("gk_profile needs m >= 1");
  }
  if (word.size() > kMaxGkWordLength) {
    throw PreconditionError("gk_profile accepts words of length at most " + std::to_string(kMaxGkWordLength));
  }
  for (int x : word) {
    if (x <= 0) {
      throw PreconditionError("words hold positive integers");
    }
  }

  GKProfile profile;
  for (int chains = 1; chains <= m; ++chains) {
    // State: next position and the sorted last letters of the chains (0 = unused).
    std::map<std::pair<std::size_t, std::vector<int>>, int> memo;
    auto best = [&](auto&& self, std::size_t pos, const std::vector<int>& ends) -> int {
      if (pos == word.size()) {
        return 0;
      }
      auto key = std::make_pair(pos, ends);
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      int result = self(self, pos + 1, ends);
      const int letter = word[pos];
      for (std::size_t c = 0; c < ends.size(); ++c) {
        if (ends[c] > letter || (c > 0 && ends[c] == ends[c - 1])) {
          continue;
        }
        std::vector<int> next = ends;
        next[c] = letter;
        std::sort(next.begin(), next.end());
        result = std::max(result, 1 + self(self, pos + 1, next));
      }
      memo.emplace(std::move(key), result);
      return result;
    };
    profile.values.push_back(best(best, 0, std::vector<int>(static_cast<std::size_t>(chains), 0)));
  }
  return profile;
}

}  // namespace webweave
