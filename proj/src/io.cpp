#include "webweave/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "webweave/errors.hpp"

namespace webweave {

namespace {

// Line and column (1-indexed) of byte `offset` in `text`.
std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

int parse_positive(std::string_view token, std::size_t line, std::size_t column) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || value <= 0) {
    throw ParseError("expected a positive integer, got '" + std::string(token) + "'", line, column);
  }
  return value;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

const char* color_name(Color c) { return c == Color::black ? "black" : "white"; }

Color color_from(const Json& j) {
  if (j == "black") {
    return Color::black;
  }
  if (j == "white") {
    return Color::white;
  }
  throw ParseError("color must be \"black\" or \"white\"");
}

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = position_of(text, offset);
    throw ParseError("invalid JSON", line, column);
  }
}

RowStrictTableau parse_tableau_text(std::string_view text) {
  std::vector<std::vector<int>> grid;
  std::size_t line = 0;
  std::size_t start = 0;
  bool trailing_blank = false;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', start), text.size());
    const std::string_view content = text.substr(start, stop - start);
    ++line;
    std::vector<int> row;
    bool seen_box = false;
    std::size_t i = 0;
    while (i < content.size()) {
      if (is_space(content[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < content.size() && !is_space(content[j])) {
        ++j;
      }
      const std::string_view token = content.substr(i, j - i);
      if (token == ".") {
        if (seen_box) {
          throw ParseError("empty cell after a box", line, i + 1);
        }
        row.push_back(0);
      } else {
        row.push_back(parse_positive(token, line, i + 1));
        seen_box = true;
      }
      i = j;
    }
    if (row.empty()) {
      trailing_blank = true;
    } else {
      if (trailing_blank && !grid.empty()) {
        throw ParseError("blank line inside a tableau", line - 1, 1);
      }
      trailing_blank = false;
      grid.push_back(std::move(row));
    }
    if (stop == text.size()) {
      break;
    }
    start = stop + 1;
  }
  try {
    return RowStrictTableau::from_grid(std::move(grid));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string format_tableau_text(const RowStrictTableau& t) {
  std::string out;
  for (int r = 1; r <= t.shape().outer().rows(); ++r) {
    for (int c = 1; c <= t.shape().outer().part(r); ++c) {
      if (c > 1) {
        out += ' ';
      }
      out += t.shape().contains({r, c}) ? std::to_string(t.at({r, c})) : ".";
    }
    out += '\n';
  }
  return out;
}

Json tableau_to_json(const RowStrictTableau& t) {
  Json j;
  j["rows"] = t.rows();
  if (!t.shape().is_straight()) {
    j["inner"] = t.shape().inner().parts();
  }
  return j;
}

RowStrictTableau tableau_from_json(const Json& j) {
  const auto rows = get<std::vector<std::vector<int>>>(j, "rows");
  std::vector<int> inner;
  if (j.contains("inner")) {
    inner = get<std::vector<int>>(j, "inner");
  }
  try {
    while (!inner.empty() && inner.back() == 0) {
      inner.pop_back();
    }
    return RowStrictTableau::from_rows(Shape(inner), rows);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

RowStrictTableau parse_tableau(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') {
    return tableau_from_json(parse_json(text));
  }
  return parse_tableau_text(text);
}

Json matching_to_json(const Matching& m) {
  Json j;
  j["n"] = m.n();
  j["pairs"] = Json::array();
  for (const auto& [a, b] : m.pairs()) {
    j["pairs"].push_back({a, b});
  }
  return j;
}

Matching matching_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  const auto pairs = get<std::vector<std::pair<int, int>>>(j, "pairs");
  try {
    return Matching(n, pairs);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json web_to_json(const Web& w) {
  auto endpoint = [&w](int v) {
    return w.is_boundary(v) ? "b" + std::to_string(v) : "i" + std::to_string(v - w.boundary_count());
  };
  Json j;
  j["boundary"] = Json::array();
  for (int b = 0; b < w.boundary_count(); ++b) {
    Json entry;
    entry["color"] = color_name(w.color(b));
    j["boundary"].push_back(std::move(entry));
  }
  j["internal_count"] = w.internal_count();
  j["internal_colors"] = Json::array();
  for (int v = w.boundary_count(); v < w.vertex_count(); ++v) {
    j["internal_colors"].push_back(color_name(w.color(v)));
  }
  j["edges"] = Json::array();
  for (const auto& [a, b] : w.edges()) {
    j["edges"].push_back({endpoint(a), endpoint(b)});
  }
  j["rotation"] = w.rotations();
  return j;
}

Web web_from_json(const Json& j) {
  const auto boundary = get<std::vector<Json>>(j, "boundary");
  const int internal_count = get<int>(j, "internal_count");
  const auto internal_colors = get<std::vector<Json>>(j, "internal_colors");
  const auto edges = get<std::vector<std::vector<std::string>>>(j, "edges");
  const auto rotation = get<std::vector<std::vector<int>>>(j, "rotation");
  if (internal_count < 0 || static_cast<int>(internal_colors.size()) != internal_count) {
    throw ParseError("internal_colors must have internal_count entries");
  }
  std::vector<Color> colors;
  for (const auto& b : boundary) {
    colors.push_back(color_from(get<Json>(b, "color")));
  }
  for (const auto& c : internal_colors) {
    colors.push_back(color_from(c));
  }
  const int boundary_count = static_cast<int>(boundary.size());
  auto vertex = [&](const std::string& name) {
    if (name.size() < 2 || (name[0] != 'b' && name[0] != 'i')) {
      throw ParseError("bad endpoint \"" + name + "\"");
    }
    int index = 0;
    const auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
    if (ec != std::errc{} || end != name.data() + name.size() || index < 0) {
      throw ParseError("bad endpoint \"" + name + "\"");
    }
    const int limit = name[0] == 'b' ? boundary_count : internal_count;
    if (index >= limit) {
      throw ParseError("endpoint \"" + name + "\" out of range");
    }
    return name[0] == 'b' ? index : boundary_count + index;
  };
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : edges) {
    if (e.size() != 2) {
      throw ParseError("each edge needs two endpoints");
    }
    pairs.emplace_back(vertex(e[0]), vertex(e[1]));
  }
  try {
    return Web(std::move(colors), boundary_count, std::move(pairs), rotation);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

Word parse_word(std::string_view text) {
  Word word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    const auto [line, column] = position_of(text, i);
    word.push_back(parse_positive(text.substr(i, j - i), line, column));
    i = j;
  }
  return word;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(w[i]);
  }
  return out;
}

Shape parse_shape(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(',', start), text.size());
    parts.push_back(parse_positive(text.substr(start, stop - start), 1, start + 1));
    if (stop == text.size()) {
      break;
    }
    start = stop + 1;
  }
  try {
    return Shape(std::move(parts));
  } catch (const ShapeError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace webweave
