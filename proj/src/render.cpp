#include "webweave/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "webweave/errors.hpp"

namespace webweave {

namespace {

constexpr double kRadius = 150;
constexpr double kDot = 6;
constexpr int kRelaxSteps = 400;

struct Point {
  double x = 0;
  double y = 0;
};

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  // avoid "-0.00"
  if (std::string(buffer) == "-0.00") {
    return "0.00";
  }
  return buffer;
}

std::string header(double width, double height, double min_x, double min_y) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"" + fmt(min_x) + " " + fmt(min_y) + " " + fmt(width) + " " + fmt(height) + "\">\n";
}

// Label i of j sits at angle -pi/2 + 2pi(i - 1/2)/j, counterclockwise.
Point boundary_point(int label, int count, double radius) {
  const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * (label - 0.5) / count;
  return {radius * std::cos(theta), -radius * std::sin(theta)};
}

std::string line(Point a, Point b, const char* cls) {
  return "  <line class=\"" + std::string(cls) + "\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
         fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

std::string dot(Point p, Color c, const char* cls) {
  const bool black = c == Color::black;
  return "  <circle class=\"" + std::string(cls) + (black ? " black" : " white") + "\" cx=\"" + fmt(p.x) +
         "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(kDot) + "\" fill=\"" + (black ? "black" : "white") +
         "\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

std::string label(Point p, int number) {
  return "  <text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y + 4) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(number) +
         "</text>\n";
}

std::string disk_frame() {
  return "  <circle class=\"disk\" cx=\"0.00\" cy=\"0.00\" r=\"" + fmt(kRadius) +
         "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>\n";
}

std::string boundary_markers(const std::vector<Color>& colors) {
  std::string out;
  const int count = static_cast<int>(colors.size());
  for (int i = 1; i <= count; ++i) {
    out += dot(boundary_point(i, count, kRadius), colors[static_cast<std::size_t>(i - 1)], "boundary-vertex");
    out += label(boundary_point(i, count, kRadius + 18), i);
  }
  return out;
}

}  // namespace

std::string render_web_svg(const Web& w) {
  const auto report = validate_web(w);
  if (!report.ok()) {
    throw PreconditionError("cannot lay out an invalid web: " + report.violations.front().detail);
  }
  const int n = w.vertex_count();
  const int b = w.boundary_count();
  std::vector<Point> at(static_cast<std::size_t>(n));
  for (int v = 0; v < b; ++v) {
    at[static_cast<std::size_t>(v)] = boundary_point(v + 1, b, kRadius);
  }
  // Jacobi iteration towards the barycentric (Tutte) embedding.
  for (int step = 0; step < kRelaxSteps; ++step) {
    std::vector<Point> next = at;
    for (int v = b; v < n; ++v) {
      Point sum;
      for (int h : w.rotation(v)) {
        const Point& q = at[static_cast<std::size_t>(w.neighbor(h))];
        sum.x += q.x;
        sum.y += q.y;
      }
      const double d = w.degree(v);
      next[static_cast<std::size_t>(v)] = d > 0 ? Point{sum.x / d, sum.y / d} : Point{};
    }
    at = std::move(next);
  }

  const double extent = kRadius + 40;
  std::string out = header(2 * extent, 2 * extent, -extent, -extent);
  out += disk_frame();
  for (const auto& [u, v] : w.edges()) {
    out += line(at[static_cast<std::size_t>(u)], at[static_cast<std::size_t>(v)], "edge");
  }
  for (int v = b; v < n; ++v) {
    out += dot(at[static_cast<std::size_t>(v)], w.color(v), "internal-vertex");
  }
  out += boundary_markers(w.boundary_colors());
  out += "</svg>\n";
  return out;
}

std::string render_matching_svg(const Matching& m) {
  const int count = 2 * m.n();
  const double extent = kRadius + 40;
  std::string out = header(2 * extent, 2 * extent, -extent, -extent);
  out += disk_frame();
  for (const auto& [i, j] : m.pairs()) {
    out += line(boundary_point(i, count, kRadius), boundary_point(j, count, kRadius), "edge");
  }
  out += boundary_markers(std::vector<Color>(static_cast<std::size_t>(count), Color::black));
  out += "</svg>\n";
  return out;
}

std::string render_mdiagram_svg(const ArcDiagram& d) {
  constexpr double kStep = 40;
  const double width = kStep * (d.points + 1);
  const double top = kStep * (d.points + 1) / 2 + 10;
  std::string out = header(width, top + 40, 0, -top);
  auto x_of = [&](double point) { return kStep * point; };
  out += "  <line class=\"axis\" x1=\"" + fmt(x_of(0.5)) + "\" y1=\"0.00\" x2=\"" + fmt(x_of(d.points + 0.5)) +
         "\" y2=\"0.00\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  for (const Arc& a : d.arcs) {
    const double r = (x_of(a.right) - x_of(a.left)) / 2;
    out += "  <path class=\"arc\" d=\"M " + fmt(x_of(a.left)) + " 0.00 A " + fmt(r) + " " + fmt(r) +
           " 0 0 1 " + fmt(x_of(a.right)) + " 0.00\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const Crossing& c : find_crossings(d)) {
    const Arc& a = d.arcs[static_cast<std::size_t>(c.first)];
    const double x = boost::rational_cast<double>(c.x);
    const double centre = (a.left + a.right) / 2.0;
    const double radius = (a.right - a.left) / 2.0;
    const double height = std::sqrt(std::max(0.0, radius * radius - (x - centre) * (x - centre)));
    out += "  <circle class=\"crossing\" cx=\"" + fmt(x_of(x)) + "\" cy=\"" + fmt(-kStep * height) + "\" r=\"" +
           fmt(3) + "\" fill=\"red\"/>\n";
  }
  for (int i = 1; i <= d.points; ++i) {
    out += dot({x_of(i), 0}, Color::black, "point");
    out += label({x_of(i), 20}, i);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace webweave
