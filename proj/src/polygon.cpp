#include "polyscan/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "polyscan/error.hpp"

namespace polyscan {

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v] == vertices_[next(v)]) {
      throw Error(ErrorCode::DuplicateConsecutiveVertex,
                  "vertices " + std::to_string(v) + " and " + std::to_string(next(v)) + " coincide");
    }
  }
}

bool Polygon::edges_adjacent(std::size_t e1, std::size_t e2) const {
  return e1 == e2 || next(e1) == e2 || next(e2) == e1;
}

void Polygon::reverse(std::size_t lo, std::size_t hi) {
  if (lo > hi || hi >= size()) {
    throw Error(ErrorCode::IndexOutOfRange, "reverse range [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "] invalid for N=" +
                                                std::to_string(size()));
  }
  std::reverse(vertices_.begin() + static_cast<std::ptrdiff_t>(lo),
               vertices_.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
}

namespace {

struct Shoelace {
  double sum = 0.0;
  double magnitude = 0.0;  // sum of absolute terms, the rounding scale
};

Shoelace shoelace(const Polygon& poly) {
  const Point& o = poly[0];
  Shoelace acc;
  for (std::size_t v = 1; v + 1 < poly.size(); ++v) {
    const Point& a = poly[v];
    const Point& b = poly[v + 1];
    const double l = (a.x - o.x) * (b.y - o.y);
    const double r = (b.x - o.x) * (a.y - o.y);
    acc.sum += l - r;
    acc.magnitude += std::abs(l) + std::abs(r);
  }
  return acc;
}

}  // namespace

double shoelace_sum(const Polygon& poly) { return shoelace(poly).sum; }

std::optional<Orientation> try_orientation(const Polygon& poly) {
  const Shoelace s = shoelace(poly);
  if (std::abs(s.sum) <= collinear_tolerance() * s.magnitude) return std::nullopt;
  return s.sum > 0.0 ? Orientation::CCW : Orientation::CW;
}

Orientation signed_area_sign(const Polygon& poly) {
  auto sign = try_orientation(poly);
  if (!sign) throw Error(ErrorCode::DegenerateArea, "polygon has zero signed area");
  return *sign;
}

Polygon reverse_range(const Polygon& poly, std::size_t lo, std::size_t hi) {
  Polygon out = poly;
  out.reverse(lo, hi);
  return out;
}

CrossingFix apply_crossing_fix(Polygon& poly, std::size_t i, std::size_t j) {
  const std::size_t n = poly.size();
  if (i >= j || j >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "crossing edges must satisfy i < j < N, got " + std::to_string(i) + ", " +
                    std::to_string(j));
  }
  if (poly.edges_adjacent(i, j) ||
      segment_cross(poly.edge(i), poly.edge(j)).kind != CrossKind::Proper) {
    throw Error(ErrorCode::NotACrossing,
                "edges " + std::to_string(i) + " and " + std::to_string(j) + " do not cross");
  }
  const auto before = try_orientation(poly);
  CrossingFix fix{i + 1, j, false};
  poly.reverse(fix.lo, fix.hi);
  if (before) {
    const auto after = try_orientation(poly);
    if (after && *after != *before) {
      poly.reverse(1, n - 1);
      fix.guard_fired = true;
    }
  }
  return fix;
}

Polygon correct_crossing(const Polygon& poly, std::size_t i, std::size_t j) {
  Polygon out = poly;
  apply_crossing_fix(out, i, j);
  return out;
}

bool is_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei = poly.edge(i);
    for (std::size_t j = i + 2; j < n; ++j) {
      if (poly.edges_adjacent(i, j)) continue;
      if (segment_cross(ei, poly.edge(j)).kind != CrossKind::None) return false;
    }
  }
  return true;
}

}  // namespace polyscan
