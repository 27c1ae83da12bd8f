#include "polyscan/geom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>

#include "polyscan/error.hpp"

namespace polyscan {

namespace {

std::atomic<double> g_collinear_eps{1e-12};

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// p is known to be collinear with s; true when it lies inside the closed box of s.
bool within_box(const Point& p, const Segment& s) {
  return p.x >= s.lo(Axis::X) && p.x <= s.hi(Axis::X) && p.y >= s.lo(Axis::Y) &&
         p.y <= s.hi(Axis::Y);
}

bool lex_less(const Segment& s1, const Segment& s2) {
  return std::tie(s1.a().x, s1.a().y, s1.b().x, s1.b().y) <
         std::tie(s2.a().x, s2.a().y, s2.b().x, s2.b().y);
}

}  // namespace

Point::Point(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x_) || !std::isfinite(y_)) {
    throw Error(ErrorCode::InvalidPoint, "point coordinates must be finite");
  }
}

Segment::Segment(const Point& a, const Point& b) : a_(a), b_(b) {
  if (a == b) {
    throw Error(ErrorCode::ZeroLengthSegment,
                "zero-length segment at (" + std::to_string(a.x) + ", " + std::to_string(a.y) + ")");
  }
}

double Segment::lo(Axis axis) const { return std::min(coord(a_, axis), coord(b_, axis)); }
double Segment::hi(Axis axis) const { return std::max(coord(a_, axis), coord(b_, axis)); }

double collinear_tolerance() { return g_collinear_eps.load(std::memory_order_relaxed); }

void set_collinear_tolerance(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::InvalidSpec, "collinear tolerance must be finite and >= 0");
  }
  g_collinear_eps.store(eps, std::memory_order_relaxed);
}

int orientation_sign(const Point& p, const Point& q, const Point& r) {
  const double ux = q.x - p.x, uy = q.y - p.y;
  const double vx = r.x - p.x, vy = r.y - p.y;
  const double c = cross(ux, uy, vx, vy);
  const double scale = std::hypot(ux, uy) * std::hypot(vx, vy);
  if (std::abs(c) <= collinear_tolerance() * scale) return 0;
  return c > 0.0 ? 1 : -1;
}

bool interval_overlap(const Segment& s1, const Segment& s2, Axis axis) {
  return s1.lo(axis) <= s2.hi(axis) && s2.lo(axis) <= s1.hi(axis);
}

CrossResult segment_cross(const Segment& in1, const Segment& in2) {
  // Solve in a canonical order so that swapping the arguments is bit-exact.
  const bool swap = lex_less(in2, in1);
  const Segment& s1 = swap ? in2 : in1;
  const Segment& s2 = swap ? in1 : in2;

  const int d1 = orientation_sign(s2.a(), s2.b(), s1.a());
  const int d2 = orientation_sign(s2.a(), s2.b(), s1.b());
  const int d3 = orientation_sign(s1.a(), s1.b(), s2.a());
  const int d4 = orientation_sign(s1.a(), s1.b(), s2.b());

  if (d1 * d2 < 0 && d3 * d4 < 0) {
    const double rx = s1.b().x - s1.a().x, ry = s1.b().y - s1.a().y;
    const double sx = s2.b().x - s2.a().x, sy = s2.b().y - s2.a().y;
    const double denom = cross(rx, ry, sx, sy);
    const double t = cross(s2.a().x - s1.a().x, s2.a().y - s1.a().y, sx, sy) / denom;
    return {CrossKind::Proper, Point(s1.a().x + t * rx, s1.a().y + t * ry)};
  }

  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // Collinear within tolerance: overlapping boxes mean shared points.
    if (interval_overlap(s1, s2, Axis::X) && interval_overlap(s1, s2, Axis::Y)) {
      return {CrossKind::Degenerate, {}};
    }
    return {};
  }

  if ((d1 == 0 && within_box(s1.a(), s2)) || (d2 == 0 && within_box(s1.b(), s2)) ||
      (d3 == 0 && within_box(s2.a(), s1)) || (d4 == 0 && within_box(s2.b(), s1))) {
    return {CrossKind::Degenerate, {}};
  }
  return {};
}

}  // namespace polyscan
