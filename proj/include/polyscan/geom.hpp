#pragma once

#include <cstdint>

namespace polyscan {

// Finite planar point. The constructor rejects NaN and infinities.
struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_, double y_);

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Axis : std::uint8_t { X, Y };

constexpr Axis perpendicular(Axis axis) { return axis == Axis::X ? Axis::Y : Axis::X; }

constexpr double coord(const Point& p, Axis axis) { return axis == Axis::X ? p.x : p.y; }

// Closed segment with distinct endpoints.
class Segment {
 public:
  Segment(const Point& a, const Point& b);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }

  double lo(Axis axis) const;
  double hi(Axis axis) const;

 private:
  Point a_;
  Point b_;
};

enum class CrossKind : std::uint8_t { None, Proper, Degenerate };

struct CrossResult {
  CrossKind kind = CrossKind::None;
  Point point;  // meaningful only for Proper
};

// Relative collinearity threshold shared by every predicate in the library.
// A triple is treated as collinear when |cross| <= eps * |q - p| * |r - p|,
// i.e. when the sine of the turn angle is below eps.
double collinear_tolerance();
void set_collinear_tolerance(double eps);

// Sign of (q - p) x (r - p): +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation_sign(const Point& p, const Point& q, const Point& r);

// True iff the closed projections of both segments onto `axis` intersect.
bool interval_overlap(const Segment& s1, const Segment& s2, Axis axis);

// Proper: the open interiors cross at exactly one point.
// Degenerate: an endpoint touches the other segment, or collinear overlap.
// Callers must filter segments that share an endpoint by construction.
CrossResult segment_cross(const Segment& s1, const Segment& s2);

}  // namespace polyscan
