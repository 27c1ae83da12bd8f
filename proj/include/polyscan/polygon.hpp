#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyscan/geom.hpp"

namespace polyscan {

// Closed vertex ring stored as a contiguous array. Edge e joins vertex e to
// vertex (e + 1) mod N; the closing vertex is never repeated in memory.
class Polygon {
 public:
  // Throws TooFewVertices (N < 3) or DuplicateConsecutiveVertex, including
  // the wrap pair (last, first).
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& operator[](std::size_t v) const { return vertices_[v]; }

  std::size_t next(std::size_t v) const { return v + 1 == size() ? 0 : v + 1; }
  std::size_t prev(std::size_t v) const { return v == 0 ? size() - 1 : v - 1; }

  Segment edge(std::size_t e) const { return Segment(vertices_[e], vertices_[next(e)]); }

  // True when the two edges share a vertex by construction (or are equal).
  bool edges_adjacent(std::size_t e1, std::size_t e2) const;

  // Reverses vertices [lo, hi] in place. Throws IndexOutOfRange.
  void reverse(std::size_t lo, std::size_t hi);

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

enum class Orientation : std::uint8_t { CCW, CW };

// Twice the signed area, computed relative to vertex 0.
double shoelace_sum(const Polygon& poly);

// Throws DegenerateArea when the shoelace sum vanishes within tolerance.
Orientation signed_area_sign(const Polygon& poly);

// Same as signed_area_sign but returns nullopt for zero-area rings.
std::optional<Orientation> try_orientation(const Polygon& poly);

Polygon reverse_range(const Polygon& poly, std::size_t lo, std::size_t hi);

// Outcome of an in-place crossing fix: vertices [lo, hi] were reversed, and
// if guard_fired the orientation guard also reversed [1, N-1].
struct CrossingFix {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool guard_fired = false;
};

// Uncrosses edges i < j by reversing vertices [i+1, j]; restores the original
// orientation sign if the reversal flipped it. Throws NotACrossing when the
// edges do not cross properly.
CrossingFix apply_crossing_fix(Polygon& poly, std::size_t i, std::size_t j);

Polygon correct_crossing(const Polygon& poly, std::size_t i, std::size_t j);

// All-pairs check: no two non-adjacent edges meet at all.
bool is_simple(const Polygon& poly);

}  // namespace polyscan
