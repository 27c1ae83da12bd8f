#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyscan/geom.hpp"
#include "polyscan/polygon.hpp"

namespace polyscan {

// Vertex indices ordered by one coordinate. Positions are tied to geometry,
// indices are labels: reversing part of the polygon relabels vertices but
// never moves a position.
struct SortedOrder {
  Axis axis = Axis::X;
  std::vector<std::size_t> order;      // position -> vertex
  std::vector<std::size_t> rank;       // vertex -> position
  std::vector<std::size_t> run_start;  // position -> first position of its equal-coordinate run

  std::size_t size() const { return order.size(); }
  // Last position sharing the exact coordinate of `pos`.
  std::size_t run_end(std::size_t pos) const;
};

struct IntersectionEvent {
  std::size_t edge_i = 0;  // edge_i < edge_j
  std::size_t edge_j = 0;
  Point at;

  friend bool operator==(const IntersectionEvent&, const IntersectionEvent&) = default;
};

struct RunMetrics {
  std::size_t n_vertices = 0;
  std::size_t n_crossings = 0;  // crossings corrected; 0 for reporting runs
  std::size_t n_real = 0;       // positions visited by the outer loop, backtracks included
  std::size_t explored = 0;     // candidate positions examined
  std::size_t rescans = 0;      // confirmation sweeps that found a residual crossing
  std::size_t verify_explored = 0;

  // Visits beyond one pass plus one revisit per correction.
  std::int64_t n_supp() const {
    return static_cast<std::int64_t>(n_real) - static_cast<std::int64_t>(n_vertices) -
           static_cast<std::int64_t>(n_crossings);
  }
  double avg_explored() const {
    return n_vertices == 0 ? 0.0 : static_cast<double>(explored) / static_cast<double>(n_vertices);
  }
};

// Axis with the larger coordinate range; ties go to X.
Axis major_axis(const Polygon& poly);

// Sort by exact coordinate, ties broken by vertex index.
SortedOrder sort_vertices(const Polygon& poly, Axis axis);

// Checks every SortedOrder invariant against the polygon's coordinates.
bool is_valid_order(const SortedOrder& so, const Polygon& poly);

// Relabels in place after vertices [lo, hi] were reversed: v -> lo + hi - v.
// Touches only the 2 * (hi - lo + 1) affected entries.
void remap_after_reversal(SortedOrder& so, std::size_t lo, std::size_t hi);
SortedOrder resort_after_reversal(SortedOrder so, std::size_t lo, std::size_t hi);

struct UpwardEdges {
  std::array<std::size_t, 2> edge{};
  std::array<std::size_t, 2> far{};  // the other endpoint of each edge
  std::size_t count = 0;
};

// Edges at v whose other endpoint has a strictly greater rank.
UpwardEdges upward_segments(const Polygon& poly, const SortedOrder& so, std::size_t v);

struct ScanReport {
  Axis axis = Axis::X;
  std::vector<IntersectionEvent> events;  // sorted by (edge_i, edge_j)
  RunMetrics metrics;
};

// Lists every proper crossing. Throws DegenerateInputError on contact or
// overlap between non-adjacent edges.
ScanReport report_intersections(const Polygon& poly, std::optional<Axis> axis = std::nullopt);

struct CorrectOptions {
  std::optional<Axis> axis;
  // After the backtracking scan completes, sweep once more and resume the scan
  // at any residual crossing. Disable to observe the bare scan.
  bool confirm_sweep = true;
  std::size_t cap_factor = 4;  // abort after cap_factor * N^2 corrections
};

struct Correction {
  Polygon polygon;
  Axis axis = Axis::X;
  std::vector<IntersectionEvent> events;  // in application order, indices at fix time
  RunMetrics metrics;
};

Correction correct_all(const Polygon& poly, const CorrectOptions& options = {});

}  // namespace polyscan
