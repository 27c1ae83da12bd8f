#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyscan/polygon.hpp"
#include "polyscan/scanline.hpp"

namespace polyscan {

enum class QueryMode : std::uint8_t {
  Strict,   // restart a section whenever a further chain vertex shows up
  Relaxed,  // keep a completed section completed on such a vertex
};

// Completion test for one corner section of the sorted array. Vertex numbers
// met while walking away from the studied edge are expected to follow the
// chain one step at a time; `step` is +1 when the chain numbering increases
// in the walk direction and -1 otherwise.
struct SectionTracker {
  explicit SectionTracker(int step_) : step(step_) {}

  void feed(std::size_t candidate, std::size_t pos, QueryMode mode);

  int step;
  std::optional<std::int64_t> start;  // unset: waiting for a run to begin
  std::int64_t end = 0;               // next expected vertex number, start + step
  std::size_t num_start = 0;          // sorted position where the run began
  bool complete = false;
};

// Rotates the ring so the vertex at sorted position 0 becomes vertex 0. Vertex
// numbers below the top vertex then form one chain and numbers above it the
// other, which is what the section trackers rely on.
std::pair<Polygon, SortedOrder> renumber_from_lowest(const Polygon& poly, const SortedOrder& so);

enum class QueryPhase : std::uint8_t { Between, Below, Above };

struct QueryResult {
  std::vector<std::size_t> crossings;   // ascending edge indices
  std::vector<QueryPhase> found_in;     // phase that first met each crossing
  std::vector<std::size_t> degenerate;  // edges touching without a proper crossing
  std::size_t explored = 0;             // candidate positions examined in all phases
};

// Which edges cross edge i, using only the sorted order: the positions between
// the edge's extremities, then downward until both lower sections are
// complete, then upward until both upper sections are complete.
// Requires renumbered inputs (so.order[0] == 0).
QueryResult query_edge(const Polygon& poly, const SortedOrder& so, std::size_t i, QueryMode mode,
                       bool higher_only);

std::size_t query_explored_count(const Polygon& poly, const SortedOrder& so, std::size_t i,
                                 QueryMode mode);

// Sorts and renumbers once, then answers queries in the caller's numbering.
class RegionQuery {
 public:
  explicit RegionQuery(const Polygon& poly, std::optional<Axis> axis = std::nullopt);

  QueryResult query(std::size_t edge, QueryMode mode, bool higher_only = false) const;

  const Polygon& renumbered() const { return poly_; }
  const SortedOrder& order() const { return so_; }
  std::size_t shift() const { return shift_; }

 private:
  RegionQuery(const Polygon& poly, const SortedOrder& so);
  RegionQuery(std::size_t shift, std::pair<Polygon, SortedOrder> renumbered);

  std::size_t shift_;  // original index = (renumbered index + shift) mod N
  Polygon poly_;
  SortedOrder so_;
};

}  // namespace polyscan
