#include "polyscan/brute_force.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "polyscan/error.hpp"

namespace polyscan {

namespace {

std::optional<Point> crossing(const Polygon& poly, std::size_t i, std::size_t j) {
  const CrossResult cr = segment_cross(poly.edge(i), poly.edge(j));
  if (cr.kind == CrossKind::Degenerate) throw DegenerateInputError(std::min(i, j), std::max(i, j));
  if (cr.kind == CrossKind::Proper) return cr.point;
  return std::nullopt;
}

class BruteCorrector {
 public:
  BruteCorrector(const Polygon& poly, std::size_t cap_factor)
      : poly_(poly), cap_(cap_factor * poly.size() * poly.size()), initial_(try_orientation(poly)) {}

  template <typename Settle>
  BruteCorrection run(Settle settle) {
    const std::size_t n = poly_.size();
    std::size_t i = 0;
    while (i < n) {
      bool fixed = false;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (poly_.edges_adjacent(i, j)) continue;
        if (auto at = crossing(poly_, i, j)) {
          apply(i, j, *at);
          i = settle(*this, i, j);
          fixed = true;
          break;
        }
      }
      if (!fixed) ++i;
    }
    // Orientation guard applied once at the end: per-fix guarding would
    // renumber every edge and break the index-ordered scan.
    if (initial_) {
      const auto final_sign = try_orientation(poly_);
      if (final_sign && *final_sign != *initial_) poly_.reverse(1, n - 1);
    }
    return {poly_, std::move(events_)};
  }

  void apply(std::size_t i, std::size_t j, const Point& at) {
    events_.push_back({i, j, at});
    if (events_.size() > cap_) {
      throw Error(ErrorCode::NonTermination, "brute-force correction exceeded " +
                                                 std::to_string(cap_) + " fixes");
    }
    poly_.reverse(i + 1, j);
  }

  const Polygon& poly() const { return poly_; }

 private:
  Polygon poly_;
  std::size_t cap_;
  std::optional<Orientation> initial_;
  std::vector<IntersectionEvent> events_;
};

// Method 3: check only the two new edges (indices a and b) against edges
// below a; any fix recurses with a strictly smaller lower index.
std::size_t settle_new_edges(BruteCorrector& bc, std::size_t a, std::size_t b, std::size_t depth) {
  if (depth > bc.poly().size()) throw std::logic_error("bf_correct_v3 recursion exceeded N");
  std::size_t resume = a;
  for (const std::size_t k : {a, b}) {
    for (std::size_t m = 0; m < a; ++m) {
      if (bc.poly().edges_adjacent(m, k)) continue;
      if (auto at = crossing(bc.poly(), m, k)) {
        bc.apply(m, k, *at);
        resume = std::min(resume, settle_new_edges(bc, m, k, depth + 1));
        break;
      }
    }
  }
  return resume;
}

}  // namespace

std::vector<IntersectionEvent> bf_report(const Polygon& poly) {
  std::vector<IntersectionEvent> events;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (poly.edges_adjacent(i, j)) continue;
      if (auto at = crossing(poly, i, j)) events.push_back({i, j, *at});
    }
  }
  return events;
}

BruteCorrection bf_correct_v2(const Polygon& poly, std::size_t cap_factor) {
  BruteCorrector bc(poly, cap_factor);
  return bc.run([](BruteCorrector& c, std::size_t i, std::size_t j) {
    // Method 2: every edge in [i, j] may have changed; look for crossings with
    // edges below i and resume at the lowest one found.
    std::size_t resume = i;
    for (std::size_t k = i; k <= j; ++k) {
      for (std::size_t m = 0; m < resume; ++m) {
        if (c.poly().edges_adjacent(m, k)) continue;
        if (crossing(c.poly(), m, k)) {
          resume = m;
          break;
        }
      }
    }
    return resume;
  });
}

BruteCorrection bf_correct_v3(const Polygon& poly, std::size_t cap_factor) {
  BruteCorrector bc(poly, cap_factor);
  return bc.run([](BruteCorrector& c, std::size_t i, std::size_t j) {
    return settle_new_edges(c, i, j, 1);
  });
}

std::vector<std::size_t> bf_query(const Polygon& poly, std::size_t i, bool higher_only) {
  if (i >= poly.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(i) + " out of range");
  }
  std::vector<std::size_t> out;
  const Segment ei = poly.edge(i);
  for (std::size_t j = higher_only ? i + 1 : 0; j < poly.size(); ++j) {
    if (poly.edges_adjacent(i, j)) continue;
    if (segment_cross(ei, poly.edge(j)).kind == CrossKind::Proper) out.push_back(j);
  }
  return out;
}

}  // namespace polyscan
