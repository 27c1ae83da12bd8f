#include "polyscan/scanline.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>

#include "polyscan/error.hpp"

namespace polyscan {

std::size_t SortedOrder::run_end(std::size_t pos) const {
  const std::size_t start = run_start[pos];
  while (pos + 1 < order.size() && run_start[pos + 1] == start) ++pos;
  return pos;
}

Axis major_axis(const Polygon& poly) {
  const auto [xmin, xmax] = std::minmax_element(
      poly.vertices().begin(), poly.vertices().end(),
      [](const Point& a, const Point& b) { return a.x < b.x; });
  const auto [ymin, ymax] = std::minmax_element(
      poly.vertices().begin(), poly.vertices().end(),
      [](const Point& a, const Point& b) { return a.y < b.y; });
  return (ymax->y - ymin->y) > (xmax->x - xmin->x) ? Axis::Y : Axis::X;
}

SortedOrder sort_vertices(const Polygon& poly, Axis axis) {
  const std::size_t n = poly.size();
  SortedOrder so;
  so.axis = axis;
  so.order.resize(n);
  std::iota(so.order.begin(), so.order.end(), std::size_t{0});
  std::sort(so.order.begin(), so.order.end(), [&](std::size_t a, std::size_t b) {
    const double ca = coord(poly[a], axis);
    const double cb = coord(poly[b], axis);
    return ca < cb || (ca == cb && a < b);
  });
  so.rank.resize(n);
  so.run_start.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    so.rank[so.order[p]] = p;
    const bool same = p > 0 && coord(poly[so.order[p]], axis) == coord(poly[so.order[p - 1]], axis);
    so.run_start[p] = same ? so.run_start[p - 1] : p;
  }
  return so;
}

bool is_valid_order(const SortedOrder& so, const Polygon& poly) {
  const std::size_t n = poly.size();
  if (so.order.size() != n || so.rank.size() != n || so.run_start.size() != n) return false;
  for (std::size_t p = 0; p < n; ++p) {
    if (so.order[p] >= n || so.rank[so.order[p]] != p) return false;
    const double c = coord(poly[so.order[p]], so.axis);
    if (p > 0 && coord(poly[so.order[p - 1]], so.axis) > c) return false;
    const std::size_t s = so.run_start[p];
    if (s > p || coord(poly[so.order[s]], so.axis) != c) return false;
    if (s > 0 && coord(poly[so.order[s - 1]], so.axis) == c) return false;
  }
  return true;
}

void remap_after_reversal(SortedOrder& so, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi >= so.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "remap range [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "] out of bounds");
  }
  // Update sorted entries first, while rank still describes the old labels.
  for (std::size_t v = lo; v <= hi; ++v) so.order[so.rank[v]] = lo + hi - v;
  for (std::size_t a = lo, b = hi; a < b; ++a, --b) std::swap(so.rank[a], so.rank[b]);
}

SortedOrder resort_after_reversal(SortedOrder so, std::size_t lo, std::size_t hi) {
  remap_after_reversal(so, lo, hi);
  return so;
}

UpwardEdges upward_segments(const Polygon& poly, const SortedOrder& so, std::size_t v) {
  UpwardEdges up;
  const std::size_t r = so.rank[v];
  const std::size_t nxt = poly.next(v);
  const std::size_t prv = poly.prev(v);
  if (so.rank[nxt] > r) {
    up.edge[up.count] = v;
    up.far[up.count] = nxt;
    ++up.count;
  }
  if (so.rank[prv] > r) {
    up.edge[up.count] = prv;
    up.far[up.count] = prv;
    ++up.count;
  }
  return up;
}

namespace {

struct Hit {
  std::size_t studied_edge;
  std::size_t candidate_edge;
  std::size_t far_pos;    // position of the studied edge's upper end before the fix
  std::size_t cand_pos;   // r: position where the candidate was met
  std::size_t other_pos;  // position of the candidate edge's other extremity
  Point at;
};

// Tests edges e and f (non-adjacent). Throws on degenerate contact.
std::optional<Point> proper_cross(const Polygon& poly, std::size_t e, std::size_t f, Axis perp) {
  const std::size_t i = std::min(e, f);
  const std::size_t j = std::max(e, f);
  const Segment si = poly.edge(i);
  const Segment sj = poly.edge(j);
  if (!interval_overlap(si, sj, perp)) return std::nullopt;
  const CrossResult cr = segment_cross(si, sj);
  if (cr.kind == CrossKind::Degenerate) throw DegenerateInputError(i, j);
  if (cr.kind == CrossKind::Proper) return cr.point;
  return std::nullopt;
}

// The other endpoint of the edge numbered `edge` that meets vertex u.
std::size_t other_end(const Polygon& poly, std::size_t u, std::size_t edge) {
  return edge == u ? poly.next(u) : edge;
}

// Plain forward scan; returns the position of the lower bottom extremity of the
// first crossing met.
std::optional<std::size_t> first_crossing_position(const Polygon& poly, const SortedOrder& so,
                                                   std::size_t& explored) {
  const Axis perp = perpendicular(so.axis);
  const std::size_t n = poly.size();
  for (std::size_t p = 0; p < n; ++p) {
    const UpwardEdges up = upward_segments(poly, so, so.order[p]);
    for (std::size_t q = 0; q < up.count; ++q) {
      const std::size_t far_pos = so.rank[up.far[q]];
      const std::size_t upper = so.run_end(far_pos);
      for (std::size_t r = p + 1; r <= upper; ++r) {
        if (r == far_pos) continue;
        ++explored;
        const UpwardEdges cand = upward_segments(poly, so, so.order[r]);
        for (std::size_t s = 0; s < cand.count; ++s) {
          if (poly.edges_adjacent(up.edge[q], cand.edge[s])) continue;
          if (proper_cross(poly, up.edge[q], cand.edge[s], perp)) return p;
        }
      }
    }
  }
  return std::nullopt;
}

// Backtracking memory carried between positions of the correcting scan.
struct ScanState {
  std::optional<std::size_t> last_pos;
  std::size_t former_upper = 0;  // meaningful iff last_pos
  std::optional<std::size_t> impact_lo;
  std::size_t impact_hi = 0;  // meaningful iff impact_lo

  bool backtrack_allowed(std::size_t p) const {
    return impact_lo && *impact_lo <= p && p <= impact_hi;
  }
};

class Corrector {
 public:
  Corrector(const Polygon& poly, const CorrectOptions& options)
      : poly_(poly),
        so_(sort_vertices(poly_, options.axis.value_or(major_axis(poly_)))),
        perp_(perpendicular(so_.axis)),
        options_(options) {
    metrics_.n_vertices = poly_.size();
  }

  Correction run() {
    const std::size_t n = poly_.size();
    const auto initial = try_orientation(poly_);
    std::size_t p = 0;
    for (;;) {
      while (p < n) {
        ++metrics_.n_real;
        const auto hit = scan(p);
        p = hit ? fix(p, *hit) : p + 1;
      }
      if (!options_.confirm_sweep) break;
      const auto residual = first_crossing_position(poly_, so_, metrics_.verify_explored);
      if (!residual) break;
      ++metrics_.rescans;
      state_ = ScanState{};
      p = so_.run_start[*residual];
    }
    if (initial) {
      const auto final_sign = try_orientation(poly_);
      if (final_sign && *final_sign != *initial) poly_.reverse(1, n - 1);
    }
    return Correction{poly_, so_.axis, std::move(events_), metrics_};
  }

 private:
  std::optional<Hit> scan(std::size_t p) {
    const std::size_t v = so_.order[p];
    const UpwardEdges up = upward_segments(poly_, so_, v);
    const bool backtrack = state_.backtrack_allowed(p);
    const bool restore_upper = state_.last_pos && *state_.last_pos == p;

    for (std::size_t q = 0; q < up.count; ++q) {
      const std::size_t e = up.edge[q];
      const std::size_t far_pos = so_.rank[up.far[q]];
      std::size_t upper = so_.run_end(far_pos);
      if (restore_upper) upper = std::max(upper, state_.former_upper);

      for (std::size_t r = p + 1; r <= upper && r < so_.size(); ++r) {
        if (r == far_pos) continue;
        ++metrics_.explored;
        const std::size_t u = so_.order[r];
        for (const std::size_t f : {u, poly_.prev(u)}) {
          const std::size_t other_pos = so_.rank[other_end(poly_, u, f)];
          if (!backtrack && other_pos < r) continue;
          if (poly_.edges_adjacent(e, f)) continue;
          if (auto at = proper_cross(poly_, e, f, perp_)) {
            return Hit{e, f, far_pos, r, other_pos, *at};
          }
        }
      }
    }
    return std::nullopt;
  }

  // Applies the correction and returns the position to resume from.
  std::size_t fix(std::size_t p, const Hit& hit) {
    const std::size_t n = poly_.size();
    const std::size_t i = std::min(hit.studied_edge, hit.candidate_edge);
    const std::size_t j = std::max(hit.studied_edge, hit.candidate_edge);
    events_.push_back({i, j, hit.at});
    if (events_.size() > options_.cap_factor * n * n) abort_non_terminating();

    // Positions of the four extremities; they survive relabeling.
    const std::size_t touched[4] = {so_.rank[i], so_.rank[poly_.next(i)], so_.rank[j],
                                    so_.rank[poly_.next(j)]};

    const CrossingFix cf = apply_crossing_fix(poly_, i, j);
    remap_after_reversal(so_, cf.lo, cf.hi);
    if (cf.guard_fired) remap_after_reversal(so_, 1, n - 1);
    ++metrics_.n_crossings;

    state_.last_pos = p;
    state_.former_upper = hit.far_pos;
    state_.impact_hi = std::max({hit.cand_pos, touched[0], touched[1], touched[2], touched[3]});

    std::size_t target = p;
    if (hit.other_pos < p) {
      // The candidate came from below: resume at the lowest extremity of the
      // edges now ending at that vertex, if one lies further down.
      state_.impact_lo = hit.other_pos;
      const std::size_t s = so_.order[hit.other_pos];
      const std::size_t lowest = std::min(so_.rank[poly_.prev(s)], so_.rank[poly_.next(s)]);
      if (lowest < hit.other_pos) target = lowest;
    } else {
      state_.impact_lo = p;
    }
    return so_.run_start[target];
  }

  [[noreturn]] void abort_non_terminating() const {
    std::ostringstream out;
    out.precision(17);
    out << "correction did not terminate after " << events_.size() << " fixes on N="
        << poly_.size() << "; polygon:";
    for (const Point& pt : poly_.vertices()) out << ' ' << pt.x << ',' << pt.y;
    out << "; last events:";
    const std::size_t from = events_.size() > 8 ? events_.size() - 8 : 0;
    for (std::size_t k = from; k < events_.size(); ++k) {
      out << " (" << events_[k].edge_i << ',' << events_[k].edge_j << ')';
    }
    throw Error(ErrorCode::NonTermination, out.str());
  }

  Polygon poly_;
  SortedOrder so_;
  Axis perp_;
  CorrectOptions options_;
  ScanState state_;
  RunMetrics metrics_;
  std::vector<IntersectionEvent> events_;
};

}  // namespace

ScanReport report_intersections(const Polygon& poly, std::optional<Axis> axis) {
  ScanReport out;
  out.axis = axis.value_or(major_axis(poly));
  const SortedOrder so = sort_vertices(poly, out.axis);
  const Axis perp = perpendicular(out.axis);
  const std::size_t n = poly.size();
  out.metrics.n_vertices = n;

  for (std::size_t p = 0; p < n; ++p) {
    ++out.metrics.n_real;
    const UpwardEdges up = upward_segments(poly, so, so.order[p]);
    for (std::size_t q = 0; q < up.count; ++q) {
      const std::size_t e = up.edge[q];
      const std::size_t far_pos = so.rank[up.far[q]];
      const std::size_t upper = so.run_end(far_pos);
      for (std::size_t r = p + 1; r <= upper; ++r) {
        if (r == far_pos) continue;
        ++out.metrics.explored;
        const UpwardEdges cand = upward_segments(poly, so, so.order[r]);
        for (std::size_t s = 0; s < cand.count; ++s) {
          const std::size_t f = cand.edge[s];
          if (poly.edges_adjacent(e, f)) continue;
          if (auto at = proper_cross(poly, e, f, perp)) {
            out.events.push_back({std::min(e, f), std::max(e, f), *at});
          }
        }
      }
    }
  }
  // Each pair is met once, from the edge with the lower bottom extremity; sort
  // into (i, j) order for callers.
  std::sort(out.events.begin(), out.events.end(), [](const auto& a, const auto& b) {
    return std::tie(a.edge_i, a.edge_j) < std::tie(b.edge_i, b.edge_j);
  });
  return out;
}

Correction correct_all(const Polygon& poly, const CorrectOptions& options) {
  return Corrector(poly, options).run();
}

}  // namespace polyscan
