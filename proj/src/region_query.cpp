#include "polyscan/region_query.hpp"

#include <algorithm>
#include <string>

#include "polyscan/error.hpp"

namespace polyscan {

void SectionTracker::feed(std::size_t candidate, std::size_t pos, QueryMode mode) {
  const auto c = static_cast<std::int64_t>(candidate);
  if (!start) {
    start = c;
    end = c + step;
    num_start = pos;
    return;
  }
  if (c == end) {
    // The expected successor right next to the run start means a segment
    // perpendicular to the sort axis, not a homogeneous section.
    const std::size_t gap = pos > num_start ? pos - num_start : num_start - pos;
    if (gap == 1) {
      start.reset();
    } else {
      complete = true;
    }
    return;
  }
  const std::int64_t ahead = (c - *start) * step;
  if (ahead > 0) {
    if (mode == QueryMode::Relaxed && complete) return;
    start = c;
    end = c + step;
    num_start = pos;
    complete = false;
  } else if (ahead < 0) {
    start.reset();
    complete = false;
  }
}

std::pair<Polygon, SortedOrder> renumber_from_lowest(const Polygon& poly, const SortedOrder& so) {
  const std::size_t n = poly.size();
  const std::size_t shift = so.order[0];
  if (shift == 0) return {poly, so};

  std::vector<Point> pts(n);
  for (std::size_t k = 0; k < n; ++k) pts[k] = poly[(k + shift) % n];
  SortedOrder out = so;
  for (std::size_t p = 0; p < n; ++p) {
    out.order[p] = (so.order[p] + n - shift) % n;
    out.rank[out.order[p]] = p;
  }
  return {Polygon(std::move(pts)), std::move(out)};
}

namespace {

class EdgeQuery {
 public:
  EdgeQuery(const Polygon& poly, const SortedOrder& so, std::size_t i, QueryMode mode)
      : poly_(poly), so_(so), edge_(i), seg_(poly.edge(i)), perp_(perpendicular(so.axis)), mode_(mode) {}

  QueryResult run(bool higher_only) {
    const std::size_t n = poly_.size();
    const std::size_t half = so_.order[n - 1];
    const std::size_t a = so_.rank[edge_];
    const std::size_t b = so_.rank[poly_.next(edge_)];
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);

    for (std::size_t r = lo + 1; r < hi; ++r) visit(r, QueryPhase::Between);

    // Below: the chain of numbers under `half` descends as we walk down, the
    // other chain ascends towards N-1.
    SectionTracker lower_right(-1);
    SectionTracker lower_left(+1);
    for (std::size_t r = lo; r-- > 0;) {
      const std::size_t u = visit(r, QueryPhase::Below);
      if (u < half) lower_right.feed(u, r, mode_);
      if (u > half) lower_left.feed(u, r, mode_);
      if (lower_right.complete && lower_left.complete) break;
    }

    SectionTracker upper_right(+1);
    SectionTracker upper_left(-1);
    for (std::size_t r = hi + 1; r < n; ++r) {
      const std::size_t u = visit(r, QueryPhase::Above);
      if (u < half) upper_right.feed(u, r, mode_);
      if (u > half) upper_left.feed(u, r, mode_);
      if (upper_right.complete && upper_left.complete) break;
    }

    QueryResult out;
    out.explored = explored_;
    std::sort(hits_.begin(), hits_.end());
    for (const auto& [edge, phase] : hits_) {
      if (higher_only && edge <= edge_) continue;
      if (!out.crossings.empty() && out.crossings.back() == edge) continue;
      out.crossings.push_back(edge);
      out.found_in.push_back(phase);
    }
    std::sort(degenerate_.begin(), degenerate_.end());
    degenerate_.erase(std::unique(degenerate_.begin(), degenerate_.end()), degenerate_.end());
    for (const std::size_t e : degenerate_) {
      if (!higher_only || e > edge_) out.degenerate.push_back(e);
    }
    return out;
  }

 private:
  // Tests both edges at the vertex in position r; returns that vertex.
  std::size_t visit(std::size_t r, QueryPhase phase) {
    ++explored_;
    const std::size_t u = so_.order[r];
    for (const std::size_t f : {u, poly_.prev(u)}) {
      if (poly_.edges_adjacent(edge_, f)) continue;
      const Segment sf = poly_.edge(f);
      if (!interval_overlap(seg_, sf, perp_)) continue;
      const CrossResult cr = edge_ < f ? segment_cross(seg_, sf) : segment_cross(sf, seg_);
      if (cr.kind == CrossKind::Proper) hits_.emplace_back(f, phase);
      if (cr.kind == CrossKind::Degenerate) degenerate_.push_back(f);
    }
    return u;
  }

  const Polygon& poly_;
  const SortedOrder& so_;
  std::size_t edge_;
  Segment seg_;
  Axis perp_;
  QueryMode mode_;
  std::size_t explored_ = 0;
  // Phase enumerators are ordered, so after sorting the first entry of each
  // edge carries the earliest phase.
  std::vector<std::pair<std::size_t, QueryPhase>> hits_;
  std::vector<std::size_t> degenerate_;
};

void check_query_inputs(const Polygon& poly, const SortedOrder& so, std::size_t i) {
  if (i >= poly.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(i) + " out of range");
  }
  if (so.size() != poly.size() || so.order[0] != 0) {
    throw Error(ErrorCode::InvalidSpec, "region query needs a polygon renumbered from its lowest vertex");
  }
}

}  // namespace

QueryResult query_edge(const Polygon& poly, const SortedOrder& so, std::size_t i, QueryMode mode,
                       bool higher_only) {
  check_query_inputs(poly, so, i);
  return EdgeQuery(poly, so, i, mode).run(higher_only);
}

std::size_t query_explored_count(const Polygon& poly, const SortedOrder& so, std::size_t i,
                                 QueryMode mode) {
  return query_edge(poly, so, i, mode, false).explored;
}

RegionQuery::RegionQuery(const Polygon& poly, std::optional<Axis> axis)
    : RegionQuery(poly, sort_vertices(poly, axis.value_or(major_axis(poly)))) {}

RegionQuery::RegionQuery(const Polygon& poly, const SortedOrder& so)
    : RegionQuery(so.order[0], renumber_from_lowest(poly, so)) {}

RegionQuery::RegionQuery(std::size_t shift, std::pair<Polygon, SortedOrder> renumbered)
    : shift_(shift), poly_(std::move(renumbered.first)), so_(std::move(renumbered.second)) {}

QueryResult RegionQuery::query(std::size_t edge, QueryMode mode, bool higher_only) const {
  const std::size_t n = poly_.size();
  if (edge >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(edge) + " out of range");
  }
  // Query in renumbered space, then map indices back. The higher-only filter
  // is applied after mapping since rotation does not preserve index order.
  QueryResult res = query_edge(poly_, so_, (edge + n - shift_) % n, mode, false);
  std::vector<std::pair<std::size_t, QueryPhase>> mapped;
  for (std::size_t k = 0; k < res.crossings.size(); ++k) {
    const std::size_t orig = (res.crossings[k] + shift_) % n;
    if (!higher_only || orig > edge) mapped.emplace_back(orig, res.found_in[k]);
  }
  std::sort(mapped.begin(), mapped.end());
  res.crossings.clear();
  res.found_in.clear();
  for (const auto& [e, ph] : mapped) {
    res.crossings.push_back(e);
    res.found_in.push_back(ph);
  }
  for (auto& e : res.degenerate) e = (e + shift_) % n;
  std::sort(res.degenerate.begin(), res.degenerate.end());
  if (higher_only) std::erase_if(res.degenerate, [&](std::size_t e) { return e <= edge; });
  return res;
}

}  // namespace polyscan
