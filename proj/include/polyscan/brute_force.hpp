#pragma once

#include <cstddef>
#include <vector>

#include "polyscan/polygon.hpp"
#include "polyscan/scanline.hpp"

namespace polyscan {

// All-pairs reference implementations. They favour obviousness over speed and
// serve as oracles for the scan-line and region-query code.

// Every proper crossing over non-adjacent pairs, in lexicographic (i, j)
// order. Throws DegenerateInputError on contact or overlap.
std::vector<IntersectionEvent> bf_report(const Polygon& poly);

struct BruteCorrection {
  Polygon polygon;
  std::vector<IntersectionEvent> events;
};

// Pairs are visited in increasing (i, j). After fixing (i, j), edges in
// [i, j] are re-checked against every lower edge and the scan resumes at the
// lowest index involved.
BruteCorrection bf_correct_v2(const Polygon& poly, std::size_t cap_factor = 4);

// As v2, but after a fix only the two new edges are checked against lower
// edges, recursing on any further fix.
BruteCorrection bf_correct_v3(const Polygon& poly, std::size_t cap_factor = 4);

// Edges properly crossing edge i; with higher_only, only indices above i.
std::vector<std::size_t> bf_query(const Polygon& poly, std::size_t i, bool higher_only);

}  // namespace polyscan
