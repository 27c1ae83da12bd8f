#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polyscan/polygon.hpp"
#include "polyscan/scanline.hpp"

namespace polyscan {

enum class Family : std::uint8_t {
  RandomStar,          // random angles, fractal radius, locally shuffled ordering
  NoisyContour,        // evenly spaced angles, fractal radius, angular jitter
  WorstCaseFan,        // zigzag of long edges all overlapping along the sort axis
  PerpendicularHeavy,  // wide serrated contour, edges mostly across the sort axis
};

std::string_view to_string(Family family);
Family parse_family(std::string_view name);  // throws InvalidSpec

struct CorpusSpec {
  Family family = Family::RandomStar;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;  // one polygon per (size, seed)
};

// Deterministic for a given (family, n, seed, noise) on every platform.
// `noise` scales every random perturbation; 0 gives the unperturbed shape.
Polygon gen_polygon(Family family, std::size_t n, std::uint64_t seed, double noise = 1.0);

enum class Algo : std::uint8_t { Report, Correct, QueryStrict, QueryRelaxed };

std::string_view to_string(Algo algo);
Algo parse_algo(std::string_view name);  // throws InvalidSpec

struct InstrumentedRun {
  RunMetrics metrics;
  std::size_t k = 0;  // crossings reported, corrected, or found by queries (pairs)
};

// Query runs ask about every edge; their explored count is the total over all
// queries, so avg_explored is the per-edge query cost.
InstrumentedRun run_instrumented(const Polygon& poly, Algo algo);

struct FitResult {
  double constant = 0.0;
  double exponent = 0.0;
  double correlation = 0.0;  // of the logged data; 0 when either side is constant
  std::size_t n_points = 0;
};

struct FitPoint {
  double n = 0.0;
  double value = 0.0;
};

// Least squares of log(value) = log(constant) + exponent * log(n).
// Throws InsufficientData with fewer than 3 points or any non-positive value.
FitResult fit_exponent(const std::vector<FitPoint>& points);

struct BenchRow {
  Family family = Family::RandomStar;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Algo algo = Algo::Report;
  InstrumentedRun run;
};

// Runs every (size, seed, algo) combination, fanning out over `threads`
// workers (0 = hardware concurrency). Rows come back in input order.
std::vector<BenchRow> run_corpus(const CorpusSpec& spec, const std::vector<Algo>& algos,
                                 unsigned threads = 0);

struct OverheadSummary {
  std::size_t polygons = 0;
  std::size_t with_extra = 0;        // polygons with n_supp > 0
  double fraction_with_extra = 0.0;  // with_extra / polygons
  double mean_pct_with_extra = 0.0;  // mean of 100 * n_supp / N over those polygons
  double max_pct = 0.0;
};

// Summarises the correction rows of a corpus run (other algos are ignored).
OverheadSummary backtrack_overhead(const std::vector<BenchRow>& rows);

// bench.csv: family,N,seed,algo,explored,avg_explored,k,n_real,n_supp
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
// fit.csv: family,algo,constant,exponent,correlation
void write_fit_csv(std::ostream& out, const std::vector<BenchRow>& rows);
// Per-polygon n_supp percentages followed by a summary line.
void write_overhead_csv(std::ostream& out, const std::vector<BenchRow>& rows);
// Log-log scatter of avg_explored against N with one fitted line per algo.
void write_scatter_svg(std::ostream& out, const std::vector<BenchRow>& rows);

// Fits avg_explored against N for each (family, algo) group present in rows.
struct GroupFit {
  Family family;
  Algo algo;
  FitResult fit;
};
std::vector<GroupFit> fit_groups(const std::vector<BenchRow>& rows);

}  // namespace polyscan
