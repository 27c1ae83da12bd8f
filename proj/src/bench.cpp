#include "polyscan/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>
#include <tuple>

#include "polyscan/error.hpp"
#include "polyscan/region_query.hpp"

namespace polyscan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fixed transforms on top of mt19937_64 (whose output is fully specified), so
// corpora are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(uniform() * bound); }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * uniform());
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Periodic fractional-Brownian profile on m = 2^k samples by midpoint
// displacement, normalised to zero mean and unit deviation.
class FractalRing {
 public:
  FractalRing(std::size_t min_samples, double hurst, Rng& rng)
      : values_(std::bit_ceil(std::max<std::size_t>(min_samples, 4))) {
    const std::size_t m = values_.size();
    std::size_t step = m / 4;
    for (std::size_t k = 0; k < 4; ++k) values_[k * step] = rng.normal();
    double scale = 1.0;
    while (step > 1) {
      const std::size_t half = step / 2;
      scale *= std::pow(0.5, hurst);
      for (std::size_t k = half; k < m; k += step) {
        values_[k] = 0.5 * (values_[k - half] + values_[(k + half) % m]) + scale * rng.normal();
      }
      step = half;
    }
    double mean = 0.0;
    for (double v : values_) mean += v;
    mean /= static_cast<double>(m);
    double var = 0.0;
    for (double v : values_) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / static_cast<double>(m));
    for (double& v : values_) v = sd > 0.0 ? (v - mean) / sd : 0.0;
  }

  // t in [0, 1), linear interpolation around the ring.
  double at(double t) const {
    const double pos = t * static_cast<double>(values_.size());
    const double fl = std::floor(pos);
    const std::size_t k = static_cast<std::size_t>(fl) % values_.size();
    const double w = pos - fl;
    return (1.0 - w) * values_[k] + w * values_[(k + 1) % values_.size()];
  }

 private:
  std::vector<double> values_;
};

// Coastline-like roughness: edge extent along the sort axis shrinks like
// N^-0.75, so scan work per edge grows slowly with N.
constexpr double kHurst = 0.75;
constexpr double kRadialAmplitude = 0.25;

Polygon random_star(std::size_t n, Rng& rng, double noise) {
  std::vector<double> angles(n);
  for (double& a : angles) a = rng.uniform(0.0, kTwoPi);
  std::sort(angles.begin(), angles.end());
  const FractalRing ring(n, kHurst, rng);
  std::vector<Point> pts;
  pts.reserve(n);
  for (double a : angles) {
    const double r = std::max(0.05, 1.0 + noise * kRadialAmplitude * ring.at(a / kTwoPi));
    pts.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  // Shuffle a few blocks of four: local disorder in the angular ordering.
  for (std::size_t b = 0; b + 4 <= n; b += 4) {
    if (rng.uniform() >= 0.15 * noise) continue;
    for (std::size_t k = 3; k > 0; --k) std::swap(pts[b + k], pts[b + rng.below(k + 1)]);
  }
  return Polygon(std::move(pts));
}

Polygon noisy_contour(std::size_t n, Rng& rng, double noise) {
  const FractalRing ring(n, kHurst, rng);
  std::vector<Point> pts;
  pts.reserve(n);
  const double spacing = kTwoPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n);
    const double a = kTwoPi * t + noise * rng.uniform(-0.6, 0.6) * spacing;
    const double r = std::max(0.05, 1.0 + noise * kRadialAmplitude * ring.at(t));
    pts.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return Polygon(std::move(pts));
}

// Chain x strictly increasing from (0,0) to (1,1), alternating between a top
// band near y = 9..10 and bottom vertices just above the closing diagonal.
Polygon worst_case_fan(std::size_t n, Rng& rng, double noise) {
  std::vector<Point> pts;
  pts.reserve(n);
  pts.emplace_back(0.0, 0.0);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(n - 1);
    const double u = noise * rng.uniform();
    const double y = (k % 2 == 1) ? 9.0 + std::min(u, 0.999) : x + (1.0 - x) * (0.2 + 0.6 * std::min(u, 1.0));
    pts.emplace_back(x, y);
  }
  pts.emplace_back(1.0, 1.0);
  return Polygon(std::move(pts));
}

Polygon perpendicular_heavy(std::size_t n, Rng& rng, double noise) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const double tooth = (k % 2 == 1 ? 1.0 : -1.0) * noise * 0.35 * (0.5 + 0.5 * rng.uniform());
    pts.emplace_back(3.0 * std::cos(a), std::sin(a) + tooth);
  }
  return Polygon(std::move(pts));
}

template <typename T>
T mean(const std::vector<T>& v) {
  T s{};
  for (const T& x : v) s += x;
  return v.empty() ? T{} : s / static_cast<T>(v.size());
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::RandomStar: return "RandomStar";
    case Family::NoisyContour: return "NoisyContour";
    case Family::WorstCaseFan: return "WorstCaseFan";
    case Family::PerpendicularHeavy: return "PerpendicularHeavy";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::RandomStar, Family::NoisyContour, Family::WorstCaseFan,
                   Family::PerpendicularHeavy}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Algo algo) {
  switch (algo) {
    case Algo::Report: return "report";
    case Algo::Correct: return "correct";
    case Algo::QueryStrict: return "query-strict";
    case Algo::QueryRelaxed: return "query-relaxed";
  }
  return "?";
}

Algo parse_algo(std::string_view name) {
  for (Algo a : {Algo::Report, Algo::Correct, Algo::QueryStrict, Algo::QueryRelaxed}) {
    if (name == to_string(a)) return a;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown algo '" + std::string(name) + "'");
}

Polygon gen_polygon(Family family, std::size_t n, std::uint64_t seed, double noise) {
  if (n < 4) throw Error(ErrorCode::InvalidSpec, "corpus polygons need N >= 4");
  if (!(noise >= 0.0) || !std::isfinite(noise)) {
    throw Error(ErrorCode::InvalidSpec, "noise must be finite and >= 0");
  }
  Rng rng(splitmix(seed ^ splitmix((static_cast<std::uint64_t>(family) << 48) ^ n)));
  switch (family) {
    case Family::RandomStar: return random_star(n, rng, noise);
    case Family::NoisyContour: return noisy_contour(n, rng, noise);
    case Family::WorstCaseFan: return worst_case_fan(n, rng, noise);
    case Family::PerpendicularHeavy: return perpendicular_heavy(n, rng, noise);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

InstrumentedRun run_instrumented(const Polygon& poly, Algo algo) {
  InstrumentedRun out;
  switch (algo) {
    case Algo::Report: {
      const ScanReport rep = report_intersections(poly);
      out.metrics = rep.metrics;
      out.k = rep.events.size();
      break;
    }
    case Algo::Correct: {
      const Correction cor = correct_all(poly);
      out.metrics = cor.metrics;
      out.k = cor.metrics.n_crossings;
      break;
    }
    case Algo::QueryStrict:
    case Algo::QueryRelaxed: {
      const QueryMode mode = algo == Algo::QueryStrict ? QueryMode::Strict : QueryMode::Relaxed;
      const RegionQuery rq(poly);
      out.metrics.n_vertices = poly.size();
      out.metrics.n_real = poly.size();
      for (std::size_t e = 0; e < poly.size(); ++e) {
        const QueryResult res = rq.query(e, mode, true);
        out.metrics.explored += res.explored;
        out.k += res.crossings.size();
      }
      break;
    }
  }
  return out;
}

FitResult fit_exponent(const std::vector<FitPoint>& points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::InsufficientData, "exponent fit needs at least 3 points");
  }
  std::vector<double> xs, ys;
  for (const FitPoint& p : points) {
    if (!(p.n > 0.0) || !(p.value > 0.0)) {
      throw Error(ErrorCode::InsufficientData, "exponent fit needs positive N and values");
    }
    xs.push_back(std::log(p.n));
    ys.push_back(std::log(p.value));
  }
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    syy += (ys[k] - my) * (ys[k] - my);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  if (sxx <= 0.0) throw Error(ErrorCode::InsufficientData, "exponent fit needs distinct N values");
  FitResult fit;
  fit.n_points = points.size();
  fit.exponent = sxy / sxx;
  fit.constant = std::exp(my - fit.exponent * mx);
  // Logs of equal values can still scatter by an ulp; treat that as constant.
  const double noise_floor = 1e-24 * static_cast<double>(ys.size()) * (1.0 + my * my);
  fit.correlation = syy > noise_floor ? sxy / std::sqrt(sxx * syy) : 0.0;
  return fit;
}

std::vector<BenchRow> run_corpus(const CorpusSpec& spec, const std::vector<Algo>& algos,
                                 unsigned threads) {
  for (std::size_t n : spec.sizes) {
    if (n < 4) throw Error(ErrorCode::InvalidSpec, "corpus sizes must be >= 4");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      for (Algo algo : algos) rows.push_back({spec.family, n, seed, algo, {}});
    }
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < rows.size(); k = next++) {
          try {
            BenchRow& row = rows[k];
            row.run = run_instrumented(gen_polygon(row.family, row.n, row.seed), row.algo);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

OverheadSummary backtrack_overhead(const std::vector<BenchRow>& rows) {
  OverheadSummary s;
  double pct_sum = 0.0;
  for (const BenchRow& row : rows) {
    if (row.algo != Algo::Correct) continue;
    ++s.polygons;
    const double pct = 100.0 * static_cast<double>(row.run.metrics.n_supp()) / static_cast<double>(row.n);
    s.max_pct = std::max(s.max_pct, pct);
    if (row.run.metrics.n_supp() > 0) {
      ++s.with_extra;
      pct_sum += pct;
    }
  }
  if (s.polygons > 0) s.fraction_with_extra = static_cast<double>(s.with_extra) / static_cast<double>(s.polygons);
  if (s.with_extra > 0) s.mean_pct_with_extra = pct_sum / static_cast<double>(s.with_extra);
  return s;
}

std::vector<GroupFit> fit_groups(const std::vector<BenchRow>& rows) {
  std::map<std::pair<Family, Algo>, std::vector<FitPoint>> groups;
  for (const BenchRow& row : rows) {
    const double avg = row.run.metrics.avg_explored();
    if (avg > 0.0) groups[{row.family, row.algo}].push_back({static_cast<double>(row.n), avg});
  }
  std::vector<GroupFit> out;
  for (const auto& [key, pts] : groups) {
    try {
      out.push_back({key.first, key.second, fit_exponent(pts)});
    } catch (const Error&) {
      // too few points or a single size: nothing to fit
    }
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  const auto old = out.precision(17);
  out << "family,N,seed,algo,explored,avg_explored,k,n_real,n_supp\n";
  for (const BenchRow& r : rows) {
    const RunMetrics& m = r.run.metrics;
    out << to_string(r.family) << ',' << r.n << ',' << r.seed << ',' << to_string(r.algo) << ','
        << m.explored << ',' << m.avg_explored() << ',' << r.run.k << ',' << m.n_real << ','
        << m.n_supp() << '\n';
  }
  out.precision(old);
}

void write_fit_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  const auto old = out.precision(17);
  out << "family,algo,constant,exponent,correlation\n";
  for (const GroupFit& g : fit_groups(rows)) {
    out << to_string(g.family) << ',' << to_string(g.algo) << ',' << g.fit.constant << ','
        << g.fit.exponent << ',' << g.fit.correlation << '\n';
  }
  out.precision(old);
}

void write_overhead_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  const auto old = out.precision(17);
  out << "family,N,seed,n_supp,pct\n";
  for (const BenchRow& r : rows) {
    if (r.algo != Algo::Correct) continue;
    out << to_string(r.family) << ',' << r.n << ',' << r.seed << ',' << r.run.metrics.n_supp() << ','
        << 100.0 * static_cast<double>(r.run.metrics.n_supp()) / static_cast<double>(r.n) << '\n';
  }
  const OverheadSummary s = backtrack_overhead(rows);
  out << "# polygons=" << s.polygons << " with_extra=" << s.with_extra
      << " fraction=" << s.fraction_with_extra << " mean_pct=" << s.mean_pct_with_extra
      << " max_pct=" << s.max_pct << '\n';
  out.precision(old);
}

void write_scatter_svg(std::ostream& out, const std::vector<BenchRow>& rows) {
  constexpr double W = 720, H = 480, M = 60;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const BenchRow& r : rows) {
    const double avg = r.run.metrics.avg_explored();
    if (avg <= 0.0) continue;
    xmin = std::min(xmin, std::log10(static_cast<double>(r.n)));
    xmax = std::max(xmax, std::log10(static_cast<double>(r.n)));
    ymin = std::min(ymin, std::log10(avg));
    ymax = std::max(ymax, std::log10(avg));
  }
  if (xmin > xmax) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax - xmin < 1e-9) xmax = xmin + 1;
  if (ymax - ymin < 1e-9) ymax = ymin + 1;
  const auto sx = [&](double lx) { return M + (lx - xmin) / (xmax - xmin) * (W - 2 * M); };
  const auto sy = [&](double ly) { return H - M - (ly - ymin) / (ymax - ymin) * (H - 2 * M); };
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\"" << H - M
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << W / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">log10 N</text>\n"
      << "<text x=\"15\" y=\"" << H / 2 << "\" transform=\"rotate(-90 15 " << H / 2
      << ")\" text-anchor=\"middle\">log10 explored per edge</text>\n";
  for (const BenchRow& r : rows) {
    const double avg = r.run.metrics.avg_explored();
    if (avg <= 0.0) continue;
    out << "<circle cx=\"" << sx(std::log10(static_cast<double>(r.n))) << "\" cy=\""
        << sy(std::log10(avg)) << "\" r=\"2\" fill=\"" << colors[static_cast<int>(r.algo)]
        << "\" fill-opacity=\"0.5\"/>\n";
  }
  double legend_y = M;
  for (const GroupFit& g : fit_groups(rows)) {
    const auto line_y = [&](double lx) {
      return std::log10(g.fit.constant) + g.fit.exponent * lx;
    };
    const char* color = colors[static_cast<int>(g.algo)];
    out << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(line_y(xmin)) << "\" x2=\"" << sx(xmax)
        << "\" y2=\"" << sy(line_y(xmax)) << "\" stroke=\"" << color << "\"/>\n"
        << "<text x=\"" << M + 10 << "\" y=\"" << legend_y << "\" fill=\"" << color << "\">"
        << to_string(g.family) << ' ' << to_string(g.algo) << ": " << g.fit.constant << " N^"
        << g.fit.exponent << " (r=" << g.fit.correlation << ")</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
}

}  // namespace polyscan
