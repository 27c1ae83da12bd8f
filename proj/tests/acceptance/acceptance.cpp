// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.
// Usage: acceptance <path-to-polyscan-cli>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "polyscan/bench.hpp"
#include "polyscan/brute_force.hpp"
#include "polyscan/error.hpp"
#include "polyscan/io.hpp"
#include "polyscan/region_query.hpp"
#include "polyscan/scanline.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace polyscan;
using polyscan::testing::CorpusPolygon;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string describe(const CorpusPolygon& c) {
  std::ostringstream ss;
  ss << to_string(c.family) << " n=" << c.n << " seed=" << c.seed;
  return ss.str();
}

std::vector<std::size_t> powers_of_two(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = first + k;
  return out;
}

std::vector<FitPoint> fit_points(const std::vector<BenchRow>& rows, Algo algo) {
  std::vector<FitPoint> pts;
  for (const BenchRow& r : rows) {
    if (r.algo == algo) pts.push_back({static_cast<double>(r.n), r.run.metrics.avg_explored()});
  }
  return pts;
}

std::string fit_text(const FitResult& f) {
  std::ostringstream ss;
  ss.precision(4);
  ss << f.constant << "*N^" << f.exponent << " r=" << f.correlation;
  return ss.str();
}

// Shared corpora, built once.
const std::vector<CorpusPolygon>& complex_corpus() {
  static const std::vector<CorpusPolygon> corpus =
      polyscan::testing::mixed_corpus(500, {8, 16, 32, 64, 128, 256}, 1000, true);
  return corpus;
}

Outcome oracle_equivalence() {
  const auto corpus = polyscan::testing::mixed_corpus(500, {8, 16, 32, 64, 128, 256}, 1, false);
  std::size_t events = 0;
  for (const CorpusPolygon& c : corpus) {
    const ScanReport rep = report_intersections(c.poly);
    const std::vector<IntersectionEvent> bf = bf_report(c.poly);
    if (rep.events.size() != bf.size()) return {false, "event count differs on " + describe(c)};
    for (std::size_t k = 0; k < bf.size(); ++k) {
      const IntersectionEvent& a = rep.events[k];
      const IntersectionEvent& b = bf[k];
      if (a.edge_i != b.edge_i || a.edge_j != b.edge_j) return {false, "pair differs on " + describe(c)};
      if (std::abs(a.at.x - b.at.x) > 1e-9 || std::abs(a.at.y - b.at.y) > 1e-9) {
        return {false, "crossing point differs on " + describe(c)};
      }
    }
    events += bf.size();
  }
  return {true, std::to_string(corpus.size()) + " polygons, " + std::to_string(events) + " crossings"};
}

Outcome corrector_soundness() {
  std::size_t fixes = 0, rescans = 0;
  for (const CorpusPolygon& c : complex_corpus()) {
    const Correction cor = correct_all(c.poly);
    if (!is_simple(cor.polygon)) return {false, "not simple: " + describe(c)};
    if (!polyscan::testing::same_vertex_multiset(c.poly, cor.polygon)) {
      return {false, "vertex multiset changed: " + describe(c)};
    }
    const auto before = try_orientation(c.poly);
    const auto after = try_orientation(cor.polygon);
    if (before && after != before) return {false, "orientation changed: " + describe(c)};
    const RunMetrics& m = cor.metrics;
    const auto expected = static_cast<std::int64_t>(m.n_real) - static_cast<std::int64_t>(c.poly.size()) -
                          static_cast<std::int64_t>(cor.events.size());
    if (m.n_crossings != cor.events.size() || m.n_supp() != expected) {
      return {false, "n_supp identity broken: " + describe(c)};
    }
    fixes += cor.events.size();
    rescans += m.rescans;
  }
  return {true, std::to_string(complex_corpus().size()) + " polygons, " + std::to_string(fixes) +
                    " corrections, " + std::to_string(rescans) + " confirmation rescans"};
}

Outcome brute_force_correctors() {
  std::size_t divergent = 0;
  std::string example;
  for (const CorpusPolygon& c : complex_corpus()) {
    const Polygon scan = correct_all(c.poly).polygon;
    for (const auto& [name, fn] : {std::pair{"v2", &bf_correct_v2}, std::pair{"v3", &bf_correct_v3}}) {
      const Polygon out = fn(c.poly, 4).polygon;
      if (!is_simple(out)) return {false, std::string(name) + " not simple: " + describe(c)};
      if (!polyscan::testing::same_vertex_multiset(c.poly, out)) {
        return {false, std::string(name) + " multiset changed: " + describe(c)};
      }
      if (std::string_view(name) == "v2" && !(out == scan)) {
        if (divergent++ == 0) example = describe(c);
      }
    }
  }
  if (divergent == 0) return {false, "no polygon where scan-line and brute-force results differ"};
  return {true, std::to_string(divergent) + " polygons where scan-line and v2 outputs differ (first: " +
                    example + ")"};
}

struct QueryAgreement {
  std::size_t edges = 0;
  std::size_t strict_mismatch = 0;
  std::size_t relaxed_mismatch = 0;
  std::vector<std::string> strict_log;
  std::vector<std::string> relaxed_log;
};

const QueryAgreement& query_agreement() {
  static const QueryAgreement result = [] {
    QueryAgreement qa;
    const auto corpus = polyscan::testing::mixed_corpus(200, {8, 16, 32, 64, 128, 256}, 5000, false);
    for (const CorpusPolygon& c : corpus) {
      const RegionQuery rq(c.poly);
      for (std::size_t e = 0; e < c.poly.size(); ++e) {
        ++qa.edges;
        const std::vector<std::size_t> truth = bf_query(c.poly, e, false);
        for (const QueryMode mode : {QueryMode::Strict, QueryMode::Relaxed}) {
          if (rq.query(e, mode).crossings == truth) continue;
          const std::string line = describe(c) + " edge=" + std::to_string(e);
          if (mode == QueryMode::Strict) {
            ++qa.strict_mismatch;
            qa.strict_log.push_back(line);
          } else {
            ++qa.relaxed_mismatch;
            qa.relaxed_log.push_back(line);
          }
        }
      }
    }
    return qa;
  }();
  return result;
}

Outcome strict_query() {
  const QueryAgreement& qa = query_agreement();
  for (const std::string& line : qa.strict_log) std::cout << "    strict disagreement: " << line << '\n';
  return {qa.strict_mismatch == 0,
          std::to_string(qa.edges - qa.strict_mismatch) + "/" + std::to_string(qa.edges) + " edges agree"};
}

Outcome relaxed_query() {
  const QueryAgreement& qa = query_agreement();
  for (const std::string& line : qa.relaxed_log) std::cout << "    relaxed disagreement: " << line << '\n';
  const double rate = 1.0 - static_cast<double>(qa.relaxed_mismatch) / static_cast<double>(qa.edges);
  std::ostringstream ss;
  ss.precision(6);
  ss << 100.0 * rate << "% of " << qa.edges << " edges agree (need >= 99.9%)";
  return {rate >= 0.999, ss.str()};
}

Outcome worst_case_scaling() {
  const auto rows = run_corpus({Family::WorstCaseFan, powers_of_two(64, 1024), seed_range(1, 20)},
                               {Algo::Report});
  const FitResult f = fit_exponent(fit_points(rows, Algo::Report));
  return {f.exponent >= 0.85 && f.exponent <= 1.15, fit_text(f) + " (need exponent in [0.85, 1.15])"};
}

Outcome average_case_scaling() {
  std::vector<BenchRow> rows;
  for (const Family fam : {Family::RandomStar, Family::NoisyContour}) {
    const auto part = run_corpus({fam, powers_of_two(64, 4096), seed_range(1, 20)}, {Algo::Report});
    rows.insert(rows.end(), part.begin(), part.end());
  }
  const FitResult f = fit_exponent(fit_points(rows, Algo::Report));
  std::string detail = fit_text(f) + " (need exponent in (0, 0.5], r >= 0.8; reference 2.2*N^0.26)";
  for (const GroupFit& g : fit_groups(rows)) {
    detail += "; " + std::string(to_string(g.family)) + " " + fit_text(g.fit);
  }
  return {f.exponent > 0.0 && f.exponent <= 0.5 && f.correlation >= 0.8, detail};
}

Outcome query_scaling() {
  std::vector<BenchRow> rows;
  for (const Family fam : {Family::RandomStar, Family::NoisyContour}) {
    const auto part = run_corpus({fam, powers_of_two(64, 1024), seed_range(1, 20)},
                                 {Algo::QueryStrict, Algo::QueryRelaxed});
    rows.insert(rows.end(), part.begin(), part.end());
  }
  const FitResult strict = fit_exponent(fit_points(rows, Algo::QueryStrict));
  const FitResult relaxed = fit_exponent(fit_points(rows, Algo::QueryRelaxed));
  return {strict.exponent >= relaxed.exponent,
          "strict " + fit_text(strict) + ", relaxed " + fit_text(relaxed) + " (reference 0.65 vs 0.6)"};
}

Outcome fit_fixture() {
  std::vector<FitPoint> pts;
  for (double n = 64; n <= 65536; n *= 2) pts.push_back({n, 2.2 * std::pow(n, 0.26)});
  const FitResult f = fit_exponent(pts);
  const double ec = std::abs(f.constant - 2.2) / 2.2;
  const double ee = std::abs(f.exponent - 0.26) / 0.26;
  return {ec <= 1e-6 && ee <= 1e-6 && std::abs(f.correlation - 1.0) <= 1e-9, fit_text(f)};
}

// Runs the CLI with stdout and stderr captured; returns the exit status.
int run_cli(const std::string& cli, const std::string& args, const fs::path& dir, std::string& out) {
  const fs::path capture = dir / "stdout.txt";
  const std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args + " > '" +
                          capture.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_round_trips(const std::string& cli) {
  std::vector<std::string> failures;
  const auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  // Library-level format examples.
  check(parse_polygon("POLYGON ((0 0, 2 2, 2 0, 0 2))", PolygonFormat::Wkt) == polyscan::testing::bowtie(),
        "bowtie WKT parse");
  check(parse_polygon("POLYGON ((0 0, 1 0, 1 1, 0 0))", PolygonFormat::Wkt).size() == 3,
        "closing duplicate dropped");
  try {
    parse_polygon("0,0\n1,1\n", PolygonFormat::Csv);
    check(false, "two-line CSV accepted");
  } catch (const Error& e) {
    check(e.code() == ErrorCode::TooFewVertices, "two-line CSV error code");
  }
  const ScanReport sq = report_intersections(polyscan::testing::square());
  const std::string sq_json = write_report(make_report(4, sq.events, sq.metrics, sq.axis));
  const ReportDocument sq_doc = parse_report(sq_json);
  check(sq_doc.n == 4 && sq_doc.k() == 0 && sq_doc.events.empty(), "square JSON report");
  const ScanReport bt = report_intersections(polyscan::testing::bowtie());
  const ReportDocument bt_doc = parse_report(write_report(make_report(4, bt.events, bt.metrics, bt.axis)));
  check(bt_doc.events.size() == 1 && bt_doc.events[0] == IntersectionEvent{0, 2, Point(1, 1)},
        "bowtie JSON event");
  check(bt_doc.events == bt.events, "JSON event round trip");
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Polygon p = gen_polygon(seed % 2 ? Family::RandomStar : Family::NoisyContour, 64, seed);
    for (const PolygonFormat fmt : {PolygonFormat::Wkt, PolygonFormat::Csv}) {
      check(parse_polygon(write_polygon(p, fmt), fmt) == p, "bitwise polygon round trip");
    }
  }

  // Command-line examples.
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir = fs::temp_directory_path() / ("polyscan_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::ofstream(dir / "bowtie.wkt") << "POLYGON ((0 0, 2 2, 2 0, 0 2))\n";
  std::ofstream(dir / "square.csv") << "0,0\n1,0\n1,1\n0,1\n";
  std::string out;
  check(run_cli(cli, "correct --input bowtie.wkt --output out.wkt", dir, out) == 0, "cli correct exit");
  try {
    check(is_simple(read_polygon(dir / "out.wkt")), "cli correct output simple");
  } catch (const Error& e) {
    check(false, std::string("cli correct output: ") + e.what());
  }
  check(run_cli(cli, "report --input square.csv --format csv --json r.json", dir, out) == 0,
        "cli report exit");
  try {
    check(parse_report(slurp(dir / "r.json")).k() == 0, "cli report k=0");
  } catch (const Error& e) {
    check(false, std::string("cli report json: ") + e.what());
  }
  check(run_cli(cli, "query --input bowtie.wkt --edge 0 --mode strict", dir, out) == 0 && out == "2\n",
        "cli query prints 2");
  check(run_cli(cli, "report --input missing.wkt", dir, out) == 2 && out.rfind("error: IoError:", 0) == 0,
        "cli missing file");
  check(run_cli(cli, "query --input bowtie.wkt", dir, out) == 2 && out.rfind("error: ", 0) == 0,
        "cli usage error");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  fs::remove_all(dir);
  check(secs < 10.0, "cli smoke under 10 s");

  if (!failures.empty()) {
    std::string detail = "failed:";
    for (const std::string& f : failures) detail += " [" + f + "]";
    return {false, detail};
  }
  std::ostringstream ss;
  ss.precision(3);
  ss << "format, JSON and CLI examples pass; CLI smoke " << secs << " s";
  return {true, ss.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-polyscan-cli>\n";
    return 2;
  }
  const std::string cli = fs::absolute(argv[1]).string();

  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence (reporting)", 60, oracle_equivalence},
      {2, "corrector soundness", 120, corrector_soundness},
      {3, "brute-force correctors", 0, brute_force_correctors},
      {4, "strict query equivalence", 0, strict_query},
      {5, "relaxed query near-equivalence", 0, relaxed_query},
      {6, "worst-case scaling", 0, worst_case_scaling},
      {7, "average-case scaling", 0, average_case_scaling},
      {8, "query scaling direction", 0, query_scaling},
      {9, "fit_exponent fixture", 0, fit_fixture},
      {10, "CLI round-trips", 0, [&] { return cli_round_trips(cli); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
              << " [" << timing << "]" << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
