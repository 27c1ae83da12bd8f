// Command-line front end: report, correct, query, bench and gen.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polyscan/brute_force.hpp"
#include "polyscan/error.hpp"
#include "polyscan/io.hpp"
#include "polyscan/region_query.hpp"
#include "polyscan/scanline.hpp"
#include "polyscan/bench.hpp"

namespace fs = std::filesystem;
using namespace polyscan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 1;
constexpr int kExitError = 2;

struct InputArgs {
  std::string input;
  std::string format;  // empty: from extension
  std::string axis = "auto";

  Polygon load() const {
    std::optional<PolygonFormat> fmt;
    if (!format.empty()) fmt = parse_format(format);
    return read_polygon(input, fmt);
  }

  std::optional<Axis> chosen_axis() const {
    if (axis == "x") return Axis::X;
    if (axis == "y") return Axis::Y;
    return std::nullopt;
  }
};

void add_input_options(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("--input", args.input, "polygon file")->required();
  cmd->add_option("--format", args.format, "wkt or csv (default: from extension)")
      ->check(CLI::IsMember({"wkt", "csv"}));
  cmd->add_option("--axis", args.axis, "sort axis")->check(CLI::IsMember({"auto", "x", "y"}));
}

int print_degenerate(const DegenerateInputError& e) {
  std::cout << "degenerate " << e.edge_i() << ' ' << e.edge_j() << '\n';
  std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  return kExitDegenerate;
}

int run_report(const InputArgs& in, const std::string& json_out) {
  const Polygon poly = in.load();
  try {
    const ScanReport rep = report_intersections(poly, in.chosen_axis());
    for (const IntersectionEvent& e : rep.events) {
      std::cout << e.edge_i << ' ' << e.edge_j << ' ' << format_number(e.at.x) << ' '
                << format_number(e.at.y) << '\n';
    }
    std::cout << "k=" << rep.events.size() << " n=" << poly.size()
              << " axis=" << (rep.axis == Axis::X ? 'x' : 'y') << " explored=" << rep.metrics.explored
              << '\n';
    if (!json_out.empty()) {
      save_report(json_out, make_report(poly.size(), rep.events, rep.metrics, rep.axis));
    }
  } catch (const DegenerateInputError& e) {
    return print_degenerate(e);
  }
  return kExitOk;
}

int run_correct(const InputArgs& in, const std::string& output, const std::string& oracle) {
  const Polygon poly = in.load();
  try {
    Polygon fixed = poly;
    std::size_t fixes = 0;
    if (oracle == "scan") {
      CorrectOptions opts;
      opts.axis = in.chosen_axis();
      Correction c = correct_all(poly, opts);
      fixes = c.metrics.n_crossings;
      fixed = std::move(c.polygon);
    } else {
      BruteCorrection c = oracle == "v2" ? bf_correct_v2(poly) : bf_correct_v3(poly);
      fixes = c.events.size();
      fixed = std::move(c.polygon);
    }
    save_polygon(output, fixed);
    std::cout << "corrections=" << fixes << " n=" << fixed.size() << '\n';
  } catch (const DegenerateInputError& e) {
    return print_degenerate(e);
  }
  return kExitOk;
}

int run_query(const InputArgs& in, std::size_t edge, const std::string& mode, bool higher_only) {
  const RegionQuery rq(in.load(), in.chosen_axis());
  const QueryResult res =
      rq.query(edge, mode == "strict" ? QueryMode::Strict : QueryMode::Relaxed, higher_only);
  for (const std::size_t e : res.crossings) std::cout << e << '\n';
  for (const std::size_t e : res.degenerate) std::cout << "degenerate " << e << '\n';
  return res.degenerate.empty() ? kExitOk : kExitDegenerate;
}

struct BenchArgs {
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algos{"report", "correct", "query-strict", "query-relaxed"};
  std::string out;
  unsigned threads = 0;
};

int run_bench(const BenchArgs& args) {
  CorpusSpec spec{parse_family(args.family), args.sizes, args.seeds};
  std::vector<Algo> algos;
  for (const std::string& a : args.algos) algos.push_back(parse_algo(a));
  const std::vector<BenchRow> rows = run_corpus(spec, algos, args.threads);

  std::error_code ec;
  fs::create_directories(args.out, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create '" + args.out + "': " + ec.message());
  const auto emit = [&](const char* name, auto writer) {
    const fs::path path = fs::path(args.out) / name;
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    writer(f, rows);
  };
  emit("bench.csv", write_bench_csv);
  emit("fit.csv", write_fit_csv);
  emit("overhead.csv", write_overhead_csv);
  emit("scatter.svg", write_scatter_svg);

  for (const GroupFit& g : fit_groups(rows)) {
    std::cout << to_string(g.family) << ' ' << to_string(g.algo) << ": " << g.fit.constant << " * N^"
              << g.fit.exponent << " (r=" << g.fit.correlation << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scan-line detection and correction of polygon self-intersections"};
  app.require_subcommand(1);

  InputArgs report_in;
  std::string json_out;
  auto* report = app.add_subcommand("report", "list every proper crossing");
  add_input_options(report, report_in);
  report->add_option("--json", json_out, "write a JSON report here");

  InputArgs correct_in;
  std::string correct_out;
  std::string oracle = "scan";
  auto* correct = app.add_subcommand("correct", "remove every crossing by reversals");
  add_input_options(correct, correct_in);
  correct->add_option("--output", correct_out, "corrected polygon (format from extension)")->required();
  correct->add_option("--oracle", oracle, "correction method")->check(CLI::IsMember({"scan", "v2", "v3"}));

  InputArgs query_in;
  std::size_t edge = 0;
  std::string mode = "strict";
  bool higher_only = false;
  auto* query = app.add_subcommand("query", "edges crossing one edge");
  add_input_options(query, query_in);
  query->add_option("--edge", edge, "edge index")->required();
  query->add_option("--mode", mode, "stopping rule")->check(CLI::IsMember({"strict", "relaxed"}));
  query->add_flag("--higher-only", higher_only, "only report edges with a larger index");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run a synthetic corpus and fit scaling exponents");
  bench->add_option("--family", bench_args.family, "RandomStar, NoisyContour, WorstCaseFan or PerpendicularHeavy")
      ->required();
  bench->add_option("--sizes", bench_args.sizes, "comma-separated vertex counts")->required()->delimiter(',');
  bench->add_option("--seeds", bench_args.seeds, "comma-separated seeds")->required()->delimiter(',');
  bench->add_option("--algos", bench_args.algos, "report, correct, query-strict, query-relaxed")
      ->delimiter(',');
  bench->add_option("--out", bench_args.out, "output directory")->required();
  bench->add_option("--threads", bench_args.threads, "worker threads (0 = all cores)");

  std::string gen_family;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  double gen_noise = 1.0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write one corpus polygon");
  gen->add_option("--family", gen_family, "polygon family")->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "seed")->required();
  gen->add_option("--noise", gen_noise, "perturbation scale");
  gen->add_option("--output", gen_out, "output file (format from extension)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: Usage: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*report) return run_report(report_in, json_out);
    if (*correct) return run_correct(correct_in, correct_out, oracle);
    if (*query) return run_query(query_in, edge, mode, higher_only);
    if (*bench) return run_bench(bench_args);
    if (*gen) {
      save_polygon(gen_out, gen_polygon(parse_family(gen_family), gen_n, gen_seed, gen_noise));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
