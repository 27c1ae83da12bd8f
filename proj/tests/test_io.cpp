#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "polyscan/bench.hpp"
#include "polyscan/error.hpp"
#include "polyscan/io.hpp"
#include "test_support.hpp"

using namespace polyscan;
using polyscan::testing::bowtie;
using polyscan::testing::square;

namespace {

ParseError parse_error(std::string_view text, PolygonFormat fmt) {
  try {
    parse_polygon(text, fmt);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(Wkt, Examples) {
  EXPECT_EQ(parse_polygon("POLYGON ((0 0, 2 2, 2 0, 0 2))", PolygonFormat::Wkt), bowtie());
  const Polygon tri = parse_polygon("POLYGON ((0 0, 1 0, 1 1, 0 0))", PolygonFormat::Wkt);
  EXPECT_EQ(tri.size(), 3u);
  EXPECT_EQ(parse_polygon("  polygon((0 0,2 2,\n 2 0,0 2))\n", PolygonFormat::Wkt), bowtie());
  EXPECT_EQ(parse_polygon("POLYGON ((-1.5e2 0, 1 0, 1 1))", PolygonFormat::Wkt)[0], Point(-150, 0));
}

TEST(Wkt, Rejections) {
  EXPECT_NE(std::string(parse_error("MULTIPOLYGON (((0 0, 1 0, 1 1)))", PolygonFormat::Wkt).what())
                .find("MULTIPOLYGON"),
            std::string::npos);
  EXPECT_NE(std::string(parse_error("POLYGON ((0 0, 4 0, 4 4, 0 0), (1 1, 2 1, 2 2, 1 1))",
                                    PolygonFormat::Wkt).what()).find("holes"),
            std::string::npos);
  const ParseError e = parse_error("POLYGON ((0 0, 1 0,\n1 x))", PolygonFormat::Wkt);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);
  parse_error("POLYGON ((0 0 0, 1 0 0, 1 1 0))", PolygonFormat::Wkt);
  parse_error("POLYGON ((0 0, 1 0, 1 1)) trailing", PolygonFormat::Wkt);
  parse_error("LINESTRING (0 0, 1 1)", PolygonFormat::Wkt);
  parse_error("POLYGON ((0 0, 1 0, inf 1))", PolygonFormat::Wkt);
  try {
    parse_polygon("POLYGON ((0 0, 1 0, 0 0))", PolygonFormat::Wkt);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::TooFewVertices);
  }
  try {
    parse_polygon("POLYGON ((0 0, 1 0, 1 0, 0 1))", PolygonFormat::Wkt);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DuplicateConsecutiveVertex);
  }
}

TEST(Csv, Examples) {
  EXPECT_EQ(parse_polygon("0,0\n1,0\n1,1\n0,1\n", PolygonFormat::Csv), square());
  EXPECT_EQ(parse_polygon("x,y\r\n0,0\r\n1,0\r\n# note\n\n1,1\n0,1\n0,0\n", PolygonFormat::Csv), square());
  try {
    parse_polygon("0,0\n1,1\n", PolygonFormat::Csv);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::TooFewVertices);
  }
  const ParseError e = parse_error("0,0\n1,0\n1,abc\n", PolygonFormat::Csv);
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 3u);
  parse_error("0,0,0\n1,0\n1,1\n", PolygonFormat::Csv);
  parse_error("0;0\n1;0\n1;1\n", PolygonFormat::Csv);
}

TEST(Formats, BitwiseRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int k = 0; k < 200; ++k) {
    std::vector<Point> pts;
    for (int v = 0; v < 7; ++v) pts.emplace_back(u(rng) * std::pow(10.0, (v % 5) - 6), u(rng));
    pts.emplace_back(-0.0, std::numeric_limits<double>::denorm_min());
    pts.emplace_back(std::numeric_limits<double>::max(), 1e-300);
    const Polygon p(pts);
    for (const PolygonFormat fmt : {PolygonFormat::Wkt, PolygonFormat::Csv}) {
      const Polygon back = parse_polygon(write_polygon(p, fmt), fmt);
      ASSERT_EQ(back.size(), p.size());
      for (std::size_t v = 0; v < p.size(); ++v) {
        EXPECT_EQ(std::signbit(back[v].x), std::signbit(p[v].x));
        EXPECT_EQ(back[v], p[v]);
      }
    }
  }
}

TEST(Formats, NamesAndPaths) {
  EXPECT_EQ(parse_format("wkt"), PolygonFormat::Wkt);
  EXPECT_EQ(parse_format("csv"), PolygonFormat::Csv);
  EXPECT_THROW(parse_format("geojson"), Error);
  EXPECT_EQ(format_from_path("a/b.CSV"), PolygonFormat::Csv);
  EXPECT_EQ(format_from_path("a/b.wkt"), PolygonFormat::Wkt);
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0), "2");
}

TEST(Files, SaveAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "polyscan_io_test";
  std::filesystem::create_directories(dir);
  const Polygon p = gen_polygon(Family::RandomStar, 32, 4);
  save_polygon(dir / "p.csv", p);
  save_polygon(dir / "p.wkt", p);
  EXPECT_EQ(read_polygon(dir / "p.csv"), p);
  EXPECT_EQ(read_polygon(dir / "p.wkt"), p);
  try {
    read_polygon(dir / "missing.wkt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
  try {
    save_polygon(dir / "no_such_dir" / "x.wkt", p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
  std::filesystem::remove_all(dir);
}

TEST(Report, JsonExamples) {
  const ScanReport sq = report_intersections(square());
  const std::string js = write_report(make_report(4, sq.events, sq.metrics, sq.axis));
  const ReportDocument doc = parse_report(js);
  EXPECT_EQ(doc.n, 4u);
  EXPECT_EQ(doc.k(), 0u);
  EXPECT_NE(js.find("\"events\": []"), std::string::npos);

  const ScanReport bt = report_intersections(bowtie(), Axis::Y);
  const ReportDocument bdoc = parse_report(write_report(make_report(4, bt.events, bt.metrics, bt.axis)));
  ASSERT_EQ(bdoc.events.size(), 1u);
  EXPECT_EQ(bdoc.events[0], (IntersectionEvent{0, 2, Point(1, 1)}));
  EXPECT_EQ(bdoc.axis, Axis::Y);
  EXPECT_EQ(bdoc.n_real, bt.metrics.n_real);
  EXPECT_EQ(bdoc.explored, bt.metrics.explored);
}

TEST(Report, JsonRoundTripOnCorpus) {
  for (const auto& c : polyscan::testing::mixed_corpus(30, {64, 128}, 55, true)) {
    const ScanReport rep = report_intersections(c.poly);
    const ReportDocument doc = make_report(c.poly.size(), rep.events, rep.metrics, rep.axis);
    const ReportDocument back = parse_report(write_report(doc));
    EXPECT_EQ(back.events, rep.events);  // bitwise on coordinates
    EXPECT_EQ(back.n_supp, doc.n_supp);
  }
}

TEST(Report, JsonErrors) {
  EXPECT_THROW(parse_report("{"), ParseError);
  EXPECT_THROW(parse_report("{\"n\": 4}"), ParseError);
  EXPECT_THROW(parse_report(R"({"n":4,"k":1,"events":[],"metrics":{"n_real":4,"n_supp":0,"explored":3,"axis":"x"}})"),
               ParseError);
}
