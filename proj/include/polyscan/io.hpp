#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyscan/polygon.hpp"
#include "polyscan/scanline.hpp"

namespace polyscan {

enum class PolygonFormat { Wkt, Csv };

PolygonFormat parse_format(std::string_view name);  // "wkt" or "csv", throws InvalidSpec
// ".csv" means Csv, anything else Wkt.
PolygonFormat format_from_path(const std::filesystem::path& path);

// WKT accepts a single `POLYGON ((x y, ...))` outer ring; CSV takes one `x,y`
// pair per line (blank lines and `#` comments skipped, an optional `x,y`
// header allowed). A closing vertex equal to the first one is dropped.
Polygon parse_polygon(std::string_view text, PolygonFormat format);
Polygon read_polygon(const std::filesystem::path& path, std::optional<PolygonFormat> format = {});

// Shortest decimal form that parses back to the same double.
std::string format_number(double value);

std::string write_polygon(const Polygon& poly, PolygonFormat format);
void save_polygon(const std::filesystem::path& path, const Polygon& poly,
                  std::optional<PolygonFormat> format = {});

struct ReportDocument {
  std::size_t n = 0;
  std::vector<IntersectionEvent> events;
  std::size_t n_real = 0;
  std::int64_t n_supp = 0;
  std::size_t explored = 0;
  Axis axis = Axis::X;

  std::size_t k() const { return events.size(); }
};

ReportDocument make_report(std::size_t n, const std::vector<IntersectionEvent>& events,
                           const RunMetrics& metrics, Axis axis);

// {"n", "k", "events": [{edge_i, edge_j, x, y}], "metrics": {n_real, n_supp, explored, axis}}
std::string write_report(const ReportDocument& doc);
ReportDocument parse_report(std::string_view json_text);  // throws ParseError
void save_report(const std::filesystem::path& path, const ReportDocument& doc);

}  // namespace polyscan
