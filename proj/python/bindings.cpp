#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyscan/brute_force.hpp"
#include "polyscan/error.hpp"
#include "polyscan/io.hpp"
#include "polyscan/polygon.hpp"
#include "polyscan/region_query.hpp"
#include "polyscan/scanline.hpp"

namespace py = pybind11;
using namespace polyscan;

namespace {

using Coords = std::vector<std::pair<double, double>>;

Polygon to_polygon(const Coords& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& [x, y] : coords) pts.emplace_back(x, y);
  return Polygon(std::move(pts));
}

Coords to_coords(const Polygon& poly) {
  Coords out;
  for (const Point& p : poly.vertices()) out.emplace_back(p.x, p.y);
  return out;
}

std::optional<Axis> to_axis(const std::string& axis) {
  if (axis == "x") return Axis::X;
  if (axis == "y") return Axis::Y;
  if (axis == "auto") return std::nullopt;
  throw Error(ErrorCode::InvalidSpec, "axis must be 'auto', 'x' or 'y'");
}

py::list events_to_list(const std::vector<IntersectionEvent>& events) {
  py::list out;
  for (const auto& e : events) out.append(py::make_tuple(e.edge_i, e.edge_j, e.at.x, e.at.y));
  return out;
}

py::dict metrics_to_dict(const RunMetrics& m) {
  py::dict d;
  d["n"] = m.n_vertices;
  d["k"] = m.n_crossings;
  d["n_real"] = m.n_real;
  d["n_supp"] = m.n_supp();
  d["explored"] = m.explored;
  d["rescans"] = m.rescans;
  return d;
}

}  // namespace

PYBIND11_MODULE(_polyscan, m) {
  m.doc() = "Scan-line detection and correction of polygon self-intersections";

  static py::exception<Error> error_type(m, "PolyscanError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error_type((std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "report",
      [](const Coords& coords, const std::string& axis) {
        const ScanReport rep = report_intersections(to_polygon(coords), to_axis(axis));
        py::dict out;
        out["events"] = events_to_list(rep.events);
        out["axis"] = rep.axis == Axis::X ? "x" : "y";
        out["metrics"] = metrics_to_dict(rep.metrics);
        return out;
      },
      py::arg("coords"), py::arg("axis") = "auto",
      "Every proper crossing as (edge_i, edge_j, x, y), plus scan metrics.");

  m.def(
      "correct",
      [](const Coords& coords, const std::string& method) {
        const Polygon poly = to_polygon(coords);
        py::dict out;
        if (method == "scan") {
          const Correction c = correct_all(poly);
          out["polygon"] = to_coords(c.polygon);
          out["events"] = events_to_list(c.events);
          out["metrics"] = metrics_to_dict(c.metrics);
        } else if (method == "v2" || method == "v3") {
          const BruteCorrection c = method == "v2" ? bf_correct_v2(poly) : bf_correct_v3(poly);
          out["polygon"] = to_coords(c.polygon);
          out["events"] = events_to_list(c.events);
        } else {
          throw Error(ErrorCode::InvalidSpec, "method must be 'scan', 'v2' or 'v3'");
        }
        return out;
      },
      py::arg("coords"), py::arg("method") = "scan");

  m.def(
      "query",
      [](const Coords& coords, std::size_t edge, const std::string& mode, bool higher_only) {
        if (mode != "strict" && mode != "relaxed") {
          throw Error(ErrorCode::InvalidSpec, "mode must be 'strict' or 'relaxed'");
        }
        const RegionQuery rq(to_polygon(coords));
        return rq.query(edge, mode == "strict" ? QueryMode::Strict : QueryMode::Relaxed, higher_only).crossings;
      },
      py::arg("coords"), py::arg("edge"), py::arg("mode") = "strict", py::arg("higher_only") = false);

  m.def("is_simple", [](const Coords& coords) { return is_simple(to_polygon(coords)); });

  m.def("parse_wkt", [](const std::string& text) {
    return to_coords(parse_polygon(text, PolygonFormat::Wkt));
  });
  m.def("to_wkt", [](const Coords& coords) {
    return write_polygon(to_polygon(coords), PolygonFormat::Wkt);
  });
}
