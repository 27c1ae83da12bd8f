#include "polyscan/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#ifdef POLYSCAN_SYSTEM_JSON
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "polyscan/error.hpp"

namespace polyscan {

namespace {

// Character cursor that knows its line and column (both 1-based).
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void advance(std::size_t count = 1) {
    for (std::size_t k = 0; k < count && !done(); ++k) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string word() {
    skip_space();
    std::string out;
    while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) {
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(peek()))));
      advance();
    }
    return out;
  }

  double number() {
    skip_space();
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    if (!std::isfinite(value)) fail("coordinates must be finite");
    advance(static_cast<std::size_t>(ptr - first));
    return value;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

Polygon close_ring(std::vector<Point> pts) {
  if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  if (pts.size() < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "polygon needs at least 3 distinct vertices, got " + std::to_string(pts.size()));
  }
  return Polygon(std::move(pts));
}

Polygon parse_wkt(std::string_view text) {
  Cursor cur(text);
  const std::size_t line = (cur.skip_space(), cur.line());
  const std::size_t col = cur.column();
  const std::string tag = cur.word();
  if (tag == "MULTIPOLYGON") throw ParseError(line, col, "MULTIPOLYGON is not supported, give a single ring");
  if (tag != "POLYGON") throw ParseError(line, col, "expected POLYGON");
  cur.expect('(');
  cur.expect('(');
  std::vector<Point> pts;
  while (true) {
    const double x = cur.number();
    const double y = cur.number();
    pts.emplace_back(x, y);
    cur.skip_space();
    if (cur.peek() == ',') {
      cur.advance();
      continue;
    }
    if (cur.peek() == ')') {
      cur.advance();
      break;
    }
    cur.fail("expected ',' or ')' after a coordinate pair (3D coordinates are not supported)");
  }
  cur.skip_space();
  if (cur.peek() == ',') cur.fail("polygon holes are not supported");
  cur.expect(')');
  cur.skip_space();
  if (!cur.done()) cur.fail("unexpected text after the polygon");
  return close_ring(std::move(pts));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double csv_field(std::string_view field, std::size_t line, std::size_t col) {
  const std::string_view f = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
    throw ParseError(line, col, "expected a number, got '" + std::string(f) + "'");
  }
  if (!std::isfinite(value)) throw ParseError(line, col, "coordinates must be finite");
  return value;
}

Polygon parse_csv(std::string_view text) {
  std::vector<Point> pts;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string lowered(line);
    std::erase_if(lowered, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (header_allowed && lowered == "x,y") {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    const std::size_t comma = raw.find(',');
    if (comma == std::string_view::npos) throw ParseError(line_no, raw.size() + 1, "expected 'x,y'");
    if (raw.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, raw.find(',', comma + 1) + 1, "expected exactly two fields");
    }
    const double x = csv_field(raw.substr(0, comma), line_no, 1);
    const double y = csv_field(raw.substr(comma + 1), line_no, comma + 2);
    pts.emplace_back(x, y);
  }
  return close_ring(std::move(pts));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

}  // namespace

PolygonFormat parse_format(std::string_view name) {
  if (name == "wkt") return PolygonFormat::Wkt;
  if (name == "csv") return PolygonFormat::Csv;
  throw Error(ErrorCode::InvalidSpec, "unknown format '" + std::string(name) + "'");
}

PolygonFormat format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".csv" ? PolygonFormat::Csv : PolygonFormat::Wkt;
}

Polygon parse_polygon(std::string_view text, PolygonFormat format) {
  return format == PolygonFormat::Wkt ? parse_wkt(text) : parse_csv(text);
}

Polygon read_polygon(const std::filesystem::path& path, std::optional<PolygonFormat> format) {
  return parse_polygon(read_file(path), format.value_or(format_from_path(path)));
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string write_polygon(const Polygon& poly, PolygonFormat format) {
  std::string out;
  if (format == PolygonFormat::Csv) {
    for (const Point& p : poly.vertices()) out += format_number(p.x) + "," + format_number(p.y) + "\n";
    return out;
  }
  out = "POLYGON ((";
  for (std::size_t k = 0; k <= poly.size(); ++k) {
    const Point& p = poly[k % poly.size()];
    if (k > 0) out += ", ";
    out += format_number(p.x) + " " + format_number(p.y);
  }
  out += "))\n";
  return out;
}

void save_polygon(const std::filesystem::path& path, const Polygon& poly,
                  std::optional<PolygonFormat> format) {
  write_file(path, write_polygon(poly, format.value_or(format_from_path(path))));
}

ReportDocument make_report(std::size_t n, const std::vector<IntersectionEvent>& events,
                           const RunMetrics& metrics, Axis axis) {
  return {n, events, metrics.n_real, metrics.n_supp(), metrics.explored, axis};
}

std::string write_report(const ReportDocument& doc) {
  nlohmann::json events = nlohmann::json::array();
  for (const IntersectionEvent& e : doc.events) {
    events.push_back({{"edge_i", e.edge_i}, {"edge_j", e.edge_j}, {"x", e.at.x}, {"y", e.at.y}});
  }
  const nlohmann::json j = {
      {"n", doc.n},
      {"k", doc.k()},
      {"events", events},
      {"metrics",
       {{"n_real", doc.n_real},
        {"n_supp", doc.n_supp},
        {"explored", doc.explored},
        {"axis", doc.axis == Axis::X ? "x" : "y"}}},
  };
  return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view json_text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    ReportDocument doc;
    doc.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("events")) {
      doc.events.push_back({e.at("edge_i").get<std::size_t>(), e.at("edge_j").get<std::size_t>(),
                            Point(e.at("x").get<double>(), e.at("y").get<double>())});
    }
    if (j.at("k").get<std::size_t>() != doc.events.size()) {
      throw ParseError(0, 0, "k does not match the number of events");
    }
    const auto& m = j.at("metrics");
    doc.n_real = m.at("n_real").get<std::size_t>();
    doc.n_supp = m.at("n_supp").get<std::int64_t>();
    doc.explored = m.at("explored").get<std::size_t>();
    const std::string axis = m.at("axis").get<std::string>();
    if (axis != "x" && axis != "y") throw ParseError(0, 0, "axis must be 'x' or 'y'");
    doc.axis = axis == "x" ? Axis::X : Axis::Y;
    return doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.byte, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, 0, e.what());
  }
}

void save_report(const std::filesystem::path& path, const ReportDocument& doc) {
  write_file(path, write_report(doc));
}

}  // namespace polyscan
