#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "knotwork/diagram.hpp"
#include "knotwork/geometry.hpp"

namespace knotwork {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------
// Native PD JSON:
//   {"crossings": [[under_in, over_in, under_out, over_out, "+"], ...],
//    "free_loops": 0}
// Arc ids are 0-based; each id appears once as an input and once as an
// output across the whole code. Round-trips exactly.
// ---------------------------------------------------------------------

inline json pd_to_json(const LinkDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings())
    crossings.push_back({c.arc[UNDER_IN], c.arc[OVER_IN], c.arc[UNDER_OUT],
                         c.arc[OVER_OUT], c.sign > 0 ? "+" : "-"});
  return json{{"crossings", std::move(crossings)},
              {"free_loops", d.free_loops()}};
}

inline LinkDiagram pd_from_json(const json& j) {
  if (!j.contains("crossings") || !j["crossings"].is_array())
    throw std::invalid_argument("pd: missing \"crossings\" array");
  std::vector<CrossingRecord> crossings;
  for (const auto& row : j["crossings"]) {
    if (!row.is_array() || row.size() != 5)
      throw std::invalid_argument("pd: crossing rows are [u_in, o_in, u_out, o_out, sign]");
    CrossingRecord c;
    c.arc[UNDER_IN] = row[0].get<int>();
    c.arc[OVER_IN] = row[1].get<int>();
    c.arc[UNDER_OUT] = row[2].get<int>();
    c.arc[OVER_OUT] = row[3].get<int>();
    const std::string sign = row[4].get<std::string>();
    if (sign == "+")
      c.sign = 1;
    else if (sign == "-")
      c.sign = -1;
    else
      throw std::invalid_argument("pd: crossing sign must be \"+\" or \"-\"");
    crossings.push_back(c);
  }
  const int loops = j.value("free_loops", 0);
  return LinkDiagram(std::move(crossings), loops);
}

// ---------------------------------------------------------------------
// Knot-table PD codes: "X[4,1,5,2] X[8,3,9,4] ..." (commas between the
// X's also accepted). Arcs are numbered 1..2c consecutively along the
// knot, the under-strand enters at the first entry, and the four arcs
// are listed counterclockwise. Single-component codes only: the over
// direction is read off the consecutive numbering, and the crossing is
// positive when the over-strand runs from the fourth entry to the
// second.
// ---------------------------------------------------------------------

inline LinkDiagram pd_from_standard_code(const std::string& text) {
  std::vector<std::array<int, 4>> quads;
  size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string::npos) {
    size_t end = text.find(']', pos);
    if (end == std::string::npos)
      throw std::invalid_argument("pd code: unbalanced bracket");
    std::string body = text.substr(pos + 1, end - pos - 1);
    for (char& ch : body)
      if (ch == ',') ch = ' ';
    std::istringstream is(body);
    std::array<int, 4> quad{};
    if (!(is >> quad[0] >> quad[1] >> quad[2] >> quad[3]))
      throw std::invalid_argument("pd code: expected four arc numbers");
    quads.push_back(quad);
    pos = end + 1;
  }
  if (quads.empty()) throw std::invalid_argument("pd code: no crossings found");
  const int arcs = 2 * static_cast<int>(quads.size());
  auto succ = [arcs](int a) { return a % arcs + 1; };

  std::vector<CrossingRecord> crossings;
  for (const auto& q : quads) {
    const auto [a, b, c, d] = std::tuple{q[0], q[1], q[2], q[3]};
    CrossingRecord rec;
    rec.arc[UNDER_IN] = a - 1;
    rec.arc[UNDER_OUT] = c - 1;
    if (succ(b) == d) {  // over-strand runs b -> d: negative crossing
      rec.arc[OVER_IN] = b - 1;
      rec.arc[OVER_OUT] = d - 1;
      rec.sign = -1;
    } else if (succ(d) == b) {  // over-strand runs d -> b: positive
      rec.arc[OVER_IN] = d - 1;
      rec.arc[OVER_OUT] = b - 1;
      rec.sign = 1;
    } else {
      throw std::invalid_argument(
          "pd code: over-strand direction is not determined by consecutive "
          "numbering (multi-component code?)");
    }
    crossings.push_back(rec);
  }
  return LinkDiagram(std::move(crossings), 0);
}

// ---------------------------------------------------------------------
// Curve and field CSV.
// ---------------------------------------------------------------------

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_curve_csv(std::ostream& os, const SampledCurve& c) {
  os << (c.dim == 4 ? "t,x1,x2,x3,x4" : "t,x,y,z") << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << format_double(c.params[i]);
    for (int k = 0; k < c.dim; ++k) os << ',' << format_double(c.points[i][k]);
    os << "\n";
  }
}

inline SampledCurve read_curve_csv(std::istream& is) {
  SampledCurve curve;
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("curve csv: empty input");
  int columns = 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));
  if (columns != 4 && columns != 5)
    throw std::invalid_argument("curve csv: expected t,x,y,z or t,x1,x2,x3,x4");
  curve.dim = columns - 1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream row(line);
    double t;
    Vec4 p{};
    if (!(row >> t)) throw std::invalid_argument("curve csv: bad row '" + line + "'");
    for (int k = 0; k < curve.dim; ++k)
      if (!(row >> p[k]))
        throw std::invalid_argument("curve csv: bad row '" + line + "'");
    curve.params.push_back(t);
    curve.points.push_back(p);
  }
  if (curve.size() >= 2) {
    Vec4 gap = curve.points.front() - curve.points.back();
    curve.closed = norm(gap) < 1e-9;
  }
  return curve;
}

inline void write_field_csv(std::ostream& os,
                            const std::vector<FieldSample>& samples) {
  os << "x,y,z,Bx,By,Bz,Ex,Ey,Ez\n";
  for (const auto& s : samples) {
    os << format_double(s.position[0]) << ',' << format_double(s.position[1])
       << ',' << format_double(s.position[2]);
    for (int k = 0; k < 3; ++k) os << ',' << format_double(s.B[k]);
    for (int k = 0; k < 3; ++k) os << ',' << format_double(s.E[k]);
    os << "\n";
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace knotwork
