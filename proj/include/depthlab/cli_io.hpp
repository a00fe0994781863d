#pragma once

// Input parsing, JSON encoding of exact values and certificates, and SVG
// rendering for the depthlab command-line tool.

#include <depthlab/partitions.hpp>
#include <depthlab/regions.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace depthlab::cli {

using json = nlohmann::ordered_json;

/// Bad input or flags; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline std::vector<std::string> split_fields(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

/// Comma-separated rationals, as given to --point and --hyperplane.
inline Vec parse_vector(const std::string& text, const std::string& flag) {
  Vec v;
  for (const auto& field : split_fields(text)) {
    try {
      v.push_back(parse_scalar(field));
    } catch (const std::invalid_argument& e) {
      throw InputError(flag + ": " + e.what());
    }
  }
  return v;
}

/// Rows of exact rationals from CSV (blank lines and '#' comments skipped) or a
/// JSON array of arrays (numbers or rational strings). Row numbers in
/// diagnostics are 1-based lines for CSV and 0-based array indices for JSON.
inline std::vector<Vec> parse_rows(const std::string& text, const std::string& format) {
  std::vector<Vec> rows;
  std::optional<std::size_t> width;
  auto check_width = [&](std::size_t w, const std::string& where) {
    if (!width) width = w;
    if (*width != w)
      throw InputError("ragged input at " + where + ": expected " + std::to_string(*width) + " fields, got " +
                       std::to_string(w));
  };
  if (format == "csv") {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      auto fields = split_fields(line);
      Vec row;
      for (const auto& f : fields) {
        try {
          row.push_back(parse_scalar(f));
        } catch (const std::invalid_argument& e) {
          throw InputError("row " + std::to_string(lineno) + ": " + e.what());
        }
      }
      check_width(row.size(), "row " + std::to_string(lineno));
      rows.push_back(std::move(row));
    }
  } else if (format == "json") {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw InputError("JSON input must be an array of coordinate arrays");
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto& r = doc[i];
      std::string where = "row " + std::to_string(i);
      if (!r.is_array()) throw InputError(where + ": not an array");
      Vec row;
      for (const auto& c : r) {
        try {
          if (c.is_string()) row.push_back(parse_scalar(c.get<std::string>()));
          else if (c.is_number()) row.push_back(parse_scalar(c.dump()));
          else throw std::invalid_argument("non-numeric field: " + c.dump());
        } catch (const std::invalid_argument& e) {
          throw InputError(where + ": " + e.what());
        }
      }
      check_width(row.size(), where);
      rows.push_back(std::move(row));
    }
  } else {
    throw InputError("unknown input format '" + format + "' (csv or json)");
  }
  return rows;
}

/// Exact site set; row order is the site index.
inline SiteSet ingest_text(const std::string& text, const std::string& format, std::optional<std::size_t> dim) {
  auto rows = parse_rows(text, format);
  if (rows.empty()) throw InputError("no sites");
  std::size_t d = rows.front().size();
  if (dim && *dim != d)
    throw InputError("dimension mismatch: --dim " + std::to_string(*dim) + " but rows have " + std::to_string(d) +
                     " coordinates");
  if (d < 1) throw InputError("sites need at least one coordinate");
  return SiteSet::from_affine(d, rows);
}

// ---------------------------------------------------------------------------
// JSON encoding. Rationals are strings so that nothing is rounded.

inline json to_json(const Scalar& s) { return to_string(s); }

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

inline json to_json(const DoubleWedge& w) {
  return {{"boundary_a", to_json(w.boundary_a.coeffs())},
          {"boundary_b", to_json(w.boundary_b.coeffs())},
          {"selector", w.selector}};
}

inline json to_json(const DepthCertificate& c) {
  json j{{"value", c.value}, {"exact", c.exact}};
  if (c.ray_direction) j["ray_direction"] = to_json(*c.ray_direction);
  else j["wedge"] = to_json(c.witness);
  j["counted_sites"] = c.counted_site_indices;
  return j;
}

inline json to_json(const Partition& p) {
  json j{{"kind", p.kind == PartitionKind::tverberg ? "tverberg" : "contractible"}, {"parts", p.parts}};
  if (p.witness_point) j["witness_point"] = to_json(p.witness_point->affine_coords());
  if (p.witness_hyperplane) j["witness_hyperplane"] = to_json(p.witness_hyperplane->coeffs());
  j["part_verified"] = p.report;
  j["all_verified"] = p.all_verified();
  return j;
}

// ---------------------------------------------------------------------------
// SVG for planar inputs: sites, witness lines, and the shaded witness wedge.

class Svg {
 public:
  explicit Svg(const SiteSet& sites) {
    box_ = bounding_box(sites);
    for (std::size_t i = 0; i < 2; ++i) {
      Scalar pad = (box_.hi[i] - box_.lo[i]) / 8 + 1;
      box_.lo[i] -= pad;
      box_.hi[i] += pad;
    }
    for (const auto& p : sites.sites())
      if (p.is_finite()) sites_.push_back(p.affine_coords());
  }

  void line(const Hyperplane& h, const std::string& color) {
    if (h[0] == 0 && h[1] == 0) return;  // line at infinity
    Polygon seg = clip_polygon(clip_polygon(box_polygon(box_), halfplane(h, 1)), halfplane(h, -1));
    if (seg.size() >= 2 && seg.front() != seg.back()) lines_.push_back({{seg.front(), seg.back()}, color});
  }

  void wedge(const DoubleWedge& w) {
    for (int s : {1, -1}) {
      Polygon poly = clip_polygon(box_polygon(box_), halfplane(w.boundary_a, s));
      poly = clip_polygon(poly, halfplane(w.boundary_b, s * w.selector));
      if (poly.size() >= 3) fills_.push_back(poly);
    }
    line(w.boundary_a, "#1f77b4");
    line(w.boundary_b, "#d62728");
  }

  void marker(const Vec& p) { markers_.push_back(p); }

  std::string str() const {
    double x0 = to_double(box_.lo[0]), x1 = to_double(box_.hi[0]);
    double y0 = to_double(box_.lo[1]), y1 = to_double(box_.hi[1]);
    double w = x1 - x0, h = y1 - y0, r = std::max(w, h) / 150;
    std::ostringstream os;
    os << std::setprecision(10);
    // flip y so that up is up
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << -y1 << " " << w << " " << h
       << "\" width=\"600\" height=\"" << 600 * h / w << "\">\n";
    auto pt = [&](const Point2& p) { return std::to_string(to_double(p[0])) + "," + std::to_string(-to_double(p[1])); };
    for (const auto& f : fills_) {
      os << "<polygon fill=\"#ffbf00\" fill-opacity=\"0.3\" stroke=\"none\" points=\"";
      for (const auto& p : f) os << pt(p) << " ";
      os << "\"/>\n";
    }
    for (const auto& [seg, color] : lines_)
      os << "<line x1=\"" << to_double(seg.front()[0]) << "\" y1=\"" << -to_double(seg.front()[1]) << "\" x2=\""
         << to_double(seg[1][0]) << "\" y2=\"" << -to_double(seg[1][1]) << "\" stroke=\"" << color
         << "\" stroke-width=\"" << r / 2 << "\"/>\n";
    for (const auto& s : sites_)
      os << "<circle cx=\"" << to_double(s[0]) << "\" cy=\"" << -to_double(s[1]) << "\" r=\"" << r << "\"/>\n";
    for (const auto& m : markers_)
      os << "<circle cx=\"" << to_double(m[0]) << "\" cy=\"" << -to_double(m[1]) << "\" r=\"" << 1.6 * r
         << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"" << r / 2 << "\"/>\n";
    os << "</svg>\n";
    return os.str();
  }

 private:
  // side s of h as a closed halfplane normal . x <= offset
  static Halfspace halfplane(const Hyperplane& h, int s) {
    Scalar k(-s);
    return Halfspace{{k * h[0], k * h[1]}, Scalar(-k * h[2])};
  }

  Box box_;
  std::vector<Vec> sites_, markers_;
  std::vector<Polygon> fills_;
  std::vector<std::pair<Polygon, std::string>> lines_;
};

}  // namespace depthlab::cli
