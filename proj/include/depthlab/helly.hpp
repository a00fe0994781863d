#pragma once

// A family of n contractible hulls of four lines each, around a rational
// approximation of the regular n-gon, in which every n - 1 hulls share a point
// but all n do not.
//
// Gadget for the missed vertex v (outer normals taken from the adjacent sides
// v w and v u):
//   T = -s v with s = ceil(2 / sin(pi / n)), C = -v / 10
//   l1, l2 through T, perpendicular to the sides v w and v u (far enough out
//   that every other vertex lies between them)
//   l3 through C and w + (v - w) / 4, l4 through C and u + (v - u) / 4
// The bounded cells form an arrowhead quadrilateral T, l1 ∩ l3, C, l2 ∩ l4 with
// its notch at C facing v. Every line misses the wedge at the center spanned by
// directions parallel to l1 and l2, and those n wedges cover the plane.

#include <depthlab/fits.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace depthlab {

using LineQuad = std::array<Hyperplane, 4>;

struct HellyFamily {
  std::size_t n = 0;
  std::vector<Vec> ngon;          // vertices on the unit circle, counterclockwise
  std::vector<LineQuad> families;  // families[i] misses ngon[i]
};

/// Line a x + b y + c = 0 through two distinct points.
inline Hyperplane line_through(const Vec& p, const Vec& q) {
  Scalar a = p[1] - q[1], b = q[0] - p[0];
  Scalar c = -(a * p[0] + b * p[1]);
  return Hyperplane(Vec{a, b, c});
}

/// Contractible hull membership of a point for a set of lines: every ray from
/// the point meets a line.
inline bool in_contractible_hull(const Vec& x, const std::vector<Hyperplane>& lines) {
  return undirected_depth_2d(HomoPoint::affine(x), lines).value >= 1;
}

inline bool in_contractible_hull(const Vec& x, const LineQuad& q) {
  return in_contractible_hull(x, std::vector<Hyperplane>(q.begin(), q.end()));
}

/// Direction of a line dotted with a vector (zero iff perpendicular).
inline Scalar direction_dot(const Hyperplane& l, const Vec& v) { return -l[1] * v[0] + l[0] * v[1]; }

/// Points on the unit circle at angles 2 pi j / n via the rational
/// parametrization of tan(angle / 2), rounded to a 2^-20 grid.
inline std::vector<Vec> rational_ngon(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < n; ++j) {
    double half = M_PI * static_cast<double>(j) / static_cast<double>(n);
    if (2 * j == n) {
      out.push_back({Scalar(-1), Scalar(0)});
      continue;
    }
    Scalar t = round_to_grid(std::tan(half), 20);
    Scalar den = 1 + t * t;
    out.push_back({(1 - t * t) / den, 2 * t / den});
  }
  return out;
}

inline LineQuad helly_gadget(const std::vector<Vec>& ngon, std::size_t i) {
  const std::size_t n = ngon.size();
  const Vec& v = ngon[i];
  const Vec& w = ngon[(i + 1) % n];
  const Vec& u = ngon[(i + n - 1) % n];
  auto comb = [](const Vec& a, const Scalar& s, const Vec& b, const Scalar& r) -> Vec {
    return {s * a[0] + r * b[0], s * a[1] + r * b[1]};
  };
  const Scalar s(static_cast<long>(std::ceil(2 / std::sin(M_PI / static_cast<double>(n)))));
  Vec t = comb(v, Scalar(-s), v, Scalar(0));
  Vec c = comb(v, Scalar(-1, 10), v, Scalar(0));
  auto perpendicular_through = [](const Vec& side_a, const Vec& side_b, const Vec& p) {
    Scalar a = side_b[0] - side_a[0], b = side_b[1] - side_a[1];
    return Hyperplane(Vec{a, b, Scalar(-(a * p[0] + b * p[1]))});
  };
  Hyperplane l1 = perpendicular_through(v, w, t);
  Hyperplane l2 = perpendicular_through(v, u, t);
  Hyperplane l3 = line_through(c, comb(w, Scalar(3, 4), v, Scalar(1, 4)));
  Hyperplane l4 = line_through(c, comb(u, Scalar(3, 4), v, Scalar(1, 4)));
  return {l1, l2, l3, l4};
}

/// Builds the family and checks every defining property exactly.
inline HellyFamily build_helly_family(std::size_t n) {
  if (n < 5) throw std::invalid_argument("build_helly_family: requires n >= 5");
  HellyFamily f;
  f.n = n;
  f.ngon = rational_ngon(n);
  const Vec center{Scalar(0), Scalar(0)};
  for (std::size_t i = 0; i < n; ++i) {
    LineQuad q = helly_gadget(f.ngon, i);
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("build_helly_family: gadget " + std::to_string(i) + " " + what);
    };
    const Vec& v = f.ngon[i];
    const Vec& w = f.ngon[(i + 1) % n];
    const Vec& u = f.ngon[(i + n - 1) % n];
    if (direction_dot(q[0], {w[0] - v[0], w[1] - v[1]}) != 0 || direction_dot(q[1], {u[0] - v[0], u[1] - v[1]}) != 0)
      fail("outer line not perpendicular to its side");
    for (std::size_t j = 0; j < n; ++j)
      if (in_contractible_hull(f.ngon[j], q) != (j != i)) fail("wrong membership of vertex " + std::to_string(j));
    if (in_contractible_hull(center, q)) fail("contains the center");
    f.families.push_back(q);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Verification by arrangement faces.

struct ArrangementFaces {
  std::vector<Vec> vertices, edges, cells;  // one representative point per face
  bool simple = false;
  bool euler_ok = false;
};

namespace detail {

inline std::vector<int> sign_vector(const Vec& p, const std::vector<Hyperplane>& lines) {
  HomoPoint hp = HomoPoint::affine(p);
  std::vector<int> s;
  for (const auto& l : lines) s.push_back(sign(l.eval(hp)));
  return s;
}

inline Vec line_direction(const Hyperplane& l) { return {-l[1], l[0]}; }

}  // namespace detail

/// One representative per vertex, edge and cell of a line arrangement, with
/// faces told apart by their sign vectors. Lines must not all be parallel.
inline ArrangementFaces arrangement_faces(const std::vector<Hyperplane>& input) {
  // merge coincident lines
  std::vector<Hyperplane> lines;
  for (const auto& l : input)
    if (std::none_of(lines.begin(), lines.end(), [&](const Hyperplane& m) { return projectively_equal(l, m); }))
      lines.push_back(l);
  const std::size_t m = lines.size();
  ArrangementFaces out;
  std::set<Vec> vset;
  std::vector<std::vector<Vec>> on_line(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto &a = lines[i], &b = lines[j];
      Scalar det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      Vec p{(a[1] * b[2] - a[2] * b[1]) / det, (a[2] * b[0] - a[0] * b[2]) / det};
      vset.insert(p);
      on_line[i].push_back(p);
      on_line[j].push_back(p);
    }
  if (vset.empty()) throw std::invalid_argument("arrangement_faces: all lines parallel");
  out.vertices.assign(vset.begin(), vset.end());

  std::set<std::vector<int>> edge_keys, cell_keys;
  auto add_edge = [&](const Vec& p) {
    if (edge_keys.insert(detail::sign_vector(p, lines)).second) out.edges.push_back(p);
  };
  for (std::size_t i = 0; i < m; ++i) {
    Vec dir = detail::line_direction(lines[i]);
    auto param = [&](const Vec& p) -> Scalar { return dir[0] * p[0] + dir[1] * p[1]; };
    auto& pts = on_line[i];
    std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) { return param(a) < param(b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) continue;  // unreachable: such a line is parallel to all others
    add_edge({pts.front()[0] - dir[0], pts.front()[1] - dir[1]});
    add_edge({pts.back()[0] + dir[0], pts.back()[1] + dir[1]});
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      add_edge({(pts[k][0] + pts[k + 1][0]) / 2, (pts[k][1] + pts[k + 1][1]) / 2});
  }

  // cells: around every vertex, step into each angular sector between the
  // lines through it, not far enough to reach any other line
  for (const auto& v : out.vertices) {
    HomoPoint hv = HomoPoint::affine(v);
    std::vector<std::array<Scalar, 2>> dirs;
    for (const auto& l : lines)
      if (l.eval(hv) == 0) {
        Vec d = detail::line_direction(l);
        dirs.push_back({d[0], d[1]});
        dirs.push_back({-d[0], -d[1]});
      }
    auto half = [](const std::array<Scalar, 2>& a) { return (a[1] < 0 || (a[1] == 0 && a[0] < 0)) ? 1 : 0; };
    std::sort(dirs.begin(), dirs.end(), [&](const auto& a, const auto& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return sign(Scalar(a[0] * b[1] - a[1] * b[0])) > 0;
    });
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const auto& a = dirs[k];
      const auto& b = dirs[(k + 1) % dirs.size()];
      Vec u{a[0] + b[0], a[1] + b[1]};
      if (u[0] == 0 && u[1] == 0) u = {-a[1], a[0]};
      std::optional<Scalar> reach;
      for (const auto& l : lines) {
        Scalar at = l.eval(hv), along = l[0] * u[0] + l[1] * u[1];
        if (at == 0 || along == 0 || sign(at) == sign(along)) continue;
        Scalar r = abs(at) / abs(along);
        if (!reach || r < *reach) reach = r;
      }
      Scalar e = reach ? Scalar(*reach / 2) : Scalar(1);
      Vec p{v[0] + e * u[0], v[1] + e * u[1]};
      if (cell_keys.insert(detail::sign_vector(p, lines)).second) out.cells.push_back(p);
    }
  }
  const std::size_t V = out.vertices.size(), E = out.edges.size(), F = out.cells.size();
  out.euler_ok = V + F == E + 1;
  bool generic = V == m * (m - 1) / 2;
  out.simple = generic && E == m * m && F == m * (m - 1) / 2 + m + 1;
  return out;
}

struct HellyReport {
  std::vector<std::optional<Vec>> leave_one_out;  // common point of all hulls but one
  bool full_empty = false;
  std::optional<Vec> full_witness;                 // set only if the construction fails
  std::size_t vertices = 0, edges = 0, cells = 0;
  bool euler_ok = false;
  bool simple = false;
};

inline HellyReport verify_helly_failure(const HellyFamily& f) {
  HellyReport r;
  const std::size_t n = f.families.size();
  std::vector<std::vector<Hyperplane>> hulls;
  std::vector<Hyperplane> all;
  for (const auto& q : f.families) {
    hulls.emplace_back(q.begin(), q.end());
    all.insert(all.end(), q.begin(), q.end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      if (j != i) ok = in_contractible_hull(f.ngon[i], hulls[j]);
    r.leave_one_out.push_back(ok ? std::optional<Vec>(f.ngon[i]) : std::nullopt);
  }
  auto faces = arrangement_faces(all);
  r.vertices = faces.vertices.size();
  r.edges = faces.edges.size();
  r.cells = faces.cells.size();
  r.euler_ok = faces.euler_ok;
  r.simple = faces.simple;
  r.full_empty = true;
  for (const auto* group : {&faces.vertices, &faces.edges, &faces.cells})
    for (const auto& p : *group) {
      if (!r.full_empty) break;
      if (std::all_of(hulls.begin(), hulls.end(), [&](const auto& h) { return in_contractible_hull(p, h); })) {
        r.full_empty = false;
        r.full_witness = p;
      }
    }
  return r;
}

// ---------------------------------------------------------------------------

struct TupleHullCheck {
  std::size_t tuple_size = 0;
  std::size_t tuples = 0;
  bool all_contain = false;  // the deepest hyperplane lies in every tuple's hull
};

/// For tiny site sets: the contractible hulls of all subsets of size
/// n - ceil(n/(d+1)) + 1 share the deepest hyperplane. Brute force over subsets.
inline TupleHullCheck tuple_hull_check(const SiteSet& sites) {
  const std::size_t n = sites.size(), d = sites.dim();
  if (n == 0 || n > 12) throw std::length_error("tuple_hull_check: requires 1 <= n <= 12");
  Hyperplane h = deepest_hyperplane(sites).hyperplane;
  TupleHullCheck res;
  res.tuple_size = n - (n + d) / (d + 1) + 1;
  res.all_contain = true;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != res.tuple_size) continue;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) ids.push_back(i);
    ++res.tuples;
    if (regression_depth(h, sites.subset(ids)).value < 1) res.all_contain = false;
  }
  return res;
}

}  // namespace depthlab
