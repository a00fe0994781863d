#pragma once

// Brute-force reference implementations. They share only the exact-geometry
// kernel with the library; all enumeration strategies here are independent.

#include <depthlab/depth.hpp>

#include <algorithm>
#include <limits>
#include <vector>

namespace oracle {

using namespace depthlab;

// Infinitesimal stand-in: small enough to stay inside every angular interval
// for the integer ranges used by the tests.
inline Scalar tiny() { return Scalar(1, 1000000000) * Scalar(1, 1000000000); }

/// Closed double-wedge count bounded by H and G.
inline std::size_t wedge_count(const Hyperplane& h, const Hyperplane& g, int selector, const SiteSet& sites) {
  std::size_t c = 0;
  for (const auto& p : sites.sites()) {
    int s = side_of(h, p) * side_of(g, p);
    if (s == 0 || s == selector) ++c;
  }
  return c;
}

/// Planar regression depth: every vertical line at a site abscissa, between
/// consecutive abscissae and beyond both ends, plus the line at infinity.
inline std::size_t regression_depth_2d(const Hyperplane& h, const SiteSet& sites) {
  std::vector<Scalar> xs;
  for (const auto& p : sites.sites()) xs.push_back(p.affine_coords()[0]);
  std::sort(xs.begin(), xs.end());
  std::vector<Scalar> cuts = xs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) cuts.push_back((xs[i] + xs[i + 1]) / 2);
  if (!xs.empty()) {
    cuts.push_back(xs.front() - 1);
    cuts.push_back(xs.back() + 1);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  auto consider = [&](const Hyperplane& g) {
    best = std::min({best, wedge_count(h, g, 1, sites), wedge_count(h, g, -1, sites)});
  };
  consider(hyperplane_at_infinity(2));
  for (const auto& c : cuts) consider(Hyperplane(Vec{Scalar(1), Scalar(0), -c}));
  return sites.empty() ? 0 : best;
}

/// Planar location depth: closed halfplanes whose boundary direction is a
/// critical direction rotated by a tiny angle either way.
inline std::size_t location_depth_2d(const Vec& x, const SiteSet& sites) {
  std::vector<Vec> dirs{{Scalar(1), Scalar(0)}};
  for (const auto& p : sites.sites()) {
    Vec a = p.affine_coords();
    Vec v{a[0] - x[0], a[1] - x[1]};
    if (is_zero(v)) continue;
    Vec n{-v[1], v[0]};
    for (int s : {1, -1})
      for (int t : {1, -1}) dirs.push_back({s * n[0] + t * tiny() * -n[1], s * n[1] + t * tiny() * n[0]});
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& u : dirs) {
    std::size_t c = 0;
    for (const auto& p : sites.sites()) {
      Vec a = p.affine_coords();
      if (u[0] * (a[0] - x[0]) + u[1] * (a[1] - x[1]) >= 0) ++c;
    }
    best = std::min(best, c);
  }
  return best;
}

/// Planar crossing distance by sweeping the pencil of lines through x. The
/// pencil is spanned by two lines G1, G2 through x; each site p defines a
/// critical member, and the generic members next to it are tested.
inline std::size_t crossing_distance_2d(const HomoPoint& x, const Hyperplane& h, const SiteSet& sites) {
  Matrix xm{x.coords()};
  auto basis = null_space(xm, 3);
  Hyperplane g1(basis[0]), g2(basis[1]);
  std::vector<std::array<Scalar, 2>> params{{Scalar(1), Scalar(0)}};
  for (const auto& p : sites.sites()) {
    Scalar a = g2.eval(p), b = -g1.eval(p);
    if (a == 0 && b == 0) continue;
    for (int t : {1, -1}) params.push_back({a - t * tiny() * b, b + t * tiny() * a});
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& ab : params) {
    Vec c(3);
    for (int i = 0; i < 3; ++i) c[i] = ab[0] * basis[0][i] + ab[1] * basis[1][i];
    Hyperplane g(c);
    best = std::min({best, wedge_count(h, g, 1, sites), wedge_count(h, g, -1, sites)});
  }
  return best;
}

/// Spatial location depth: cells of the central arrangement of normals
/// (p - x) are reached from every vertex ray w = ±(a × b) by a first-order
/// tilt along each critical trace through w and a second-order tilt to
/// either side of it.
inline std::size_t location_depth_3d(const Vec& x, const SiteSet& sites) {
  std::vector<Vec> vs;
  for (const auto& p : sites.sites()) {
    Vec a = p.affine_coords();
    Vec v{a[0] - x[0], a[1] - x[1], a[2] - x[2]};
    vs.push_back(v);
  }
  auto crossp = [](const Vec& a, const Vec& b) {
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  std::vector<Vec> rays;
  for (int i = 0; i < 3; ++i) {
    Vec e(3, Scalar(0));
    e[i] = 1;
    rays.push_back(e);
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Vec w = crossp(vs[i], vs[j]);
      if (!is_zero(w)) rays.push_back(w);
    }
  auto count = [&](const Vec& u) {
    std::size_t c = 0;
    for (const auto& v : vs)
      if (dot(u, v) >= 0) ++c;
    return c;
  };
  const Scalar e1 = tiny() * tiny(), e2 = e1 * e1 * e1;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& w0 : rays)
    for (int sw : {1, -1}) {
      Vec w = w0;
      for (auto& c : w) c *= sw;
      std::vector<Vec> traces;
      for (const auto& v : vs)
        if (dot(w, v) == 0 && !is_zero(v)) traces.push_back(crossp(w, v));
      if (traces.empty()) traces.push_back(crossp(w, rays[dot(w, rays[0]) == 0 ? 1 : 0]));
      for (const auto& t0 : traces)
        for (int st : {1, -1})
          for (int ss : {1, -1}) {
            Vec t = t0;
            for (auto& c : t) c *= st;
            Vec s = crossp(w, t);
            Vec u(3);
            for (int k = 0; k < 3; ++k) u[k] = w[k] + e1 * t[k] + ss * e2 * s[k];
            best = std::min(best, count(u));
          }
    }
  return best;
}

/// Undirected depth by testing each line's own direction (both signs)
/// rotated by a tiny angle either way.
inline std::size_t undirected_depth_2d(const HomoPoint& x, const std::vector<Hyperplane>& lines) {
  Vec xa = x.affine_coords();
  std::vector<Vec> dirs{{Scalar(1), Scalar(0)}};
  for (const auto& l : lines) {
    Vec d{-l[1], l[0]};
    for (int s : {1, -1})
      for (int t : {1, -1}) dirs.push_back({s * d[0] - t * tiny() * d[1], s * d[1] + t * tiny() * d[0]});
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& u : dirs) {
    std::size_t c = 0;
    for (const auto& l : lines) {
      Scalar at = l[0] * xa[0] + l[1] * xa[1] + l[2];
      Scalar along = l[0] * u[0] + l[1] * u[1];
      bool touched = at == 0 || along == 0 || (at > 0) != (along > 0);
      if (touched) ++c;
    }
    best = std::min(best, c);
  }
  return best;
}

}  // namespace oracle
