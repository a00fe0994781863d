#pragma once

// Depth regions {x : location depth >= t} as intersections of closed halfspaces.
//
// When the sites affinely span R^d, the region is cut out by the closed
// halfspaces bounded by hyperplanes through d sites that contain at least
// n - t + 1 sites. Lower-dimensional inputs are handled inside their affine
// hull, where the same rule applies with the hull's own dimension.

#include <depthlab/depth.hpp>
#include <depthlab/lp.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace depthlab {

namespace detail {

inline void push_unique(std::vector<Halfspace>& out, std::set<Vec>& seen, Halfspace h) {
  // normalize so the key is scaling-invariant (positive scaling only)
  Scalar s = 0;
  for (const auto& c : h.normal)
    if (c != 0) {
      s = abs(c);
      break;
    }
  if (s == 0) {
    if (h.offset < 0) out.push_back(std::move(h));
    return;
  }
  Vec key;
  for (const auto& c : h.normal) key.push_back(c / s);
  key.push_back(h.offset / s);
  if (seen.insert(key).second) out.push_back(std::move(h));
}

/// For full-rank sites: each closed halfspace bounded by a hyperplane through d
/// sites, with the number of sites it contains.
inline std::vector<std::pair<Halfspace, std::size_t>> spanning_halfspaces(const std::vector<Vec>& pts, std::size_t d) {
  std::vector<std::pair<Halfspace, std::size_t>> out;
  const std::size_t m = pts.size();
  if (m < d) return out;
  std::vector<std::size_t> comb(d);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    Matrix rows;
    for (std::size_t i = 1; i < d; ++i) {
      Vec v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = pts[comb[i]][j] - pts[comb[0]][j];
      rows.push_back(std::move(v));
    }
    Vec a = orthogonal_complement(rows, d);
    if (!is_zero(a)) {
      Scalar beta = dot(a, pts[comb[0]]);
      std::size_t ge = 0, le = 0;
      for (const auto& p : pts) {
        int s = sign(dot(a, p) - beta);
        if (s >= 0) ++ge;
        if (s <= 0) ++le;
      }
      Vec neg = a;
      for (auto& c : neg) c = -c;
      out.push_back({Halfspace{std::move(neg), -beta}, ge});
      out.push_back({Halfspace{std::move(a), beta}, le});
    }
    std::size_t i = d;
    while (i > 0 && comb[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

inline std::vector<Halfspace> region_constraints(const std::vector<Vec>& pts, std::size_t t, std::size_t d) {
  std::vector<Halfspace> out;
  const std::size_t m = pts.size();
  if (t == 0) return out;
  if (t > m) {
    out.push_back(Halfspace{Vec(d, Scalar(0)), Scalar(-1)});
    return out;
  }
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < m; ++i) {
    Vec v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(v));
  }
  SpanInfo span = span_info(diffs, d);
  std::set<Vec> seen;

  if (span.rank < d) {
    Matrix basis;
    for (auto id : span.basis_ids) basis.push_back(diffs[id]);
    for (auto& nu : null_space(basis, d)) {
      Scalar off = dot(nu, pts[0]);
      Vec neg = nu;
      for (auto& c : neg) c = -c;
      push_unique(out, seen, Halfspace{nu, off});
      push_unique(out, seen, Halfspace{neg, -off});
    }
    if (span.rank == 0) return out;
    std::vector<Vec> proj;
    for (const auto& p : pts) {
      Vec q;
      for (auto c : span.coords) q.push_back(p[c]);
      proj.push_back(std::move(q));
    }
    for (auto& h : region_constraints(proj, t, span.rank)) {
      Vec full(d, Scalar(0));
      for (std::size_t i = 0; i < span.rank; ++i) full[span.coords[i]] = h.normal[i];
      push_unique(out, seen, Halfspace{std::move(full), h.offset});
    }
    return out;
  }

  const std::size_t need = m - t + 1;
  for (const auto& [h, count] : spanning_halfspaces(pts, d))
    if (count >= need) push_unique(out, seen, h);
  return out;
}

inline std::vector<Vec> affine_sites(const SiteSet& sites) {
  std::vector<Vec> pts;
  for (const auto& p : sites.sites()) {
    if (!p.is_finite()) throw std::invalid_argument("depth region: all sites must be finite");
    pts.push_back(p.affine_coords());
  }
  return pts;
}

}  // namespace detail

/// Closed halfspaces whose intersection is the set of points with location depth >= t.
inline std::vector<Halfspace> depth_region(const SiteSet& sites, std::size_t t) {
  return detail::region_constraints(detail::affine_sites(sites), t, sites.dim());
}

/// Depth regions of one site set for several t, sharing the halfspace
/// enumeration across levels.
class DepthRegions {
 public:
  explicit DepthRegions(const SiteSet& sites) : d_(sites.dim()), pts_(detail::affine_sites(sites)) {
    if (pts_.empty()) return;
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts_.size(); ++i) {
      Vec v(d_);
      for (std::size_t j = 0; j < d_; ++j) v[j] = pts_[i][j] - pts_[0][j];
      diffs.push_back(std::move(v));
    }
    full_rank_ = span_info(diffs, d_).rank == d_;
    if (full_rank_) halfspaces_ = detail::spanning_halfspaces(pts_, d_);
  }

  std::vector<Halfspace> constraints(std::size_t t) const {
    if (!full_rank_ || t == 0 || t > pts_.size()) return detail::region_constraints(pts_, t, d_);
    std::vector<Halfspace> out;
    std::set<Vec> seen;
    const std::size_t need = pts_.size() - t + 1;
    for (const auto& [h, count] : halfspaces_)
      if (count >= need) detail::push_unique(out, seen, h);
    return out;
  }

 private:
  std::size_t d_;
  std::vector<Vec> pts_;
  bool full_rank_ = false;
  std::vector<std::pair<Halfspace, std::size_t>> halfspaces_;
};

inline Box bounding_box(const SiteSet& sites) {
  const std::size_t d = sites.dim();
  Box b{Vec(d, Scalar(0)), Vec(d, Scalar(0))};
  bool first = true;
  for (const auto& p : sites.sites()) {
    Vec a = p.affine_coords();
    for (std::size_t j = 0; j < d; ++j) {
      if (first || a[j] < b.lo[j]) b.lo[j] = a[j];
      if (first || a[j] > b.hi[j]) b.hi[j] = a[j];
    }
    first = false;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Planar convex polygons (possibly degenerate: a segment or a single point).

using Point2 = std::array<Scalar, 2>;
using Polygon = std::vector<Point2>;  // counterclockwise when 2-dimensional

/// Sutherland-Hodgman against one closed halfplane.
inline Polygon clip_polygon(const Polygon& poly, const Halfspace& h) {
  Polygon out;
  const std::size_t m = poly.size();
  auto value = [&](const Point2& p) -> Scalar { return h.normal[0] * p[0] + h.normal[1] * p[1] - h.offset; };
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % m];
    Scalar vc = value(cur), vn = value(nxt);
    if (vc <= 0) out.push_back(cur);
    if ((vc < 0 && vn > 0) || (vc > 0 && vn < 0)) {
      Scalar t = vc / (vc - vn);
      out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  Polygon dedup;
  for (const auto& p : out)
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

inline Polygon box_polygon(const Box& b) {
  Polygon p{{b.lo[0], b.lo[1]}, {b.hi[0], b.lo[1]}, {b.hi[0], b.hi[1]}, {b.lo[0], b.hi[1]}};
  Polygon dedup;
  for (const auto& q : p)
    if (std::find(dedup.begin(), dedup.end(), q) == dedup.end()) dedup.push_back(q);
  return dedup;
}

inline Polygon clip_polygon(Polygon poly, const std::vector<Halfspace>& cons) {
  for (const auto& h : cons) {
    if (poly.empty()) break;
    poly = clip_polygon(poly, h);
  }
  return poly;
}

/// Exact planar depth region as a convex polygon (empty when no point reaches t).
inline Polygon depth_region_polygon_2d(const SiteSet& sites, std::size_t t) {
  if (sites.dim() != 2) throw std::invalid_argument("depth_region_polygon_2d: requires d = 2");
  if (sites.empty()) return {};
  return clip_polygon(box_polygon(bounding_box(sites)), depth_region(sites, t));
}

inline Point2 vertex_average(const Polygon& poly) {
  Point2 c{Scalar(0), Scalar(0)};
  for (const auto& p : poly) {
    c[0] += p[0];
    c[1] += p[1];
  }
  c[0] /= static_cast<long>(poly.size());
  c[1] /= static_cast<long>(poly.size());
  return c;
}

}  // namespace depthlab
