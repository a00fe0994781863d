#pragma once

// Deepest regression hyperplanes, Tukey medians and center points.
//
// Regression depth is upper semicontinuous in the fitted hyperplane, and it is
// constant on the faces of the dual arrangement (one dual hyperplane per site),
// so its maximum is attained at a vertex of that arrangement: a nonvertical
// hyperplane through d sites, or through fewer sites plus fixed coordinate
// constraints when the arrangement has a lineality space.

#include <depthlab/depth.hpp>
#include <depthlab/regions.hpp>

#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace depthlab {

inline std::size_t center_bound(std::size_t n, std::size_t d) { return (n + d) / (d + 1); }

struct FitResult {
  Hyperplane hyperplane;
  DepthCertificate depth;
  std::size_t candidates_examined = 0;
  bool exact = true;
  std::vector<std::size_t> generators;  // sites the hyperplane was built through
};

struct FitCandidate {
  Hyperplane hyperplane;
  std::vector<std::size_t> generators;
};

/// All vertices of the dual arrangement, in lexicographic generator order,
/// without duplicates.
inline std::vector<FitCandidate> fit_candidates(const SiteSet& sites) {
  const std::size_t d = sites.dim();
  if (sites.empty()) throw std::invalid_argument("fit: no sites");
  std::vector<Vec> rows;
  Vec rhs;
  for (const auto& p : sites.sites()) {
    if (!p.is_finite()) throw std::invalid_argument("fit: all sites must be finite");
    Vec a = p.affine_coords();
    Vec row(a.begin(), a.end() - 1);
    row.push_back(Scalar(1));
    rows.push_back(std::move(row));
    rhs.push_back(a.back());
  }
  const std::size_t r = span_info(rows, d).rank;
  // unit rows e_j completing the site rows to full rank
  Matrix extra;
  {
    Matrix acc;
    for (auto id : span_info(rows, d).basis_ids) acc.push_back(rows[id]);
    for (std::size_t j = 0; j < d && acc.size() < d; ++j) {
      Vec e(d, Scalar(0));
      e[j] = 1;
      Matrix trial = acc;
      trial.push_back(e);
      if (rank(trial) > acc.size()) {
        acc = std::move(trial);
        extra.push_back(e);
      }
    }
  }

  std::vector<FitCandidate> out;
  std::set<Vec> seen;
  const std::size_t n = sites.size();
  std::vector<std::size_t> comb(r);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    Matrix m;
    Vec b;
    for (auto i : comb) {
      m.push_back(rows[i]);
      b.push_back(rhs[i]);
    }
    for (const auto& e : extra) {
      m.push_back(e);
      b.push_back(Scalar(0));
    }
    if (auto theta = solve(m, b); theta && seen.insert(*theta).second) {
      Vec slopes(theta->begin(), theta->end() - 1);
      out.push_back({graph_hyperplane(slopes, theta->back()), comb});
    }
    std::size_t i = r;
    while (i > 0 && comb[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

namespace detail {

inline std::vector<Hyperplane> vertical_probes(const SiteSet& sites, std::size_t cap = 400) {
  const std::size_t d = sites.dim(), n = sites.size();
  std::vector<Hyperplane> out{hyperplane_at_infinity(d)};
  Vec up(d + 1, Scalar(0));
  up[d - 1] = 1;
  auto add = [&](std::initializer_list<std::size_t> ids) {
    Matrix rows{up};
    for (auto i : ids) rows.push_back(sites[i].coords());
    if (rank(rows) != rows.size()) return;
    Vec g = orthogonal_complement(rows, d + 1);
    if (!is_zero(g)) out.emplace_back(g);
  };
  if (d == 2) {
    for (std::size_t i = 0; i < n; ++i) add({i});
  } else if (d == 3) {
    std::size_t pairs = n * (n - 1) / 2, stride = std::max<std::size_t>(1, pairs / cap), c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (c++ % stride == 0) add({i, j});
  }
  return out;
}

inline FitResult best_fit(const SiteSet& sites, const std::function<std::size_t(const Hyperplane&)>& score) {
  auto cands = fit_candidates(sites);
  std::optional<std::size_t> best;
  std::size_t best_id = 0;
  // Any vertical hyperplane G gives an upper bound: the sites in the closed
  // double wedge between a candidate and G. Probes are the hyperplane at
  // infinity plus vertical hyperplanes through d-1 sites; scoring in order of
  // decreasing bound then skips most candidates, and the choice is still the
  // first maximum.
  const auto probes = vertical_probes(sites);
  std::vector<std::vector<int>> probe_side(probes.size());
  for (std::size_t j = 0; j < probes.size(); ++j)
    for (const auto& p : sites.sites()) probe_side[j].push_back(side_of(probes[j], p));
  std::vector<std::size_t> bound(cands.size()), order(cands.size());
  std::vector<int> hside(sites.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t t = 0; t < sites.size(); ++t) hside[t] = side_of(cands[i].hyperplane, sites[t]);
    std::size_t b = sites.size();
    for (const auto& ps : probe_side) {
      std::size_t up = 0, down = 0;
      for (std::size_t t = 0; t < sites.size(); ++t) {
        int prod = hside[t] * ps[t];
        if (prod >= 0) ++up;
        if (prod <= 0) ++down;
      }
      b = std::min({b, up, down});
    }
    bound[i] = b;
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bound[a] > bound[b]; });
  for (auto i : order) {
    if (best && (bound[i] < *best || (bound[i] == *best && i > best_id))) continue;
    std::size_t s = score(cands[i].hyperplane);
    if (!best || s > *best || (s == *best && i < best_id)) {
      best = s;
      best_id = i;
    }
  }
  FitResult res;
  res.hyperplane = cands[best_id].hyperplane;
  res.generators = cands[best_id].generators;
  res.depth = regression_depth(res.hyperplane, sites);
  res.candidates_examined = cands.size();
  if (res.depth.value != *best) throw std::logic_error("fit: depth evaluators disagree");
  return res;
}
}  // namespace detail

/// Hyperplane of maximum regression depth (exact for d in {2, 3}).
inline FitResult deepest_hyperplane(const SiteSet& sites) {
  if (sites.dim() < 2 || sites.dim() > 3) throw std::domain_error("deepest_hyperplane: exact search supports d in {2, 3}");
  return detail::best_fit(sites, [&](const Hyperplane& h) { return regression_depth(h, sites).value; });
}

/// Planar deepest line, scoring each candidate with the O(n log n) sweep.
inline FitResult deepest_line_2d(const SiteSet& sites) {
  if (sites.dim() != 2) throw std::invalid_argument("deepest_line_2d: requires d = 2");
  return detail::best_fit(sites, [&](const Hyperplane& h) { return regression_depth_sweep_2d(h, sites); });
}

// ---------------------------------------------------------------------------

struct MedianResult {
  HomoPoint point;
  DepthCertificate depth;
};

/// A point of maximum location depth: a point of the deepest nonempty depth
/// region, found by bisection on t (regions are nested).
inline MedianResult tukey_median(const SiteSet& sites) {
  const std::size_t d = sites.dim();
  if (d < 1 || d > 3) throw std::domain_error("tukey_median: supports d <= 3");
  if (sites.empty()) throw std::invalid_argument("tukey_median: no sites");
  const Box box = bounding_box(sites);
  const DepthRegions regions(sites);
  auto point_at = [&](std::size_t t) -> std::optional<Vec> {
    if (d == 2) {
      Polygon poly = clip_polygon(box_polygon(box), regions.constraints(t));
      if (poly.empty()) return std::nullopt;
      Point2 c = vertex_average(poly);
      return Vec{c[0], c[1]};
    }
    return find_feasible_point(regions.constraints(t), box);
  };
  std::optional<Vec> best = point_at(1);
  if (!best) throw std::logic_error("tukey_median: depth-1 region is empty");
  std::size_t lo = 1, hi = sites.size() + 1;  // lo feasible, hi infeasible
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (auto p = point_at(mid)) {
      lo = mid;
      best = std::move(p);
    } else {
      hi = mid;
    }
  }
  MedianResult res{HomoPoint::affine(*best), {}};
  res.depth = location_depth(res.point, sites);
  if (res.depth.value != lo) throw std::logic_error("tukey_median: region depth mismatch");
  return res;
}

struct CenterCheck {
  bool is_center = false;
  DepthCertificate depth;
};

inline CenterCheck certify_center_point(const HomoPoint& x, const SiteSet& sites) {
  CenterCheck c;
  c.depth = location_depth(x, sites);
  c.is_center = c.depth.value >= center_bound(sites.size(), sites.dim());
  return c;
}

struct ReducedInstance {
  Hyperplane hyperplane;
  SiteSet sites;
  ProjectiveTransform transform;
};

/// Location depth of x as a regression-depth instance: send x to the point at
/// vertical infinity; the image of the hyperplane at infinity then has
/// regression depth equal to the location depth of x.
inline ReducedInstance reduce_location_to_regression(const HomoPoint& x, const SiteSet& sites) {
  if (!x.is_finite()) throw std::invalid_argument("reduce_location_to_regression: x must be finite");
  auto t = transform_point_to_vertical_infinity(x);
  return {t(hyperplane_at_infinity(sites.dim())), sites.transformed(t), t};
}

}  // namespace depthlab
