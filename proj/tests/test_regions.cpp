#include "oracles.hpp"
#include "support.hpp"

#include <depthlab/regions.hpp>

#include <gtest/gtest.h>

using namespace depthlab;
using testsupport::Gen;

namespace {

// Candidate points for the planar depth maximum: sites and pairwise
// intersections of lines through pairs of sites.
std::vector<Vec> arrangement_vertices(const SiteSet& s) {
  std::vector<Vec> pts, out;
  for (const auto& p : s.sites()) pts.push_back(p.affine_coords());
  out = pts;
  std::vector<Hyperplane> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Vec c{pts[i][1] - pts[j][1], pts[j][0] - pts[i][0], Scalar(0)};
      if (c[0] == 0 && c[1] == 0) continue;
      c[2] = -(c[0] * pts[i][0] + c[1] * pts[i][1]);
      lines.emplace_back(c);
    }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Vec &a = lines[i].coeffs(), &b = lines[j].coeffs();
      Scalar det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      out.push_back({(a[1] * b[2] - a[2] * b[1]) / det, (a[2] * b[0] - a[0] * b[2]) / det});
    }
  return out;
}

}  // namespace

TEST(Lp, FeasiblePointSatisfiesConstraints) {
  Gen g(17);
  for (int it = 0; it < 300; ++it) {
    std::size_t k = g.index(1, 3);
    std::vector<Halfspace> cons;
    for (std::size_t i = 0, m = g.index(0, 12); i < m; ++i) cons.push_back({g.ivec(k, 5), g.rational(10, 3)});
    Box box{Vec(k, Scalar(-20)), Vec(k, Scalar(20))};
    auto p = find_feasible_point(cons, box, it);
    if (k == 2) {
      Polygon poly = clip_polygon(box_polygon(box), cons);
      ASSERT_EQ(p.has_value(), !poly.empty()) << "iteration " << it;
    }
    if (p) {
      for (const auto& h : cons) EXPECT_TRUE(h.contains(*p));
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_GE((*p)[j], box.lo[j]);
        EXPECT_LE((*p)[j], box.hi[j]);
      }
    }
  }
}

TEST(Lp, DetectsInfeasibleSlab) {
  std::vector<Halfspace> cons{{{Scalar(1), Scalar(1)}, Scalar(0)}, {{Scalar(-1), Scalar(-1)}, Scalar(-1)}};
  Box box{{Scalar(-5), Scalar(-5)}, {Scalar(5), Scalar(5)}};
  EXPECT_FALSE(find_feasible_point(cons, box).has_value());
  cons[1].offset = 0;  // x + y = 0 exactly
  auto p = find_feasible_point(cons, box);
  ASSERT_TRUE(p);
  EXPECT_EQ((*p)[0] + (*p)[1], 0);
}

TEST(Regions, PlanarRegionMatchesVertexBruteForce) {
  Gen g(3);
  for (int it = 0; it < 80; ++it) {
    SiteSet s = g.sites(2, g.index(1, 9), it % 3 ? 6 : 2);
    std::size_t best = 0;
    for (const auto& v : arrangement_vertices(s)) best = std::max(best, oracle::location_depth_2d(v, s));
    for (std::size_t t = 1; t <= best + 1; ++t) {
      Polygon poly = depth_region_polygon_2d(s, t);
      ASSERT_EQ(poly.empty(), t > best) << "iteration " << it << " t " << t;
      for (const auto& q : poly) EXPECT_GE(oracle::location_depth_2d({q[0], q[1]}, s), t);
      if (!poly.empty()) {
        Point2 c = vertex_average(poly);
        EXPECT_GE(oracle::location_depth_2d({c[0], c[1]}, s), t);
      }
    }
  }
}

TEST(Regions, SpatialRegionPointsReachDepth) {
  Gen g(4);
  for (int it = 0; it < 60; ++it) {
    SiteSet s = g.sites(3, g.index(1, 8), it % 3 ? 5 : 1);
    Box box = bounding_box(s);
    for (std::size_t t = 1; t <= 3; ++t) {
      auto p = find_feasible_point(depth_region(s, t), box);
      if (t == 1) {
        ASSERT_TRUE(p);
      }
      if (p) {
        EXPECT_GE(location_depth(HomoPoint::affine(*p), s).value, t);
      }
    }
  }
}

TEST(Regions, DepthOneRegionIsHull) {
  SiteSet s = SiteSet::from_affine(2, {{Scalar(0), Scalar(0)}, {Scalar(4), Scalar(0)}, {Scalar(0), Scalar(4)}});
  Polygon poly = depth_region_polygon_2d(s, 1);
  EXPECT_EQ(poly.size(), 3u);
  EXPECT_TRUE(depth_region_polygon_2d(s, 2).empty());
}
