#include "support.hpp"

#include <depthlab/sphere_heuristic.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <iostream>

using namespace depthlab;
using testsupport::ceil_div;
using testsupport::Gen;

TEST(LiftSites, AntipodalPairs) {
  Gen g(1);
  SiteSet s = g.sites(3, 7, 50);
  auto lifted = lift_sites(s);
  ASSERT_EQ(lifted.size(), 14u);
  for (std::size_t i = 0; i < lifted.size(); i += 2) {
    double norm = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(lifted[i][k], -lifted[i + 1][k], 1e-12);
      norm += lifted[i][k] * lifted[i][k];
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
    // collinear with the origin and the embedded site (p, 1)
    Vec a = s[i / 2].affine_coords();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(lifted[i][k] / lifted[i][3], to_double(a[k]), 1e-9);
  }
}

TEST(LiftSites, OriginLiftsToTangencyPoint) {
  auto lifted = lift_sites(SiteSet::from_affine(2, {{Scalar(0), Scalar(0)}}));
  ASSERT_EQ(lifted.size(), 2u);
  EXPECT_EQ(lifted[0], (FVec{0.0, 0.0, 1.0}));
  EXPECT_EQ(lifted[1], (FVec{-0.0, -0.0, -1.0}));
}

TEST(Heuristic, CollinearSitesGiveCommonLine) {
  SiteSet s = SiteSet::from_affine(2, {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(3)}, {Scalar(2), Scalar(5)}});
  auto r = heuristic_deep_hyperplane(s);
  EXPECT_FALSE(r.fallback);
  EXPECT_EQ(r.fit.depth.value, 3u);
  EXPECT_TRUE(projectively_equal(r.fit.hyperplane, graph_hyperplane({Scalar(2)}, Scalar(1))));
}

TEST(Heuristic, FifteenSitesMeetBound) {
  Gen g(15);
  SiteSet s = g.sites(2, 15, 1000);
  auto r = heuristic_deep_hyperplane(s);
  EXPECT_GE(r.fit.depth.value, 5u);
  EXPECT_EQ(regression_depth(r.fit.hyperplane, s).value, r.fit.depth.value);
}

TEST(Heuristic, AlwaysVerifiedAndBounded) {
  Gen g(16);
  std::size_t heuristic_only = 0, total = 0;
  for (int it = 0; it < 20; ++it) {
    std::size_t d = it % 3 == 2 ? 3 : 2;
    std::size_t n = g.index(d + 2, d == 2 ? 18 : 10);
    SiteSet s = g.sites(d, n, it % 2 ? 5 : 1000);
    auto r = heuristic_deep_hyperplane(s, 60, it);
    ++total;
    EXPECT_TRUE(r.fit.exact);
    EXPECT_GE(r.fit.depth.value, ceil_div(n, d + 1));
    EXPECT_EQ(regression_depth(r.fit.hyperplane, s).value, r.fit.depth.value);
    EXPECT_GE(r.best.objective, 0.0);
    double norm = 0;
    for (double c : r.best.pole) norm += c * c;
    EXPECT_NEAR(norm, 1.0, 1e-12);
    if (r.fallback) {
      auto exact = deepest_hyperplane(s);
      EXPECT_EQ(r.fit.hyperplane.coeffs(), exact.hyperplane.coeffs());
      EXPECT_EQ(r.fit.depth.value, exact.depth.value);
    } else {
      ++heuristic_only;
      EXPECT_LT(r.rounding_distance, M_PI / 2 + 1e-12);
    }
  }
  std::cout << "heuristic-only success: " << heuristic_only << "/" << total << "\n";
}

TEST(Heuristic, DeterministicUnderSeed) {
  Gen g(17);
  SiteSet s = g.sites(2, 11, 100);
  auto a = heuristic_deep_hyperplane(s, 60, 9), b = heuristic_deep_hyperplane(s, 60, 9);
  EXPECT_EQ(a.fit.hyperplane.coeffs(), b.fit.hyperplane.coeffs());
  EXPECT_EQ(a.best.pole, b.best.pole);
  EXPECT_EQ(a.evaluations, b.evaluations);
}
