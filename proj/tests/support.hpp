#pragma once

// Seeded generators shared by the test suites.

#include <depthlab/depth.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using namespace depthlab;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar rational(long range = 20, long den = 4) {
    Scalar q(integer(-range, range), integer(1, den));
    q.canonicalize();
    return q;
  }

  Vec ivec(std::size_t n, long range) {
    Vec v(n);
    for (auto& c : v) c = integer(-range, range);
    return v;
  }

  Vec nonzero_vec(std::size_t n, long range) {
    Vec v;
    do v = ivec(n, range);
    while (is_zero(v));
    return v;
  }

  /// Integer sites; small ranges produce many coincidences and collinearities.
  SiteSet sites(std::size_t d, std::size_t n, long range) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(ivec(d, range));
    return SiteSet::from_affine(d, rows);
  }

  /// Homogeneous sites, some of them at infinity.
  SiteSet projective_sites(std::size_t d, std::size_t n, long range) {
    std::vector<HomoPoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
      Vec c = nonzero_vec(d + 1, range);
      if (integer(0, 4) == 0) c.back() = 0;
      if (is_zero(c)) c[0] = 1;
      pts.emplace_back(c);
    }
    return SiteSet(d, std::move(pts));
  }

  HomoPoint point(std::size_t d, long range) { return HomoPoint::affine(ivec(d, range)); }

  Hyperplane nonvertical(std::size_t d, long range) {
    Vec c = ivec(d + 1, range);
    c[d - 1] = integer(1, range);
    if (coin()) c[d - 1] = -c[d - 1];
    return Hyperplane(c);
  }

  ProjectiveTransform transform(std::size_t d, long range) {
    while (true) {
      Matrix m(d + 1, Vec(d + 1));
      for (auto& row : m)
        for (auto& c : row) c = rational(range, 3);
      if (determinant(m) != 0) return ProjectiveTransform(m);
    }
  }
};

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace testsupport
