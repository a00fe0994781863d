#pragma once

// Simulation of simplicity for orientation tests.
//
// Affine coordinate j of the site with rank r (rank = position after sorting the
// participating sites by index) is displaced by eps^(2^(r*d + j)). The sign of a
// perturbed determinant is the sign of its lowest-order nonzero coefficient, so
// ties are broken by site index first and coordinate position second.

#include <depthlab/geometry.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace depthlab {

/// Orientation sign of d+1 points in projective d-space (rows of the
/// homogeneous determinant, each canonically scaled) under the symbolic
/// perturbation. Points without an index are ranked by position after all
/// indexed points. Returns 0 only if the perturbed determinant vanishes
/// identically, which requires a repeated point at infinity.
inline int perturbed_orientation(std::span<const HomoPoint> pts) {
  const std::size_t n = pts.size();
  if (n == 0) throw std::invalid_argument("perturbed_orientation: no points");
  const std::size_t d = n - 1;
  for (const auto& p : pts)
    if (p.dim() != d) throw std::invalid_argument("perturbed_orientation: need d+1 points in dimension d");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    auto idx = pts[i].index();
    return std::pair<std::size_t, std::size_t>{idx ? 0 : 1, idx ? *idx : i};
  };
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return key(a) < key(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = pts[i].canonical();

  std::map<std::uint64_t, Scalar> poly;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    const int sgn_perm = inversions % 2 == 0 ? 1 : -1;
    for (std::uint32_t choose = 0; choose < (1u << n); ++choose) {
      std::uint64_t mask = 0;
      Scalar coeff = sgn_perm;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const std::size_t j = perm[i];
        if (choose & (1u << i)) {
          if (j >= d) ok = false;  // homogeneous coordinate is not perturbed
          else mask |= std::uint64_t{1} << (rank[i] * d + j);
        } else {
          coeff *= m[i][j];
          if (coeff == 0) ok = false;
        }
      }
      if (ok) poly[mask] += coeff;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& [mask, c] : poly)
    if (c != 0) return sign(c);
  return 0;
}

/// Unperturbed orientation sign (0 on degeneracy).
inline int orientation(std::span<const HomoPoint> pts) {
  Matrix m;
  for (const auto& p : pts) m.push_back(p.canonical());
  return sign(determinant(m));
}

}  // namespace depthlab
