#pragma once

// Floating-point pole search for a deep regression hyperplane.
//
// Sites p are embedded as (p, 1) in R^{d+1} and lifted to the antipodal pair
// ±(p, 1)/|(p, 1)|. Flattening at a pole ρ projects centrally onto the tangent
// hyperplane ρ·z = 1; in that chart the hyperplane with coefficient vector ρ
// plays the role of the hyperplane at infinity. If the center point of the
// flattened sites coincides with the point at vertical infinity, the
// hyperplane ρ has regression depth at least the center-point bound. The
// search minimizes the angle between the two, then snaps ρ to a nearby
// candidate hyperplane through d sites and verifies the depth exactly.

#include <depthlab/fits.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace depthlab {

using FVec = std::vector<double>;

struct PoleSearchState {
  FVec pole;
  double objective = 0;
  std::vector<std::pair<FVec, double>> trace;  // (pole, objective) after each accepted move
};

struct HeuristicResult {
  FitResult fit;
  bool fallback = false;
  std::string fallback_reason;
  double rounding_distance = 0;  // angle between the snapped hyperplane and the pole
  std::size_t evaluations = 0;
  PoleSearchState best;
};

namespace sphere_detail {

inline double fdot(const FVec& a, const FVec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline FVec normalized(FVec v) {
  double n = std::sqrt(fdot(v, v));
  for (auto& c : v) c /= n;
  return v;
}

/// Orthonormal basis of the complement of the unit vector r (Gram-Schmidt over
/// the coordinate axes, skipping the axis most aligned with r).
inline std::vector<FVec> complement_basis(const FVec& r) {
  const std::size_t m = r.size();
  std::size_t skip = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (std::abs(r[i]) > std::abs(r[skip])) skip = i;
  std::vector<FVec> basis;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == skip) continue;
    FVec v(m, 0.0);
    v[i] = 1;
    double pr = fdot(v, r);
    for (std::size_t k = 0; k < m; ++k) v[k] -= pr * r[k];
    for (const auto& b : basis) {
      double pb = fdot(v, b);
      for (std::size_t k = 0; k < m; ++k) v[k] -= pb * b[k];
    }
    basis.push_back(normalized(v));
  }
  return basis;
}

inline double angle_between_lines(const FVec& a, const FVec& b) {
  double c = std::abs(fdot(a, b)) / std::sqrt(fdot(a, a) * fdot(b, b));
  return std::acos(std::min(1.0, c));
}

}  // namespace sphere_detail

/// The 2n antipodal unit vectors ±(p, 1)/|(p, 1)|, in site order (+ then −).
inline std::vector<FVec> lift_sites(const SiteSet& sites) {
  std::vector<FVec> out;
  for (const auto& p : sites.sites()) {
    Vec a = p.affine_coords();
    FVec v;
    for (const auto& c : a) v.push_back(to_double(c));
    v.push_back(1.0);
    v = sphere_detail::normalized(v);
    FVec w = v;
    for (auto& c : w) c = -c;
    out.push_back(std::move(v));
    out.push_back(std::move(w));
  }
  return out;
}

/// Angle between the lifted center point of the sites flattened at `pole` and
/// the lifted point at vertical infinity.
inline double pole_objective(const std::vector<FVec>& lifted, const FVec& pole, std::size_t d) {
  using namespace sphere_detail;
  auto basis = complement_basis(pole);
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < lifted.size(); i += 2) {  // one representative per antipodal pair
    const FVec& u = lifted[i];
    double s = fdot(pole, u);
    if (std::abs(s) < 1e-9) s = s < 0 ? -1e-9 : 1e-9;
    Vec q;
    for (const auto& b : basis) q.push_back(round_to_grid(std::clamp(fdot(b, u) / s, -1e6, 1e6), 16));
    flat.push_back(std::move(q));
  }
  auto med = tukey_median(SiteSet::from_affine(d, flat));
  Vec c = med.point.affine_coords();
  FVec z = pole;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < z.size(); ++k) z[k] += to_double(c[j]) * basis[j][k];
  FVec vinf(d + 1, 0.0);
  vinf[d - 1] = 1;
  return angle_between_lines(z, vinf);
}

/// Pole search; every returned depth is verified exactly, and the exact search
/// is used whenever the snapped hyperplane misses the center-point bound.
inline HeuristicResult heuristic_deep_hyperplane(const SiteSet& sites, std::size_t budget = 96,
                                                 std::uint64_t seed = 1) {
  using namespace sphere_detail;
  const std::size_t d = sites.dim();
  if (d < 2 || d > 3) throw std::domain_error("heuristic_deep_hyperplane: supports d in {2, 3}");
  if (sites.empty()) throw std::invalid_argument("heuristic_deep_hyperplane: no sites");
  const std::size_t m = d + 1;
  const auto lifted = lift_sites(sites);
  const std::size_t bound = center_bound(sites.size(), d);

  HeuristicResult res;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<PoleSearchState> finals;
  const std::size_t starts = 2 * m;
  const std::size_t per_start = std::max<std::size_t>(1, budget / starts);

  for (std::size_t s = 0; s < starts; ++s) {
    FVec pole(m, 0.0);
    pole[s / 2] = s % 2 ? -1.0 : 1.0;
    for (auto& c : pole) c += jitter(rng);
    PoleSearchState st;
    st.pole = normalized(pole);
    st.objective = pole_objective(lifted, st.pole, d);
    ++res.evaluations;
    std::size_t used = 1;
    double step = 0.5;
    while (used < per_start && step > 1e-7) {
      auto basis = complement_basis(st.pole);
      bool improved = false;
      for (const auto& b : basis) {
        for (double sgn : {1.0, -1.0}) {
          if (used >= per_start) break;
          FVec cand = st.pole;
          for (std::size_t k = 0; k < m; ++k) cand[k] += sgn * step * b[k];
          cand = normalized(cand);
          double obj = pole_objective(lifted, cand, d);
          ++used;
          ++res.evaluations;
          if (obj < st.objective) {
            st.pole = cand;
            st.objective = obj;
            st.trace.emplace_back(st.pole, obj);
            improved = true;
          }
        }
      }
      if (!improved) step /= 2;
    }
    finals.push_back(std::move(st));
  }
  std::stable_sort(finals.begin(), finals.end(),
                   [](const PoleSearchState& a, const PoleSearchState& b) { return a.objective < b.objective; });
  res.best = finals.front();

  // snap each final pole to the angularly nearest candidate hyperplanes
  const auto cands = fit_candidates(sites);
  for (const auto& st : finals) {
    std::vector<std::pair<double, std::size_t>> near;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      FVec c;
      for (const auto& x : cands[i].hyperplane.coeffs()) c.push_back(to_double(x));
      near.emplace_back(angle_between_lines(c, st.pole), i);
    }
    std::stable_sort(near.begin(), near.end());
    near.resize(std::min<std::size_t>(near.size(), m));
    for (const auto& [ang, i] : near) {
      auto cert = regression_depth(cands[i].hyperplane, sites);
      if (cert.value >= bound) {
        res.fit = FitResult{cands[i].hyperplane, std::move(cert), cands.size(), true, cands[i].generators};
        res.rounding_distance = ang;
        return res;
      }
    }
  }
  res.fallback = true;
  res.fallback_reason = "snapped hyperplanes below the center-point bound";
  res.fit = deepest_hyperplane(sites);
  return res;
}

}  // namespace depthlab
