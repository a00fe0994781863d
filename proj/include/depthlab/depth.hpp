#pragma once

// Crossing distance and its specializations (regression depth, location depth)
// plus undirected depth in planar line arrangements.
//
// The closed double-wedge minimum over G through x reduces to a cone problem:
// every site p not on H and distinct from x contributes the vector sign(H(p)) p
// projected along x, and the best G is a generic linear functional on that
// quotient minimizing the number of strictly positive values. Sites on H and
// sites equal to x are in every closed wedge and are counted separately.

#include <depthlab/geometry.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace depthlab {

/// Indexed multiset of sites in projective d-space; site i has index i.
class SiteSet {
 public:
  SiteSet() = default;
  SiteSet(std::size_t d, std::vector<HomoPoint> sites) : d_(d) {
    if (d == 0) throw std::invalid_argument("SiteSet: dimension must be >= 1");
    for (std::size_t i = 0; i < sites.size(); ++i) {
      if (sites[i].dim() != d) throw std::invalid_argument("SiteSet: site " + std::to_string(i) + " has wrong dimension");
      sites_.push_back(sites[i].with_index(i));
    }
  }

  static SiteSet from_affine(std::size_t d, const std::vector<Vec>& rows) {
    std::vector<HomoPoint> pts;
    for (const auto& r : rows) {
      if (r.size() != d) throw std::invalid_argument("SiteSet: row has wrong dimension");
      pts.push_back(HomoPoint::affine(r));
    }
    return SiteSet(d, std::move(pts));
  }

  std::size_t dim() const { return d_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  const HomoPoint& operator[](std::size_t i) const { return sites_[i]; }
  const std::vector<HomoPoint>& sites() const { return sites_; }

  /// Subset in the given order; new indices are positions in `ids`.
  SiteSet subset(std::span<const std::size_t> ids) const {
    std::vector<HomoPoint> pts;
    for (auto i : ids) pts.push_back(sites_.at(i));
    return SiteSet(d_, std::move(pts));
  }

  SiteSet with_site(const HomoPoint& p) const {
    auto pts = sites_;
    pts.push_back(p);
    return SiteSet(d_, std::move(pts));
  }

  SiteSet transformed(const ProjectiveTransform& t) const {
    std::vector<HomoPoint> pts;
    for (const auto& p : sites_) pts.push_back(t(p));
    return SiteSet(d_, std::move(pts));
  }

 private:
  std::size_t d_ = 0;
  std::vector<HomoPoint> sites_;
};

struct DoubleWedge {
  Hyperplane boundary_a;
  Hyperplane boundary_b;
  int selector = 1;

  /// Closed membership: the sign product matches the selector or vanishes.
  bool contains(const HomoPoint& p) const {
    int s = side_of(boundary_a, p) * side_of(boundary_b, p);
    return s == 0 || s == selector;
  }
};

struct DepthCertificate {
  std::size_t value = 0;
  DoubleWedge witness;
  /// Set instead of a wedge by undirected depth: the witness ray direction.
  std::optional<Vec> ray_direction;
  std::vector<std::size_t> counted_site_indices;
  bool exact = true;
};

struct DepthOptions {
  bool exact = true;
  std::size_t samples = 4096;  // sampled mode only
  std::uint64_t seed = 1;
};

/// Thrown when x lies on H.
struct DegenerateQuery : std::domain_error {
  DegenerateQuery() : std::domain_error("degenerate query: x is incident to H") {}
};

namespace detail {

struct ConeResult {
  std::size_t count = 0;
  Vec functional;
};

inline ConeResult cone_min(const std::vector<Vec>& vs, std::size_t k);

/// Minimum over generic functionals f on R^k of #{v : f(v) > 0}, with a generic
/// witness functional. Vectors are nonzero.
inline ConeResult cone_min(const std::vector<Vec>& vs, std::size_t k) {
  if (vs.empty()) {
    Vec f(k, Scalar(0));
    f[0] = 1;
    return {0, f};
  }
  SpanInfo span = span_info(vs, k);
  if (span.rank < k) {
    std::vector<Vec> reduced;
    for (const auto& v : vs) {
      Vec r;
      for (auto c : span.coords) r.push_back(v[c]);
      reduced.push_back(std::move(r));
    }
    ConeResult sub = cone_min(reduced, span.rank);
    Vec f(k, Scalar(0));
    for (std::size_t i = 0; i < span.rank; ++i) f[span.coords[i]] = sub.functional[i];
    return {sub.count, f};
  }
  if (k == 1) {
    std::size_t pos = 0, neg = 0;
    for (const auto& v : vs) (sign(v[0]) > 0 ? pos : neg)++;
    return pos <= neg ? ConeResult{pos, Vec{Scalar(1)}} : ConeResult{neg, Vec{Scalar(-1)}};
  }

  // Every generic cell has a vertex f orthogonal to k-1 independent vectors;
  // the best cell next to f is found by solving the same problem on the
  // vectors f vanishes on.
  const std::size_t n = vs.size();
  std::optional<std::size_t> best;
  Vec best_f, best_g;
  std::set<Vec> seen;
  std::vector<std::size_t> comb(k - 1);
  std::iota(comb.begin(), comb.end(), 0);
  if (n < k - 1) throw std::logic_error("cone_min: full rank with too few vectors");
  while (true) {
    Matrix rows;
    for (auto i : comb) rows.push_back(vs[i]);
    Vec f = orthogonal_complement(rows, k);
    if (!is_zero(f) && seen.insert(detail::canonical(f)).second) {
      std::size_t pos = 0, neg = 0;
      std::vector<Vec> zero;
      for (const auto& v : vs) {
        int s = sign(dot(f, v));
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
        else zero.push_back(v);
      }
      ConeResult sub = cone_min(zero, k);
      for (int sel : {1, -1}) {
        std::size_t c = (sel > 0 ? pos : neg) + sub.count;
        if (!best || c < *best) {
          best = c;
          best_f = f;
          if (sel < 0)
            for (auto& x : best_f) x = -x;
          best_g = sub.functional;
        }
      }
    }
    // next combination
    std::size_t i = k - 1;
    while (i > 0 && comb[i - 1] == n - (k - 1) + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
  }

  // Tilt f by a small multiple of g: small enough that no nonzero sign of f
  // flips, so the result is generic and realizes the count.
  std::optional<Scalar> eps;
  for (const auto& v : vs) {
    Scalar fv = dot(best_f, v), gv = dot(best_g, v);
    if (fv == 0 || gv == 0) continue;
    Scalar r = abs(fv) / abs(gv);
    if (!eps || r < *eps) eps = r;
  }
  Scalar e = eps ? Scalar(*eps / 2) : Scalar(1);
  Vec f = best_f;
  for (std::size_t i = 0; i < k; ++i) f[i] += e * best_g[i];
  return {*best, f};
}

/// Quotient along x: drop the last nonzero coordinate k of x after removing
/// the x-component, so span(x) is the kernel.
inline std::size_t quotient_pivot(const HomoPoint& x) {
  std::size_t k = x.coords().size();
  while (x[k - 1] == 0) --k;
  return k - 1;
}

inline Vec quotient(const HomoPoint& x, std::size_t k, const Vec& v) {
  Vec out;
  Scalar r = v[k] / x[k];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != k) out.push_back(v[i] - r * x[i]);
  return out;
}

/// Lifts a functional on the quotient to a hyperplane through x.
inline Vec lift_functional(const HomoPoint& x, std::size_t k, const Vec& phi) {
  Vec g(x.coords().size(), Scalar(0));
  Scalar acc = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == k) continue;
    g[i] = phi[j];
    acc += phi[j] * x[i];
    ++j;
  }
  g[k] = -acc / x[k];
  return g;
}

}  // namespace detail

/// Number of sites in the closed wedge (recount from the witness alone).
inline std::size_t recount(const DoubleWedge& w, const SiteSet& sites) {
  std::size_t c = 0;
  for (const auto& p : sites.sites())
    if (w.contains(p)) ++c;
  return c;
}

/// Minimum number of sites in a closed double wedge bounded by H and a
/// hyperplane through x.
inline DepthCertificate crossing_distance(const HomoPoint& x, const Hyperplane& h, const SiteSet& sites,
                                          const DepthOptions& opts = {}) {
  const std::size_t d = sites.dim();
  if (x.dim() != d || h.dim() != d) throw std::invalid_argument("crossing_distance: dimension mismatch");
  if (incident(h, x)) throw DegenerateQuery();
  if (opts.exact && d >= 4) throw std::domain_error("crossing_distance: exact mode supports d <= 3");

  const std::size_t k = detail::quotient_pivot(x);
  std::size_t always = 0;
  std::vector<Vec> cone;
  for (const auto& p : sites.sites()) {
    int hs = sign(h.eval(p));
    if (hs == 0 || projectively_equal(p, x)) {
      ++always;
      continue;
    }
    Vec q = detail::quotient(x, k, p.coords());
    if (hs < 0)
      for (auto& c : q) c = -c;
    cone.push_back(std::move(q));
  }

  DepthCertificate cert;
  cert.exact = opts.exact;
  Vec phi;
  std::optional<std::size_t> expected;
  if (opts.exact) {
    auto res = detail::cone_min(cone, d);
    expected = always + res.count;
    phi = std::move(res.functional);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coeff(-1000, 1000);
    std::optional<std::size_t> best;
    for (std::size_t s = 0; s < opts.samples; ++s) {
      Vec f(d);
      for (auto& c : f) c = coeff(rng);
      if (is_zero(f)) continue;
      std::size_t cnt = 0;
      for (const auto& v : cone)
        if (sign(dot(f, v)) >= 0) ++cnt;
      if (!best || cnt < *best) {
        best = cnt;
        phi = f;
      }
    }
    if (!best) {
      phi.assign(d, Scalar(0));
      phi[0] = 1;
    }
  }
  Hyperplane g(detail::lift_functional(x, k, phi));
  cert.witness = DoubleWedge{h, g, 1};
  for (const auto& p : sites.sites())
    if (cert.witness.contains(p)) cert.counted_site_indices.push_back(*p.index());
  cert.value = cert.counted_site_indices.size();
  if (expected && *expected != cert.value) throw std::logic_error("crossing_distance: witness recount mismatch");
  return cert;
}

/// Regression depth: crossing distance from the point at vertical infinity.
inline DepthCertificate regression_depth(const Hyperplane& h, const SiteSet& sites, const DepthOptions& opts = {}) {
  if (h.dim() != sites.dim()) throw std::invalid_argument("regression_depth: dimension mismatch");
  if (h.is_vertical()) throw std::invalid_argument("regression_depth: vertical hyperplane");
  return crossing_distance(vertical_infinity(sites.dim()), h, sites, opts);
}

/// Location (Tukey) depth: crossing distance from the hyperplane at infinity.
inline DepthCertificate location_depth(const HomoPoint& x, const SiteSet& sites, const DepthOptions& opts = {}) {
  if (!x.is_finite()) throw std::invalid_argument("location_depth: query point must be finite");
  return crossing_distance(x, hyperplane_at_infinity(sites.dim()), sites, opts);
}

// ---------------------------------------------------------------------------
// Planar angular sweep.

namespace detail {

using IVec2 = std::array<mpz_class, 2>;

inline int half_of(const IVec2& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; }
inline int cross_sign(const IVec2& a, const IVec2& b) { return sgn(mpz_class(a[0] * b[1] - a[1] * b[0])); }

/// Positive integer multiple of a rational 2-vector.
inline IVec2 integerize(const Scalar& a, const Scalar& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return {mpz_class(a.get_num() * (l / a.get_den())), mpz_class(b.get_num() * (l / b.get_den()))};
}

/// Same quantity as cone_min for k = 2, by sorting directions once and
/// sweeping an open half-circle with two pointers: O(n log n).
inline std::size_t halfplane_min_2d(std::vector<IVec2> vs) {
  if (vs.empty()) return 0;
  std::sort(vs.begin(), vs.end(), [](const IVec2& a, const IVec2& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross_sign(a, b) > 0;
  });
  std::vector<IVec2> dirs;
  std::vector<std::size_t> mult;
  for (const auto& v : vs) {
    if (!dirs.empty() && half_of(dirs.back()) == half_of(v) && cross_sign(dirs.back(), v) == 0) {
      ++mult.back();
    } else {
      dirs.push_back(v);
      mult.push_back(1);
    }
  }
  const std::size_t u = dirs.size(), total = vs.size();
  std::vector<std::size_t> prefix(2 * u + 1, 0);
  for (std::size_t i = 0; i < 2 * u; ++i) prefix[i + 1] = prefix[i] + mult[i % u];
  std::size_t best = total;
  std::size_t end = 1;
  for (std::size_t j = 0; j < u; ++j) {
    if (end < j + 1) end = j + 1;
    while (end < j + u && cross_sign(dirs[j], dirs[end % u]) > 0) ++end;
    std::size_t ccw = prefix[end] - prefix[j + 1];
    std::size_t opp = 0;
    if (end < j + u && cross_sign(dirs[j], dirs[end % u]) == 0) opp = mult[end % u];
    std::size_t cw = total - mult[j] - opp - ccw;
    std::size_t tie = std::min(mult[j], opp);
    best = std::min({best, ccw + tie, cw + tie});
  }
  return best;
}

}  // namespace detail

/// Planar regression depth by angular sweep (value only); used by the 2D fit search.
inline std::size_t regression_depth_sweep_2d(const Hyperplane& h, const SiteSet& sites) {
  if (sites.dim() != 2 || h.dim() != 2) throw std::invalid_argument("regression_depth_sweep_2d: requires d = 2");
  if (h.is_vertical()) throw std::invalid_argument("regression_depth: vertical hyperplane");
  std::size_t always = 0;
  std::vector<detail::IVec2> vs;
  for (const auto& p : sites.sites()) {
    int hs = sign(h.eval(p));
    // p parallel to (0,1,0) means p is the point at vertical infinity itself
    if (hs == 0 || (p[0] == 0 && p[2] == 0)) {
      ++always;
      continue;
    }
    Scalar a = p[0], b = p[2];
    if (hs < 0) {
      a = -a;
      b = -b;
    }
    vs.push_back(detail::integerize(a, b));
  }
  return always + detail::halfplane_min_2d(std::move(vs));
}

// ---------------------------------------------------------------------------

/// Undirected depth of a finite point in a planar line arrangement: minimum over
/// rays from x of the number of lines touched by the ray or parallel to it.
/// Each line counts at most once; lines through x always count.
inline DepthCertificate undirected_depth_2d(const HomoPoint& x, const std::vector<Hyperplane>& lines) {
  if (x.dim() != 2) throw std::invalid_argument("undirected_depth_2d: requires d = 2");
  if (!x.is_finite()) throw std::invalid_argument("undirected_depth_2d: point must be finite");
  const HomoPoint xc(x.canonical());
  std::vector<std::array<Scalar, 2>> critical;
  for (const auto& l : lines) {
    if (l.dim() != 2) throw std::invalid_argument("undirected_depth_2d: lines must be planar");
    if (l[0] == 0 && l[1] == 0) throw std::invalid_argument("undirected_depth_2d: line at infinity");
    critical.push_back({-l[1], l[0]});
    critical.push_back({l[1], -l[0]});
  }
  auto counts = [&](const Scalar& ux, const Scalar& uy) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& l = lines[i];
      Scalar at = l.eval(xc);
      Scalar along = l[0] * ux + l[1] * uy;
      // touched at t = -at / along >= 0, or parallel
      if (at == 0 || along == 0 || sign(along) == -sign(at)) ids.push_back(i);
    }
    return ids;
  };
  auto half = [](const std::array<Scalar, 2>& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  auto cross = [](const std::array<Scalar, 2>& a, const std::array<Scalar, 2>& b) {
    return sign(a[0] * b[1] - a[1] * b[0]);
  };
  std::sort(critical.begin(), critical.end(), [&](const auto& a, const auto& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
  });
  std::vector<std::array<Scalar, 2>> uniq;
  for (const auto& c : critical)
    if (uniq.empty() || half(uniq.back()) != half(c) || cross(uniq.back(), c) != 0) uniq.push_back(c);

  std::vector<std::array<Scalar, 2>> candidates;
  if (uniq.empty()) {
    candidates.push_back({Scalar(1), Scalar(0)});
  } else {
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      const auto& a = uniq[i];
      const auto& b = uniq[(i + 1) % uniq.size()];
      if (uniq.size() > 1 && cross(a, b) > 0) candidates.push_back({a[0] + b[0], a[1] + b[1]});
      else candidates.push_back({-a[1], a[0]});  // gap of exactly pi: rotate by 90 degrees
    }
  }
  DepthCertificate cert;
  std::optional<std::size_t> best;
  for (const auto& u : candidates) {
    auto ids = counts(u[0], u[1]);
    if (!best || ids.size() < *best) {
      best = ids.size();
      cert.counted_site_indices = ids;
      cert.ray_direction = Vec{u[0], u[1]};
    }
  }
  cert.value = *best;
  return cert;
}

/// Recount for an undirected-depth certificate.
inline std::size_t recount_ray(const HomoPoint& x, const std::vector<Hyperplane>& lines, const Vec& dir) {
  const HomoPoint xc(x.canonical());
  std::size_t c = 0;
  for (const auto& l : lines) {
    Scalar at = l.eval(xc), along = l[0] * dir[0] + l[1] * dir[1];
    if (at == 0 || along == 0 || sign(along) == -sign(at)) ++c;
  }
  return c;
}

}  // namespace depthlab
