#pragma once

// Tverberg-type and contractible partitions.
//
// Hull membership is decided by Carathéodory: x lies in conv(S) iff it lies in
// the relative interior of the simplex spanned by some affinely independent
// subset of S. Such minimal subsets are the building blocks of every
// Tverberg-type construction below. A point at infinity has the whole space as
// its hull, so an infinite site forms a containing subset by itself.

#include <depthlab/fits.hpp>

#include <algorithm>
#include <cstdint>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace depthlab {

enum class PartitionKind { tverberg, contractible };

struct Partition {
  PartitionKind kind = PartitionKind::tverberg;
  std::vector<std::vector<std::size_t>> parts;  // site indices of the input set
  std::optional<HomoPoint> witness_point;       // tverberg kind
  std::optional<Hyperplane> witness_hyperplane;  // contractible kind
  std::vector<bool> report;                      // per-part verification

  std::size_t size() const { return parts.size(); }
  bool all_verified() const {
    return report.size() == parts.size() && std::all_of(report.begin(), report.end(), [](bool b) { return b; });
  }
};

// ---------------------------------------------------------------------------
// Hull membership.

/// Barycentric coordinates of x with respect to affinely independent points,
/// or nullopt when the points are dependent or x is off their affine hull.
inline std::optional<Vec> barycentric(const Vec& x, const std::vector<Vec>& pts) {
  const std::size_t d = x.size(), s = pts.size();
  Matrix m(d + 1, Vec(s + 1));
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = pts[j][i];
    m[d][j] = 1;
  }
  for (std::size_t i = 0; i < d; ++i) m[i][s] = x[i];
  m[d][s] = 1;
  auto piv = row_reduce(m);
  // a pivot in the augmented column means x is off the affine hull; fewer than
  // s pivots means the points are dependent
  if (piv.size() != s || piv.back() == s) return std::nullopt;
  Vec lambda(s);
  for (std::size_t r = 0; r < s; ++r) lambda[piv[r]] = m[r][s] / m[r][piv[r]];
  return lambda;
}

namespace detail {

/// x in the relative interior of conv(pts) with pts affinely independent.
inline bool strictly_inside_simplex(const Vec& x, const std::vector<Vec>& pts) {
  auto l = barycentric(x, pts);
  if (!l) return false;
  return std::all_of(l->begin(), l->end(), [](const Scalar& v) { return v > 0; });
}

inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t r = comb.size();
  std::size_t i = r;
  while (i > 0 && comb[i - 1] == n - r + (i - 1)) --i;
  if (i == 0) return false;
  ++comb[i - 1];
  for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

}  // namespace detail

/// Inclusion-minimal subsets of `ids` whose hull contains x, ordered by size and
/// then lexicographically. Stops after `limit` subsets.
inline std::vector<std::vector<std::size_t>> minimal_containing_subsets(
    const HomoPoint& x, const SiteSet& sites, const std::vector<std::size_t>& ids,
    std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> finite;
  for (auto i : ids) {
    if (!sites[i].is_finite() || projectively_equal(sites[i], x)) {
      out.push_back({i});
      if (out.size() >= limit) return out;
    } else {
      finite.push_back(i);
    }
  }
  if (!x.is_finite()) return out;
  const Vec xa = x.affine_coords();
  const std::size_t d = sites.dim();
  for (std::size_t s = 2; s <= d + 1 && s <= finite.size(); ++s) {
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      std::vector<Vec> pts;
      for (auto c : comb) pts.push_back(sites[finite[c]].affine_coords());
      if (detail::strictly_inside_simplex(xa, pts)) {
        std::vector<std::size_t> sub;
        for (auto c : comb) sub.push_back(finite[c]);
        out.push_back(std::move(sub));
        if (out.size() >= limit) return out;
      }
    } while (detail::next_combination(comb, finite.size()));
  }
  return out;
}

/// Closed convex hull membership (the hull of an infinite site is everything).
inline bool hull_contains(const HomoPoint& x, const SiteSet& sites, const std::vector<std::size_t>& ids) {
  return !minimal_containing_subsets(x, sites, ids, 1).empty();
}

/// Recomputes the per-part verification bits from scratch.
inline void verify_partition(Partition& p, const SiteSet& sites) {
  p.report.clear();
  for (const auto& part : p.parts) {
    if (p.kind == PartitionKind::tverberg) {
      p.report.push_back(p.witness_point && hull_contains(*p.witness_point, sites, part));
    } else {
      bool ok = p.witness_hyperplane && !p.witness_hyperplane->is_vertical() &&
                regression_depth(*p.witness_hyperplane, sites.subset(part)).value >= 1;
      p.report.push_back(ok);
    }
  }
}

// ---------------------------------------------------------------------------
// Radon partitions and exhaustive Tverberg depth.

/// Radon partition of d+2 finite sites from the sign split of an exact affine
/// dependence (the first basis vector of the dependence space).
inline Partition radon_partition(const SiteSet& sites) {
  const std::size_t d = sites.dim();
  if (sites.size() != d + 2) throw std::invalid_argument("radon_partition: requires exactly d+2 sites");
  Matrix m(d + 1, Vec(d + 2));
  for (std::size_t j = 0; j < d + 2; ++j) {
    if (!sites[j].is_finite()) throw std::invalid_argument("radon_partition: sites must be finite");
    Vec a = sites[j].affine_coords();
    for (std::size_t i = 0; i < d; ++i) m[i][j] = a[i];
    m[d][j] = 1;
  }
  Vec mu = null_space(m, d + 2).front();
  Partition p;
  p.kind = PartitionKind::tverberg;
  p.parts.resize(2);
  Vec w(d, Scalar(0));
  Scalar total = 0;
  for (std::size_t j = 0; j < d + 2; ++j) {
    if (mu[j] > 0) {
      p.parts[0].push_back(j);
      Vec a = sites[j].affine_coords();
      for (std::size_t i = 0; i < d; ++i) w[i] += mu[j] * a[i];
      total += mu[j];
    } else {
      p.parts[1].push_back(j);
    }
  }
  for (auto& c : w) c /= total;
  p.witness_point = HomoPoint::affine(w);
  verify_partition(p, sites);
  return p;
}

struct TverbergDepth {
  std::size_t value = 0;
  Partition partition;
};

/// Exact Tverberg depth of x: a maximum packing of disjoint minimal containing
/// subsets (any part containing x contains such a subset), by memoized search
/// over the available-site mask. Leftover sites join the first part.
inline TverbergDepth tverberg_depth_bruteforce(const HomoPoint& x, const SiteSet& sites) {
  const std::size_t n = sites.size();
  if (n > 10) throw std::length_error("tverberg_depth_bruteforce: n > 10; use birch or peeling lower bounds");
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::uint32_t> subsets;
  for (const auto& s : minimal_containing_subsets(x, sites, all)) {
    std::uint32_t mask = 0;
    for (auto i : s) mask |= 1u << i;
    subsets.push_back(mask);
  }
  const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
  std::vector<int> memo(std::size_t{1} << n, -1);
  std::vector<std::uint32_t> choice(std::size_t{1} << n, 0);
  auto solve = [&](auto&& self, std::uint32_t avail) -> int {
    if (avail == 0) return 0;
    if (memo[avail] >= 0) return memo[avail];
    std::uint32_t low = avail & (~avail + 1);
    int best = self(self, avail & ~low);
    std::uint32_t pick = 0;
    for (auto s : subsets)
      if ((s & low) && (s & avail) == s) {
        int v = 1 + self(self, avail & ~s);
        if (v > best) {
          best = v;
          pick = s;
        }
      }
    memo[avail] = best;
    choice[avail] = pick;
    return best;
  };
  TverbergDepth res;
  res.value = static_cast<std::size_t>(solve(solve, full));
  res.partition.kind = PartitionKind::tverberg;
  res.partition.witness_point = x;
  std::uint32_t avail = full, used = 0;
  while (avail) {
    std::uint32_t low = avail & (~avail + 1);
    std::uint32_t s = choice[avail];
    if (s) {
      std::vector<std::size_t> part;
      for (std::size_t i = 0; i < n; ++i)
        if (s & (1u << i)) part.push_back(i);
      res.partition.parts.push_back(std::move(part));
      used |= s;
      avail &= ~s;
    } else {
      avail &= ~low;
    }
  }
  if (!res.partition.parts.empty())
    for (std::size_t i = 0; i < n; ++i)
      if (!(used & (1u << i))) res.partition.parts.front().push_back(i);
  for (auto& part : res.partition.parts) std::sort(part.begin(), part.end());
  verify_partition(res.partition, sites);
  return res;
}

// ---------------------------------------------------------------------------
// Greedy peeling and the general contractible partition.

/// Repeatedly removes a smallest simplex with site vertices containing c. Each
/// removal of s sites lowers the location depth of c by at most s - 1 <= d,
/// since every closed halfspace containing c keeps one vertex of the simplex.
inline Partition greedy_simplex_peeling(const HomoPoint& c, const SiteSet& sites) {
  if (!c.is_finite()) throw std::invalid_argument("greedy_simplex_peeling: center must be finite");
  Partition p;
  p.kind = PartitionKind::tverberg;
  p.witness_point = c;
  std::vector<std::size_t> cur(sites.size());
  std::iota(cur.begin(), cur.end(), 0);
  while (!cur.empty()) {
    auto subs = minimal_containing_subsets(c, sites, cur, 1);
    if (subs.empty()) break;
    p.parts.push_back(subs.front());
    std::vector<std::size_t> rest;
    for (auto i : cur)
      if (std::find(subs.front().begin(), subs.front().end(), i) == subs.front().end()) rest.push_back(i);
    cur = std::move(rest);
  }
  verify_partition(p, sites);
  return p;
}

/// Deepest hyperplane H, sent to infinity; peeling around the image of the
/// point at vertical infinity gives parts in which H keeps depth >= 1.
inline Partition contractible_partition_general(const SiteSet& sites) {
  const std::size_t d = sites.dim();
  if (d < 2 || d > 3) throw std::domain_error("contractible_partition_general: supports d in {2, 3}");
  FitResult fit = d == 2 ? deepest_line_2d(sites) : deepest_hyperplane(sites);
  auto t = transform_to_infinity(fit.hyperplane);
  SiteSet moved = sites.transformed(t);
  HomoPoint c = t(vertical_infinity(d));
  Partition peel = greedy_simplex_peeling(c, moved);

  Partition p;
  p.kind = PartitionKind::contractible;
  p.witness_hyperplane = fit.hyperplane;
  p.parts = peel.parts;
  std::vector<bool> used(sites.size(), false);
  for (const auto& part : p.parts)
    for (auto i : part) used[i] = true;
  if (!p.parts.empty())
    for (std::size_t i = 0; i < sites.size(); ++i)
      if (!used[i]) p.parts.back().push_back(i);
  for (auto& part : p.parts) std::sort(part.begin(), part.end());
  verify_partition(p, sites);
  return p;
}

// ---------------------------------------------------------------------------
// Planar triangle partitions.

namespace detail {

inline std::array<Scalar, 2> offset_from(const Vec& x, const HomoPoint& p) {
  Vec a = p.affine_coords();
  return {a[0] - x[0], a[1] - x[1]};
}

inline int cross2(const std::array<Scalar, 2>& a, const std::array<Scalar, 2>& b) {
  return sign(Scalar(a[0] * b[1] - a[1] * b[0]));
}

inline int half2(const std::array<Scalar, 2>& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; }

// Full-turn angular order around x starting at the positive first axis; ties by index.
inline void sort_around(const Vec& x, const SiteSet& sites, std::vector<std::size_t>& ids) {
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t i, std::size_t j) {
    auto a = offset_from(x, sites[i]), b = offset_from(x, sites[j]);
    int ha = half2(a), hb = half2(b);
    if (ha != hb) return ha < hb;
    int c = cross2(a, b);
    if (c != 0) return c > 0;
    return i < j;
  });
}

inline void require_planar_finite(const HomoPoint& x, const SiteSet& sites, const char* who) {
  if (sites.dim() != 2) throw std::invalid_argument(std::string(who) + ": requires d = 2");
  if (!x.is_finite()) throw std::invalid_argument(std::string(who) + ": center must be finite");
  for (const auto& p : sites.sites())
    if (!p.is_finite()) throw std::invalid_argument(std::string(who) + ": sites must be finite");
}

inline std::string halfplane_text(const DepthCertificate& c) {
  std::string s = "witness line (";
  const auto& v = c.witness.boundary_b.coeffs();
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace detail

struct ReducedSites {
  std::vector<std::size_t> kept;  // indices into the input set, increasing
  SiteSet sites;
};

/// Shrinks a planar set with location depth >= k at x to exactly 3k sites while
/// keeping depth >= k. When the depth is exactly k, the deleted site is the
/// angular median of the sites strictly outside a minimal closed halfplane.
inline ReducedSites reduce_to_3k(const HomoPoint& x, const SiteSet& sites, std::size_t k) {
  detail::require_planar_finite(x, sites, "reduce_to_3k");
  if (sites.size() < 3 * k) throw std::invalid_argument("reduce_to_3k: fewer than 3k sites");
  auto start = location_depth(x, sites);
  if (start.value < k)
    throw std::invalid_argument("reduce_to_3k: location depth " + std::to_string(start.value) + " < k; " +
                                detail::halfplane_text(start));
  const Vec xa = x.affine_coords();
  std::vector<std::size_t> cur(sites.size());
  std::iota(cur.begin(), cur.end(), 0);
  while (cur.size() > 3 * k) {
    SiteSet s = sites.subset(cur);
    auto cert = location_depth(x, s);
    if (cert.value < k) throw std::logic_error("reduce_to_3k: depth dropped below k");
    std::size_t drop;
    if (cert.value > k) {
      drop = cur.size() - 1;
    } else {
      std::vector<bool> counted(cur.size(), false);
      for (auto i : cert.counted_site_indices) counted[i] = true;
      std::vector<std::size_t> outside;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (!counted[i]) outside.push_back(i);
      // all of them lie in one open halfplane, so the cross product orders them
      std::stable_sort(outside.begin(), outside.end(), [&](std::size_t i, std::size_t j) {
        int c = detail::cross2(detail::offset_from(xa, s[i]), detail::offset_from(xa, s[j]));
        return c != 0 ? c > 0 : i < j;
      });
      drop = outside[(outside.size() - 1) / 2];
    }
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  ReducedSites out{cur, sites.subset(cur)};
  if (location_depth(x, out.sites).value < k) throw std::logic_error("reduce_to_3k: result below depth k");
  return out;
}

/// Partition of 3k planar sites with location depth >= k at x into k triangles
/// containing x: sort around x and join every k-th site. Sites equal to x are
/// set aside first; each becomes a triangle with two sites dropped by a
/// reduction of the remaining ones.
inline Partition birch_partition(const HomoPoint& x, const SiteSet& sites, std::size_t k) {
  detail::require_planar_finite(x, sites, "birch_partition");
  if (k == 0 || sites.size() != 3 * k) throw std::invalid_argument("birch_partition: requires exactly 3k sites, k >= 1");
  auto depth = location_depth(x, sites);
  if (depth.value < k)
    throw std::invalid_argument("birch_partition: location depth " + std::to_string(depth.value) + " < k; " +
                                detail::halfplane_text(depth));
  const Vec xa = x.affine_coords();
  std::vector<std::size_t> at_x, rest;
  for (std::size_t i = 0; i < sites.size(); ++i) (projectively_equal(sites[i], x) ? at_x : rest).push_back(i);

  Partition p;
  p.kind = PartitionKind::tverberg;
  p.witness_point = x;
  std::vector<std::size_t> fillers;
  const std::size_t z = std::min(at_x.size(), k);
  if (z < k) {
    const std::size_t kk = k - z;
    auto red = reduce_to_3k(x, sites.subset(rest), kk);
    std::vector<std::size_t> ring;
    std::vector<bool> kept(rest.size(), false);
    for (auto i : red.kept) {
      ring.push_back(rest[i]);
      kept[i] = true;
    }
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (!kept[i]) fillers.push_back(rest[i]);
    detail::sort_around(xa, sites, ring);
    for (std::size_t i = 0; i < kk; ++i) p.parts.push_back({ring[i], ring[i + kk], ring[i + 2 * kk]});
  } else {
    for (std::size_t i = z; i < at_x.size(); ++i) fillers.push_back(at_x[i]);
    for (auto i : rest) fillers.push_back(i);
  }
  for (std::size_t i = 0; i < z; ++i) p.parts.push_back({at_x[i], fillers[2 * i], fillers[2 * i + 1]});
  for (auto& part : p.parts) std::sort(part.begin(), part.end());
  verify_partition(p, sites);
  if (!p.all_verified()) throw std::logic_error("birch_partition: a triangle misses the center");
  return p;
}

inline Partition birch_partition(const HomoPoint& x, const SiteSet& sites) {
  if (sites.size() % 3 != 0) throw std::invalid_argument("birch_partition: site count must be a multiple of 3");
  return birch_partition(x, sites, sites.size() / 3);
}

// ---------------------------------------------------------------------------
// Spatial contractible partition.

struct Contractible3dOptions {
  std::size_t max_orientations = 4000;
  std::uint64_t seed = 1;
};

struct Contractible3dResult {
  std::optional<Partition> partition;
  std::size_t orientations_tried = 0;
  std::size_t target = 0;  // floor((n + 1) / 6)
  std::string failure;
};

namespace detail {

inline std::optional<Partition> try_split_plane(const SiteSet& sites, const Vec& u, const Scalar& beta,
                                                std::size_t q) {
  const std::size_t n = sites.size();
  Vec coeffs{u[0], u[1], u[2], -beta};
  Hyperplane plane(coeffs);
  std::vector<std::size_t> left, right, on;
  for (std::size_t i = 0; i < n; ++i) {
    int s = sign(plane.eval(sites[i]));
    if (s >= 0) left.push_back(i);
    if (s <= 0) right.push_back(i);
    if (s == 0) on.push_back(i);
  }
  if (left.size() < 3 * q || right.size() < 3 * q) return std::nullopt;
  auto project = [&](const std::vector<std::size_t>& ids) {
    std::vector<Vec> rows;
    for (auto i : ids) {
      Vec a = sites[i].affine_coords();
      rows.push_back({a[0], a[1]});
    }
    return SiteSet::from_affine(2, rows);
  };
  SiteSet pl = project(left), pr = project(right);
  Polygon poly = clip_polygon(depth_region_polygon_2d(pl, q), depth_region(pr, q));
  if (poly.empty()) return std::nullopt;
  Point2 c = vertex_average(poly);
  HomoPoint center = HomoPoint::affine({c[0], c[1]});
  if (location_depth(center, pl).value < q || location_depth(center, pr).value < q) return std::nullopt;

  auto triangles = [&](const SiteSet& proj, const std::vector<std::size_t>& ids) {
    auto red = reduce_to_3k(center, proj, q);
    auto tri = birch_partition(center, red.sites, q);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& part : tri.parts) {
      std::vector<std::size_t> t;
      for (auto j : part) t.push_back(ids[red.kept[j]]);
      out.push_back(std::move(t));
    }
    return out;
  };
  std::vector<bool> on_plane(n, false);
  for (auto i : on) on_plane[i] = true;
  auto clean = [&](std::vector<std::vector<std::size_t>> tris) {
    std::vector<std::vector<std::size_t>> out;
    for (auto& t : tris)
      if (std::none_of(t.begin(), t.end(), [&](std::size_t i) { return on_plane[i]; })) out.push_back(std::move(t));
    return out;
  };
  auto tl = clean(triangles(pl, left)), tr = clean(triangles(pr, right));

  Partition p;
  p.kind = PartitionKind::contractible;
  p.witness_hyperplane = plane;
  for (auto i : on) p.parts.push_back({i});
  for (std::size_t j = 0; j < std::min(tl.size(), tr.size()); ++j) {
    std::vector<std::size_t> part = tl[j];
    part.insert(part.end(), tr[j].begin(), tr[j].end());
    p.parts.push_back(std::move(part));
  }
  if (p.parts.empty()) return std::nullopt;
  std::vector<bool> used(n, false);
  for (const auto& part : p.parts)
    for (auto i : part) used[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) p.parts.back().push_back(i);
  for (auto& part : p.parts) std::sort(part.begin(), part.end());
  verify_partition(p, sites);
  if (!p.all_verified() || p.size() < q) return std::nullopt;
  return p;
}

}  // namespace detail

/// Searches nonvertical halving planes P' (normals of site triples, then
/// seeded integer normals) for one whose closed halves project vertically to
/// planar sets sharing a point of depth >= floor((n+1)/6); triangle partitions
/// of both sides around that point pair up into parts of depth >= 1 for P'.
inline Contractible3dResult contractible_partition_3d(const SiteSet& sites, const Contractible3dOptions& opts = {}) {
  if (sites.dim() != 3) throw std::invalid_argument("contractible_partition_3d: requires d = 3");
  for (const auto& p : sites.sites())
    if (!p.is_finite()) throw std::invalid_argument("contractible_partition_3d: sites must be finite");
  const std::size_t n = sites.size();
  Contractible3dResult res;
  res.target = (n + 1) / 6;
  if (res.target == 0) {
    res.failure = "fewer than 5 sites: target is zero parts";
    return res;
  }
  std::vector<Vec> pts;
  for (const auto& p : sites.sites()) pts.push_back(p.affine_coords());

  std::set<Vec> seen;
  auto attempt = [&](Vec u) -> bool {
    if (u[2] == 0) return false;
    u = detail::canonical(u);
    if (!seen.insert(u).second) return false;
    ++res.orientations_tried;
    std::vector<Scalar> vals;
    for (const auto& a : pts) vals.push_back(dot(u, a));
    std::sort(vals.begin(), vals.end());
    // an offset strictly between the middle values keeps sites off the plane
    std::vector<Scalar> offsets;
    if (n % 2 == 0 && vals[n / 2 - 1] != vals[n / 2]) offsets.push_back((vals[n / 2 - 1] + vals[n / 2]) / 2);
    offsets.push_back(vals[(n + 1) / 2 - 1]);
    if (n % 2 == 0) offsets.push_back(vals[n / 2]);
    for (const auto& beta : offsets)
      if (auto p = detail::try_split_plane(sites, u, beta, res.target)) {
        res.partition = std::move(p);
        return true;
      }
    return false;
  };

  for (std::size_t i = 0; i < n && res.orientations_tried < opts.max_orientations; ++i)
    for (std::size_t j = i + 1; j < n && res.orientations_tried < opts.max_orientations; ++j)
      for (std::size_t k = j + 1; k < n && res.orientations_tried < opts.max_orientations; ++k) {
        Vec a(3), b(3);
        for (std::size_t c = 0; c < 3; ++c) {
          a[c] = pts[j][c] - pts[i][c];
          b[c] = pts[k][c] - pts[i][c];
        }
        Vec u{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        if (attempt(u)) return res;
      }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> coord(-12, 12);
  for (std::size_t it = 0; res.orientations_tried < opts.max_orientations && it < 20 * opts.max_orientations; ++it)
    if (attempt({Scalar(coord(rng)), Scalar(coord(rng)), Scalar(coord(rng))})) return res;
  res.failure = "no tried orientation yields a common deep point of both projected halves";
  return res;
}

}  // namespace depthlab
