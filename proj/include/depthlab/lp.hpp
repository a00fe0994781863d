#pragma once

// Exact feasibility of small systems of closed halfspaces, by Seidel's
// incremental linear programming over the rationals with a lexicographic
// objective (x_1 first, then x_2, ...), so the optimum is unique and the
// returned point is deterministic.

#include <depthlab/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace depthlab {

/// Closed halfspace {x : normal . x <= offset} in affine coordinates.
struct Halfspace {
  Vec normal;
  Scalar offset;

  bool contains(const Vec& x) const { return dot(normal, x) <= offset; }
};

struct Box {
  Vec lo, hi;
};

namespace detail {

struct Substitution {
  std::size_t pivot;
  Scalar constant;  // x_pivot = constant + sum_j coeff[j] x_j  (j != pivot)
  Vec coeff;        // full length, coeff[pivot] unused
};

inline Halfspace substitute(const Halfspace& h, const Substitution& s) {
  Halfspace out;
  const Scalar& gp = h.normal[s.pivot];
  for (std::size_t j = 0; j < h.normal.size(); ++j)
    if (j != s.pivot) out.normal.push_back(h.normal[j] + gp * s.coeff[j]);
  out.offset = h.offset - gp * s.constant;
  return out;
}

inline std::optional<Vec> lexmax(const Box& box, const std::vector<Halfspace>& cons, const std::vector<Vec>& objectives) {
  const std::size_t k = box.lo.size();
  for (std::size_t j = 0; j < k; ++j)
    if (box.lo[j] > box.hi[j]) return std::nullopt;
  if (k == 0) {
    for (const auto& h : cons)
      if (h.offset < 0) return std::nullopt;
    return Vec{};
  }

  // lexicographic optimum over the box alone
  Vec v(k);
  std::vector<bool> fixed(k, false);
  for (const auto& o : objectives)
    for (std::size_t j = 0; j < k; ++j)
      if (!fixed[j] && o[j] != 0) {
        v[j] = o[j] > 0 ? box.hi[j] : box.lo[j];
        fixed[j] = true;
      }
  for (std::size_t j = 0; j < k; ++j)
    if (!fixed[j]) v[j] = box.lo[j];

  for (std::size_t i = 0; i < cons.size(); ++i) {
    const auto& h = cons[i];
    if (h.contains(v)) continue;
    std::size_t p = k;
    while (p > 0 && h.normal[p - 1] == 0) --p;
    if (p == 0) return std::nullopt;  // 0 <= offset < 0
    --p;
    Substitution s{p, h.offset / h.normal[p], Vec(k)};
    for (std::size_t j = 0; j < k; ++j)
      if (j != p) s.coeff[j] = -h.normal[j] / h.normal[p];

    Box sub_box;
    for (std::size_t j = 0; j < k; ++j)
      if (j != p) {
        sub_box.lo.push_back(box.lo[j]);
        sub_box.hi.push_back(box.hi[j]);
      }
    std::vector<Halfspace> sub;
    sub.reserve(i + 2);
    {
      Vec up(k, Scalar(0));
      up[p] = 1;
      sub.push_back(substitute(Halfspace{up, box.hi[p]}, s));
      Vec down(k, Scalar(0));
      down[p] = -1;
      sub.push_back(substitute(Halfspace{down, -box.lo[p]}, s));
    }
    for (std::size_t j = 0; j < i; ++j) sub.push_back(substitute(cons[j], s));
    std::vector<Vec> sub_obj;
    for (const auto& o : objectives) {
      Vec oo;
      for (std::size_t j = 0; j < k; ++j)
        if (j != p) oo.push_back(o[j] + o[p] * s.coeff[j]);
      sub_obj.push_back(std::move(oo));
    }
    auto r = lexmax(sub_box, sub, sub_obj);
    if (!r) return std::nullopt;
    Vec full(k);
    Scalar xp = s.constant;
    for (std::size_t j = 0, t = 0; j < k; ++j) {
      if (j == p) continue;
      full[j] = (*r)[t++];
      xp += s.coeff[j] * full[j];
    }
    full[p] = xp;
    v = std::move(full);
  }
  return v;
}

}  // namespace detail

/// A point of box ∩ (all halfspaces), or nullopt when the intersection is empty.
inline std::optional<Vec> find_feasible_point(const std::vector<Halfspace>& cons, const Box& box,
                                              std::uint64_t seed = 0x5eed) {
  const std::size_t k = box.lo.size();
  for (const auto& h : cons)
    if (h.normal.size() != k) throw std::invalid_argument("find_feasible_point: dimension mismatch");
  std::vector<Halfspace> order = cons;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vec> objectives;
  for (std::size_t j = 0; j < k; ++j) {
    Vec e(k, Scalar(0));
    e[j] = 1;
    objectives.push_back(std::move(e));
  }
  return detail::lexmax(box, order, objectives);
}

}  // namespace depthlab
