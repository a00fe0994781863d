#pragma once

// Homogeneous points and hyperplanes of projective d-space.
//
// A point has coordinates (x_1, ..., x_d, w); it is finite iff w != 0. The last
// spatial axis x_d is the vertical (response) axis, so the point at vertical
// infinity is e_d = (0, ..., 0, 1, 0). A hyperplane (a_1, ..., a_d, a_0) is the
// zero set of a_1 x_1 + ... + a_d x_d + a_0 w; the hyperplane at infinity is
// (0, ..., 0, 1).

#include <depthlab/linalg.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace depthlab {

namespace detail {
inline void require_nonzero(const Vec& v, const char* what) {
  if (v.size() < 2) throw std::invalid_argument(std::string(what) + ": need at least 2 coordinates");
  if (is_zero(v)) throw std::invalid_argument(std::string(what) + ": all coordinates zero");
}

/// Divides by the last nonzero entry so that entry becomes +1.
inline Vec canonical(Vec v) {
  std::size_t k = v.size();
  while (k > 0 && v[k - 1] == 0) --k;
  if (k == 0) return v;
  Scalar s = v[k - 1];
  for (auto& x : v) x /= s;
  return v;
}

inline int last_nonzero_sign(const Vec& v) {
  for (std::size_t k = v.size(); k > 0; --k)
    if (v[k - 1] != 0) return sign(v[k - 1]);
  return 0;
}
}  // namespace detail

class HomoPoint {
 public:
  HomoPoint() = default;
  explicit HomoPoint(Vec coords, std::optional<std::size_t> index = std::nullopt)
      : coords_(std::move(coords)), index_(index) {
    detail::require_nonzero(coords_, "HomoPoint");
  }

  /// Finite point from affine coordinates.
  static HomoPoint affine(Vec xs, std::optional<std::size_t> index = std::nullopt) {
    xs.push_back(Scalar(1));
    return HomoPoint(std::move(xs), index);
  }

  std::size_t dim() const { return coords_.size() - 1; }
  const Vec& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::optional<std::size_t> index() const { return index_; }
  HomoPoint with_index(std::optional<std::size_t> index) const {
    HomoPoint p = *this;
    p.index_ = index;
    return p;
  }

  bool is_finite() const { return coords_.back() != 0; }

  /// Affine coordinates; requires a finite point.
  Vec affine_coords() const {
    if (!is_finite()) throw std::domain_error("affine_coords of a point at infinity");
    Vec out(coords_.begin(), coords_.end() - 1);
    for (auto& x : out) x /= coords_.back();
    return out;
  }

  Vec canonical() const { return detail::canonical(coords_); }

 private:
  Vec coords_;
  std::optional<std::size_t> index_;
};

class Hyperplane {
 public:
  Hyperplane() = default;
  explicit Hyperplane(Vec coeffs) : coeffs_(std::move(coeffs)) {
    detail::require_nonzero(coeffs_, "Hyperplane");
  }

  std::size_t dim() const { return coeffs_.size() - 1; }
  const Vec& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  Scalar eval(const HomoPoint& p) const { return dot(coeffs_, p.coords()); }

  /// Vertical iff it contains the point at vertical infinity.
  bool is_vertical() const { return coeffs_[dim() - 1] == 0; }
  bool is_at_infinity() const {
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  Vec canonical() const { return detail::canonical(coeffs_); }

  Hyperplane negated() const {
    Vec c = coeffs_;
    for (auto& x : c) x = -x;
    return Hyperplane(std::move(c));
  }

 private:
  Vec coeffs_;
};

inline HomoPoint vertical_infinity(std::size_t d) {
  Vec c(d + 1, Scalar(0));
  c[d - 1] = 1;
  return HomoPoint(std::move(c));
}

inline Hyperplane hyperplane_at_infinity(std::size_t d) {
  Vec c(d + 1, Scalar(0));
  c[d] = 1;
  return Hyperplane(std::move(c));
}

/// Nonvertical hyperplane x_d = slopes . (x_1..x_{d-1}) + intercept.
inline Hyperplane graph_hyperplane(const Vec& slopes, const Scalar& intercept) {
  Vec c = slopes;
  c.push_back(Scalar(-1));
  c.push_back(intercept);
  return Hyperplane(std::move(c));
}

inline bool projectively_equal(const HomoPoint& a, const HomoPoint& b) {
  return parallel(a.coords(), b.coords());
}
inline bool projectively_equal(const Hyperplane& a, const Hyperplane& b) {
  return parallel(a.coeffs(), b.coeffs());
}

inline bool incident(const Hyperplane& h, const HomoPoint& p) { return h.eval(p) == 0; }

/// Sign of <H, p> with p scaled so its last nonzero coordinate is positive.
inline int side_of(const Hyperplane& h, const HomoPoint& p) {
  if (h.coeffs().size() != p.coords().size()) throw std::invalid_argument("side_of: dimension mismatch");
  return sign(h.eval(p)) * detail::last_nonzero_sign(p.coords());
}

// ---------------------------------------------------------------------------

/// Invertible (d+1)x(d+1) matrix acting on column coordinate vectors. Points map
/// by M p, hyperplanes by h M^{-1} so incidence values are preserved exactly.
class ProjectiveTransform {
 public:
  explicit ProjectiveTransform(Matrix m) : matrix_(std::move(m)) {
    auto inv = depthlab::inverse(matrix_);
    if (!inv) throw std::invalid_argument("ProjectiveTransform: singular matrix");
    inverse_ = std::move(*inv);
  }

  static ProjectiveTransform identity(std::size_t d) { return ProjectiveTransform(depthlab::identity(d + 1)); }

  std::size_t dim() const { return matrix_.size() - 1; }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse_matrix() const { return inverse_; }

  ProjectiveTransform inverse() const { return ProjectiveTransform(inverse_); }

  HomoPoint operator()(const HomoPoint& p) const { return HomoPoint(mul(matrix_, p.coords()), p.index()); }

  Hyperplane operator()(const Hyperplane& h) const {
    Vec out(h.coeffs().size(), Scalar(0));
    for (std::size_t j = 0; j < out.size(); ++j)
      for (std::size_t i = 0; i < out.size(); ++i) out[j] += h.coeffs()[i] * inverse_[i][j];
    return Hyperplane(std::move(out));
  }

  /// (this ∘ other): apply other first.
  ProjectiveTransform compose(const ProjectiveTransform& other) const {
    return ProjectiveTransform(mul(matrix_, other.matrix_));
  }

 private:
  Matrix matrix_;
  Matrix inverse_;
};

/// T with T(h) = hyperplane at infinity: the last row of T is h, the other rows
/// are the unit vectors e_i for i != k where k is the last nonzero entry of h.
inline ProjectiveTransform transform_to_infinity(const Hyperplane& h) {
  const std::size_t n = h.coeffs().size();
  std::size_t k = n;
  while (h.coeffs()[k - 1] == 0) --k;
  --k;
  Matrix m;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    Vec row(n, Scalar(0));
    row[i] = 1;
    m.push_back(std::move(row));
  }
  m.push_back(h.coeffs());
  return ProjectiveTransform(std::move(m));
}

/// T with T(x) = point at vertical infinity. Built as the inverse of a matrix N
/// whose vertical column is x and whose remaining columns are unit vectors.
inline ProjectiveTransform transform_point_to_vertical_infinity(const HomoPoint& x) {
  const std::size_t n = x.coords().size();
  const std::size_t vert = n - 2;
  if (parallel(x.coords(), vertical_infinity(n - 1).coords())) return ProjectiveTransform::identity(n - 1);
  std::size_t k = vert;
  if (x[vert] == 0) {
    k = n;
    while (x[k - 1] == 0) --k;
    --k;
  }
  Matrix nmat = depthlab::identity(n);
  for (std::size_t i = 0; i < n; ++i) nmat[i][vert] = x[i];
  if (k != vert) {
    for (std::size_t i = 0; i < n; ++i) nmat[i][k] = 0;
    nmat[vert][k] = 1;
  }
  return ProjectiveTransform(nmat).inverse();
}

// ---------------------------------------------------------------------------
// Planar duality: (a, b) <-> line y = a x - b. Homogeneous form (a, b, w) ->
// (a, -w, -b); incidence values are preserved exactly and the map is an
// involution on coordinate vectors.

inline Vec dual_coords_2d(const Vec& c) {
  if (c.size() != 3) throw std::invalid_argument("dual_map_2d: requires d = 2");
  return Vec{c[0], -c[2], -c[1]};
}

inline Hyperplane dual_map_2d(const HomoPoint& p) { return Hyperplane(dual_coords_2d(p.coords())); }
inline HomoPoint dual_map_2d(const Hyperplane& h) { return HomoPoint(dual_coords_2d(h.coeffs())); }

}  // namespace depthlab
