#ifndef LATGEO_SIMPLEX_HPP
#define LATGEO_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/scalar.hpp"

namespace latgeo {

using PointN = std::vector<Scalar>;
using Matrix = std::vector<std::vector<Scalar>>;

namespace detail {

// Exact determinant by fraction-carrying Gaussian elimination.
inline Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Scalar f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return canonical(det);
}

// Solves m x = rhs; nullopt when m is singular.
inline std::optional<std::vector<Scalar>> solve(Matrix m, std::vector<Scalar> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Scalar f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = canonical(rhs[i] / m[i][i]);
  return x;
}

}  // namespace detail

/// Non-degenerate n-simplex with rational vertices.
class SimplexN {
 public:
  SimplexN(std::size_t dim, std::vector<PointN> vertices) : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ == 0) throw DegenerateInput("simplex dimension must be positive");
    if (vertices_.size() != dim_ + 1) {
      throw DegenerateInput("a " + std::to_string(dim_) + "-simplex needs " + std::to_string(dim_ + 1) + " vertices");
    }
    for (auto& v : vertices_) {
      if (v.size() != dim_) throw DegenerateInput("vertex has wrong number of coordinates");
      for (auto& c : v) c.canonicalize();
    }
    if (edge_determinant() == 0) throw DegenerateInput("simplex is degenerate");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<PointN>& vertices() const { return vertices_; }
  const PointN& operator[](std::size_t i) const { return vertices_[i]; }

  /// det of the n edge vectors v_i - v_0.
  Scalar edge_determinant() const {
    Matrix m(dim_, std::vector<Scalar>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m[i][j] = vertices_[i + 1][j] - vertices_[0][j];
    return detail::determinant(std::move(m));
  }

  friend bool operator==(const SimplexN&, const SimplexN&) = default;

 private:
  std::size_t dim_;
  std::vector<PointN> vertices_;
};

inline Scalar simplex_volume(const SimplexN& s) { return canonical(abs(s.edge_determinant()) / factorial(s.dim())); }

/// conv{e_1, ..., e_n, (-1, ..., -1)}.
inline SimplexN basic_simplex(std::size_t n) {
  std::vector<PointN> v;
  for (std::size_t i = 0; i < n; ++i) {
    PointN p(n, Scalar(0));
    p[i] = 1;
    v.push_back(std::move(p));
  }
  v.push_back(PointN(n, Scalar(-1)));
  return SimplexN(n, std::move(v));
}

inline SimplexN scale(const SimplexN& s, const Scalar& lambda) {
  std::vector<PointN> v = s.vertices();
  for (auto& p : v)
    for (auto& c : p) c *= lambda;
  return SimplexN(s.dim(), std::move(v));
}

/// Barycentric coordinates of the origin; all strictly positive iff the origin is interior.
inline std::vector<Scalar> origin_barycentric(const SimplexN& s) {
  const std::size_t n = s.dim();
  // Unknowns lambda_0..lambda_n with sum lambda_i v_i = 0 and sum lambda_i = 1.
  Matrix m(n + 1, std::vector<Scalar>(n + 1));
  std::vector<Scalar> rhs(n + 1, Scalar(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= n; ++i) m[j][i] = s[i][j];
  for (std::size_t i = 0; i <= n; ++i) m[n][i] = 1;
  rhs[n] = 1;
  auto sol = detail::solve(std::move(m), std::move(rhs));
  if (!sol) throw DegenerateInput("simplex is degenerate");
  return *sol;
}

inline bool origin_interior(const SimplexN& s) {
  for (const auto& l : origin_barycentric(s))
    if (l <= 0) return false;
  return true;
}

/// Polar dual simplex. Dual vertex j solves xi . v = 1 on the facet opposite
/// vertex j, so dual_simplex is an exact involution preserving vertex order.
inline SimplexN dual_simplex(const SimplexN& s) {
  if (!origin_interior(s)) throw OriginNotInterior("origin is not interior to the simplex");
  const std::size_t n = s.dim();
  std::vector<PointN> dual;
  for (std::size_t j = 0; j <= n; ++j) {
    Matrix m;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != j) m.push_back(s[i]);
    auto xi = detail::solve(std::move(m), std::vector<Scalar>(n, Scalar(1)));
    if (!xi) throw DegenerateFacet("facet opposite vertex " + std::to_string(j) + " spans a hyperplane through the origin");
    dual.push_back(std::move(*xi));
  }
  return SimplexN(n, std::move(dual));
}

/// Closed half-space test for points of the simplex: p lies in S iff every
/// barycentric coordinate is non-negative (positive for the interior).
inline bool contains(const SimplexN& s, const PointN& p, bool interior) {
  const std::size_t n = s.dim();
  Matrix m(n + 1, std::vector<Scalar>(n + 1));
  std::vector<Scalar> rhs(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= n; ++i) m[j][i] = s[i][j];
    rhs[j] = p[j];
  }
  for (std::size_t i = 0; i <= n; ++i) m[n][i] = 1;
  rhs[n] = 1;
  auto sol = detail::solve(std::move(m), std::move(rhs));
  for (const auto& l : *sol) {
    if (l < 0 || (interior && l == 0)) return false;
  }
  return true;
}

}  // namespace latgeo

#endif  // LATGEO_SIMPLEX_HPP
