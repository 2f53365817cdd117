#ifndef LATGEO_CRITICAL_HPP
#define LATGEO_CRITICAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/lattice.hpp"

namespace latgeo {

struct CriticalLattice {
  Lattice2 lattice;  // exactly admissible
  double delta;      // det(lattice), within tol of the critical determinant
};

/// True when no nonzero point of the lattice lies in the interior of the body.
inline bool is_admissible(const ConvexPolygon& body, const Lattice2& lattice) {
  ConvexPolygon pre = apply_linear(body, lattice.basis_map().inverse());
  bool clean = true;
  for_each_lattice_point(pre, Containment::interior, [&](const IntVec2& z) {
    if (!z.is_zero()) clean = false;
  });
  return clean;
}

namespace detail {

struct V2d {
  double x, y;
};

inline double cross(V2d a, V2d b) { return a.x * b.y - a.y * b.x; }

// Floating-point model of a symmetric polygon used by the hexagon search.
class HexagonSearch {
 public:
  explicit HexagonSearch(const ConvexPolygon& body) {
    for (const auto& v : body.vertices()) pts_.push_back({v.x.get_d(), v.y.get_d()});
    for (const auto& a : edge_covectors(body)) cov_.push_back({a.x.get_d(), a.y.get_d()});
  }

  std::size_t size() const { return pts_.size(); }

  V2d boundary_point(std::size_t edge, double s) const {
    V2d a = pts_[edge], b = pts_[(edge + 1) % pts_.size()];
    return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
  }

  double gauge(V2d v) const {
    double g = 0;
    for (const auto& a : cov_) g = std::max(g, a.x * v.x + a.y * v.y);
    return g;
  }

  // First point v counterclockwise from u on the boundary with u + v on the
  // boundary; writes it to `v` and returns det(u, v).
  double partner(std::size_t edge, double s, V2d& v) const {
    const std::size_t n = pts_.size();
    V2d u = boundary_point(edge, s);
    V2d c = u;
    for (std::size_t k = 1; k <= n + 1; ++k) {
      V2d d = pts_[(edge + k) % n];
      if (gauge({u.x + d.x, u.y + d.y}) <= 1.0) {
        double lambda = 0;
        for (const auto& a : cov_) {
          double slope = a.x * (d.x - c.x) + a.y * (d.y - c.y);
          if (slope < 0) lambda = std::max(lambda, (1.0 - (a.x * (u.x + c.x) + a.y * (u.y + c.y))) / slope);
        }
        lambda = std::min(lambda, 1.0);
        v = {c.x + lambda * (d.x - c.x), c.y + lambda * (d.y - c.y)};
        return cross(u, v);
      }
      c = d;
    }
    v = {-u.x, -u.y};
    return 0;
  }

  double objective(std::size_t edge, double s) const {
    V2d v;
    return partner(edge, s, v);
  }

 private:
  std::vector<V2d> pts_;
  std::vector<V2d> cov_;
};

}  // namespace detail

/// Critical lattice of a centrally symmetric polygon. Searches the one-parameter
/// family of lattices with basis u, v such that u, v and u + v lie on the
/// boundary, then rationalizes the best basis, expands it minimally and checks
/// admissibility exactly. The only inexact routine in the library.
inline CriticalLattice critical_lattice_symmetric(const ConvexPolygon& ball, double tol = 1e-6,
                                                  std::size_t samples_per_edge = 32) {
  if (!is_symmetric(ball)) throw NotSymmetric("critical lattice search needs a symmetric body");
  detail::HexagonSearch search(ball);
  const std::size_t n = search.size();

  double best = std::numeric_limits<double>::infinity();
  std::size_t best_edge = 0;
  double best_s = 0;
  auto consider = [&](std::size_t e, double s, double f) {
    if (f > 0 && f < best) {
      best = f;
      best_edge = e;
      best_s = s;
    }
  };

  // u and -u give the same lattice, so half of the boundary suffices.
  for (std::size_t e = 0; e < n / 2; ++e) {
    std::vector<double> f(samples_per_edge + 1);
    for (std::size_t k = 0; k <= samples_per_edge; ++k) {
      double s = static_cast<double>(k) / static_cast<double>(samples_per_edge);
      f[k] = search.objective(e, s);
      consider(e, s, f[k]);
    }
    for (std::size_t k = 0; k <= samples_per_edge; ++k) {
      bool left_ok = k == 0 || f[k] <= f[k - 1];
      bool right_ok = k == samples_per_edge || f[k] <= f[k + 1];
      if (!left_ok || !right_ok) continue;
      // Golden-section refinement on the bracketing samples.
      double lo = k == 0 ? 0.0 : static_cast<double>(k - 1) / samples_per_edge;
      double hi = k == samples_per_edge ? 1.0 : static_cast<double>(k + 1) / samples_per_edge;
      const double r = (std::sqrt(5.0) - 1) / 2;
      double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
      double fa = search.objective(e, a), fb = search.objective(e, b);
      for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
        if (fa <= fb) {
          hi = b;
          b = a;
          fb = fa;
          a = hi - r * (hi - lo);
          fa = search.objective(e, a);
        } else {
          lo = a;
          a = b;
          fa = fb;
          b = lo + r * (hi - lo);
          fb = search.objective(e, b);
        }
      }
      consider(e, a, fa);
      consider(e, b, fb);
    }
  }
  if (!std::isfinite(best)) throw ToleranceNotReached("no inscribed hexagon found");

  detail::V2d v;
  search.partner(best_edge, best_s, v);
  detail::V2d u = search.boundary_point(best_edge, best_s);
  Vec2 bu{from_double(u.x), from_double(u.y)};
  Vec2 bv{from_double(v.x), from_double(v.y)};

  // Push boundary points slightly outward until the rational lattice is admissible.
  for (int k = 0; k < 40; ++k) {
    Scalar grow = 1 + Scalar(1, 1u << 30) * Scalar(mpz_class(1) << (2 * k));
    Lattice2 lattice(grow * bu, grow * bv);
    double det = lattice.det().get_d();
    if (det - best > tol) break;
    if (is_admissible(ball, lattice)) return CriticalLattice{lattice, det};
  }
  throw ToleranceNotReached("could not certify an admissible lattice within tolerance");
}

}  // namespace latgeo

#endif  // LATGEO_CRITICAL_HPP
