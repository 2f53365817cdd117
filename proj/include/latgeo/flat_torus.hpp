#ifndef LATGEO_FLAT_TORUS_HPP
#define LATGEO_FLAT_TORUS_HPP

#include <optional>

#include "latgeo/errors.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/lattice.hpp"

namespace latgeo {

/// Flat Finsler torus R^2 / lattice whose unit ball is `ball` (possibly asymmetric).
class FlatTorusMetric {
 public:
  explicit FlatTorusMetric(ConvexPolygon ball, Lattice2 lattice = Lattice2::integer())
      : ball_(std::move(ball)), lattice_(std::move(lattice)), reversible_(is_symmetric(ball_)) {
    if (!origin_interior(ball_)) throw OriginNotInterior("unit ball must contain the origin in its interior");
  }

  const ConvexPolygon& ball() const { return ball_; }
  const Lattice2& lattice() const { return lattice_; }
  bool reversible() const { return reversible_; }

 private:
  ConvexPolygon ball_;
  Lattice2 lattice_;
  bool reversible_;
};

/// Length of the shortest closed geodesic: the least norm of a nonzero lattice vector.
inline Scalar systole(const FlatTorusMetric& m) { return shortest_vector(m.ball(), m.lattice()).value; }

/// q with Holmes-Thompson area q / pi.
inline Scalar ht_area(const FlatTorusMetric& m) { return canonical(area(polar_dual(m.ball())) * m.lattice().det()); }

/// q' with Busemann-Hausdorff area q' pi.
inline Scalar bh_area(const FlatTorusMetric& m) {
  if (!m.reversible()) throw NotReversible("Busemann-Hausdorff area needs a symmetric ball");
  return canonical(m.lattice().det() / area(m.ball()));
}

/// Closed geodesic flow is periodic iff every vertex of the ball is a primitive integer vector.
inline bool zoll_check(const FlatTorusMetric& m) {
  if (!m.lattice().is_integer_lattice()) throw UnsupportedLattice("periodicity test is only defined for Z^2");
  for (const auto& v : m.ball().vertices()) {
    if (!is_integer(v)) return false;
    if (gcd64(floor_int(v.x), floor_int(v.y)) != 1) return false;
  }
  return true;
}

struct SystolicReport {
  Scalar systole;
  Scalar ht_area_times_pi;                // q
  std::optional<Scalar> bh_area_over_pi;  // q', reversible only
  Scalar general_defect;                  // 2q - 3 sys^2, never negative
  bool general_holds = false;
  bool general_equality = false;
  std::optional<Scalar> reversible_defect;  // q - 2 sys^2, reversible only
  bool reversible_holds = false;
  bool reversible_equality = false;
  std::optional<bool> zoll;  // nullopt for lattices other than Z^2

  bool holds() const { return general_holds && (!reversible_defect || reversible_holds); }
};

/// Exact verdicts on sys^2 <= (2 pi / 3) HT-area and, for symmetric balls, sys^2 <= (pi / 2) HT-area.
inline SystolicReport systolic_check(const FlatTorusMetric& m) {
  SystolicReport r;
  r.systole = systole(m);
  r.ht_area_times_pi = ht_area(m);
  const Scalar sys2 = r.systole * r.systole;
  r.general_defect = canonical(2 * r.ht_area_times_pi - 3 * sys2);
  r.general_holds = r.general_defect >= 0;
  r.general_equality = r.general_defect == 0;
  if (m.reversible()) {
    r.bh_area_over_pi = bh_area(m);
    r.reversible_defect = canonical(r.ht_area_times_pi - 2 * sys2);
    r.reversible_holds = *r.reversible_defect >= 0;
    r.reversible_equality = *r.reversible_defect == 0;
  }
  if (m.lattice().is_integer_lattice()) r.zoll = zoll_check(m);
  return r;
}

}  // namespace latgeo

#endif  // LATGEO_FLAT_TORUS_HPP
