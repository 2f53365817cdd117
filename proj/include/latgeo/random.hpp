#ifndef LATGEO_RANDOM_HPP
#define LATGEO_RANDOM_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/lattice.hpp"

namespace latgeo {

enum class BodyConstraint { none, symmetric, unavoidable, origin_interior };

inline BodyConstraint parse_constraint(const std::string& s) {
  if (s == "none") return BodyConstraint::none;
  if (s == "symmetric") return BodyConstraint::symmetric;
  if (s == "unavoidable") return BodyConstraint::unavoidable;
  if (s == "origin-interior") return BodyConstraint::origin_interior;
  throw ParseError("unknown constraint '" + s + "'");
}

struct RandomBodySpec {
  std::uint64_t seed = 1;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 8;
  std::int64_t max_denominator = 16;
  std::int64_t coordinate_bound = 3;  // |coordinate| <= bound before any scaling
  BodyConstraint constraint = BodyConstraint::none;
  std::size_t max_attempts = 2000;
};

/// Platform-independent integer draws on top of mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return r % n;
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline Scalar random_coordinate(Rng& rng, std::int64_t den, std::int64_t bound) {
  std::int64_t num = rng.between(-bound * den, bound * den);
  return make_scalar(num, den);
}

inline bool vertex_count_ok(const ConvexPolygon& p, const RandomBodySpec& spec) {
  return p.size() >= spec.min_vertices && p.size() <= spec.max_vertices;
}

}  // namespace detail

/// Deterministic random polygon satisfying spec.constraint.
inline ConvexPolygon random_body(const RandomBodySpec& spec) {
  if (spec.min_vertices < 3 || spec.min_vertices > spec.max_vertices || spec.max_denominator < 1 ||
      spec.coordinate_bound < 1)
    throw ConstraintUnsatisfiable("invalid random body spec");
  if (spec.constraint == BodyConstraint::symmetric && spec.max_vertices < 4)
    throw ConstraintUnsatisfiable("symmetric polygons have at least 4 vertices");
  Rng rng(spec.seed);
  const bool unavoidable = spec.constraint == BodyConstraint::unavoidable;

  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    // Unavoidable bodies start from integer points so the final scale fixes the denominators.
    std::int64_t den = unavoidable ? 1 : rng.between(1, spec.max_denominator);
    std::size_t want = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(spec.min_vertices),
                                                            static_cast<std::int64_t>(spec.max_vertices)));
    std::size_t samples = spec.constraint == BodyConstraint::symmetric ? (want + 1) / 2 : want;
    samples += static_cast<std::size_t>(rng.between(0, 2));
    std::vector<Point2> pts;
    for (std::size_t k = 0; k < samples; ++k) {
      Point2 p{detail::random_coordinate(rng, den, spec.coordinate_bound),
               detail::random_coordinate(rng, den, spec.coordinate_bound)};
      pts.push_back(p);
      if (spec.constraint == BodyConstraint::symmetric) pts.push_back(-p);
    }
    std::optional<ConvexPolygon> hull;
    try {
      hull = convex_hull(pts);
    } catch (const DegenerateInput&) {
      continue;
    }
    ConvexPolygon body = *hull;
    if (!detail::vertex_count_ok(body, spec)) continue;
    if (spec.constraint == BodyConstraint::symmetric && !origin_interior(body)) continue;
    if (spec.constraint == BodyConstraint::origin_interior && !origin_interior(body)) continue;
    if (unavoidable) {
      if (!origin_interior(body)) continue;
      // The least scale making every integer line meet the body, rounded up to denominator b.
      Scalar minimal = canonical(1 / shortest_vector(polar_dual(body), Lattice2::integer()).value);
      std::int64_t b = rng.between((spec.max_denominator + 1) / 2, spec.max_denominator);
      mpz_class num;
      Scalar scaled = minimal * Scalar(static_cast<long>(b));
      mpz_cdiv_q(num.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      body = scale(body, canonical(Scalar(num) / Scalar(static_cast<long>(b))));
      if (!is_unavoidable(body).unavoidable) throw InvariantViolation("scaled random body is not unavoidable");
    }
    return body;
  }
  throw ConstraintUnsatisfiable("no body satisfying the constraint after " + std::to_string(spec.max_attempts) +
                                " attempts");
}

/// Symmetric polygon with `n` vertices (n divisible by 4) exactly on the unit circle,
/// obtained from rational tangent half-angles rounded to 1/10^4.
inline ConvexPolygon disc_polygon(std::size_t n) {
  if (n < 4 || n % 4 != 0) throw DegenerateInput("disc approximation needs a multiple of 4 vertices");
  std::vector<Point2> pts;
  const std::size_t quarter = n / 4;
  for (std::size_t k = 0; k < quarter; ++k) {
    double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    Scalar t = make_scalar(std::lround(std::tan(theta / 2) * 10000), 10000);
    Scalar d = 1 + t * t;
    Point2 p{canonical((1 - t * t) / d), canonical(2 * t / d)};
    for (int r = 0; r < 4; ++r) {
      pts.push_back(p);
      p = Point2{-p.y, p.x};
    }
  }
  return convex_hull(pts);
}

}  // namespace latgeo

#endif  // LATGEO_RANDOM_HPP
