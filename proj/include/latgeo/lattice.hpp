#ifndef LATGEO_LATTICE_HPP
#define LATGEO_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/scalar.hpp"
#include "latgeo/simplex.hpp"

namespace latgeo {

/// The line {x : m x_1 + n x_2 = 1}. Non-primitive covectors are legitimate lines.
struct IntegerLine {
  IntVec2 w;

  friend bool operator==(const IntegerLine&, const IntegerLine&) = default;
  friend auto operator<=>(const IntegerLine&, const IntegerLine&) = default;

  bool passes_through(const Point2& p) const { return dot(w, p) == 1; }
};

inline std::string to_string(const IntegerLine& l) { return to_string(l.w); }

/// Lattice spanned by two rational vectors.
class Lattice2 {
 public:
  Lattice2(Vec2 b1, Vec2 b2) : b1_(std::move(b1)), b2_(std::move(b2)), det_(abs(cross(b1_, b2_))) {
    if (det_ == 0) throw SingularMap("lattice basis is degenerate");
  }

  static Lattice2 integer() { return {Vec2{1, 0}, Vec2{0, 1}}; }

  const Vec2& b1() const { return b1_; }
  const Vec2& b2() const { return b2_; }
  const Scalar& det() const { return det_; }
  LinearMap2 basis_map() const { return LinearMap2::from_columns(b1_, b2_); }
  Vec2 point(const IntVec2& z) const {
    return Scalar(static_cast<long>(z.x)) * b1_ + Scalar(static_cast<long>(z.y)) * b2_;
  }

  /// The basis has integer entries and determinant one, i.e. it spans Z^2.
  bool is_integer_lattice() const { return basis_map().has_unimodular_entries(); }

  friend bool operator==(const Lattice2& a, const Lattice2& b) { return a.b1_ == b.b1_ && a.b2_ == b.b2_; }

 private:
  Vec2 b1_, b2_;
  Scalar det_;
};

namespace detail {

// y-extent of the polygon on the vertical line x = c, or nullopt when the line misses it.
inline std::optional<std::pair<Scalar, Scalar>> column_range(const ConvexPolygon& p, const Scalar& c) {
  std::optional<Scalar> lo, hi;
  auto take = [&](const Scalar& y) {
    if (!lo || y < *lo) lo = y;
    if (!hi || y > *hi) hi = y;
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p.next(i);
    if ((a.x <= c && c <= b.x) || (b.x <= c && c <= a.x)) {
      if (a.x == b.x) {
        take(a.y);
        take(b.y);
      } else {
        take(a.y + (c - a.x) * (b.y - a.y) / (b.x - a.x));
      }
    }
  }
  if (!lo) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

inline std::pair<Scalar, Scalar> x_extent(const ConvexPolygon& p) {
  Scalar lo = p[0].x, hi = p[0].x;
  for (const auto& v : p.vertices()) {
    if (v.x < lo) lo = v.x;
    if (v.x > hi) hi = v.x;
  }
  return {lo, hi};
}

}  // namespace detail

/// Visits the integer points of the polygon column by column, in lexicographic order.
inline void for_each_lattice_point(const ConvexPolygon& p, Containment mode, const std::function<void(const IntVec2&)>& fn) {
  auto [xlo, xhi] = detail::x_extent(p);
  const bool open = mode == Containment::interior;
  std::int64_t x0 = open ? floor_int(xlo) + 1 : ceil_int(xlo);
  std::int64_t x1 = open ? ceil_int(xhi) - 1 : floor_int(xhi);
  for (std::int64_t x = x0; x <= x1; ++x) {
    auto range = detail::column_range(p, Scalar(static_cast<long>(x)));
    if (!range) continue;
    std::int64_t y0 = open ? floor_int(range->first) + 1 : ceil_int(range->first);
    std::int64_t y1 = open ? ceil_int(range->second) - 1 : floor_int(range->second);
    for (std::int64_t y = y0; y <= y1; ++y) fn(IntVec2{x, y});
  }
}

inline std::vector<IntVec2> lattice_points(const ConvexPolygon& p, Containment mode) {
  std::vector<IntVec2> out;
  for_each_lattice_point(p, mode, [&](const IntVec2& z) { out.push_back(z); });
  return out;
}

/// Outcome of the unavoidability test. avoidable <=> witness <=> nonempty point list.
struct AvoidanceCertificate {
  bool unavoidable = false;
  std::optional<IntegerLine> witness;
  /// Nonzero integer covectors strictly inside the dual body. When the origin is
  /// not interior the dual is unbounded and the list holds the witness alone.
  std::vector<IntVec2> dual_interior_points;
};

/// Does the line w . x = 1 miss the polygon entirely?
inline bool line_misses(const ConvexPolygon& p, const IntVec2& w) {
  Vec2 wv = w.to_vec();
  return support(p, wv) < 1 || -support(p, -wv) > 1;
}

inline std::vector<IntegerLine> missed_lines(const ConvexPolygon& p) {
  ConvexPolygon dual = polar_dual(p);  // throws OriginNotInterior
  std::vector<IntegerLine> out;
  for_each_lattice_point(dual, Containment::interior, [&](const IntVec2& z) {
    if (!z.is_zero()) out.push_back(IntegerLine{z});
  });
  return out;
}

inline AvoidanceCertificate is_unavoidable(const ConvexPolygon& p) {
  AvoidanceCertificate cert;
  if (!origin_interior(p)) {
    // Some missed line exists; scan covectors by increasing sup-norm.
    constexpr std::int64_t kScanLimit = std::int64_t{1} << 20;
    for (std::int64_t r = 1; r <= kScanLimit; ++r) {
      for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
          if (std::max(x < 0 ? -x : x, y < 0 ? -y : y) != r) continue;
          IntVec2 w{x, y};
          if (line_misses(p, w)) {
            cert.witness = IntegerLine{w};
            cert.dual_interior_points = {w};
            return cert;
          }
        }
      }
    }
    throw EnumerationFailed("no missed integer line found for a body without interior origin");
  }
  for (const auto& line : missed_lines(p)) cert.dual_interior_points.push_back(line.w);
  if (cert.dual_interior_points.empty()) {
    cert.unavoidable = true;
    return cert;
  }
  // Witness: the most deeply missed line, ties to the lexicographically largest covector.
  const IntVec2* best = nullptr;
  Scalar best_h;
  for (const auto& w : cert.dual_interior_points) {
    Scalar h = support(p, w);
    if (!best || h < best_h || (h == best_h && *best < w)) {
      best = &w;
      best_h = h;
    }
  }
  cert.witness = IntegerLine{*best};
  return cert;
}

/// Integer points of the closed segment [a, b], lexicographically sorted.
inline std::vector<IntVec2> segment_lattice_points(const Vec2& a, const Vec2& b) {
  std::vector<IntVec2> out;
  if (a.x == b.x) {
    if (!is_integer(a.x)) return out;
    std::int64_t x = floor_int(a.x);
    Scalar lo = std::min<Scalar>(a.y, b.y), hi = std::max<Scalar>(a.y, b.y);
    for (std::int64_t y = ceil_int(lo); y <= floor_int(hi); ++y) out.push_back({x, y});
    return out;
  }
  Scalar lo = std::min<Scalar>(a.x, b.x), hi = std::max<Scalar>(a.x, b.x);
  for (std::int64_t x = ceil_int(lo); x <= floor_int(hi); ++x) {
    Scalar xs(static_cast<long>(x));
    Scalar y = canonical(a.y + (xs - a.x) * (b.y - a.y) / (b.x - a.x));
    if (is_integer(y)) out.push_back({x, floor_int(y)});
  }
  return out;
}

struct VertexWeight {
  std::size_t count = 0;
  std::vector<IntegerLine> lines;
};

/// Integer lines supporting the polygon at vertex i: the integer points of the
/// dual edge between the covectors of the two incident edges.
inline VertexWeight vertex_weight(const ConvexPolygon& p, std::size_t i) {
  std::vector<Covec2> cov = edge_covectors(p);
  const std::size_t n = p.size();
  const Covec2& before = cov[(i + n - 1) % n];
  const Covec2& after = cov[i % n];
  VertexWeight w;
  for (const auto& z : segment_lattice_points(before, after)) w.lines.push_back(IntegerLine{z});
  w.count = w.lines.size();
  return w;
}

/// A nonzero integer point of the closed body; guaranteed when area >= 4.
inline std::optional<IntVec2> minkowski_witness(const ConvexPolygon& p) {
  if (!is_symmetric(p)) throw NotSymmetric("body is not symmetric about the origin");
  std::optional<IntVec2> found;
  for_each_lattice_point(p, Containment::closed, [&](const IntVec2& z) {
    if (!found && !z.is_zero()) found = z;
  });
  return found;
}

struct ShortestVector {
  IntVec2 z;
  Scalar value;
};

/// Minimizes gauge(ball, z1 b1 + z2 b2) over nonzero integer z; ties go to the
/// lexicographically smallest z.
inline ShortestVector shortest_vector(const ConvexPolygon& ball, const Lattice2& lattice) {
  Gauge g(ball);
  Scalar bound = g(lattice.b1());
  for (const Vec2& c : {-lattice.b1(), lattice.b2(), -lattice.b2()}) bound = std::min<Scalar>(bound, g(c));
  ConvexPolygon region = apply_linear(scale(ball, bound), lattice.basis_map().inverse());
  std::optional<ShortestVector> best;
  for_each_lattice_point(region, Containment::closed, [&](const IntVec2& z) {
    if (z.is_zero()) return;
    Scalar v = g(lattice.point(z));
    if (!best || v < best->value || (v == best->value && z < best->z)) best = ShortestVector{z, v};
  });
  return *best;
}

struct ReducedBasis2 {
  LinearMap2 transform;  // columns are the two reduced basis vectors
  Scalar a1;
  Scalar a2;
  Scalar product;  // a1 * a2 * area(ball), at most 4
};

namespace detail {

// (r, s) with p*s - q*r = 1 for coprime (p, q).
inline IntVec2 complete_basis(const IntVec2& v) {
  std::int64_t old_r = v.x, r = v.y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  // old_s * p + old_t * q = old_r = +-1.
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return IntVec2{-old_t, old_s};
}

}  // namespace detail

/// Minkowski-reduced basis of Z^2 with respect to a symmetric gauge.
inline ReducedBasis2 reduced_basis(const ConvexPolygon& ball) {
  if (!is_symmetric(ball)) throw NotSymmetric("reduction needs a symmetric ball");
  Gauge g(ball);
  ShortestVector first = shortest_vector(ball, Lattice2::integer());
  const IntVec2 x1 = first.z;
  IntVec2 y0 = detail::complete_basis(x1);
  Scalar bound = g(y0.to_vec());
  std::optional<std::pair<Scalar, IntVec2>> best;
  for_each_lattice_point(scale(ball, bound), Containment::closed, [&](const IntVec2& y) {
    std::int64_t d = x1.x * y.y - x1.y * y.x;
    if (d != 1 && d != -1) return;
    Scalar v = g(y.to_vec());
    if (!best || v < best->first || (v == best->first && y < best->second)) best = std::make_pair(v, y);
  });
  IntVec2 x2 = best->second;
  if (x1.x * x2.y - x1.y * x2.x < 0) x2 = IntVec2{-x2.x, -x2.y};
  LinearMap2 t = LinearMap2::unimodular(static_cast<long>(x1.x), static_cast<long>(x2.x), static_cast<long>(x1.y),
                                        static_cast<long>(x2.y));
  Scalar a2 = best->first;
  Scalar product = canonical(first.value * a2 * area(ball));
  return ReducedBasis2{t, first.value, a2, product};
}

/// Basic-simplex style unavoidability in dimension n <= 4: no nonzero integer
/// point strictly inside the dual simplex {xi : xi . v < 1 for every vertex v}.
inline bool unavoidable_simplex(const SimplexN& s) {
  const std::size_t n = s.dim();
  if (n > 4) throw DimensionTooLarge("simplex enumeration is limited to n <= 4");
  SimplexN dual = dual_simplex(s);
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar mn = dual[0][j], mx = dual[0][j];
    for (const auto& v : dual.vertices()) {
      mn = std::min<Scalar>(mn, v[j]);
      mx = std::max<Scalar>(mx, v[j]);
    }
    lo[j] = ceil_int(mn);
    hi[j] = floor_int(mx);
  }
  std::vector<std::int64_t> xi(lo);
  while (true) {
    bool zero = std::all_of(xi.begin(), xi.end(), [](std::int64_t c) { return c == 0; });
    if (!zero) {
      bool inside = true;
      for (const auto& v : s.vertices()) {
        Scalar t = 0;
        for (std::size_t j = 0; j < n; ++j) t += Scalar(static_cast<long>(xi[j])) * v[j];
        if (t >= 1) {
          inside = false;
          break;
        }
      }
      if (inside) return false;
    }
    std::size_t j = 0;
    while (j < n && xi[j] == hi[j]) {
      xi[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++xi[j];
  }
  return true;
}

}  // namespace latgeo

#endif  // LATGEO_LATTICE_HPP
