#ifndef LATGEO_GEOMETRY_HPP
#define LATGEO_GEOMETRY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/scalar.hpp"

namespace latgeo {

/// Exact planar vector. Points of the primal plane and covectors of the dual
/// plane share this representation; a covector w pairs with a point p as dot(w, p).
struct Vec2 {
  Scalar x;
  Scalar y;

  Vec2() = default;
  Vec2(Scalar x_, Scalar y_) : x(canonical(std::move(x_))), y(canonical(std::move(y_))) {}
  Vec2(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Scalar& s, const Vec2& a) { return {s * a.x, s * a.y}; }
};

using Point2 = Vec2;
using Covec2 = Vec2;

inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// det(a, b); positive when b is counterclockwise from a.
inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Orientation of the triple (a, b, c): > 0 for a left turn.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) { return sgn(cross(b - a, c - a)); }

inline bool is_integer(const Vec2& v) { return is_integer(v.x) && is_integer(v.y); }

inline std::string to_string(const Vec2& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << to_string(v); }

/// Integer point of Z^2 (or of the dual lattice).
struct IntVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
  friend auto operator<=>(const IntVec2&, const IntVec2&) = default;

  Vec2 to_vec() const { return {static_cast<long>(x), static_cast<long>(y)}; }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Scalar dot(const IntVec2& w, const Vec2& p) {
  return Scalar(static_cast<long>(w.x)) * p.x + Scalar(static_cast<long>(w.y)) * p.y;
}

inline std::string to_string(const IntVec2& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const IntVec2& v) { return os << to_string(v); }

/// 2x2 rational matrix [[a, b], [c, d]] acting on column vectors.
class LinearMap2 {
 public:
  LinearMap2(Scalar a, Scalar b, Scalar c, Scalar d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det() == 0) throw SingularMap("linear map has zero determinant");
  }

  /// Map with columns u and v (so e1 -> u, e2 -> v).
  static LinearMap2 from_columns(const Vec2& u, const Vec2& v) { return {u.x, v.x, u.y, v.y}; }

  static LinearMap2 identity() { return {1, 0, 0, 1}; }

  /// Integer matrix with determinant +-1; flagged unimodular.
  static LinearMap2 unimodular(long a, long b, long c, long d) {
    LinearMap2 m(a, b, c, d);
    if (abs(m.det()) != 1) throw SingularMap("matrix is not unimodular");
    m.unimodular_ = true;
    return m;
  }

  Scalar det() const { return a_ * d_ - b_ * c_; }
  bool is_unimodular() const { return unimodular_; }

  /// True when the entries are integers and det = +-1, regardless of the flag.
  bool has_unimodular_entries() const {
    return is_integer(a_) && is_integer(b_) && is_integer(c_) && is_integer(d_) && abs(det()) == 1;
  }

  Vec2 operator()(const Vec2& p) const { return {a_ * p.x + b_ * p.y, c_ * p.x + d_ * p.y}; }

  LinearMap2 inverse() const {
    Scalar k = det();
    LinearMap2 m(d_ / k, -b_ / k, -c_ / k, a_ / k);
    m.unimodular_ = unimodular_;
    return m;
  }

  LinearMap2 transpose() const {
    LinearMap2 m(a_, c_, b_, d_);
    m.unimodular_ = unimodular_;
    return m;
  }

  friend LinearMap2 operator*(const LinearMap2& l, const LinearMap2& r) {
    LinearMap2 m(l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_, l.c_ * r.a_ + l.d_ * r.c_,
                 l.c_ * r.b_ + l.d_ * r.d_);
    m.unimodular_ = l.unimodular_ && r.unimodular_;
    return m;
  }

  Vec2 column(int j) const { return j == 0 ? Vec2{a_, c_} : Vec2{b_, d_}; }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }

 private:
  Scalar a_, b_, c_, d_;
  bool unimodular_ = false;
};

enum class Containment { interior, closed };

/// Strictly convex polygon, vertices counterclockwise, rotated so the
/// lexicographically smallest vertex comes first. Two polygons are equal iff
/// their vertex lists are equal.
class ConvexPolygon {
 public:
  /// Validates a strictly convex vertex cycle given in either orientation.
  /// Throws ConvexityError naming the first offending triple.
  static ConvexPolygon from_vertices(std::vector<Point2> vertices);

  /// Skips validation; `ccw` must already be strictly convex and counterclockwise.
  static ConvexPolygon from_ccw_trusted(std::vector<Point2> ccw) { return ConvexPolygon(std::move(ccw)); }

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const Point2& next(std::size_t i) const { return vertices_[(i + 1) % vertices_.size()]; }
  const Point2& prev(std::size_t i) const { return vertices_[(i + vertices_.size() - 1) % vertices_.size()]; }

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) { return a.vertices_ == b.vertices_; }

 private:
  explicit ConvexPolygon(std::vector<Point2> ccw) : vertices_(std::move(ccw)) {
    auto it = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), it, vertices_.end());
  }

  std::vector<Point2> vertices_;
};

inline std::string to_string(const ConvexPolygon& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const ConvexPolygon& p) { return os << to_string(p); }

/// Minimal strictly convex hull (Andrew's monotone chain, exact).
inline ConvexPolygon convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("convex hull needs at least 3 distinct points");

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegenerateInput("all points are collinear");
  return ConvexPolygon::from_ccw_trusted(std::move(hull));
}

inline ConvexPolygon convex_hull(std::initializer_list<Point2> points) {
  return convex_hull(std::span<const Point2>(points.begin(), points.size()));
}

inline ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> v) {
  const std::size_t n = v.size();
  if (n < 3) throw ConvexityError("polygon needs at least 3 vertices, got " + std::to_string(n));
  auto turn = [&](std::size_t i) { return orient(v[(i + n - 1) % n], v[i], v[(i + 1) % n]); };
  int positive = 0;
  for (std::size_t i = 0; i < n; ++i) positive += turn(i) > 0;
  const int want = positive * 2 >= static_cast<int>(n) ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (turn(i) != want) {
      throw ConvexityError("vertex " + std::to_string(i) + " " + to_string(v[i]) + " is reflex or collinear in triple " +
                           to_string(v[(i + n - 1) % n]) + " " + to_string(v[i]) + " " + to_string(v[(i + 1) % n]));
    }
  }
  if (want < 0) std::reverse(v.begin(), v.end());
  // Every turn agrees; reject cycles that wind more than once.
  ConvexPolygon hull = convex_hull(v);
  ConvexPolygon candidate(std::move(v));
  if (!(hull == candidate)) throw ConvexityError("vertex cycle winds more than once");
  return candidate;
}

inline Scalar area(const ConvexPolygon& p) {
  Scalar twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p[i], p.next(i));
  return canonical(twice / 2);
}

inline bool contains(const ConvexPolygon& p, const Point2& q, Containment mode) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    int o = orient(p[i], p.next(i), q);
    if (o < 0 || (o == 0 && mode == Containment::interior)) return false;
  }
  return true;
}

inline bool origin_interior(const ConvexPolygon& p) { return contains(p, Point2{0, 0}, Containment::interior); }

/// Covector a_i with a_i . x = 1 on the line of edge (p_i, p_{i+1}); these are
/// the vertices of the polar dual, in counterclockwise order.
inline std::vector<Covec2> edge_covectors(const ConvexPolygon& p) {
  std::vector<Covec2> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p.next(i);
    Scalar c = cross(a, b);
    if (c <= 0) throw OriginNotInterior("origin is not interior to " + to_string(p));
    out.emplace_back((b.y - a.y) / c, (a.x - b.x) / c);
  }
  return out;
}

/// Gauge (asymmetric norm) of a polygon containing the origin in its interior.
class Gauge {
 public:
  explicit Gauge(const ConvexPolygon& body) : covectors_(edge_covectors(body)) {}

  Scalar operator()(const Vec2& v) const {
    Scalar best = 0;
    for (const auto& a : covectors_) {
      Scalar t = dot(a, v);
      if (t > best) best = std::move(t);
    }
    return best;
  }

  const std::vector<Covec2>& covectors() const { return covectors_; }

 private:
  std::vector<Covec2> covectors_;
};

inline Scalar gauge(const ConvexPolygon& p, const Vec2& v) { return Gauge(p)(v); }

/// Support value h_P(w) = max over vertices of w . v.
inline Scalar support(const ConvexPolygon& p, const Covec2& w) {
  Scalar best = dot(w, p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) {
    Scalar t = dot(w, p[i]);
    if (t > best) best = std::move(t);
  }
  return best;
}

inline Scalar support(const ConvexPolygon& p, const IntVec2& w) { return support(p, w.to_vec()); }

inline ConvexPolygon polar_dual(const ConvexPolygon& p) { return ConvexPolygon::from_ccw_trusted(edge_covectors(p)); }

inline ConvexPolygon apply_linear(const ConvexPolygon& p, const LinearMap2& m) {
  std::vector<Point2> image;
  image.reserve(p.size());
  for (const auto& v : p.vertices()) image.push_back(m(v));
  if (m.det() < 0) std::reverse(image.begin(), image.end());
  return ConvexPolygon::from_ccw_trusted(std::move(image));
}

inline ConvexPolygon scale(const ConvexPolygon& p, const Scalar& lambda) {
  if (lambda <= 0) throw SingularMap("scale factor must be positive");
  return apply_linear(p, LinearMap2(lambda, 0, 0, lambda));
}

inline ConvexPolygon negate(const ConvexPolygon& p) { return apply_linear(p, LinearMap2(-1, 0, 0, -1)); }

inline ConvexPolygon translate(const ConvexPolygon& p, const Vec2& offset) {
  std::vector<Point2> moved;
  moved.reserve(p.size());
  for (const auto& v : p.vertices()) moved.push_back(v + offset);
  return ConvexPolygon::from_ccw_trusted(std::move(moved));
}

/// Central symmetry about the origin.
inline bool is_symmetric(const ConvexPolygon& p) { return p == negate(p); }

namespace detail {

// 0 for directions with angle in [0, pi), 1 for [pi, 2 pi).
inline int half_plane(const Vec2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

inline bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Edge vectors starting from the bottom-most (then left-most) vertex.
inline std::pair<Point2, std::vector<Vec2>> edges_from_bottom(const ConvexPolygon& p) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i].y < p[start].y || (p[i].y == p[start].y && p[i].x < p[start].x)) start = i;
  }
  std::vector<Vec2> edges;
  edges.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::size_t i = (start + k) % p.size();
    edges.push_back(p.next(i) - p[i]);
  }
  return {p[start], std::move(edges)};
}

}  // namespace detail

/// Minkowski sum of two convex polygons by merging edge sequences.
inline ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  auto [sa, ea] = detail::edges_from_bottom(a);
  auto [sb, eb] = detail::edges_from_bottom(b);
  std::vector<Vec2> merged;
  merged.reserve(ea.size() + eb.size());
  std::merge(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(merged), detail::angle_less);

  std::vector<Vec2> combined;
  for (auto& e : merged) {
    if (!combined.empty() && cross(combined.back(), e) == 0 && dot(combined.back(), e) > 0) {
      combined.back() = combined.back() + e;
    } else {
      combined.push_back(e);
    }
  }
  std::vector<Point2> verts;
  verts.reserve(combined.size());
  Point2 cur = sa + sb;
  for (std::size_t i = 0; i < combined.size(); ++i) {
    verts.push_back(cur);
    cur = cur + combined[i];
  }
  return ConvexPolygon::from_ccw_trusted(std::move(verts));
}

/// K - K.
inline ConvexPolygon difference_body(const ConvexPolygon& p) { return minkowski_sum(p, negate(p)); }

}  // namespace latgeo

#endif  // LATGEO_GEOMETRY_HPP
