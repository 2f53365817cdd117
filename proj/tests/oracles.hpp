// Brute-force reference implementations used to freeze expected values.
// They share only Scalar/Vec2 arithmetic with the library.
#ifndef LATGEO_TESTS_ORACLES_HPP
#define LATGEO_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latgeo/latgeo.hpp"

namespace oracle {

using namespace latgeo;

inline Scalar q(long a, long b = 1) { return make_scalar(a, b); }

inline ConvexPolygon poly(std::initializer_list<Point2> pts) {
  return ConvexPolygon::from_vertices(std::vector<Point2>(pts));
}

inline std::vector<Point2> basic_triangle_pts() { return {{1, 0}, {0, 1}, {-1, -1}}; }
inline ConvexPolygon basic_triangle() { return poly({{1, 0}, {0, 1}, {-1, -1}}); }
inline ConvexPolygon unit_square() { return poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }
inline ConvexPolygon worked_triangle() { return poly({{q(3, 2), 0}, {0, 1}, {-1, -1}}); }

inline Scalar shoelace(const std::vector<Point2>& v) {
  Scalar s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return canonical(abs(s) / 2);
}

// Line w.x = 1 meets the closed polygon iff the vertices do not all lie strictly on one side.
inline bool line_meets(const ConvexPolygon& p, const IntVec2& w) {
  bool low = false, high = false;
  for (const auto& v : p.vertices()) {
    Scalar d = dot(w, v);
    low = low || d <= 1;
    high = high || d >= 1;
  }
  return low && high;
}

// Smallest integer m with m^2 >= x.
inline std::int64_t isqrt_ceil(const Scalar& x) {
  std::int64_t m = 0;
  while (Scalar(static_cast<long>(m * m)) < x) ++m;
  return m;
}

// Sup-norm box containing every w whose line can touch a polygon containing
// the disc around the origin tangent to the nearest edge line.
inline std::int64_t line_box(const ConvexPolygon& p) {
  Scalar worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p.next(i);
    Scalar c = cross(a, b);
    if (c <= 0) return -1;
    Vec2 d = b - a;
    worst = std::max<Scalar>(worst, canonical(dot(d, d) / (c * c)));
  }
  return isqrt_ceil(worst);
}

/// Every integer line meets P, checked line by line. Origin-exterior bodies are
/// scanned out to `scan` looking for a missed line.
inline bool brute_unavoidable(const ConvexPolygon& p, std::int64_t scan = 64) {
  std::int64_t m = line_box(p);
  if (m < 0) m = scan;
  for (std::int64_t a = -m; a <= m; ++a)
    for (std::int64_t b = -m; b <= m; ++b)
      if ((a || b) && !line_meets(p, {a, b})) return false;
  return true;
}

/// Integer lines through x that support P, by box search.
inline std::vector<IntVec2> brute_supporting_lines(const ConvexPolygon& p, const Point2& x) {
  std::vector<IntVec2> out;
  std::int64_t m = line_box(p);
  for (std::int64_t a = -m; a <= m; ++a) {
    for (std::int64_t b = -m; b <= m; ++b) {
      IntVec2 w{a, b};
      if (w.is_zero() || dot(w, x) != 1) continue;
      bool supports = std::all_of(p.vertices().begin(), p.vertices().end(), [&](const Point2& v) { return dot(w, v) <= 1; });
      if (supports) out.push_back(w);
    }
  }
  return out;
}

/// Polar dual by intersecting the constraint lines w.v = 1 pairwise.
inline ConvexPolygon halfplane_dual(const ConvexPolygon& p) {
  std::vector<Point2> pts;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Scalar det = cross(v[i], v[j]);
      if (det == 0) continue;
      // Solve w.v_i = 1, w.v_j = 1 by Cramer's rule.
      Point2 w{canonical((v[j].y - v[i].y) / det), canonical((v[i].x - v[j].x) / det)};
      bool feasible = std::all_of(v.begin(), v.end(), [&](const Point2& u) { return dot(w, u) <= 1; });
      if (feasible) pts.push_back(w);
    }
  }
  return convex_hull(pts);
}

inline ConvexPolygon pairwise_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  std::vector<Point2> pts;
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) pts.push_back(u + v);
  return convex_hull(pts);
}

/// Gauge by intersecting the ray through v with every edge.
inline Scalar ray_gauge(const ConvexPolygon& p, const Vec2& v) {
  if (v == Vec2{0, 0}) return 0;
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    Vec2 e = p.next(i) - a;
    Scalar det = cross(v, e);
    if (det == 0) continue;
    // s v = a + u e
    Scalar s = canonical(cross(a, e) / det);
    Scalar u = canonical(cross(a, v) / det);
    if (s > 0 && u >= 0 && u <= 1) {
      Scalar g = canonical(1 / s);
      if (!best || g < *best) best = g;
    }
  }
  return *best;
}

/// Least gauge over nonzero lattice points in a coefficient box of half-width m.
inline Scalar brute_shortest(const ConvexPolygon& ball, const Lattice2& l, std::int64_t m) {
  std::optional<Scalar> best;
  for (std::int64_t a = -m; a <= m; ++a) {
    for (std::int64_t b = -m; b <= m; ++b) {
      if (!a && !b) continue;
      Scalar g = ray_gauge(ball, l.point({a, b}));
      if (!best || g < *best) best = g;
    }
  }
  return *best;
}

/// Sutherland-Hodgman clip of convex a by convex b.
inline std::optional<ConvexPolygon> intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  std::vector<Point2> cur = a.vertices();
  for (std::size_t i = 0; i < b.size() && !cur.empty(); ++i) {
    const Point2& e0 = b[i];
    const Point2& e1 = b.next(i);
    std::vector<Point2> next;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const Point2& p = cur[k];
      const Point2& r = cur[(k + 1) % cur.size()];
      Scalar sp = cross(e1 - e0, p - e0), sr = cross(e1 - e0, r - e0);
      if (sp >= 0) next.push_back(p);
      if ((sp > 0 && sr < 0) || (sp < 0 && sr > 0)) {
        Scalar t = canonical(sp / (sp - sr));
        next.push_back(p + t * (r - p));
      }
    }
    cur = std::move(next);
  }
  try {
    return convex_hull(cur);
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

inline bool covers(const ConvexPolygon& outer, const ConvexPolygon& inner) {
  for (const auto& v : inner.vertices())
    if (!contains(outer, v, Containment::closed)) return false;
  return true;
}

struct StepVerdict {
  bool ok = true;
  std::string why;
};

/// Grid-and-box check of one deformation step: P_s unavoidable with unchanged
/// weight for sampled s < T, no integer line in the certified box reaches the
/// moving vertex earlier, and at T either a vertex merges or the weight grows.
inline StepVerdict check_step(const DeformationStep& step, int grid = 48) {
  StepVerdict verdict;
  auto fail = [&](std::string why) {
    if (verdict.ok) verdict = StepVerdict{false, std::move(why)};
  };
  const ConvexPolygon& p = step.start;
  const std::size_t i = step.vd.vertex_index;
  const Point2& x0 = p[i];
  const Vec2& v = step.vd.direction;
  std::vector<Point2> fixed;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != i) fixed.push_back(p[j]);
  auto at = [&](const Scalar& s) {
    std::vector<Point2> pts = fixed;
    pts.push_back(x0 + s * v);
    return convex_hull(pts);
  };
  const std::size_t weight0 = brute_supporting_lines(p, x0).size();
  const ConvexPolygon end = at(step.T);
  if (!(end == step.end)) fail("end polygon differs");
  if (shoelace(end.vertices()) != step.end_area) fail("end area differs");

  auto common = intersect(p, end);
  if (!common) return StepVerdict{false, "start and end share no area"};
  const std::int64_t box = line_box(*common);
  if (box < 0) return StepVerdict{false, "origin not interior to start and end"};

  for (int k = 0; k < grid; ++k) {
    Scalar s = canonical(step.T * Scalar(k, grid));
    ConvexPolygon ps = at(s);
    if (ps.size() != p.size()) fail("vertex set changed before T at s=" + to_string(s));
    if (!brute_unavoidable(ps)) fail("avoidable before T at s=" + to_string(s));
    if (brute_supporting_lines(ps, x0 + s * v).size() != weight0) fail("weight changed before T at s=" + to_string(s));
  }

  std::vector<IntVec2> at_T;
  for (std::int64_t a = -box; a <= box; ++a) {
    for (std::int64_t b = -box; b <= box; ++b) {
      IntVec2 w{a, b};
      if (w.is_zero()) continue;
      Scalar wv = dot(w, v), wx = dot(w, x0);
      if (wv == 0 || wx == 1) continue;
      Scalar t = canonical((1 - wx) / wv);
      if (t <= 0 || t > step.T) continue;
      bool ok = std::all_of(fixed.begin(), fixed.end(), [&](const Point2& x) { return dot(w, x) <= 1; });
      if (!ok) continue;
      if (t < step.T) fail("line " + to_string(w) + " reaches the moving vertex at " + to_string(t));
      else at_T.push_back(w);
    }
  }
  std::sort(at_T.begin(), at_T.end());
  std::vector<IntVec2> reported = step.event_covectors;
  std::sort(reported.begin(), reported.end());
  if (step.event == StepEvent::weight_increase) {
    if (at_T != reported) fail("event covectors differ from the box search");
    if (brute_supporting_lines(end, x0 + step.T * v).size() <= weight0) fail("weight did not increase at T");
  } else if (end.size() >= p.size()) {
    fail("merge reported but the vertex count did not drop");
  }
  if (!brute_unavoidable(end)) fail("end polygon avoidable");
  return verdict;
}

}  // namespace oracle

#endif  // LATGEO_TESTS_ORACLES_HPP
