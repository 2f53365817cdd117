#ifndef LATGEO_DESCENT_HPP
#define LATGEO_DESCENT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "latgeo/errors.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/lattice.hpp"

namespace latgeo {

/// Type (n, m, k) of an unavoidable polygon: vertex count, number of
/// non-integer vertices, largest weight among the non-integer vertices.
struct BodyType {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;

  friend bool operator==(const BodyType&, const BodyType&) = default;

  /// Strict order: lexicographic on (n, m, -k).
  friend bool operator<(const BodyType& a, const BodyType& b) {
    return std::make_tuple(a.n, a.m, b.k) < std::make_tuple(b.n, b.m, a.k);
  }
};

inline std::string to_string(const BodyType& t) {
  return "(" + std::to_string(t.n) + "," + std::to_string(t.m) + "," + std::to_string(t.k) + ")";
}

enum class DeformationKind { weight0, weight1 };

/// Slide a non-integer vertex along a supporting line. The direction is a
/// primitive integer vector; only the ray matters.
struct VirtualDeformation {
  std::size_t vertex_index = 0;
  Vec2 direction;
  Scalar slope;  // d/dt of the area, never positive
  DeformationKind kind = DeformationKind::weight0;
  std::optional<IntegerLine> line;  // the supporting integer line when kind == weight1
};

enum class StepEvent { vertex_merge, weight_increase };

inline const char* to_string(StepEvent e) { return e == StepEvent::vertex_merge ? "vertex_merge" : "weight_increase"; }
inline const char* to_string(DeformationKind k) { return k == DeformationKind::weight0 ? "weight0" : "weight1"; }

struct DeformationStep {
  ConvexPolygon start;
  VirtualDeformation vd;
  std::optional<Scalar> tau_plus;  // nullopt = +infinity
  std::optional<Scalar> t_origin;  // nullopt = +infinity
  Scalar T;
  StepEvent event = StepEvent::weight_increase;
  std::vector<IntVec2> event_covectors;  // lines reached exactly at T
  ConvexPolygon end;
  Scalar start_area;
  Scalar end_area;
};

enum class Strategy { deterministic, all_paths };

struct DescentCertificate {
  std::vector<DeformationStep> steps;
  std::vector<BodyType> types;  // types[i] is the type before step i; back() is the terminal type
  ConvexPolygon terminal;
  Scalar terminal_area;
  bool is_minimal = false;
  std::vector<std::string> strategy_log;
};

namespace detail {

inline void require_unavoidable(const ConvexPolygon& p) {
  if (!is_unavoidable(p).unavoidable) throw NotUnavoidable("polygon " + to_string(p) + " misses an integer line");
}

inline Vec2 primitive_direction(const Vec2& v) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
  mpz_class a = v.x.get_num() * (l / v.x.get_den());
  mpz_class b = v.y.get_num() * (l / v.y.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g == 0) throw DegenerateInput("zero direction");
  return Vec2{Scalar(a / g), Scalar(b / g)};
}

// Root of an orientation determinant that is affine in t; nullopt unless it is a positive root.
inline std::optional<Scalar> positive_root(const Scalar& at0, const Scalar& at1) {
  Scalar slope = at1 - at0;
  if (slope == 0) return std::nullopt;
  Scalar t = canonical(-at0 / slope);
  if (t <= 0) return std::nullopt;
  return t;
}

inline void keep_min(std::optional<Scalar>& best, const std::optional<Scalar>& t) {
  if (t && (!best || *t < *best)) best = t;
}

struct MovingVertex {
  const ConvexPolygon& p;
  std::size_t i;
  const Vec2& v;

  Point2 at(const Scalar& t) const { return p[i] + t * v; }

  std::vector<Point2> fixed() const {
    std::vector<Point2> out;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (j != i) out.push_back(p[j]);
    return out;
  }

  ConvexPolygon polygon_at(const Scalar& t) const {
    std::vector<Point2> pts = fixed();
    pts.push_back(at(t));
    return convex_hull(pts);
  }

  // Positive root of orient(a, b, c) where any argument may be the moving vertex (nullopt).
  std::optional<Scalar> orient_root(const std::optional<Point2>& a, const std::optional<Point2>& b,
                                    const std::optional<Point2>& c) const {
    auto eval = [&](const Scalar& t) {
      Point2 y = at(t);
      const Point2& pa = a ? *a : y;
      const Point2& pb = b ? *b : y;
      const Point2& pc = c ? *c : y;
      return Scalar(cross(pb - pa, pc - pa));
    };
    return positive_root(eval(0), eval(1));
  }
};

}  // namespace detail

/// Half the rate of change of twice the cap triangle: d|P_t|/dt = det(v, x_next - x_prev) / 2.
inline Scalar area_slope(const ConvexPolygon& p, std::size_t i, const Vec2& v) {
  return canonical(cross(v, p.next(i) - p.prev(i)) / 2);
}

/// First time the vertex set of P_t changes (the moving vertex becomes collinear
/// with a neighbouring pair), or nullopt when it never does.
inline std::optional<Scalar> tau_plus(const ConvexPolygon& p, std::size_t i, const Vec2& v) {
  detail::MovingVertex mv{p, i, v};
  const std::size_t n = p.size();
  std::optional<Scalar> best;
  detail::keep_min(best, mv.orient_root(p.prev(i), std::nullopt, p.next(i)));
  if (n >= 4) {
    detail::keep_min(best, mv.orient_root(std::nullopt, p.next(i), p.vertex(i + 2)));
    detail::keep_min(best, mv.orient_root(p.vertex(i + n - 2), p.prev(i), std::nullopt));
  }
  return best;
}

/// First time the origin reaches one of the two moving edges.
inline std::optional<Scalar> origin_exit_time(const ConvexPolygon& p, std::size_t i, const Vec2& v) {
  detail::MovingVertex mv{p, i, v};
  const Point2 origin{0, 0};
  std::optional<Scalar> best;
  // An edge parallel to v keeps its line; its determinant only vanishes where the vertices meet.
  if (cross(v, p[i] - p.prev(i)) != 0) detail::keep_min(best, mv.orient_root(p.prev(i), std::nullopt, origin));
  if (cross(v, p.next(i) - p[i]) != 0) detail::keep_min(best, mv.orient_root(std::nullopt, p.next(i), origin));
  return best;
}

inline BodyType body_type(const ConvexPolygon& p) {
  detail::require_unavoidable(p);
  BodyType t;
  t.n = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_integer(p[i])) continue;
    ++t.m;
    t.k = std::max(t.k, vertex_weight(p, i).count);
  }
  return t;
}

/// Builds and validates a deformation of vertex i along `direction`, which
/// must span a supporting line (the unique integer one when the weight is 1)
/// and must not increase the area.
inline VirtualDeformation make_deformation(const ConvexPolygon& p, std::size_t i, const Vec2& direction) {
  if (is_integer(p[i])) throw DegenerateInput("vertex " + to_string(p[i]) + " is an integer point");
  Vec2 d = detail::primitive_direction(direction);
  int side_next = orient(p[i], p[i] + d, p.next(i));
  int side_prev = orient(p[i], p[i] + d, p.prev(i));
  for (std::size_t j = 0; j < p.size(); ++j) {
    int o = orient(p[i], p[i] + d, p[j]);
    if (o != 0 && ((side_next != 0 && o != side_next) || (side_prev != 0 && o != side_prev))) {
      throw DegenerateInput("direction " + to_string(d) + " does not span a supporting line at " + to_string(p[i]));
    }
  }
  if (side_next != 0 && side_prev != 0 && side_next != side_prev)
    throw DegenerateInput("direction " + to_string(d) + " cuts the polygon at " + to_string(p[i]));

  VirtualDeformation vd;
  vd.vertex_index = i;
  vd.direction = d;
  vd.slope = area_slope(p, i, d);
  if (vd.slope > 0) throw DegenerateInput("direction " + to_string(d) + " increases the area");
  VertexWeight w = vertex_weight(p, i);
  if (w.count >= 2) throw InvariantViolation("non-integer vertex with weight >= 2 in an unavoidable polygon");
  if (w.count == 1) {
    const IntVec2& a = w.lines.front().w;
    if (dot(a, d) != 0) throw DegenerateInput("weight-1 vertex must slide along its supporting integer line");
    vd.kind = DeformationKind::weight1;
    vd.line = w.lines.front();
  }
  return vd;
}

/// All virtual deformations, one per non-integer vertex, in vertex order.
inline std::vector<VirtualDeformation> virtual_deformations(const ConvexPolygon& p) {
  detail::require_unavoidable(p);
  std::vector<VirtualDeformation> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_integer(p[i])) continue;
    VertexWeight w = vertex_weight(p, i);
    Vec2 d;
    if (w.count == 0) {
      // Both edge directions shrink the area; slide toward the successor.
      d = detail::primitive_direction(p.next(i) - p[i]);
    } else if (w.count == 1) {
      const IntVec2& a = w.lines.front().w;
      d = detail::primitive_direction(Vec2{static_cast<long>(-a.y), static_cast<long>(a.x)});
      Scalar s = area_slope(p, i, d);
      if (s > 0) {
        d = -d;
      } else if (s == 0) {
        bool fwd = tau_plus(p, i, d).has_value();
        bool back = tau_plus(p, i, -d).has_value();
        if (back && !fwd) d = -d;
      }
    } else {
      throw InvariantViolation("non-integer vertex " + to_string(p[i]) + " has weight " + std::to_string(w.count));
    }
    out.push_back(make_deformation(p, i, d));
  }
  return out;
}

namespace detail {

struct EventScan {
  std::optional<Scalar> t;
  std::vector<IntVec2> covectors;
};

// Events reached no later than `horizon`. Every such covector lies in the
// polar of P_0 and P_horizon's intersection, i.e. in the hull of both polars.
inline EventScan scan_events(const MovingVertex& mv, const Scalar& horizon) {
  const ConvexPolygon& p = mv.p;
  std::vector<Point2> region_pts = polar_dual(p).vertices();
  ConvexPolygon moved_dual = polar_dual(mv.polygon_at(horizon));
  region_pts.insert(region_pts.end(), moved_dual.vertices().begin(), moved_dual.vertices().end());
  ConvexPolygon region = convex_hull(region_pts);
  std::vector<Point2> fixed = mv.fixed();
  const Point2& x0 = p[mv.i];

  EventScan scan;
  for_each_lattice_point(region, Containment::closed, [&](const IntVec2& w) {
    if (w.is_zero()) return;
    Scalar wv = dot(w, mv.v);
    if (wv == 0) return;
    Scalar wx = dot(w, x0);
    if (wx == 1) return;
    Scalar t = canonical((1 - wx) / wv);
    if (t <= 0 || t > horizon) return;
    if (scan.t && t > *scan.t) return;
    for (const auto& x : fixed)
      if (dot(w, x) > 1) return;
    if (!scan.t || t < *scan.t) {
      scan.t = t;
      scan.covectors.clear();
    }
    scan.covectors.push_back(w);
  });
  return scan;
}

}  // namespace detail

/// Runs one deformation to the first time T at which unavoidability or the
/// moving vertex's weight would change, or the vertex set changes.
inline DeformationStep deformation_step(const ConvexPolygon& p, const VirtualDeformation& vd) {
  detail::require_unavoidable(p);
  const std::size_t i = vd.vertex_index;
  detail::MovingVertex mv{p, i, vd.direction};

  DeformationStep step{p, vd, tau_plus(p, i, vd.direction), origin_exit_time(p, i, vd.direction), 0,
                       StepEvent::weight_increase, {}, p, area(p), 0};
  const auto& tau = step.tau_plus;
  const auto& t_origin = step.t_origin;
  if (!tau && !t_origin) throw EnumerationFailed("deformation never changes the polygon nor loses the origin");

  detail::EventScan scan;
  if (tau && (!t_origin || *tau < *t_origin)) {
    scan = detail::scan_events(mv, *tau);
  } else {
    constexpr int kMaxRounds = 64;
    Scalar gap = *t_origin / 2;
    for (int round = 0; round < kMaxRounds && !scan.t; ++round, gap /= 2) {
      scan = detail::scan_events(mv, *t_origin - gap);
    }
    if (!scan.t) throw EnumerationFailed("no event found before the origin leaves the polygon");
  }

  if (tau && (!scan.t || *tau < *scan.t)) {
    step.T = *tau;
    step.event = StepEvent::vertex_merge;
  } else {
    step.T = *scan.t;
    step.event = StepEvent::weight_increase;
    step.event_covectors = scan.covectors;
  }
  if (step.T <= 0) throw InvariantViolation("deformation time must be positive");
  if (t_origin && step.T >= *t_origin) throw EnumerationFailed("event time reached the origin exit time");

  step.end = mv.polygon_at(step.T);
  step.end_area = area(step.end);
  if (step.end_area > step.start_area) throw InvariantViolation("deformation increased the area");
  return step;
}

/// Basic triangle: integer triangle, origin interior, area 3/2, every vertex pair a lattice basis.
inline bool is_basic_triangle(const ConvexPolygon& p) {
  if (p.size() != 3) return false;
  for (const auto& v : p.vertices())
    if (!is_integer(v)) return false;
  if (!origin_interior(p) || area(p) != Scalar(3, 2)) return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (abs(cross(p[i], p.next(i))) != 1) return false;
  return true;
}

namespace detail {

inline std::size_t default_budget(const ConvexPolygon& p) {
  std::size_t m = 0;
  for (const auto& v : p.vertices()) m += !is_integer(v);
  return 16 * (p.size() + m + 1);
}

inline std::string describe(const DeformationStep& s, std::size_t index) {
  std::string line = "step " + std::to_string(index) + ": vertex " + to_string(s.start[s.vd.vertex_index]) + " " +
                     to_string(s.vd.kind) + " along " + to_string(s.vd.direction) + ", T=" + to_string(s.T) + ", " +
                     to_string(s.event) + ", area " + to_string(s.start_area) + " -> " + to_string(s.end_area);
  return line;
}

inline void check_step(const DeformationStep& s, const BodyType& before, const BodyType& after) {
  if (!(after < before))
    throw InvariantViolation("type did not decrease: " + to_string(before) + " -> " + to_string(after));
  if (s.end_area > s.start_area) throw InvariantViolation("area increased");
}

inline void finish(DescentCertificate& cert) {
  const ConvexPolygon& t = cert.terminal;
  for (const auto& v : t.vertices())
    if (!is_integer(v)) throw InvariantViolation("terminal polygon has a non-integer vertex");
  cert.terminal_area = area(t);
  if (cert.terminal_area < Scalar(3, 2)) throw InvariantViolation("integer unavoidable polygon with area below 3/2");
  bool flat = std::all_of(cert.steps.begin(), cert.steps.end(), [](const DeformationStep& s) { return s.vd.slope == 0; });
  cert.is_minimal = is_basic_triangle(t) && flat;
}

// Deformations that guarantee a strict type decrease: those at vertices of maximal weight.
inline std::vector<VirtualDeformation> descending_deformations(const ConvexPolygon& p, const BodyType& type) {
  std::vector<VirtualDeformation> out;
  for (auto& vd : virtual_deformations(p)) {
    std::size_t w = vd.kind == DeformationKind::weight1 ? 1 : 0;
    if (w == type.k) out.push_back(std::move(vd));
  }
  return out;
}

}  // namespace detail

/// Deterministic descent: weight-1 vertices first, then the lexicographically smallest vertex.
inline DescentCertificate descend(const ConvexPolygon& p, std::optional<std::size_t> step_budget = std::nullopt) {
  const std::size_t budget = step_budget.value_or(detail::default_budget(p));
  DescentCertificate cert{{}, {body_type(p)}, p, 0, false, {"strategy deterministic: weight-1 first, then smallest vertex"}};
  ConvexPolygon cur = p;
  while (true) {
    auto options = detail::descending_deformations(cur, cert.types.back());
    if (options.empty()) break;
    if (cert.steps.size() >= budget) throw StepBudgetExceeded("descent exceeded " + std::to_string(budget) + " steps");
    auto pick = std::min_element(options.begin(), options.end(), [&](const auto& a, const auto& b) {
      return cur[a.vertex_index] < cur[b.vertex_index];
    });
    DeformationStep step = deformation_step(cur, *pick);
    BodyType next = body_type(step.end);
    detail::check_step(step, cert.types.back(), next);
    cert.strategy_log.push_back(detail::describe(step, cert.steps.size()));
    cur = step.end;
    cert.steps.push_back(std::move(step));
    cert.types.push_back(next);
  }
  cert.terminal = cur;
  detail::finish(cert);
  return cert;
}

/// Explores every type-decreasing deformation at each step; one certificate per path.
inline std::vector<DescentCertificate> descend_all_paths(const ConvexPolygon& p,
                                                         std::optional<std::size_t> step_budget = std::nullopt,
                                                         std::size_t max_paths = 4096) {
  const std::size_t budget = step_budget.value_or(detail::default_budget(p));
  std::vector<DescentCertificate> done;
  std::vector<DescentCertificate> stack;
  stack.push_back(DescentCertificate{{}, {body_type(p)}, p, 0, false, {"strategy all-paths"}});
  while (!stack.empty()) {
    DescentCertificate cert = std::move(stack.back());
    stack.pop_back();
    auto options = detail::descending_deformations(cert.terminal, cert.types.back());
    if (options.empty()) {
      detail::finish(cert);
      done.push_back(std::move(cert));
      if (done.size() > max_paths) throw StepBudgetExceeded("all-paths descent exceeded the path limit");
      continue;
    }
    if (cert.steps.size() >= budget) throw StepBudgetExceeded("descent exceeded " + std::to_string(budget) + " steps");
    for (auto it = options.rbegin(); it != options.rend(); ++it) {
      DescentCertificate branch = cert;
      DeformationStep step = deformation_step(branch.terminal, *it);
      BodyType next = body_type(step.end);
      detail::check_step(step, branch.types.back(), next);
      branch.strategy_log.push_back(detail::describe(step, branch.steps.size()));
      branch.terminal = step.end;
      branch.steps.push_back(std::move(step));
      branch.types.push_back(next);
      stack.push_back(std::move(branch));
    }
  }
  return done;
}

inline std::vector<DescentCertificate> descend(const ConvexPolygon& p, Strategy strategy,
                                               std::optional<std::size_t> step_budget = std::nullopt) {
  if (strategy == Strategy::deterministic) return {descend(p, step_budget)};
  return descend_all_paths(p, step_budget);
}

}  // namespace latgeo

#endif  // LATGEO_DESCENT_HPP
