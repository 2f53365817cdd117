// Acceptance suite: one PASS/FAIL line per criterion. Run with no arguments
// for all criteria, or `--criterion N` for one. Exit code 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace latgeo;
using oracle::poly;
using oracle::q;

namespace {

constexpr double kCriticalTol = 1e-6;
constexpr double kDiscDeltaTol = 1e-3;
constexpr double kDiscDensityTol = 2e-3;
constexpr double kRhoBoundTol = 1e-4;
constexpr double kRhoTriangleTol = 1e-3;
constexpr double kHexagonalDelta = 0.8660;
constexpr double kDiscDensity = 0.9069;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> info;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<ConvexPolygon> random_bodies(std::size_t count, std::uint64_t seed0, BodyConstraint c,
                                         std::size_t max_vertices = 9, std::int64_t max_den = 16) {
  std::vector<ConvexPolygon> out;
  RandomBodySpec spec;
  spec.constraint = c;
  spec.min_vertices = c == BodyConstraint::symmetric ? 4 : 3;
  spec.max_vertices = max_vertices;
  spec.max_denominator = max_den;
  for (std::size_t i = 0; i < count; ++i) {
    spec.seed = seed0 + i;
    out.push_back(random_body(spec));
  }
  return out;
}

std::vector<ConvexPolygon> battery_bodies() { return random_bodies(200, 1, BodyConstraint::unavoidable, 12, 64); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome equality_case() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<LinearMap2> images{LinearMap2::identity(),          LinearMap2::unimodular(0, -1, 1, 0),
                                 LinearMap2::unimodular(1, 1, 0, 1), LinearMap2::unimodular(1, 0, 1, 1),
                                 LinearMap2::unimodular(0, 1, 1, 0), LinearMap2::unimodular(-1, 0, 0, 1),
                                 LinearMap2::unimodular(1, -1, 0, 1)};
  for (const auto& m : images) {
    ConvexPolygon t = apply_linear(oracle::basic_triangle(), m);
    DescentCertificate c = descend(t);
    o.require(c.steps.empty(), "descent took steps on " + to_string(t));
    o.require(c.terminal_area == q(3, 2), "terminal area " + to_string(c.terminal_area) + " on " + to_string(t));
    o.require(c.terminal == t, "terminal differs from " + to_string(t));
  }
  double s = seconds_since(t0);
  o.require(s < 1, "took " + std::to_string(s) + " s");
  return o;
}

Outcome descent_battery() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t steps = 0, minimal = 0;
  for (const auto& p : battery_bodies()) {
    std::optional<DescentCertificate> found;
    try {
      found = descend(p);
    } catch (const Error& e) {
      o.require(false, to_string(p) + ": " + e.what());
      continue;
    }
    const DescentCertificate& c = *found;
    Scalar prev = area(p);
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      o.require(c.steps[i].start_area == prev && c.steps[i].end_area <= prev, "area not monotone on " + to_string(p));
      o.require(c.types[i + 1] < c.types[i], "type not decreasing on " + to_string(p));
      o.require(oracle::shoelace(c.steps[i].end.vertices()) == c.steps[i].end_area, "end area mismatch on " + to_string(p));
      prev = c.steps[i].end_area;
    }
    for (const auto& v : c.terminal.vertices()) o.require(is_integer(v), "non-integer terminal for " + to_string(p));
    o.require(oracle::brute_unavoidable(c.terminal), "avoidable terminal for " + to_string(p));
    o.require(c.terminal_area >= q(3, 2), "terminal area below 3/2 for " + to_string(p));
    if (c.terminal_area == q(3, 2)) o.require(is_basic_triangle(c.terminal), "area 3/2 but not basic: " + to_string(p));
    steps += c.steps.size();
    minimal += c.is_minimal;
  }
  double s = seconds_since(t0);
  o.require(s < 60, "took " + std::to_string(s) + " s");
  o.info.push_back("200 bodies, " + std::to_string(steps) + " steps, " + std::to_string(minimal) + " minimal terminals");
  return o;
}

Outcome worked_step() {
  Outcome o;
  ConvexPolygon p = oracle::worked_triangle();
  std::size_t i = 0;
  while (!(p[i] == Point2{q(3, 2), 0})) ++i;
  DeformationStep s = deformation_step(p, make_deformation(p, i, {-3, 2}));
  std::string cov = s.event_covectors.empty() ? "none" : to_string(s.event_covectors.front());
  o.require(s.T == q(1, 10), "T = " + to_string(s.T) + ", expected 1/10");
  o.require(s.event_covectors == std::vector<IntVec2>{{1, -1}}, "event covector " + cov + ", expected (1,-1)");
  o.require(s.end == poly({{q(6, 5), q(1, 5)}, {0, 1}, {-1, -1}}),
            "end " + to_string(s.end) + ", expected [(6/5,1/5),(0,1),(-1,-1)]");
  o.require(s.start_area == 2 && s.end_area == q(8, 5),
            "areas " + to_string(s.start_area) + " -> " + to_string(s.end_area) + ", expected 2 -> 8/5");
  oracle::StepVerdict computed = oracle::check_step(s);
  o.require(computed.ok, "oracle rejects the computed step: " + computed.why);
  o.info.push_back("computed: T=" + to_string(s.T) + " covector " + cov + " end " + to_string(s.end) + " areas " +
                   to_string(s.start_area) + " -> " + to_string(s.end_area) + "; oracle " +
                   (computed.ok ? "confirms" : "rejects: " + computed.why));
  DeformationStep literal = s;
  literal.T = q(1, 10);
  literal.event_covectors = {{1, -1}};
  literal.end = poly({{q(6, 5), q(1, 5)}, {0, 1}, {-1, -1}});
  literal.end_area = q(8, 5);
  oracle::StepVerdict expected = oracle::check_step(literal);
  o.info.push_back(std::string("expected values under the oracle: ") + (expected.ok ? "accepted" : "rejected: " + expected.why));
  return o;
}

Outcome mahler_values() {
  Outcome o;
  o.require(mahler_product(oracle::basic_triangle()) == q(27, 4), "basic triangle product");
  o.require(mahler_product(oracle::unit_square()) == 8, "square product");
  Scalar lo_any = 100, lo_sym = 100;
  for (const auto& p : random_bodies(1000, 1, BodyConstraint::origin_interior)) {
    Scalar m = mahler_product(p);
    o.require(m >= q(27, 4), "product below 27/4 on " + to_string(p));
    lo_any = std::min<Scalar>(lo_any, m);
  }
  for (const auto& p : random_bodies(1000, 100001, BodyConstraint::symmetric)) {
    Scalar m = mahler_product(p);
    o.require(m >= 8, "product below 8 on " + to_string(p));
    lo_sym = std::min<Scalar>(lo_sym, m);
  }
  o.info.push_back("least products: " + format_double(lo_any.get_d()) + " (any), " + format_double(lo_sym.get_d()) +
                   " (symmetric)");
  return o;
}

Outcome rogers_shephard() {
  Outcome o;
  for (const auto& p : random_bodies(1000, 200001, BodyConstraint::none)) {
    Scalar r = rogers_shephard_ratio(p);
    o.require(r >= 4 && r <= 6, "ratio " + to_string(r) + " on " + to_string(p));
  }
  for (const auto& p : random_bodies(100, 300001, BodyConstraint::none, 3))
    o.require(rogers_shephard_ratio(p) == 6, "triangle ratio not 6 on " + to_string(p));
  for (const auto& p : random_bodies(100, 400001, BodyConstraint::symmetric))
    o.require(rogers_shephard_ratio(p) == 4, "symmetric ratio not 4 on " + to_string(p));
  return o;
}

Outcome systolic() {
  Outcome o;
  SystolicReport tri = systolic_check(FlatTorusMetric(poly({{1, 1}, {-2, 1}, {1, -2}})));
  o.require(tri.ht_area_times_pi == q(3, 2) && tri.systole == 1 && tri.general_equality, "triangle ball equality");
  SystolicReport sq = systolic_check(FlatTorusMetric(oracle::unit_square()));
  o.require(sq.ht_area_times_pi == 2 && sq.systole == 1 && sq.reversible_equality, "square ball equality");
  for (const auto& b : random_bodies(500, 500001, BodyConstraint::origin_interior)) {
    SystolicReport r = systolic_check(FlatTorusMetric(b));
    o.require(3 * r.systole * r.systole <= 2 * r.ht_area_times_pi, "3 sys^2 > 2q on " + to_string(b));
  }
  for (const auto& b : random_bodies(500, 600001, BodyConstraint::symmetric)) {
    SystolicReport r = systolic_check(FlatTorusMetric(b));
    o.require(2 * r.systole * r.systole <= r.ht_area_times_pi, "2 sys^2 > q on " + to_string(b));
  }
  return o;
}

Outcome critical_numerics() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  CriticalLattice sq = critical_lattice_symmetric(oracle::unit_square());
  o.require(std::fabs(sq.delta - 1) <= kCriticalTol, "Delta(square) = " + format_double(sq.delta));
  ConvexPolygon disc = disc_polygon(96);
  CriticalLattice d = critical_lattice_symmetric(disc);
  o.require(std::fabs(d.delta - kHexagonalDelta) <= kDiscDeltaTol, "Delta(disc) = " + format_double(d.delta));
  o.require(is_admissible(disc, d.lattice), "disc lattice not admissible");
  double density = packing_density(disc);
  o.require(std::fabs(density - kDiscDensity) <= kDiscDensityTol, "delta(disc) = " + format_double(density));
  double qd = q_symmetrized(oracle::unit_square());
  o.require(std::fabs(qd - 4) <= kCriticalTol, "Q(square - square) = " + format_double(qd));
  double s = seconds_since(t0);
  o.require(s < 30, "took " + std::to_string(s) + " s");
  o.info.push_back("Delta(disc) = " + format_double(d.delta) + ", delta(disc) = " + format_double(density));
  return o;
}

Outcome rho_bound() {
  Outcome o;
  double least = 1;
  for (const auto& p : random_bodies(200, 700001, BodyConstraint::none)) {
    double rho = covering_rho(p);
    o.require(3.0 / 8 <= rho + kRhoBoundTol, "rho = " + format_double(rho) + " on " + to_string(p));
    least = std::min(least, rho);
  }
  double mid = covering_rho(poly({{q(1, 2), q(1, 2)}, {q(-1, 2), 0}, {0, q(-1, 2)}}));
  o.require(std::fabs(mid - 3.0 / 8) <= kRhoTriangleTol, "midpoint triangle rho = " + format_double(mid));
  o.info.push_back("least rho " + format_double(least) + ", midpoint triangle " + format_double(mid));
  return o;
}

Outcome simplices() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 4; ++n) {
    SimplexN s = basic_simplex(n);
    Scalar expected = Scalar(static_cast<long>(n + 1)) / factorial(static_cast<unsigned>(n));
    o.require(simplex_volume(s) == expected, "volume in dimension " + std::to_string(n));
    o.require(unavoidable_simplex(s), "basic simplex avoidable in dimension " + std::to_string(n));
    o.require(!unavoidable_simplex(scale(s, q(9, 10))), "shrunk simplex unavoidable in dimension " + std::to_string(n));
  }
  double s = seconds_since(t0);
  o.require(s < 10, "took " + std::to_string(s) + " s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t unavoidable = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    BodyConstraint c = seed % 3 == 0 ? BodyConstraint::unavoidable
                       : seed % 3 == 1 ? BodyConstraint::origin_interior
                                       : BodyConstraint::none;
    RandomBodySpec spec;
    spec.seed = 800000 + seed;
    spec.constraint = c;
    ConvexPolygon p = random_body(spec);
    bool fast = is_unavoidable(p).unavoidable;
    o.require(fast == oracle::brute_unavoidable(p), "disagreement on " + to_string(p));
    unavoidable += fast;
  }
  o.info.push_back(std::to_string(unavoidable) + " of 500 unavoidable");
  return o;
}

Outcome volume_constants() {
  Outcome o;
  for (unsigned n = 1; n <= 10; ++n) {
    double conjectured = (n + 1) / std::tgamma(n + 1.0);
    o.require(volume_bound_constants(n).proven < conjectured, "constant not below (n+1)/n! at n = " + std::to_string(n));
  }
  const double c2 = volume_bound_constants(2).proven;
  std::vector<ConvexPolygon> bodies = battery_bodies();
  for (const auto& p : random_bodies(300, 900001, BodyConstraint::unavoidable)) bodies.push_back(p);
  bodies.push_back(oracle::basic_triangle());
  bodies.push_back(oracle::worked_triangle());
  bodies.push_back(oracle::unit_square());
  for (const auto& p : bodies) o.require(area(p).get_d() > c2, "area not above the constant on " + to_string(p));
  o.info.push_back("constant(2) = " + format_double(c2) + " over " + std::to_string(bodies.size()) + " bodies");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "equality case: basic triangle and unimodular images descend in zero steps", equality_case},
      {2, "descent battery: 200 random unavoidable polygons", descent_battery},
      {3, "worked step: T = 1/10, covector (1,-1), end (6/5,1/5),(0,1),(-1,-1), areas 2 -> 8/5", worked_step},
      {4, "Mahler products: 27/4, 8 and lower bounds on random bodies", mahler_values},
      {5, "Rogers-Shephard ratio in [4,6], 6 on triangles, 4 on symmetric bodies", rogers_shephard},
      {6, "systolic equality cases and inequalities on random balls", systolic},
      {7, "critical lattice numerics for the square and the 96-gon", critical_numerics},
      {8, "covering rho at least 3/8, about 3/8 on triangles", rho_bound},
      {9, "basic simplices: volume (n+1)/n!, unavoidable, shrunk copies avoidable", simplices},
      {10, "is_unavoidable agrees with the line-by-line oracle", oracle_equivalence},
      {11, "volume bound constant below (n+1)/n! and below every unavoidable area", volume_constants},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) only = std::atoi(argv[2]);
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    ran = true;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && o.pass;
    std::printf("[%s] criterion %d: %s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.pass ? "" : " -- ",
                o.detail.c_str());
    for (const auto& line : o.info) std::printf("       %s\n", line.c_str());
  }
  if (!ran) {
    std::fprintf(stderr, "unknown criterion\n");
    return 2;
  }
  return all_pass ? 0 : 1;
}
