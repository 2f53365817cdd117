#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace latgeo;
using oracle::poly;
using oracle::q;

namespace {

std::vector<ConvexPolygon> bodies(std::size_t count, std::uint64_t seed0, BodyConstraint c, std::size_t max_vertices = 9) {
  std::vector<ConvexPolygon> out;
  RandomBodySpec spec;
  spec.constraint = c;
  spec.min_vertices = c == BodyConstraint::symmetric ? 4 : 3;
  spec.max_vertices = max_vertices;
  for (std::size_t i = 0; i < count; ++i) {
    spec.seed = seed0 + i;
    out.push_back(random_body(spec));
  }
  return out;
}

const ReportEntry& entry(const InvariantReport& r, const std::string& name) {
  const ReportEntry* e = r.find(name);
  if (!e) throw std::out_of_range(name);
  return *e;
}

}  // namespace

TEST(PiEnclosure, BracketsPi) {
  EXPECT_LT(pi_lower(), pi_upper());
  EXPECT_LT(pi_lower().get_d(), std::numbers::pi + 1e-15);
  EXPECT_GT(pi_upper().get_d(), std::numbers::pi - 1e-15);
  // 355/113 overshoots pi by about 2.7e-7.
  EXPECT_GT(q(355, 113), pi_upper());
  EXPECT_LT(q(333, 106), pi_lower());
}

TEST(Mahler, ExactValues) {
  EXPECT_EQ(mahler_product(oracle::basic_triangle()), q(27, 4));
  EXPECT_EQ(mahler_product(oracle::unit_square()), 8);
  EXPECT_EQ(mahler_product(poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})), 8);
  EXPECT_EQ(mahler_product(difference_body(oracle::basic_triangle())), 9 * area(polar_dual(difference_body(oracle::basic_triangle()))));
  EXPECT_THROW(mahler_product(poly({{1, 1}, {2, 1}, {1, 2}})), OriginNotInterior);
}

TEST(Mahler, LowerBoundsOnRandomBodies) {
  for (const auto& p : bodies(1000, 1, BodyConstraint::origin_interior)) ASSERT_GE(mahler_product(p), q(27, 4)) << to_string(p);
  for (const auto& p : bodies(1000, 5001, BodyConstraint::symmetric)) ASSERT_GE(mahler_product(p), 8) << to_string(p);
}

TEST(Mahler, LinearInvariance) {
  Rng rng(3);
  for (const auto& p : bodies(200, 9001, BodyConstraint::origin_interior)) {
    Scalar a = make_scalar(rng.between(1, 5), 2), b = make_scalar(rng.between(-3, 3), 2);
    Scalar c = make_scalar(rng.between(-3, 3), 3), d = make_scalar(rng.between(4, 8), 3);
    if (a * d == b * c) continue;
    LinearMap2 m(a, b, c, d);
    ASSERT_EQ(mahler_product(apply_linear(p, m)), mahler_product(p));
  }
}

TEST(RogersShephard, RatioSandwich) {
  for (const auto& p : bodies(1000, 20001, BodyConstraint::none)) {
    Scalar r = rogers_shephard_ratio(p);
    ASSERT_GE(r, 4);
    ASSERT_LE(r, 6);
  }
  RandomBodySpec spec;
  spec.max_vertices = 3;
  for (std::uint64_t s = 1; s <= 100; ++s) {
    spec.seed = s;
    ASSERT_EQ(rogers_shephard_ratio(random_body(spec)), 6);
  }
  for (const auto& p : bodies(100, 30001, BodyConstraint::symmetric)) ASSERT_EQ(rogers_shephard_ratio(p), 4);
}

TEST(SantaloKuperberg, DifferenceBodies) {
  EXPECT_EQ(santalo_kuperberg_check(oracle::basic_triangle()).status, Status::pass);
  EXPECT_EQ(santalo_kuperberg_check(oracle::unit_square()).status, Status::pass);
  for (const auto& p : bodies(200, 40001, BodyConstraint::none))
    ASSERT_EQ(santalo_kuperberg_check(p).status, Status::pass) << to_string(p);
  // The 96-gon is nearly a disc, so its difference body sits close to pi^2.
  Scalar s = mahler_product(difference_body(disc_polygon(96)));
  EXPECT_NEAR(s.get_d(), std::numbers::pi * std::numbers::pi, 0.05);
}

TEST(CoveringRho, TrianglesGiveThreeEighths) {
  EXPECT_NEAR(covering_rho(oracle::basic_triangle()), 0.375, 1e-3);
  // Triangle with vertices at edge midpoints of the basic triangle.
  ConvexPolygon mid = poly({{q(1, 2), q(1, 2)}, {q(-1, 2), 0}, {0, q(-1, 2)}});
  EXPECT_NEAR(covering_rho(mid), 0.375, 1e-3);
  for (const auto& p : bodies(40, 50001, BodyConstraint::none, 3)) ASSERT_NEAR(covering_rho(p), 0.375, 1e-3);
}

TEST(CoveringRho, LowerBoundOnRandomBodies) {
  for (const auto& p : bodies(200, 60001, BodyConstraint::none)) ASSERT_GE(covering_rho(p) + 1e-4, 0.375) << to_string(p);
}

TEST(PackingDensity, Examples) {
  EXPECT_NEAR(packing_density(oracle::unit_square()), 1.0, 1e-6);
  EXPECT_NEAR(packing_density(oracle::basic_triangle()), 2.0 / 3, 1e-6);
  EXPECT_NEAR(packing_density(disc_polygon(96)), 0.9069, 2e-3);
  EXPECT_NEAR(q_symmetrized(oracle::unit_square()), 4.0, 1e-6);
  EXPECT_NEAR(q_symmetrized(oracle::basic_triangle()), 4.0, 1e-6);
}

TEST(VolumeBoundConstants, Values) {
  VolumeBoundConstants two = volume_bound_constants(2);
  EXPECT_NEAR(two.conjectured, 1.5, 1e-12);
  EXPECT_NEAR(two.proven, 1.5 * std::pow(std::numbers::pi / 8, 2), 1e-12);
  for (unsigned n = 1; n <= 10; ++n) {
    VolumeBoundConstants c = volume_bound_constants(n);
    EXPECT_LT(c.proven, c.conjectured);
    EXPECT_GT(c.mahler, 0);
  }
  EXPECT_THROW(volume_bound_constants(0), DegenerateInput);
}

TEST(InequalityBattery, BasicTriangle) {
  InvariantReport r = inequality_battery(oracle::basic_triangle());
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.entries.size(), 11u);
  EXPECT_EQ(*entry(r, "mahler_product").exact, q(27, 4));
  EXPECT_EQ(entry(r, "mahler_product").note, "equality");
  EXPECT_EQ(entry(r, "rogers_shephard_ratio").note, "equality (triangle)");
  EXPECT_EQ(entry(r, "unavoidable_area").note, "equality");
  EXPECT_EQ(entry(r, "symmetric_unavoidable_area").status, Status::not_applicable);
  EXPECT_EQ(r.body_digest.size(), 16u);
}

TEST(InequalityBattery, SymmetricEqualityParallelogram) {
  InvariantReport r = inequality_battery(poly({{1, 0}, {1, 1}, {-1, 0}, {-1, -1}}));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(*entry(r, "symmetric_unavoidable_area").exact, 2);
  EXPECT_EQ(entry(r, "symmetric_unavoidable_area").note, "equality parallelogram");
  EXPECT_EQ(entry(r, "mahler_product").note, "equality");
}

TEST(InequalityBattery, NotApplicableEntries) {
  InvariantReport shrunk = inequality_battery(scale(oracle::basic_triangle(), q(9, 10)));
  EXPECT_EQ(entry(shrunk, "unavoidable_area").status, Status::not_applicable);
  EXPECT_EQ(entry(shrunk, "rho_chain").note, "polygon is avoidable");
  EXPECT_EQ(entry(shrunk, "mahler_product").status, Status::pass);
  InvariantReport off = inequality_battery(poly({{1, 1}, {3, 1}, {1, 3}}));
  EXPECT_EQ(entry(off, "mahler_product").status, Status::not_applicable);
  EXPECT_EQ(entry(off, "unavoidable_area").note, "origin not interior");
  EXPECT_TRUE(off.all_pass());
}

TEST(InequalityBattery, RandomUnavoidableBodiesPass) {
  for (const auto& p : bodies(60, 70001, BodyConstraint::unavoidable)) {
    InvariantReport r = inequality_battery(p);
    for (const auto& e : r.entries) ASSERT_NE(e.status, Status::fail) << to_string(p) << " " << e.name << " " << value_string(e);
    ASSERT_GE(*entry(r, "unavoidable_area").exact, q(3, 2));
    ASSERT_LE(*entry(r, "rho_chain").numeric, area(p).get_d() + 1e-6);
  }
}

TEST(InequalityBattery, DigestIsStable) {
  EXPECT_EQ(body_digest(oracle::basic_triangle()), body_digest(poly({{0, 1}, {-1, -1}, {1, 0}})));
  EXPECT_NE(body_digest(oracle::basic_triangle()), body_digest(oracle::unit_square()));
}
