#ifndef LATGEO_INVARIANTS_HPP
#define LATGEO_INVARIANTS_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "latgeo/critical.hpp"
#include "latgeo/errors.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/lattice.hpp"

namespace latgeo {

/// Rational enclosure lo < pi < hi from the first 50 decimals.
inline const Scalar& pi_lower() {
  static const Scalar lo = parse_scalar(
      "314159265358979323846264338327950288419716939937510/"
      "100000000000000000000000000000000000000000000000000");
  return lo;
}

inline const Scalar& pi_upper() {
  static const Scalar hi = canonical(pi_lower() + Scalar(1) / Scalar(mpz_class("1" + std::string(50, '0'))));
  return hi;
}

inline Scalar mahler_product(const ConvexPolygon& p) {
  if (!origin_interior(p)) throw OriginNotInterior("mahler product needs the origin in the interior");
  return canonical(area(p) * area(polar_dual(p)));
}

/// |P - P| / |P|, between 4 (symmetric) and 6 (triangles).
inline Scalar rogers_shephard_ratio(const ConvexPolygon& p) { return canonical(area(difference_body(p)) / area(p)); }

/// Packing density |P| / Delta(P - P).
inline double packing_density(const ConvexPolygon& p, double tol = 1e-6) {
  return area(p).get_d() / critical_lattice_symmetric(difference_body(p), tol).delta;
}

/// Covering constant |P| Delta((P - P)*).
inline double covering_rho(const ConvexPolygon& p, double tol = 1e-6) {
  return area(p).get_d() * critical_lattice_symmetric(polar_dual(difference_body(p)), tol).delta;
}

/// Minkowski quotient |D| / Delta(D) of the difference body D = P - P.
inline double q_symmetrized(const ConvexPolygon& p, double tol = 1e-6) {
  ConvexPolygon d = difference_body(p);
  return area(d).get_d() / critical_lattice_symmetric(d, tol).delta;
}

struct VolumeBoundConstants {
  double proven;       // (pi/8)^n (n+1)/n!
  double conjectured;  // (n+1)/n!
  double mahler;       // (pi/(8e))^n (n+1)^(n+1)/(n!)^2
};

/// Lower-bound constants for the volume of unavoidable bodies in dimension n.
inline VolumeBoundConstants volume_bound_constants(unsigned n) {
  if (n == 0) throw DegenerateInput("dimension must be positive");
  const double c = std::numbers::pi / 8;
  const double nf = std::tgamma(n + 1.0);
  const double conjectured = (n + 1) / nf;
  return {std::pow(c, n) * conjectured, conjectured,
          std::pow(c / std::numbers::e, n) * std::pow(n + 1.0, n + 1.0) / (nf * nf)};
}

enum class Status { pass, fail, not_applicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "not-applicable";
  }
}

struct ReportEntry {
  std::string name;
  std::optional<Scalar> exact;
  std::optional<double> numeric;
  std::string bound;
  Status status = Status::not_applicable;
  std::string note;
};

inline std::string format_double(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", d);
  return buf;
}

inline std::string value_string(const ReportEntry& e) {
  if (e.exact) return to_string(*e.exact);
  if (e.numeric) return format_double(*e.numeric);
  return "-";
}

/// FNV-1a over the canonical vertex list.
inline std::string body_digest(const ConvexPolygon& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_string(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct InvariantReport {
  std::vector<ReportEntry> entries;
  std::string body_digest;

  bool all_pass() const {
    for (const auto& e : entries)
      if (e.status == Status::fail) return false;
    return true;
  }

  const ReportEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

/// pi^2/2 < |D||D*| <= pi^2 for the difference body D, decided against the pi enclosure.
inline ReportEntry santalo_kuperberg_check(const ConvexPolygon& p) {
  Scalar s = mahler_product(difference_body(p));
  const Scalar lo2 = pi_lower() * pi_lower();
  const Scalar hi2 = pi_upper() * pi_upper();
  ReportEntry e{"santalo_kuperberg", s, std::nullopt, "pi^2/2 < |P-P||(P-P)*| <= pi^2", Status::fail, ""};
  if (s > hi2 / 2 && s <= lo2) e.status = Status::pass;
  return e;
}

namespace detail {

inline Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

inline ReportEntry exact_entry(std::string name, const Scalar& value, std::string bound, bool ok,
                               std::string note = "") {
  return ReportEntry{std::move(name), value, std::nullopt, std::move(bound), verdict(ok), std::move(note)};
}

inline ReportEntry numeric_entry(std::string name, double value, std::string bound, bool ok, std::string note = "") {
  return ReportEntry{std::move(name), std::nullopt, value, std::move(bound), verdict(ok), std::move(note)};
}

inline ReportEntry skipped(std::string name, std::string bound, std::string note) {
  return ReportEntry{std::move(name), std::nullopt, std::nullopt, std::move(bound), Status::not_applicable,
                     std::move(note)};
}

inline bool is_parallelogram(const ConvexPolygon& p) {
  return p.size() == 4 && p[0] + p[2] == p[1] + p[3];
}

}  // namespace detail

/// Every applicable bound for P in one report. Numeric checks use `tol`.
inline InvariantReport inequality_battery(const ConvexPolygon& p, double tol = 1e-6) {
  InvariantReport r;
  r.body_digest = body_digest(p);
  const Scalar a = area(p);
  const bool symmetric = is_symmetric(p);
  const bool centred = origin_interior(p);

  std::optional<Scalar> mahler;
  if (centred) {
    mahler = mahler_product(p);
    if (symmetric) {
      r.entries.push_back(detail::exact_entry("mahler_product", *mahler, ">= 8 (symmetric)", *mahler >= 8,
                                              *mahler == 8 ? "equality" : ""));
    } else {
      r.entries.push_back(detail::exact_entry("mahler_product", *mahler, ">= 27/4", *mahler >= Scalar(27, 4),
                                              *mahler == Scalar(27, 4) ? "equality" : ""));
    }
  } else {
    r.entries.push_back(detail::skipped("mahler_product", ">= 27/4", "origin not interior"));
  }

  Scalar rs = rogers_shephard_ratio(p);
  std::string rs_note = rs == 4 ? "equality (symmetric)" : rs == 6 ? "equality (triangle)" : "";
  r.entries.push_back(detail::exact_entry("rogers_shephard_ratio", rs, "4 <= |P-P|/|P| <= 6", rs >= 4 && rs <= 6, rs_note));
  r.entries.push_back(santalo_kuperberg_check(p));

  double delta = packing_density(p, tol);
  r.entries.push_back(detail::numeric_entry("packing_density", delta, "1/3 < delta <= 1", delta > 1.0 / 3 && delta <= 1 + tol));
  double rho = covering_rho(p, tol);
  r.entries.push_back(detail::numeric_entry("covering_rho", rho, "rho >= 3/8", rho + tol >= 3.0 / 8));
  double q = q_symmetrized(p, tol);
  r.entries.push_back(detail::numeric_entry("q_symmetrized", q, "2 < Q(P-P) <= 4", q > 2 && q <= 4 + tol));

  const bool unavoidable = centred && is_unavoidable(p).unavoidable;
  const std::string why = centred ? "polygon is avoidable" : "origin not interior";
  if (unavoidable) {
    r.entries.push_back(detail::exact_entry("unavoidable_area", a, ">= 3/2", a >= Scalar(3, 2),
                                            a == Scalar(3, 2) ? "equality" : ""));
    r.entries.push_back(detail::numeric_entry("rho_chain", 4 * rho, "4 rho <= |P| (Z^2-admissible proxy for Q*)",
                                              4 * rho <= a.get_d() + tol));
    r.entries.push_back(detail::exact_entry("q_star_proxy", a, "4 rho <= Q*(P) <= min(|P|, |P||P*|)",
                                            4 * rho <= a.get_d() + tol && 4 * rho < mahler->get_d(),
                                            "Z^2 admissible for P*, so Q*(P) = |P| Delta(P*) <= |P|"));
    if (symmetric) {
      r.entries.push_back(detail::exact_entry("symmetric_unavoidable_area", a, ">= 2", a >= 2,
                                              a == 2 ? (detail::is_parallelogram(p) ? "equality parallelogram"
                                                                                    : "equality")
                                                     : ""));
    } else {
      r.entries.push_back(detail::skipped("symmetric_unavoidable_area", ">= 2", "polygon is not symmetric"));
    }
  } else {
    r.entries.push_back(detail::skipped("unavoidable_area", ">= 3/2", why));
    r.entries.push_back(detail::skipped("rho_chain", "4 rho <= |P|", why));
    r.entries.push_back(detail::skipped("q_star_proxy", "4 rho <= Q*(P) <= min(|P|, |P||P*|)", why));
    r.entries.push_back(detail::skipped("symmetric_unavoidable_area", ">= 2", why));
  }
  VolumeBoundConstants c = volume_bound_constants(2);
  r.entries.push_back(detail::numeric_entry("volume_bound_constant", c.proven, "< 3/2 <= |P| when unavoidable",
                                            c.proven < c.conjectured && (!unavoidable || a.get_d() > c.proven)));
  return r;
}

}  // namespace latgeo

#endif  // LATGEO_INVARIANTS_HPP
