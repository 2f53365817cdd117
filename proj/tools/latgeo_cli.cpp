#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "latgeo/latgeo.hpp"

using namespace latgeo;

namespace {

enum class Format { text, structured };

struct Common {
  std::string input;
  std::string output;
  std::string format = "text";
  Format fmt() const { return format == "structured" ? Format::structured : Format::text; }
};

// A failed mathematical check, reported with exit code 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::vector<Point2>>& builtin_bodies() {
  static const std::map<std::string, std::vector<Point2>> bodies = {
      {"basic_triangle", {{1, 0}, {0, 1}, {-1, -1}}},
      {"shrunk_triangle", {{make_scalar(9, 10), 0}, {0, make_scalar(9, 10)}, {make_scalar(-9, 10), make_scalar(-9, 10)}}},
      {"worked_triangle", {{make_scalar(3, 2), 0}, {0, 1}, {-1, -1}}},
      {"unit_square", {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}},
      {"dual_basic_triangle", {{1, 1}, {-2, 1}, {1, -2}}},
      {"cross_polytope", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}},
  };
  return bodies;
}

BodyFile load(const std::string& input) {
  if (input.empty()) throw ParseError("--input is required");
  auto it = builtin_bodies().find(input);
  if (it != builtin_bodies().end()) return BodyFile{ConvexPolygon::from_vertices(it->second), std::nullopt};
  if (input == "disc96") return BodyFile{disc_polygon(96), std::nullopt};
  return read_body_file(input);
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(c.output, text);
  }
}

void emit(const Common& c, const Json& j, const std::string& text) {
  emit(c, c.fmt() == Format::structured ? j.dump(2) + "\n" : text);
}

double parse_tol(const std::string& s) { return parse_scalar(s).get_d(); }

std::string lines(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + ": " + v + "\n";
  return out;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--input", c.input, "body file or built-in name");
  app->add_option("--output", c.output, "output file (default stdout)");
  app->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
}

std::string describe(const AvoidanceCertificate& cert) {
  std::string out = "verdict: " + std::string(cert.unavoidable ? "unavoidable" : "avoidable") + "\n";
  if (cert.witness) out += "witness: " + to_string(cert.witness->w) + "\n";
  return out;
}

std::string describe(const DescentCertificate& c) {
  std::string out;
  for (const auto& l : c.strategy_log) out += l + "\n";
  out += "steps: " + std::to_string(c.steps.size()) + "\n";
  out += "terminal: " + to_string(c.terminal) + "\n";
  out += "terminal_area: " + to_string(c.terminal_area) + "\n";
  out += "is_minimal: " + std::string(c.is_minimal ? "true" : "false") + "\n";
  return out;
}

std::string describe(const InvariantReport& r) {
  std::string out = "body_digest: " + r.body_digest + "\n";
  for (const auto& e : r.entries) {
    out += e.name + ": " + value_string(e) + " [" + e.bound + "] " + to_string(e.status);
    if (!e.note.empty()) out += " (" + e.note + ")";
    out += "\n";
  }
  return out;
}

std::string describe(const SystolicReport& r) {
  Json j = to_json(r);
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  return out;
}

struct BatteryResult {
  std::vector<std::string> failures;
  std::size_t descents = 0;
  std::size_t minimal = 0;
};

// One randomized instance: an unavoidable body through descent and the exact
// invariants, and a symmetric ball through the systolic checks.
BatteryResult battery_case(std::uint64_t seed, std::int64_t max_den) {
  BatteryResult r;
  auto fail = [&](const std::string& what) { r.failures.push_back("seed " + std::to_string(seed) + ": " + what); };
  RandomBodySpec spec;
  spec.seed = seed;
  spec.max_vertices = 12;
  spec.max_denominator = max_den;
  spec.constraint = BodyConstraint::unavoidable;
  ConvexPolygon p = random_body(spec);
  DescentCertificate c = descend(p);
  ++r.descents;
  r.minimal += c.terminal_area == Scalar(3, 2);
  if (c.terminal_area < Scalar(3, 2)) fail("terminal area below 3/2");
  if (area(p) < Scalar(3, 2)) fail("unavoidable area below 3/2");
  if (mahler_product(p) < Scalar(27, 4)) fail("mahler product below 27/4");
  Scalar rs = rogers_shephard_ratio(p);
  if (rs < 4 || rs > 6) fail("difference body ratio outside [4, 6]");
  FlatTorusMetric general(p);
  if (!systolic_check(general).general_holds) fail("3 sys^2 <= 2q violated");

  spec.constraint = BodyConstraint::symmetric;
  spec.min_vertices = 4;
  spec.max_denominator = 8;
  ConvexPolygon ball = random_body(spec);
  if (mahler_product(ball) < 8) fail("symmetric mahler product below 8");
  SystolicReport sr = systolic_check(FlatTorusMetric(ball));
  if (!sr.holds()) fail("systolic inequality violated on a symmetric ball");
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact lattice geometry of unavoidable polygons"};
  app.require_subcommand(1);
  Common c;

  auto* dual = app.add_subcommand("dual", "polar dual of a polygon");
  add_common(dual, c);
  dual->callback([&] { emit(c, serialize_body(polar_dual(load(c.input).polygon()))); });

  auto* check = app.add_subcommand("check-unavoidable", "does every integer line meet the body");
  add_common(check, c);
  check->callback([&] {
    AvoidanceCertificate cert = is_unavoidable(load(c.input).polygon());
    emit(c, to_json(cert), describe(cert));
  });

  std::string strategy = "deterministic";
  std::optional<std::size_t> budget;
  auto* desc = app.add_subcommand("descend", "area-decreasing deformation to an integer polygon");
  add_common(desc, c);
  desc->add_option("--strategy", strategy)->check(CLI::IsMember({"deterministic", "all-paths"}));
  desc->add_option("--step-budget", budget);
  desc->callback([&] {
    ConvexPolygon p = load(c.input).polygon();
    auto certs = descend(p, strategy == "all-paths" ? Strategy::all_paths : Strategy::deterministic, budget);
    if (certs.size() == 1) {
      emit(c, to_json(certs.front()), describe(certs.front()));
      return;
    }
    Json arr = Json::array();
    std::string text;
    for (std::size_t i = 0; i < certs.size(); ++i) {
      arr.push_back(to_json(certs[i]));
      text += "path " + std::to_string(i) + "\n" + describe(certs[i]);
    }
    emit(c, arr, text);
  });

  std::string tol = "1/1000000";
  auto* inv = app.add_subcommand("invariants", "affine invariants checked against their bounds");
  add_common(inv, c);
  inv->add_option("--tol", tol);
  inv->callback([&] {
    InvariantReport r = inequality_battery(load(c.input).polygon(), parse_tol(tol));
    emit(c, to_json(r), describe(r));
    if (!r.all_pass()) throw CheckFailed("an invariant bound failed");
  });

  auto* crit = app.add_subcommand("critical-lattice", "admissible lattice of least determinant");
  add_common(crit, c);
  crit->add_option("--tol", tol);
  crit->callback([&] {
    CriticalLattice cl = critical_lattice_symmetric(load(c.input).polygon(), parse_tol(tol));
    emit(c, to_json(cl),
         lines({{"b1", to_string(cl.lattice.b1())}, {"b2", to_string(cl.lattice.b2())}, {"det", format_double(cl.delta)}}));
  });

  auto* torus = app.add_subcommand("torus", "flat Finsler torus with the body as unit ball");
  torus->require_subcommand(1);
  auto metric = [&] {
    BodyFile b = load(c.input);
    return FlatTorusMetric(b.polygon(), b.lattice.value_or(Lattice2::integer()));
  };
  auto* sys = torus->add_subcommand("systole", "least length of a closed geodesic");
  add_common(sys, c);
  sys->callback([&] {
    Scalar s = systole(metric());
    emit(c, Json{{"systole", to_string(s)}}, lines({{"systole", to_string(s)}}));
  });
  auto* ht = torus->add_subcommand("ht-area", "Holmes-Thompson area q/pi");
  add_common(ht, c);
  ht->callback([&] {
    Scalar q = ht_area(metric());
    std::string area_text = format_double(q.get_d() / std::numbers::pi);
    emit(c, Json{{"ht_area_times_pi", to_string(q)}, {"ht_area", area_text}},
         lines({{"ht_area_times_pi", to_string(q)}, {"ht_area", area_text}}));
  });
  auto* bh = torus->add_subcommand("bh-area", "Busemann-Hausdorff area q' pi");
  add_common(bh, c);
  bh->callback([&] {
    Scalar q = bh_area(metric());
    std::string area_text = format_double(q.get_d() * std::numbers::pi);
    emit(c, Json{{"bh_area_over_pi", to_string(q)}, {"bh_area", area_text}},
         lines({{"bh_area_over_pi", to_string(q)}, {"bh_area", area_text}}));
  });
  auto* tcheck = torus->add_subcommand("check", "systolic inequalities, decided exactly");
  add_common(tcheck, c);
  tcheck->callback([&] {
    SystolicReport r = systolic_check(metric());
    emit(c, to_json(r), describe(r));
    if (!r.holds()) throw CheckFailed("systolic inequality violated");
  });
  auto* zoll = torus->add_subcommand("zoll", "are all geodesics periodic");
  add_common(zoll, c);
  zoll->callback([&] {
    bool z = zoll_check(metric());
    emit(c, Json{{"zoll", z}}, lines({{"zoll", z ? "true" : "false"}}));
  });

  auto* reduce = app.add_subcommand("reduce", "reduced basis of Z^2 for a symmetric ball");
  add_common(reduce, c);
  reduce->callback([&] {
    ReducedBasis2 r = reduced_basis(load(c.input).polygon());
    Json j{{"a1", to_json(r.transform.column(0))},
           {"a2", to_json(r.transform.column(1))},
           {"lambda1", to_string(r.a1)},
           {"lambda2", to_string(r.a2)},
           {"product", to_string(r.product)}};
    emit(c, j,
         lines({{"a1", to_string(r.transform.column(0))},
                {"a2", to_string(r.transform.column(1))},
                {"lambda1", to_string(r.a1)},
                {"lambda2", to_string(r.a2)},
                {"product", to_string(r.product)}}));
    if (r.product > 4) throw CheckFailed("lambda1 lambda2 area exceeds 4");
  });

  auto* mink = app.add_subcommand("minkowski", "nonzero integer point of a symmetric body");
  add_common(mink, c);
  mink->callback([&] {
    ConvexPolygon p = load(c.input).polygon();
    auto z = minkowski_witness(p);
    std::string text = z ? to_string(*z) : "none";
    emit(c, Json{{"witness", z ? to_json(*z) : Json(nullptr)}, {"area", to_string(area(p))}},
         lines({{"witness", text}, {"area", to_string(area(p))}}));
    if (!z && area(p) >= 4) throw CheckFailed("symmetric body of area >= 4 without a nonzero integer point");
  });

  std::size_t dim = 2;
  auto* simplex = app.add_subcommand("simplex", "simplices in dimension n");
  simplex->require_subcommand(1);
  auto* sbasic = simplex->add_subcommand("basic", "the basic simplex");
  add_common(sbasic, c);
  sbasic->add_option("--dim", dim)->check(CLI::Range(1, 12));
  sbasic->callback([&] { emit(c, serialize_body(BodyFile{basic_simplex(dim), std::nullopt})); });
  auto* sdual = simplex->add_subcommand("dual", "polar dual simplex");
  add_common(sdual, c);
  sdual->callback([&] { emit(c, serialize_body(BodyFile{dual_simplex(load(c.input).simplex()), std::nullopt})); });
  auto* sverify = simplex->add_subcommand("verify", "volume and unavoidability of a simplex");
  add_common(sverify, c);
  sverify->callback([&] {
    SimplexN s = load(c.input).simplex();
    bool u = unavoidable_simplex(s);
    Scalar v = simplex_volume(s);
    Scalar bound = canonical(Scalar(static_cast<long>(s.dim() + 1)) / factorial(static_cast<unsigned>(s.dim())));
    emit(c, Json{{"volume", to_string(v)}, {"basic_volume", to_string(bound)}, {"unavoidable", u}},
         lines({{"volume", to_string(v)}, {"basic_volume", to_string(bound)}, {"unavoidable", u ? "true" : "false"}}));
  });

  RandomBodySpec spec;
  std::string constraint = "none";
  auto* rnd = app.add_subcommand("random", "deterministic random polygon");
  rnd->add_option("--output", c.output);
  rnd->add_option("--seed", spec.seed);
  rnd->add_option("--constraint", constraint)
      ->check(CLI::IsMember({"none", "symmetric", "unavoidable", "origin-interior"}));
  rnd->add_option("--min-vertices", spec.min_vertices);
  rnd->add_option("--max-vertices", spec.max_vertices);
  rnd->add_option("--max-denominator", spec.max_denominator);
  rnd->callback([&] {
    spec.constraint = parse_constraint(constraint);
    emit(c, serialize_body(random_body(spec)));
  });

  int max_coeff = 4;
  bool trace = false;
  std::vector<double> bounds;
  auto* render = app.add_subcommand("render", "SVG picture of a body and integer lines");
  add_common(render, c);
  render->add_option("--max-coeff", max_coeff)->check(CLI::Range(0, 50));
  render->add_flag("--trace", trace, "overlay the deterministic descent");
  render->add_option("--bounds", bounds, "xmin xmax ymin ymax")->expected(4);
  render->callback([&] {
    Scene scene{load(c.input).polygon(), max_coeff, std::nullopt, {}};
    if (bounds.size() == 4) scene.bounds = PlotBounds{bounds[0], bounds[1], bounds[2], bounds[3]};
    if (trace) scene.trace = descend(scene.body);
    emit(c, render_svg(scene));
  });

  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  std::int64_t max_den = 64;
  auto* bat = app.add_subcommand("battery", "randomized run of every exact inequality");
  bat->add_option("--output", c.output);
  bat->add_option("--format", c.format)->check(CLI::IsMember({"text", "structured"}));
  bat->add_option("--count", count);
  bat->add_option("--seed", seed);
  bat->add_option("--threads", threads, "worker threads (default: hardware)");
  bat->add_option("--max-denominator", max_den);
  bat->callback([&] {
    std::vector<BatteryResult> results(count);
    std::size_t workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(count, 1));
    std::vector<std::thread> pool;
    std::vector<std::string> errors(count);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) {
          try {
            results[i] = battery_case(seed + i, max_den);
          } catch (const std::exception& e) {
            errors[i] = "seed " + std::to_string(seed + i) + ": " + e.what();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    std::vector<std::string> failures;
    std::size_t minimal = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!errors[i].empty()) failures.push_back(errors[i]);
      failures.insert(failures.end(), results[i].failures.begin(), results[i].failures.end());
      minimal += results[i].minimal;
    }
    Json j{{"count", count}, {"seed", seed}, {"minimal_terminals", minimal}, {"failures", failures},
           {"pass", failures.empty()}};
    std::string text = lines({{"count", std::to_string(count)},
                              {"seed", std::to_string(seed)},
                              {"minimal_terminals", std::to_string(minimal)},
                              {"failures", std::to_string(failures.size())},
                              {"verdict", failures.empty() ? "pass" : "fail"}});
    for (const auto& f : failures) text += "failure: " + f + "\n";
    emit(c, j, text);
    if (!failures.empty()) throw CheckFailed("battery found violations");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const StepBudgetExceeded& e) {
    std::cerr << "step budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const EnumerationFailed& e) {
    std::cerr << "enumeration failed: " << e.what() << "\n";
    return 1;
  } catch (const ToleranceNotReached& e) {
    std::cerr << "tolerance not reached: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
