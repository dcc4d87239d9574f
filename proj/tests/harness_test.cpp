#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "holes2d/config_io.hpp"
#include "holes2d/csv.hpp"
#include "holes2d/orderfit.hpp"
#include "holes2d/quadrature.hpp"
#include "holes2d/validation.hpp"

using namespace holes2d;

TEST_SUITE("harness") {

TEST_CASE("default configuration is stable under reparsing") {
  const LoadedConfig a = default_config();
  const LoadedConfig b = parse_config(a.canonical);
  CHECK(a.canonical == b.canonical);
  CHECK(a.hash == b.hash);
  CHECK(a.config.M == b.config.M);
  CHECK(a.config.p1 == b.config.p1);
  // the compiled data functions agree pointwise
  for (double t : {0.0, 1.1, 3.7}) {
    const Vec2 x = a.config.hole2.point(t);
    CHECK(a.config.f2(t, x) == doctest::Approx(b.config.f2(t, x)));
    CHECK(a.config.g(t, a.config.outer.point(t)) ==
          doctest::Approx(b.config.g(t, b.config.outer.point(t))));
  }
  CHECK(a.points.macro.size() == 3);
  CHECK(a.points.micro.size() == 2);
  CHECK(a.points.layer.size() == 1);
}

TEST_CASE("whitespace does not change the canonical form or hash") {
  const LoadedConfig a = default_config();
  std::string spaced;
  for (char ch : a.canonical) {
    spaced += ch;
    if (ch == ',') spaced += "\n   ";
  }
  const LoadedConfig b = parse_config(spaced);
  CHECK(a.canonical == b.canonical);
  CHECK(a.hash == b.hash);
  CHECK(fnv1a("") == 14695981039346656037ull);
  CHECK(fnv1a("a") != fnv1a("b"));
}

TEST_CASE("config files round-trip through disk") {
  const LoadedConfig a = default_config();
  const std::string path = "harness_roundtrip.json";
  {
    std::ofstream f(path);
    f << a.canonical;
  }
  const LoadedConfig b = load_config(path);
  std::remove(path.c_str());
  CHECK(b.hash == a.hash);
}

TEST_CASE("malformed configurations are rejected with context") {
  CHECK_THROWS(parse_config("{"));
  CHECK_THROWS(parse_config(R"({"M": 64})"));  // curves missing
  const LoadedConfig a = default_config();
  std::string odd = a.canonical;
  const auto pos = odd.find("\"M\": 128");
  REQUIRE(pos != std::string::npos);
  odd.replace(pos, 8, "\"M\": 127");
  CHECK_THROWS(parse_config(odd));  // odd node counts are invalid
}

TEST_CASE("point-source traces compile against the curve") {
  DataFunctionSpec spec;
  spec.kind = "point-source-trace";
  spec.q = {3.0, -1.0};
  const auto circle = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const BoundaryFn dirichlet = spec.compile(circle);
  const Vec2 x = circle.point(0.7);
  CHECK(dirichlet(0.7, x) == doctest::Approx(std::log((x - spec.q).norm())));

  spec.normal_derivative = true;
  const BoundaryFn neumann = spec.compile(circle);
  const Vec2 d = x - spec.q;
  CHECK(neumann(0.7, x) ==
        doctest::Approx(d.dot(circle.normal(0.7)) / d.squaredNorm()));
}

TEST_CASE("tabulated data interpolates trigonometrically") {
  const int M = 32;
  const PeriodicRule rule(M);
  DataFunctionSpec spec;
  spec.kind = "custom-table";
  for (int k = 0; k < M; ++k)
    spec.table.push_back(std::sin(2.0 * rule.node(k)) + 0.25);
  const auto circle = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const BoundaryFn fn = spec.compile(circle);
  // off-node evaluation reproduces the band-limited generator
  CHECK(fn(0.4321, circle.point(0.4321)) ==
        doctest::Approx(std::sin(2.0 * 0.4321) + 0.25).epsilon(1e-12));
}

TEST_CASE("csv output is deterministic and round-trips doubles") {
  CsvWriter w({"a", "b"});
  w.meta("config", "abc123");
  w.add_row(std::vector<double>{1.0 / 3.0, 1e-300});
  w.add_row(std::vector<std::string>{"x", "y"});
  const std::string text = w.str();
  CHECK(text ==
        "# config = abc123\na,b\n0.33333333333333331,1e-300\nx,y\n");
  CHECK(std::stod(format_value(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK_THROWS(w.add_row(std::vector<std::string>{"bad,cell", "z"}));
  CHECK_THROWS(w.add_row(std::vector<double>{1.0}));
}

TEST_CASE("order fitting recovers synthetic slopes") {
  std::vector<double> h{0.1, 0.05, 0.025, 0.0125};
  std::vector<double> e2, e0;
  for (double x : h) {
    e2.push_back(3.0 * x * x);
    e0.push_back(1e-16);  // below the clip floor
  }
  const OrderFit f = fit_order(h, e2);
  CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
  CHECK(!f.clipped);
  CHECK(fit_order(h, e0).clipped);
  CHECK_THROWS(fit_order({0.1}, {1.0}));
}

TEST_CASE("validation suite passes and renders identically") {
  const ProblemConfig cfg = default_config().config;
  const ValidationSuite first = run_validation_suite(cfg);
  REQUIRE(first.cases.size() == 8);
  for (const ValidationCase& v : first.cases) {
    INFO(v.name, ": ", v.measured, " vs ", v.bound);
    CHECK(v.pass);
  }
  CHECK(first.all_pass);
  const ValidationSuite second = run_validation_suite(cfg);
  CHECK(validation_csv(first) == validation_csv(second));
}

}  // TEST_SUITE
