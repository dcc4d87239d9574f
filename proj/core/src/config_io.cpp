#include "holes2d/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "holes2d/quadrature.hpp"

namespace holes2d {

using nlohmann::json;

BoundaryFn DataFunctionSpec::compile(const ParametrizedCurve& curve) const {
  if (kind == "constant") {
    const double v = value;
    return [v](double, const Vec2&) { return v; };
  }
  if (kind == "fourier") {
    const double a0 = c0;
    const auto ac = cos_coeffs;
    const auto as = sin_coeffs;
    return [a0, ac, as](double t, const Vec2&) {
      double v = a0;
      for (std::size_t m = 0; m < ac.size(); ++m) v += ac[m] * std::cos((m + 1) * t);
      for (std::size_t m = 0; m < as.size(); ++m) v += as[m] * std::sin((m + 1) * t);
      return v;
    };
  }
  if (kind == "point-source-trace") {
    const Vec2 src = q;
    if (!normal_derivative) {
      return [src](double, const Vec2& x) { return std::log((x - src).norm()); };
    }
    const ParametrizedCurve c = curve;
    return [src, c](double t, const Vec2& x) {
      const Vec2 r = x - src;
      return r.dot(c.normal(t)) / r.squaredNorm();
    };
  }
  if (kind == "custom-table") {
    Eigen::VectorXd samples(static_cast<Eigen::Index>(table.size()));
    for (std::size_t k = 0; k < table.size(); ++k) {
      samples[static_cast<Eigen::Index>(k)] = table[k];
    }
    const TrigInterpolant interp(samples);
    return [interp](double t, const Vec2&) { return interp(t); };
  }
  throw std::invalid_argument("unknown data function kind: " + kind);
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

json vec2_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

Vec2 parse_vec2(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("expected a two-element array");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ParametrizedCurve parse_curve(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "circle") {
    return ParametrizedCurve::circle(parse_vec2(j.at("center")),
                                     j.at("radius").get<double>());
  }
  if (kind == "ellipse") {
    return ParametrizedCurve::ellipse(parse_vec2(j.at("center")),
                                      j.at("a").get<double>(),
                                      j.at("b").get<double>());
  }
  if (kind == "trig") {
    auto arr = [&j](const char* key) {
      std::vector<double> v;
      if (j.contains(key)) v = j.at(key).get<std::vector<double>>();
      return v;
    };
    const Vec2 c = j.contains("const") ? parse_vec2(j.at("const")) : Vec2{0, 0};
    return ParametrizedCurve::trig(c.x(), arr("cos_x"), arr("sin_x"), c.y(),
                                   arr("cos_y"), arr("sin_y"));
  }
  throw std::invalid_argument("unknown curve kind: " + kind);
}

DataFunctionSpec parse_data(const json& j) {
  DataFunctionSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  if (spec.kind == "constant") {
    spec.value = j.at("value").get<double>();
  } else if (spec.kind == "fourier") {
    if (j.contains("c0")) spec.c0 = j.at("c0").get<double>();
    if (j.contains("cos")) spec.cos_coeffs = j.at("cos").get<std::vector<double>>();
    if (j.contains("sin")) spec.sin_coeffs = j.at("sin").get<std::vector<double>>();
  } else if (spec.kind == "point-source-trace") {
    spec.q = parse_vec2(j.at("q"));
    if (j.contains("normal_derivative")) {
      spec.normal_derivative = j.at("normal_derivative").get<bool>();
    }
  } else if (spec.kind == "custom-table") {
    spec.table = j.at("values").get<std::vector<double>>();
  } else {
    throw std::invalid_argument("unknown data function kind: " + spec.kind);
  }
  return spec;
}

std::vector<Vec2> parse_points(const json& j) {
  std::vector<Vec2> out;
  for (const auto& e : j) out.push_back(parse_vec2(e));
  return out;
}

LoadedConfig from_json(const json& j) {
  LoadedConfig lc;
  lc.config.outer = parse_curve(j.at("outer"));
  lc.config.hole1 = parse_curve(j.at("hole1"));
  lc.config.hole2 = parse_curve(j.at("hole2"));
  lc.config.p1 = parse_vec2(j.at("p1"));
  lc.config.p2 = parse_vec2(j.at("p2"));
  if (j.contains("r_star")) lc.config.r_star = j.at("r_star").get<double>();
  if (j.contains("M")) lc.config.M = j.at("M").get<int>();
  if (lc.config.M < 8 || lc.config.M % 2 != 0)
    throw std::invalid_argument("M must be even and at least 8");
  if (lc.config.r_star < 0.0)
    throw std::invalid_argument("r_star must be nonnegative");
  lc.config.f1 = parse_data(j.at("f1")).compile(lc.config.hole1);
  lc.config.f2 = parse_data(j.at("f2")).compile(lc.config.hole2);
  lc.config.g = parse_data(j.at("g")).compile(lc.config.outer);

  if (j.contains("points")) {
    const auto& p = j.at("points");
    if (p.contains("macro")) lc.points.macro = parse_points(p.at("macro"));
    if (p.contains("micro")) lc.points.micro = parse_points(p.at("micro"));
    if (p.contains("layer")) lc.points.layer = parse_points(p.at("layer"));
  } else {
    lc.points = default_config_points();
  }
  lc.canonical = j.dump(2);  // nlohmann objects iterate in sorted key order
  lc.hash = fnv1a(lc.canonical);
  return lc;
}

json default_json() {
  json j;
  j["outer"] = {{"kind", "circle"}, {"center", vec2_json({0.0, 0.0})}, {"radius", 1.0}};
  j["hole1"] = {{"kind", "circle"}, {"center", vec2_json({0.0, 0.0})}, {"radius", 1.0}};
  j["hole2"] = {{"kind", "ellipse"}, {"center", vec2_json({0.0, 0.0})}, {"a", 1.0}, {"b", 0.6}};
  j["p1"] = vec2_json({-0.3, 0.0});
  j["p2"] = vec2_json({0.4, 0.1});
  j["r_star"] = 0.0;
  j["M"] = 128;
  j["f1"] = {{"kind", "constant"}, {"value", 1.0}};
  j["f2"] = {{"kind", "fourier"}, {"cos", {1.0}}};
  j["g"] = {{"kind", "fourier"}, {"c0", 1.0}, {"cos", {0.0, 1.0}}};
  return j;
}

}  // namespace

LoadedConfig default_config() { return from_json(default_json()); }

LoadedConfig parse_config(const std::string& json_text) {
  return from_json(json::parse(json_text));
}

LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ExperimentPoints default_config_points() {
  ExperimentPoints p;
  p.macro = {{0.6, 0.3}, {-0.5, 0.2}, {0.1, -0.6}};
  p.micro = {{0.05, 0.8}, {-0.6, -0.5}};
  p.layer = {{0.0, 2.2}};
  return p;
}

}  // namespace holes2d
