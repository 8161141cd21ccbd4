#include "lamina/dispersion.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "lamina/checked.hpp"
#include "lamina/error.hpp"

namespace lamina {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view formula_name(FloatFormula f) {
  switch (f) {
    case FloatFormula::Linear: return "linear";
    case FloatFormula::Cubic: return "cubic";
    case FloatFormula::QuarticRoot: return "quartic-root";
    case FloatFormula::Tanh: return "tanh";
  }
  return "?";
}

std::string_view base_name(LawBase b) { return b == LawBase::Scalar ? "scalar" : "norm"; }

LawBase parse_base(const std::string& s) {
  if (s == "scalar") return LawBase::Scalar;
  if (s == "norm") return LawBase::NormSquared;
  fail(ErrorKind::Config, "unknown law base '" + s + "' (expected scalar|norm)");
}

double parse_real(const std::string& s) {
  if (s.find('/') != std::string::npos) return Rational::parse(s).to_double();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) fail(ErrorKind::Config, "malformed law parameter '" + s + "'");
  return v;
}

// Lattice base integer of a power law: m, or m^2 + n^2.
std::uint64_t power_base(LawBase base, const WaveVector& k) {
  return base == LawBase::Scalar ? static_cast<std::uint64_t>(k.m) : static_cast<std::uint64_t>(k.norm_squared());
}

double float_formula(const FloatLaw& law, double k) {
  switch (law.formula) {
    case FloatFormula::Linear: return law.alpha * k;
    case FloatFormula::Cubic: return law.alpha * k - law.beta * k * k * k;
    case FloatFormula::QuarticRoot:
      return std::sqrt(std::sqrt(law.alpha * law.alpha * k * k + law.beta * law.beta));
    case FloatFormula::Tanh: return std::tanh(law.alpha * k);
  }
  return NAN;
}

}  // namespace

std::string law_name(const DispersionLaw& law) {
  return std::visit(overloaded{
                        [](const RossbySphere&) { return std::string("rossby"); },
                        [](const DriftInverseNorm&) { return std::string("drift"); },
                        [](const CapillaryScalar&) { return std::string("capillary"); },
                        [](const GravityNormRoot&) { return std::string("gravity"); },
                        [](const PowerLaw&) { return std::string("power"); },
                        [](const FloatLaw&) { return std::string("float"); },
                    },
                    law);
}

std::string describe_law(const DispersionLaw& law) {
  if (const auto* p = std::get_if<PowerLaw>(&law))
    return "power:exponent=" + p->exponent.str() + ",base=" + std::string(base_name(p->base));
  if (const auto* f = std::get_if<FloatLaw>(&law))
    return "float:formula=" + std::string(formula_name(f->formula)) + ",alpha=" + format_double(f->alpha) +
           ",beta=" + format_double(f->beta) + ",base=" + std::string(base_name(f->base));
  return law_name(law);
}

DispersionLaw parse_law(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        fail(ErrorKind::Config, "malformed law parameter '" + item + "' in '" + text + "'");
      if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
        fail(ErrorKind::Config, "duplicate law parameter '" + item.substr(0, eq) + "'");
    }
  }
  auto take = [&](const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::string v = it->second;
    params.erase(it);
    return v;
  };

  DispersionLaw law;
  if (name == "rossby") {
    law = RossbySphere{};
  } else if (name == "drift") {
    law = DriftInverseNorm{};
  } else if (name == "capillary") {
    law = CapillaryScalar{};
  } else if (name == "gravity") {
    law = GravityNormRoot{};
  } else if (name == "power") {
    std::string exponent = take("exponent", "");
    if (exponent.empty()) fail(ErrorKind::Config, "power law requires exponent=p/c");
    Rational e;
    try {
      e = Rational::parse(exponent);
    } catch (const Error& err) {
      fail(ErrorKind::Config, std::string("power law exponent: ") + err.what());
    }
    law = PowerLaw{e, parse_base(take("base", "norm"))};
  } else if (name == "float") {
    FloatLaw f;
    std::string formula = take("formula", "linear");
    if (formula == "linear") f.formula = FloatFormula::Linear;
    else if (formula == "cubic") f.formula = FloatFormula::Cubic;
    else if (formula == "quartic-root") f.formula = FloatFormula::QuarticRoot;
    else if (formula == "tanh") f.formula = FloatFormula::Tanh;
    else fail(ErrorKind::Config, "unknown float formula '" + formula + "'");
    f.alpha = parse_real(take("alpha", "1"));
    f.beta = parse_real(take("beta", "0"));
    f.base = parse_base(take("base", "scalar"));
    law = f;
  } else {
    fail(ErrorKind::Config, "unknown dispersion law '" + name + "'");
  }
  if (!params.empty()) fail(ErrorKind::Config, "unknown parameter '" + params.begin()->first + "' for law " + name);
  return law;
}

bool is_exact(const DispersionLaw& law) noexcept { return !std::holds_alternative<FloatLaw>(law); }

bool is_rational_valued(const DispersionLaw& law) noexcept {
  if (std::holds_alternative<RossbySphere>(law)) return true;
  if (const auto* p = std::get_if<PowerLaw>(&law)) return p->exponent.den() == 1;
  return false;
}

bool is_scalar(const DispersionLaw& law) noexcept {
  return std::visit(overloaded{
                        [](const CapillaryScalar&) { return true; },
                        [](const PowerLaw& p) { return p.base == LawBase::Scalar; },
                        [](const FloatLaw& f) { return f.base == LawBase::Scalar; },
                        [](const auto&) { return false; },
                    },
                    law);
}

int law_degree(const DispersionLaw& law) {
  return std::visit(overloaded{
                        [](const RossbySphere&) { return 1; },
                        [](const DriftInverseNorm&) { return 2; },
                        [](const CapillaryScalar&) { return 2; },
                        [](const GravityNormRoot&) { return 4; },
                        [](const PowerLaw& p) { return static_cast<int>(p.exponent.den()); },
                        [](const FloatLaw&) -> int {
                          fail(ErrorKind::NoExactForm, "float law has no exact form");
                        },
                    },
                    law);
}

void check_mode(const DispersionLaw& law, const WaveVector& k) {
  if (std::holds_alternative<RossbySphere>(law)) {
    if (k.n < 1 || k.m == 0 || std::abs(k.m) > k.n)
      fail(ErrorKind::Domain, "spherical mode " + k.str() + " violates 1 <= |m| <= n");
    return;
  }
  if (is_scalar(law)) {
    if (k.m < 1) fail(ErrorKind::Domain, "scalar wavenumber must be >= 1, got " + std::to_string(k.m));
    return;
  }
  if (k.m == 0 && k.n == 0) fail(ErrorKind::Domain, "wave vector (0,0) is not a mode");
}

RadicalNumber omega_exact(const DispersionLaw& law, const WaveVector& k) {
  check_mode(law, k);
  return std::visit(
      overloaded{
          [&](const RossbySphere&) {
            std::int64_t n = k.n;
            return RadicalNumber::rational(Rational(checked::mul(std::int64_t{-2}, std::int64_t{k.m}), checked::mul(n, n + 1)));
          },
          [&](const DriftInverseNorm&) {
            return RadicalNumber::make(1, static_cast<std::uint64_t>(k.norm_squared()), 2).reciprocal();
          },
          [&](const CapillaryScalar&) {
            return RadicalNumber::make(1, checked::pow(static_cast<std::uint64_t>(k.m), 3), 2);
          },
          [&](const GravityNormRoot&) {
            return RadicalNumber::make(1, static_cast<std::uint64_t>(k.norm_squared()), 4);
          },
          [&](const PowerLaw& p) {
            int c = static_cast<int>(p.exponent.den());
            std::int64_t e = p.exponent.num();
            auto magnitude = static_cast<unsigned>(e < 0 ? -e : e);
            auto value = RadicalNumber::make(1, checked::pow(power_base(p.base, k), magnitude), c);
            return e < 0 ? value.reciprocal() : value;
          },
          [&](const FloatLaw&) -> RadicalNumber {
            fail(ErrorKind::NoExactForm, "float law has no exact form");
          },
      },
      law);
}

double omega_float(const DispersionLaw& law, const WaveVector& k) {
  check_mode(law, k);
  return omega_real(law, k.m, k.n);
}

double omega_real(const DispersionLaw& law, double x, double y) {
  double r2 = x * x + y * y;
  double v = std::visit(overloaded{
                            [&](const RossbySphere&) { return -2.0 * x / (y * (y + 1.0)); },
                            [&](const DriftInverseNorm&) { return 1.0 / std::sqrt(r2); },
                            [&](const CapillaryScalar&) { return x * std::sqrt(x); },
                            [&](const GravityNormRoot&) { return std::sqrt(std::sqrt(r2)); },
                            [&](const PowerLaw& p) {
                              long double b = p.base == LawBase::Scalar ? x : r2;
                              long double e = static_cast<long double>(p.exponent.num()) / p.exponent.den();
                              return static_cast<double>(std::pow(b, e));
                            },
                            [&](const FloatLaw& f) {
                              return float_formula(f, f.base == LawBase::Scalar ? x : std::sqrt(r2));
                            },
                        },
                        law);
  if (!std::isfinite(v))
    fail(ErrorKind::Domain, law_name(law) + " dispersion is not finite at (" + format_double(x) + ", " +
                                format_double(y) + ")");
  return v;
}

bool dispersion_nondegenerate(const DispersionLaw& law, const WaveVector& k, double h, double tolerance) {
  if (!(h > 0)) fail(ErrorKind::Domain, "finite-difference step must be positive");
  const double x = k.m;
  const double y = k.n;
  auto f = [&](double a, double b) { return omega_real(law, a, b); };
  if (is_scalar(law)) {
    double d2 = (f(x + h, y) - 2 * f(x, y) + f(x - h, y)) / (h * h);
    return std::abs(d2) > tolerance;
  }
  double fxx = (f(x + h, y) - 2 * f(x, y) + f(x - h, y)) / (h * h);
  double fyy = (f(x, y + h) - 2 * f(x, y) + f(x, y - h)) / (h * h);
  double fxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4 * h * h);
  return std::abs(fxx * fyy - fxy * fxy) > tolerance;
}

}  // namespace lamina
