#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "lamina/radical.hpp"
#include "lamina/rational.hpp"

namespace lamina {

// Discrete wave mode on the integer lattice. Scalar (1-D) laws read the
// wavenumber from m and ignore n.
struct WaveVector {
  std::int32_t m = 0;
  std::int32_t n = 0;

  friend auto operator<=>(const WaveVector&, const WaveVector&) = default;
  std::int64_t norm_squared() const noexcept {
    return std::int64_t{m} * m + std::int64_t{n} * n;
  }
  std::string str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
};

// omega = -2m / [n(n+1)] on the sphere; modes need 1 <= |m| <= n.
struct RossbySphere {
  friend bool operator==(const RossbySphere&, const RossbySphere&) = default;
};
// omega = 1 / sqrt(m^2 + n^2), degree 2.
struct DriftInverseNorm {
  friend bool operator==(const DriftInverseNorm&, const DriftInverseNorm&) = default;
};
// omega = k^(3/2) on scalar k = m >= 1, i.e. sqrt(k^3), degree 2.
struct CapillaryScalar {
  friend bool operator==(const CapillaryScalar&, const CapillaryScalar&) = default;
};
// omega = (m^2 + n^2)^(1/4), degree 4.
struct GravityNormRoot {
  friend bool operator==(const GravityNormRoot&, const GravityNormRoot&) = default;
};

enum class LawBase { Scalar, NormSquared };

// omega = B^(p/c) with B = m (Scalar) or m^2 + n^2 (NormSquared). The
// exponent is kept in lowest terms; its denominator is the radical degree.
struct PowerLaw {
  Rational exponent;
  LawBase base = LawBase::NormSquared;
  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;
};

enum class FloatFormula {
  Linear,       // alpha k
  Cubic,        // alpha k - beta k^3
  QuarticRoot,  // (alpha^2 k^2 + beta^2)^(1/4)
  Tanh,         // tanh(alpha k)
};

// Closed-form law evaluated in floating point only; never certified.
struct FloatLaw {
  FloatFormula formula = FloatFormula::Linear;
  double alpha = 1.0;
  double beta = 0.0;
  LawBase base = LawBase::Scalar;
  friend bool operator==(const FloatLaw&, const FloatLaw&) = default;
};

using DispersionLaw =
    std::variant<RossbySphere, DriftInverseNorm, CapillaryScalar, GravityNormRoot, PowerLaw, FloatLaw>;

std::string law_name(const DispersionLaw& law);
// Name plus parameters, e.g. "power:exponent=3/2,base=norm"; parse_law
// accepts the same text.
std::string describe_law(const DispersionLaw& law);
DispersionLaw parse_law(const std::string& text);

bool is_exact(const DispersionLaw& law) noexcept;
bool is_rational_valued(const DispersionLaw& law) noexcept;
// Modes are (k, 0) with k >= 1.
bool is_scalar(const DispersionLaw& law) noexcept;
// Radical degree c of exact values; 1 for rational-valued laws. Raises
// NoExactForm for FloatLaw.
int law_degree(const DispersionLaw& law);

// Raises Domain when k is outside the law's lattice domain.
void check_mode(const DispersionLaw& law, const WaveVector& k);

RadicalNumber omega_exact(const DispersionLaw& law, const WaveVector& k);
double omega_float(const DispersionLaw& law, const WaveVector& k);

// Law extended to real (x, y); y is ignored by scalar laws. Raises Domain
// when the value is not finite.
double omega_real(const DispersionLaw& law, double x, double y);

inline constexpr double kNondegenerateStep = 1e-3;
inline constexpr double kNondegenerateTolerance = 1e-6;

// Central-difference test of the non-zero second derivative condition:
// |d2w/dk2| for scalar laws, |det Hessian| for 2-D laws, compared against
// `tolerance`.
bool dispersion_nondegenerate(const DispersionLaw& law, const WaveVector& k, double h = kNondegenerateStep,
                              double tolerance = kNondegenerateTolerance);

}  // namespace lamina

template <>
struct std::hash<lamina::WaveVector> {
  std::size_t operator()(const lamina::WaveVector& k) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.m)) << 32) |
                                      static_cast<std::uint32_t>(k.n));
  }
};
