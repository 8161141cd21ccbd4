#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lamina/dispersion.hpp"
#include "lamina/radical.hpp"

namespace lamina {

// Class Cl_q for radical degree c. Rational-valued laws put every mode in
// the universal class (1, 1).
struct ClassId {
  std::uint64_t kernel = 1;
  int degree = 1;

  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

inline constexpr ClassId kUniversalClass{1, 1};

// base(law, mode) == gamma^degree * kernel.
struct ClassMembership {
  WaveVector mode;
  ClassId class_id;
  std::uint64_t gamma = 1;

  friend bool operator==(const ClassMembership&, const ClassMembership&) = default;
};

// The lattice integer whose c-free kernel names the class: m^2+n^2 for the
// norm laws, k^3 for capillary waves, B^|p| for power laws. Raises
// NotApplicable for rational-valued laws and NoExactForm for FloatLaw.
std::uint64_t law_base_integer(const DispersionLaw& law, const WaveVector& k);

ClassMembership classify_mode(const DispersionLaw& law, const WaveVector& k);

// True iff all modes share one class. Empty input is a precondition error.
bool same_class_necessary(const DispersionLaw& law, std::span<const WaveVector> modes);

// One summand of a per-class equation: weight * value, where value is the
// rational coefficient of the radical. `member` is set when the term came
// from a lattice mode.
struct ClassTerm {
  Rational weight;
  Rational value;
  std::optional<ClassMembership> member;

  friend bool operator==(const ClassTerm&, const ClassTerm&) = default;
};

struct PerClassEquation {
  ClassId class_id;
  std::vector<ClassTerm> terms;

  Rational residue() const;
  bool balanced() const { return residue().is_zero(); }

  friend bool operator==(const PerClassEquation&, const PerClassEquation&) = default;
};

struct SignedRadical {
  Rational weight;
  RadicalNumber value;
};

// Groups terms by kernel; the input sum is zero iff every returned equation
// is balanced. Output is ordered by kernel. Mixed degrees raise MixedDegree.
std::vector<PerClassEquation> split_equation(int degree, std::span<const SignedRadical> terms);

// Same split for sum_i signs[i] * omega(modes[i]), keyed by the law's class
// and carrying the membership of every term.
std::vector<PerClassEquation> split_modes(const DispersionLaw& law, std::span<const WaveVector> modes,
                                          std::span<const int> signs);

// Flip so the first sign is +1.
std::vector<int> canonical_signs(std::span<const int> signs);

enum class GammaForm {
  Linear,      // sum sigma_i gamma_i = 0
  Reciprocal,  // sum sigma_i / gamma_i = 0
};

// Per-class rational Diophantine condition on the gammas of s modes.
struct ReducedCondition {
  ClassId class_id;
  GammaForm form = GammaForm::Linear;
  std::vector<int> signs;

  Rational residue(std::span<const std::uint64_t> gammas) const;
  bool satisfied(std::span<const std::uint64_t> gammas) const { return residue(gammas).is_zero(); }
  // Positive terms on the left, negative on the right, e.g.
  // "1/γ1 + 1/γ2 = 1/γ3".
  std::string describe() const;
};

// Reciprocal form for the inverse-norm law and negative power exponents,
// linear form for gravity, capillary and positive power exponents. Raises
// NotApplicable for rational-valued laws and NoExactForm for FloatLaw.
ReducedCondition reduce_to_rational(const DispersionLaw& law, const ClassId& class_id, std::span<const int> signs);

GammaForm gamma_form(const DispersionLaw& law);

}  // namespace lamina
