#include "lamina/classes.hpp"

#include <map>

#include "lamina/checked.hpp"
#include "lamina/error.hpp"
#include "lamina/factorize.hpp"

namespace lamina {

std::uint64_t law_base_integer(const DispersionLaw& law, const WaveVector& k) {
  if (!is_exact(law)) fail(ErrorKind::NoExactForm, "float law has no class structure");
  if (is_rational_valued(law)) fail(ErrorKind::NotApplicable, law_name(law) + " is rational-valued");
  check_mode(law, k);
  if (std::holds_alternative<DriftInverseNorm>(law) || std::holds_alternative<GravityNormRoot>(law))
    return static_cast<std::uint64_t>(k.norm_squared());
  if (std::holds_alternative<CapillaryScalar>(law)) return checked::pow(static_cast<std::uint64_t>(k.m), 3);
  const auto& p = std::get<PowerLaw>(law);
  std::uint64_t base =
      p.base == LawBase::Scalar ? static_cast<std::uint64_t>(k.m) : static_cast<std::uint64_t>(k.norm_squared());
  std::int64_t e = p.exponent.num();
  return checked::pow(base, static_cast<unsigned>(e < 0 ? -e : e));
}

ClassMembership classify_mode(const DispersionLaw& law, const WaveVector& k) {
  if (!is_exact(law)) fail(ErrorKind::NoExactForm, "float law has no class structure");
  check_mode(law, k);
  if (is_rational_valued(law)) return {k, kUniversalClass, 1};
  int c = law_degree(law);
  auto [gamma, kernel] = cfree_decompose(checked::to_signed(law_base_integer(law, k)), c);
  return {k, ClassId{kernel, c}, gamma};
}

bool same_class_necessary(const DispersionLaw& law, std::span<const WaveVector> modes) {
  if (modes.empty()) fail(ErrorKind::Precondition, "same_class_necessary needs at least one mode");
  ClassId first = classify_mode(law, modes.front()).class_id;
  for (const auto& k : modes.subspan(1)) {
    if (classify_mode(law, k).class_id != first) return false;
  }
  return true;
}

Rational PerClassEquation::residue() const {
  Rational total;
  for (const auto& t : terms) total += t.weight * t.value;
  return total;
}

std::vector<PerClassEquation> split_equation(int degree, std::span<const SignedRadical> terms) {
  std::map<std::uint64_t, PerClassEquation> byKernel;
  for (const auto& t : terms) {
    if (t.value.degree() != degree)
      fail(ErrorKind::MixedDegree, "split_equation: term of degree " + std::to_string(t.value.degree()) +
                                       " in a degree-" + std::to_string(degree) + " equation");
    auto& eq = byKernel[t.value.kernel()];
    eq.class_id = ClassId{t.value.kernel(), degree};
    eq.terms.push_back({t.weight, t.value.coeff(), std::nullopt});
  }
  std::vector<PerClassEquation> out;
  out.reserve(byKernel.size());
  for (auto& [kernel, eq] : byKernel) out.push_back(std::move(eq));
  return out;
}

std::vector<PerClassEquation> split_modes(const DispersionLaw& law, std::span<const WaveVector> modes,
                                          std::span<const int> signs) {
  if (modes.size() != signs.size())
    fail(ErrorKind::Precondition, "split_modes: " + std::to_string(modes.size()) + " modes but " +
                                      std::to_string(signs.size()) + " signs");
  std::map<ClassId, PerClassEquation> byClass;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    auto membership = classify_mode(law, modes[i]);
    auto omega = omega_exact(law, modes[i]);
    auto& eq = byClass[membership.class_id];
    eq.class_id = membership.class_id;
    eq.terms.push_back({Rational(signs[i]), omega.coeff(), membership});
  }
  std::vector<PerClassEquation> out;
  out.reserve(byClass.size());
  for (auto& [id, eq] : byClass) out.push_back(std::move(eq));
  return out;
}

std::vector<int> canonical_signs(std::span<const int> signs) {
  std::vector<int> out(signs.begin(), signs.end());
  for (int s : out) {
    if (s != 1 && s != -1) fail(ErrorKind::Precondition, "signs must be +1 or -1");
  }
  if (!out.empty() && out.front() < 0) {
    for (int& s : out) s = -s;
  }
  return out;
}

GammaForm gamma_form(const DispersionLaw& law) {
  if (!is_exact(law)) fail(ErrorKind::NoExactForm, "float law has no exact form");
  if (is_rational_valued(law)) fail(ErrorKind::NotApplicable, law_name(law) + " is already rational-valued");
  if (std::holds_alternative<DriftInverseNorm>(law)) return GammaForm::Reciprocal;
  if (const auto* p = std::get_if<PowerLaw>(&law))
    return p->exponent.num() < 0 ? GammaForm::Reciprocal : GammaForm::Linear;
  return GammaForm::Linear;
}

ReducedCondition reduce_to_rational(const DispersionLaw& law, const ClassId& class_id, std::span<const int> signs) {
  ReducedCondition out;
  out.form = gamma_form(law);
  if (class_id.degree != law_degree(law))
    fail(ErrorKind::Precondition, "class degree " + std::to_string(class_id.degree) + " does not match law degree " +
                                      std::to_string(law_degree(law)));
  if (signs.empty()) fail(ErrorKind::Precondition, "reduce_to_rational needs at least one sign");
  out.class_id = class_id;
  out.signs = canonical_signs(signs);
  return out;
}

Rational ReducedCondition::residue(std::span<const std::uint64_t> gammas) const {
  if (gammas.size() != signs.size())
    fail(ErrorKind::Precondition, "expected " + std::to_string(signs.size()) + " gammas, got " +
                                      std::to_string(gammas.size()));
  Rational total;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i] == 0) fail(ErrorKind::Domain, "gamma must be positive");
    Rational g(checked::to_signed(gammas[i]));
    total += Rational(signs[i]) * (form == GammaForm::Reciprocal ? g.reciprocal() : g);
  }
  return total;
}

std::string ReducedCondition::describe() const {
  auto term = [&](std::size_t i) {
    std::string g = "γ" + std::to_string(i + 1);
    return form == GammaForm::Reciprocal ? "1/" + g : g;
  };
  std::string lhs, rhs;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    std::string& side = signs[i] > 0 ? lhs : rhs;
    if (!side.empty()) side += " + ";
    side += term(i);
  }
  return lhs + " = " + (rhs.empty() ? "0" : rhs);
}

}  // namespace lamina
