#include "lamina/radical.hpp"

#include <cmath>

#include "lamina/checked.hpp"
#include "lamina/error.hpp"
#include "lamina/factorize.hpp"

namespace lamina {

namespace {

void require_degree(int degree) {
  if (degree < 1) fail(ErrorKind::Domain, "radical degree must be >= 1, got " + std::to_string(degree));
}

}  // namespace

RadicalNumber RadicalNumber::make(const Rational& coeff, std::uint64_t base, int degree) {
  require_degree(degree);
  RadicalNumber r;
  r.degree_ = degree;
  if (coeff.is_zero() || base == 0) return r;
  if (degree == 1) {
    r.coeff_ = coeff * Rational(checked::to_signed(base));
    return r;
  }
  auto [gamma, kernel] = cfree_decompose(checked::to_signed(base), degree);
  r.coeff_ = coeff * Rational(checked::to_signed(gamma));
  r.kernel_ = kernel;
  return r;
}

RadicalNumber RadicalNumber::rational(const Rational& value, int degree) {
  return make(value, 1, degree);
}

RadicalNumber RadicalNumber::operator-() const {
  RadicalNumber r = *this;
  r.coeff_ = -coeff_;
  return r;
}

RadicalNumber RadicalNumber::scaled(const Rational& factor) const {
  if (factor.is_zero()) return rational(0, degree_);
  RadicalNumber r = *this;
  r.coeff_ = coeff_ * factor;
  return r;
}

RadicalNumber RadicalNumber::reciprocal() const {
  if (is_zero()) fail(ErrorKind::Domain, "reciprocal of zero radical");
  if (kernel_ == 1) return rational(coeff_.reciprocal(), degree_);
  std::uint64_t radical = 1;
  std::uint64_t complement = 1;
  for (const auto& [p, e] : factorize(checked::to_signed(kernel_)).factors) {
    radical = checked::mul(radical, p);
    complement = checked::mul(complement, checked::pow(p, static_cast<unsigned>(degree_) - e));
  }
  RadicalNumber r;
  r.degree_ = degree_;
  r.kernel_ = complement;
  r.coeff_ = (coeff_ * Rational(checked::to_signed(radical))).reciprocal();
  return r;
}

long double RadicalNumber::to_long_double() const noexcept {
  long double v = coeff_.to_long_double();
  if (kernel_ == 1) return v;
  if (degree_ == 2) return v * std::sqrt(static_cast<long double>(kernel_));
  return v * std::pow(static_cast<long double>(kernel_), 1.0L / degree_);
}

std::string RadicalNumber::str() const {
  if (kernel_ == 1) return coeff_.str();
  std::string root = degree_ == 2 ? "sqrt(" + std::to_string(kernel_) + ")"
                                  : std::to_string(kernel_) + "^(1/" + std::to_string(degree_) + ")";
  return "(" + coeff_.str() + ")*" + root;
}

RadicalSum::RadicalSum(int degree) : degree_(degree) { require_degree(degree); }

RadicalSum& RadicalSum::add(const RadicalNumber& x) {
  if (x.degree() != degree_)
    fail(ErrorKind::MixedDegree, "cannot add a degree-" + std::to_string(x.degree()) + " radical to a degree-" +
                                     std::to_string(degree_) + " sum");
  if (x.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(x.kernel(), x.coeff());
  if (!inserted) {
    it->second += x.coeff();
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

RadicalSum& RadicalSum::add(const RadicalSum& other) {
  if (other.degree_ != degree_)
    fail(ErrorKind::MixedDegree, "cannot add radical sums of degrees " + std::to_string(degree_) + " and " +
                                     std::to_string(other.degree_));
  for (const auto& [kernel, coeff] : other.terms_) add(RadicalNumber::make(coeff, kernel, degree_));
  return *this;
}

long double RadicalSum::to_long_double() const noexcept {
  long double total = 0;
  for (const auto& [kernel, coeff] : terms_) total += RadicalNumber::make(coeff, kernel, degree_).to_long_double();
  return total;
}

RadicalSum radical_add(const RadicalNumber& a, const RadicalNumber& b) {
  if (a.degree() != b.degree())
    fail(ErrorKind::MixedDegree, "radical_add: degrees " + std::to_string(a.degree()) + " and " +
                                     std::to_string(b.degree()) + " differ");
  RadicalSum s(a.degree());
  s.add(a);
  s.add(b);
  return s;
}

ZeroTest radical_sum_is_zero(const RadicalSum& s) {
  ZeroTest out;
  out.residues = s.terms();
  out.zero = out.residues.empty();
  return out;
}

}  // namespace lamina
