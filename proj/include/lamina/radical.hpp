#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lamina/rational.hpp"

namespace lamina {

// Exact value coeff * kernel^(1/degree) with a c-free kernel.
//
// Canonical form: kernel is degree-free, a zero coefficient forces kernel 1,
// and degree 1 forces kernel 1 (the value is then a plain rational). Two
// RadicalNumbers of the same degree are equal as reals iff their canonical
// fields are equal.
class RadicalNumber {
 public:
  RadicalNumber() = default;

  // coeff * base^(1/degree); base >= 0, degree >= 1. The c-th power part of
  // base is moved into the coefficient.
  static RadicalNumber make(const Rational& coeff, std::uint64_t base, int degree);
  static RadicalNumber rational(const Rational& value, int degree = 1);

  const Rational& coeff() const noexcept { return coeff_; }
  std::uint64_t kernel() const noexcept { return kernel_; }
  int degree() const noexcept { return degree_; }
  bool is_rational() const noexcept { return kernel_ == 1; }
  bool is_zero() const noexcept { return coeff_.is_zero(); }

  RadicalNumber operator-() const;
  RadicalNumber scaled(const Rational& factor) const;
  // 1/(a q^(1/c)) = (1/(a rad(q))) * q'^(1/c) where q' = prod p^(c-e) over
  // the prime powers p^e of q. For c = 2 this keeps the kernel.
  RadicalNumber reciprocal() const;

  long double to_long_double() const noexcept;
  double to_double() const noexcept { return static_cast<double>(to_long_double()); }

  std::string str() const;

  friend bool operator==(const RadicalNumber&, const RadicalNumber&) = default;

 private:
  Rational coeff_;
  std::uint64_t kernel_ = 1;
  int degree_ = 1;
};

// Canonical sum of same-degree radicals: kernel -> nonzero coefficient.
class RadicalSum {
 public:
  explicit RadicalSum(int degree = 1);

  int degree() const noexcept { return degree_; }
  const std::map<std::uint64_t, Rational>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  // Degree mismatch raises ErrorKind::MixedDegree.
  RadicalSum& add(const RadicalNumber& x);
  RadicalSum& add(const RadicalSum& other);

  long double to_long_double() const noexcept;

  friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

 private:
  int degree_;
  std::map<std::uint64_t, Rational> terms_;
};

RadicalSum radical_add(const RadicalNumber& a, const RadicalNumber& b);

struct ZeroTest {
  bool zero = true;
  // Kernels whose coefficient does not cancel, with the leftover coefficient.
  std::map<std::uint64_t, Rational> residues;
};

// The q^(1/c) for distinct c-free q are linearly independent over the
// rationals, so a canonical sum is zero exactly when it has no terms.
ZeroTest radical_sum_is_zero(const RadicalSum& s);

}  // namespace lamina
