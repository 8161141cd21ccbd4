#pragma once

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "lamina/error.hpp"
#include "lamina/radical.hpp"

namespace lamina::test {

using Dec = boost::multiprecision::cpp_dec_float_50;

inline Dec dec(const Rational& r) { return Dec(r.num()) / Dec(r.den()); }

// coeff * kernel^(1/degree) to 50 digits.
inline Dec dec(const RadicalNumber& x) {
  if (x.kernel() == 1) return dec(x.coeff());
  return dec(x.coeff()) * boost::multiprecision::pow(Dec(x.kernel()), Dec(1) / Dec(x.degree()));
}

inline Dec dec(const RadicalSum& s) {
  Dec total = 0;
  for (const auto& [kernel, coeff] : s.terms())
    total += dec(RadicalNumber::make(coeff, kernel, s.degree()));
  return total;
}

}  // namespace lamina::test

#define EXPECT_LAMINA_ERROR(statement, expected_kind)                                   \
  do {                                                                                  \
    try {                                                                               \
      statement;                                                                        \
      ADD_FAILURE() << "expected " << ::lamina::to_string(expected_kind) << " error";   \
    } catch (const ::lamina::Error& e) {                                                \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                                   \
    }                                                                                   \
  } while (0)
