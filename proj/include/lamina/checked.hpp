#pragma once

#include <cstdint>
#include <string>

#include "lamina/error.hpp"

// Overflow-checked 64-bit integer arithmetic. Wraparound would silently
// corrupt exactness certificates, so every operation raises instead.
namespace lamina::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == INT64_MIN) fail(ErrorKind::Overflow, "integer overflow in negation");
  return -a;
}

inline std::uint64_t pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = mul(r, base);
  return r;
}

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) fail(ErrorKind::Overflow, "integer overflow narrowing 128-bit value");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) fail(ErrorKind::Overflow, "unsigned value exceeds int64 range");
  return static_cast<std::int64_t>(v);
}

}  // namespace lamina::checked
