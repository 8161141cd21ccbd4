#pragma once

#include <cstdint>
#include <vector>

namespace lamina {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// base = product of prime^exponent, primes strictly increasing.
struct Factorization {
  std::uint64_t base = 1;
  std::vector<PrimePower> factors;
};

// Trial division runs over primes up to this bound. Any cofactor left after
// that has at most two prime factors, both above the bound; it is resolved
// when it is below bound^2, a perfect square, or passes a deterministic
// Miller-Rabin test with the fixed witness set valid for all 64-bit inputs.
// A product of two distinct primes above the bound is reported as a
// capacity error.
inline constexpr std::uint64_t kTrialDivisionBound = std::uint64_t{1} << 21;

// n in [1, 2^63 - 1]; n <= 0 is a domain error.
Factorization factorize(std::int64_t n);

struct CFreeDecomposition {
  std::uint64_t gamma = 1;
  std::uint64_t kernel = 1;

  friend bool operator==(const CFreeDecomposition&, const CFreeDecomposition&) = default;
};

// Unique split n = gamma^c * kernel with kernel c-free (no prime divides it
// c or more times). Works for every n in [1, 2^63 - 1] because a cofactor
// without small prime factors has at most two prime factors, so its c-free
// part can be read off without splitting it.
CFreeDecomposition cfree_decompose(std::int64_t n, int c);

bool is_cfree(std::uint64_t n, int c);

std::uint64_t isqrt(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

}  // namespace lamina
