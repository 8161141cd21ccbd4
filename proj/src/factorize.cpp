#include "lamina/factorize.hpp"

#include <cmath>
#include <string>

#include "lamina/checked.hpp"
#include "lamina/error.hpp"

namespace lamina {

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Prime powers found by trial division plus the cofactor left over. The
// cofactor is 1, or has no prime factor <= kTrialDivisionBound. `exhausted`
// tells whether the prime table ran out before p*p exceeded the cofactor.
struct PartialFactorization {
  std::vector<PrimePower> factors;
  std::uint64_t cofactor = 1;
  bool exhausted = false;
};

PartialFactorization trial_divide(std::uint64_t n) {
  PartialFactorization out;
  for (std::uint32_t p : small_primes()) {
    std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (n > 1) {
    std::uint64_t last = small_primes().back();
    out.exhausted = last * last < n;
  }
  out.cofactor = n;
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for n < 3.3e24 with the first twelve primes as witnesses.
bool is_prime_64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : witnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) fail(ErrorKind::Domain, std::string(what) + ": argument must be positive, got " + std::to_string(n));
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  return r * r == n;
}

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  out.base = static_cast<std::uint64_t>(n);
  auto partial = trial_divide(out.base);
  out.factors = std::move(partial.factors);
  std::uint64_t r = partial.cofactor;
  if (r == 1) return out;
  if (!partial.exhausted || is_prime_64(r)) {
    out.factors.push_back({r, 1});
    return out;
  }
  if (is_perfect_square(r)) {
    out.factors.push_back({isqrt(r), 2});
    return out;
  }
  fail(ErrorKind::Capacity, "factorize(" + std::to_string(n) + "): cofactor " + std::to_string(r) +
                                " is a product of two primes above the trial-division bound " +
                                std::to_string(kTrialDivisionBound));
}

CFreeDecomposition cfree_decompose(std::int64_t n, int c) {
  if (c < 2) fail(ErrorKind::Domain, "cfree_decompose: degree must be >= 2, got " + std::to_string(c));
  require_positive(n, "cfree_decompose");
  auto partial = trial_divide(static_cast<std::uint64_t>(n));
  CFreeDecomposition out;
  auto ce = static_cast<unsigned>(c);
  for (const auto& [p, e] : partial.factors) {
    out.gamma *= checked::pow(p, e / ce);
    out.kernel *= checked::pow(p, e % ce);
  }
  std::uint64_t r = partial.cofactor;
  if (r > 1) {
    // r is p, p*q or p^2 with p, q large primes; only p^2 with c == 2 has a
    // c-th power part.
    if (c == 2 && partial.exhausted && is_perfect_square(r)) {
      out.gamma *= isqrt(r);
    } else {
      out.kernel *= r;
    }
  }
  return out;
}

bool is_cfree(std::uint64_t n, int c) {
  if (n == 0) return false;
  return cfree_decompose(checked::to_signed(n), c).gamma == 1;
}

}  // namespace lamina
