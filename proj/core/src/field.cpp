#include "gcmlab/field.hpp"

#include <stdexcept>

namespace gcmlab {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (__uint128_t)a * b % m;
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Miller-Rabin with bases 2, 3, 5, 7, 11: deterministic below 2.15 * 10^12,
// which covers the whole u32 range.
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("characteristic must be an odd prime below 2^31, got " +
                                std::to_string(p));
}

coeff_t PrimeField::pow(coeff_t a, std::uint64_t e) const {
  coeff_t r = 1;
  coeff_t base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

coeff_t PrimeField::inv(coeff_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2). p is prime so this is total on nonzero elements.
  return pow(a, p_ - 2);
}

}  // namespace gcmlab
