#pragma once

#include <cstdint>

namespace gcmlab {

using coeff_t = std::uint32_t;

bool is_prime_u32(std::uint32_t n);

// Arithmetic in Z/p for an odd prime p < 2^31. Elements are canonical
// representatives in [0, p). All operations assume operands are canonical.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  coeff_t add(coeff_t a, coeff_t b) const {
    coeff_t s = a + b;  // no overflow: a, b < 2^31
    return s >= p_ ? s - p_ : s;
  }
  coeff_t sub(coeff_t a, coeff_t b) const { return a >= b ? a - b : a + p_ - b; }
  coeff_t neg(coeff_t a) const { return a == 0 ? 0 : p_ - a; }
  coeff_t mul(coeff_t a, coeff_t b) const {
    return static_cast<coeff_t>((std::uint64_t)a * b % p_);
  }
  coeff_t pow(coeff_t a, std::uint64_t e) const;
  coeff_t inv(coeff_t a) const;  // throws on a == 0
  coeff_t div(coeff_t a, coeff_t b) const { return mul(a, inv(b)); }

  // Reduce an arbitrary integer to its canonical representative.
  coeff_t from_int(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    return static_cast<coeff_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace gcmlab
