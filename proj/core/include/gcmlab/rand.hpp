#pragma once

#include <cstdint>
#include <random>

#include "gcmlab/poly.hpp"

namespace gcmlab {

// Seeded RNG that remembers its seed, so independent streams can be forked
// from the original seed regardless of how much the parent was consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  Rng fork(std::uint64_t salt) const;

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [lo, hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Uniform nonzero field element.
  coeff_t nonzero_coeff(const PrimeField& f);

  bool bernoulli(double p);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

// Homogeneous form of the exact degree. Each monomial enters with the given
// density; coefficients are uniform nonzero. Never returns zero: one random
// monomial is forced when the density draw selects none.
Poly random_form(const Ring& ring, int degree, double density, Rng& rng);

// Random element of m^N: inhomogeneous combination of forms of degrees
// N .. N+spread, at least the degree-N layer nonzero.
Poly random_in_power(const Ring& ring, int N, int spread, double density, Rng& rng);

}  // namespace gcmlab
