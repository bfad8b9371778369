#include "gcmlab/rand.hpp"

#include <stdexcept>

#include "gcmlab/util.hpp"

namespace gcmlab {

Rng Rng::fork(std::uint64_t salt) const {
  return Rng(splitmix64(seed_ ^ splitmix64(salt + 0x632be59bd9b4e019ull)));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  return d(gen_);
}

coeff_t Rng::nonzero_coeff(const PrimeField& f) {
  return (coeff_t)uniform(1, (std::int64_t)f.characteristic() - 1);
}

bool Rng::bernoulli(double p) {
  std::bernoulli_distribution d(p);
  return d(gen_);
}

Poly random_form(const Ring& ring, int degree, double density, Rng& rng) {
  if (degree < 0) throw std::invalid_argument("random_form: negative degree");
  auto monos = monomials_of_degree(ring.nvars(), degree);
  std::vector<Term> terms;
  for (const auto& m : monos)
    if (rng.bernoulli(density)) terms.push_back(Term{rng.nonzero_coeff(ring.field()), m});
  if (terms.empty()) {
    const auto& m = monos[(std::size_t)rng.uniform(0, (std::int64_t)monos.size() - 1)];
    terms.push_back(Term{rng.nonzero_coeff(ring.field()), m});
  }
  return Poly(ring, std::move(terms));
}

Poly random_in_power(const Ring& ring, int N, int spread, double density, Rng& rng) {
  if (N < 0 || spread < 0) throw std::invalid_argument("random_in_power: bad arguments");
  Poly p = random_form(ring, N, density, rng);
  for (int d = N + 1; d <= N + spread; ++d)
    if (rng.bernoulli(0.5)) p = p + random_form(ring, d, density, rng);
  return p;
}

}  // namespace gcmlab
