#pragma once

#include <memory>
#include <vector>

#include "gcmlab/groebner.hpp"
#include "gcmlab/poly.hpp"

namespace gcmlab {

// An ideal of the ring, which may carry quotient relations. Generators live
// in the ambient polynomial ring S; the ideal of R = S/Q is identified with
// its preimage in S, so every computation appends the quotient relations.
// Gröbner bases and lengths are cached; handles are cheap to copy and safe
// to share across threads.
class IdealHandle {
 public:
  IdealHandle() = default;
  IdealHandle(Ring ring, std::vector<Poly> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // Generators plus the ring's quotient relations: generators of the
  // preimage in the ambient polynomial ring.
  std::vector<Poly> effective_gens() const;

  // Reduced degrevlex basis of the preimage, cached.
  const std::vector<Poly>& groebner() const;

  Poly reduce(const Poly& f) const;
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  bool contains(const IdealHandle& other) const;
  bool same_ideal(const IdealHandle& other) const;
  bool contains_one() const;
  bool is_zero_ideal() const { return groebner().empty(); }

  // True when every generator and quotient relation is homogeneous; lengths
  // are then read off one Gröbner basis instead of one per degree cutoff.
  bool homogeneous_input() const;

  IdealHandle plus(const std::vector<Poly>& more) const;
  IdealHandle plus(const IdealHandle& other) const;
  IdealHandle times(const IdealHandle& other) const;
  IdealHandle power(int k) const;
  IdealHandle intersect(const IdealHandle& other) const;
  // (this : b) and (this : other), as ideals of the same ring.
  IdealHandle colon(const Poly& b) const;
  IdealHandle colon(const IdealHandle& other) const;
  // Colon iterated until stable; throws after 64 rounds.
  IdealHandle saturate(const IdealHandle& other) const;

  // Length of S/(preimage + m^cap), i.e. the number of standard monomials
  // of degree below cap.
  long long capped_length(int cap) const;

  // Length of the localization at the origin, assuming it is finite: the
  // capped lengths are scanned until two consecutive values agree, which
  // certifies stabilization. Throws if no cap below the limit stabilizes.
  long long local_length() const;

  // Values of n -> length of S/(preimage + m^(n+1)) for n = 0..count-1.
  std::vector<long long> length_sequence(int count) const;

 private:
  Ring ring_;
  std::vector<Poly> gens_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Maximal ideal (x_1, .., x_n) of the ambient ring.
IdealHandle maximal_ideal(const Ring& ring);

// Ideal generated by the given polynomials.
inline IdealHandle make_ideal(const Ring& ring, std::vector<Poly> gens) {
  return IdealHandle(ring, std::move(gens));
}

// Number of monomials of degree < cap, in any component, that no leading
// term of the basis divides. Basis leading terms are taken under the
// canonical order.
long long count_standard_below(const Ring& ring, int rank,
                               const std::vector<Vec>& basis, int cap);

}  // namespace gcmlab
