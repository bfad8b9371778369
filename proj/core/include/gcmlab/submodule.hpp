#pragma once

#include <memory>
#include <vector>

#include "gcmlab/groebner.hpp"
#include "gcmlab/ideal.hpp"

namespace gcmlab {

// Submodule of a free module S^rank over the free polynomial ring. Unlike
// IdealHandle, nothing is appended implicitly: callers working over a
// quotient ring must put the relations into the generators themselves.
class Submodule {
 public:
  Submodule() = default;
  Submodule(Ring ring, int rank, std::vector<Vec> gens);

  const Ring& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<Vec>& gens() const { return gens_; }

  // Reduced basis under the canonical order, cached.
  const std::vector<Vec>& groebner() const;

  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  bool contains(const Submodule& other) const;
  bool same_module(const Submodule& other) const;

  // Generators of the relation module of the given generators (not of the
  // reduced basis), as vectors over S^(number of generators).
  std::vector<Vec> syzygies() const;

  // Length of S^rank / (this + m^cap * free part): standard monomials of
  // degree below cap over all components.
  long long capped_quotient_length(int cap) const;

  // Length of the quotient localized at the origin; the capped lengths are
  // scanned until two consecutive values agree. Throws when the quotient is
  // not of finite length at the origin.
  long long local_quotient_length() const;

  std::vector<long long> quotient_length_sequence(int count) const;

  // (this : ideal) inside S^rank: all v with ideal * v contained here.
  Submodule colon_by_ideal(const std::vector<Poly>& ideal_gens) const;

  // Elements killed by a power of the maximal ideal: colon by (x_1..x_n)
  // iterated until stable. Throws after 64 rounds.
  Submodule saturate_by_maximal() const;

 private:
  Ring ring_;
  int rank_ = 0;
  std::vector<Vec> gens_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Kernel of the map S^r -> G/W sending e_i to the class of images[i],
// where the images and the generators of W live in G = S^rank_g.
std::vector<Vec> kernel_into_quotient(const Ring& ring, int rank_g,
                                      const std::vector<Vec>& images,
                                      const std::vector<Vec>& w_gens);

// Relations among the classes of the K generators in K/W, for W inside K:
// a presentation of the subquotient as S^(#K) / (returned relations).
std::vector<Vec> subquotient_relations(const Ring& ring, int ambient_rank,
                                       const std::vector<Vec>& k_gens,
                                       const std::vector<Vec>& w_gens);

// Transpose of the map given by columns: cols[j] is the image of e_j in
// S^target_rank; the result has target_rank columns in S^(#cols).
std::vector<Vec> transpose_map(const Ring& ring, const std::vector<Vec>& cols,
                               int target_rank);

}  // namespace gcmlab
