#pragma once

#include <memory>
#include <vector>

#include "gcmlab/hilbert.hpp"
#include "gcmlab/ideal.hpp"
#include "gcmlab/submodule.hpp"

namespace gcmlab {

struct Resolution;

// Finitely presented module S^rank / <relations>, studied locally at the
// origin. Nothing is appended implicitly: a module over a quotient ring
// must carry the ring relations inside its presentation, which cyclic()
// does for R/I.
class LocalModule {
 public:
  LocalModule() = default;
  LocalModule(Ring ring, int rank, std::vector<Vec> relations);

  // S/(ideal + quotient relations of its ring), as a rank-one presentation.
  static LocalModule cyclic(const IdealHandle& ideal);

  const Ring& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<Vec>& relations() const { return relations_; }

  // The relation submodule, with its cached basis and length machinery.
  const Submodule& relation_module() const;

 private:
  Ring ring_;
  int rank_ = 0;
  std::vector<Vec> relations_;

  struct Cache;
  std::shared_ptr<Cache> cache_;

  friend Resolution free_resolution(const LocalModule&, int);
  friend LocalModule ext_module(const LocalModule&, int);
  friend HilbertData module_hilbert(const LocalModule&);
  friend long long finite_length(const LocalModule&);
  friend long long lc_length(const LocalModule&, int);
  friend int module_dim(const LocalModule&);
  friend int module_depth(const LocalModule&);
};

// A pruned free resolution prefix .. -> S^ranks[1] -> S^ranks[0] with
// cokernel isomorphic to the module; maps[i] holds the columns of the map
// landing in S^ranks[i]. Trivial summands are split off as the chain is
// built, so ranks[0] can be smaller than the presentation rank. When
// `complete` is set the next map would be zero and the resolution ends.
struct Resolution {
  std::vector<int> ranks;
  std::vector<std::vector<Vec>> maps;
  bool complete = false;
};

// At least `steps` maps, fewer only when the resolution ends earlier.
Resolution free_resolution(const LocalModule& m, int steps);

// The j-th right derived module of hom(-, S), presented by generators and
// relations. The zero module comes back as one generator with a unit
// relation.
LocalModule ext_module(const LocalModule& m, int j);

// Length of the localization at the origin, or -1 when it is infinite.
long long finite_length(const LocalModule& m);

// Values of n -> length of m / (maximal ideal)^(n+1) * m, fitted.
HilbertData module_hilbert(const LocalModule& m);

// Length of the i-th local cohomology at the origin (-1 when infinite),
// read off ext into S in complementary degree.
long long lc_length(const LocalModule& m, int i);

// Local dimension at the origin; -1 for the zero module.
int module_dim(const LocalModule& m);

// Depth at the origin: least i below the dimension with nonvanishing local
// cohomology, the dimension itself when there is none, -1 for zero.
int module_depth(const LocalModule& m);

// Submodule of elements killed by a power of the maximal ideal, as its own
// presentation.
LocalModule gamma_m(const LocalModule& m);

}  // namespace gcmlab
