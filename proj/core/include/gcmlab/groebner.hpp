#pragma once

#include <vector>

#include "gcmlab/vec.hpp"

namespace gcmlab {

struct GBOptions {
  MonomialOrder order = MonomialOrder::degrevlex();

  // Track representations of every basis element over the inputs and emit
  // the relations found at zero reductions. The result's syzygies then
  // generate the full relation module of the input vectors. Tracking mode
  // processes every same-component pair and applies no pair criteria.
  bool track_syzygies = false;

  // When >= 1, every monomial of this exact degree is adjoined in every
  // component, so the computation runs modulo that power of the maximal
  // ideal. Terms at or above the cutoff vanish. Incompatible with tracking.
  int modulo_degree = -1;

  // Inter-reduce and tail-reduce the final basis (ignored when tracking,
  // where the basis must keep the inputs at their original indices).
  bool reduced = true;
};

struct GBResult {
  std::vector<Vec> basis;
  std::vector<Vec> syzygies;  // rank = number of inputs; tracking mode only
};

// Buchberger over S^rank with position-over-term order on components and
// the given ring order on monomials. Inputs may be zero or duplicated.
GBResult buchberger(const Ring& ring, int rank, const std::vector<Vec>& gens,
                    const GBOptions& opt = {});

// Full normal form (head and tail) of v against a basis. With
// modulo_degree >= 1 every term at or above the cutoff is dropped as well.
Vec normal_form(const Vec& v, const std::vector<Vec>& basis,
                const MonomialOrder& order, int modulo_degree = -1);

struct Division {
  Vec remainder;
  std::vector<Poly> quotients;  // one per basis element
};

// Division with quotients: v = sum quotients[k] * basis[k] + remainder.
Division divide_by(const Vec& v, const std::vector<Vec>& basis,
                   const MonomialOrder& order);

// Leading term under the given order; v must be nonzero.
VTerm leading_term(const Vec& v, const ModuleOrder& order);

}  // namespace gcmlab
