#pragma once

#include <vector>

#include "gcmlab/homology.hpp"
#include "gcmlab/rand.hpp"

namespace gcmlab {

// The numerical profile of a module at the origin. The cohomology lengths
// run over 0..dim-1; -1 marks an infinite one, and then gcm is false and
// buchsbaum/hdeg are carried as -1 too.
struct InvariantReport {
  int dim = 0;
  int depth = 0;
  std::vector<long long> lc;
  long long e = 0;
  long long buchsbaum = 0;
  long long hdeg = 0;
  bool gcm = false;
  bool cm = false;
};

// The module with the extra generators folded into its relations.
LocalModule quotient_by(const LocalModule& m, const std::vector<Poly>& gens);

// n -> length of m / j^(n+1) m at the origin, fitted. The quotient by j
// must be zero-dimensional at the origin.
HilbertData hilbert_samuel(const LocalModule& m, const IdealHandle& j);

InvariantReport invariant_report(const LocalModule& m);

// Each element cuts the local dimension by exactly one.
bool is_part_of_sop(const LocalModule& m, const std::vector<Poly>& seq);

// Every colon quotient ((prior)m : x_i) / (prior)m has finite length.
bool is_filter_regular(const LocalModule& m, const std::vector<Poly>& seq);

struct StandardCheck {
  bool standard = false;
  long long gap = 0;      // length of m/jm minus the multiplicity of j
  long long e_j = 0;      // multiplicity of j on m
  long long len_mod_j = 0;
};

// A parameter ideal is standard when its length-multiplicity gap attains
// the Buchsbaum invariant. Requires dim(m) generators forming a sop.
StandardCheck standard_check(const LocalModule& m, const IdealHandle& j);

// The eventual value of n -> length of m / j^(n+1) m for a standard
// parameter ideal j with multiplicity e_j, evaluated from the cohomology
// lengths alone.
long long predicted_standard_hf(const InvariantReport& rep, long long e_j,
                                int n);

struct ReductionResult {
  std::vector<Poly> forms;  // dim(m) linear forms spanning the reduction
  int r = 0;                // least k with (forms) m^k m = m^(k+1) m
};

// Samples generic linear forms until they reduce the maximal ideal on m.
ReductionResult minimal_reduction(const LocalModule& m, Rng& rng,
                                  int max_attempts = 8);

// Least k <= cap with (forms) m^k m = m^(k+1) m, or -1 when none is.
int reduction_number(const LocalModule& m, const std::vector<Poly>& forms,
                     int cap);

}  // namespace gcmlab
