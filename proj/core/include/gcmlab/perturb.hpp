#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcmlab/invariants.hpp"

namespace gcmlab {

// A lab input that violates a mathematical precondition (as opposed to a
// file that cannot be read at all). Carries the violated invariant.
struct semantic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  Ring ring;              // R, possibly a quotient ring
  std::vector<Poly> seq;  // f_1 .. f_r, part of a sop on R
  std::string label;
};

// Validates the lab preconditions: R nonzero and generalized Cohen-Macaulay
// at the origin, r <= dim R, and the sequence a part of a sop. Throws
// semantic_error naming the violated invariant.
Instance make_instance(Ring ring, std::vector<Poly> seq, std::string label);

LocalModule ring_module(const Instance& inst);      // R as a module
LocalModule quotient_module(const Instance& inst);  // R/(f_1..f_r)

// Perturbation depths guaranteed by the invariant profiles of R and R/I,
// with s = dim R - r. Fields not applicable to the instance are -1.
struct BoundSet {
  int s = 0;
  long long n_hf = 0;           // Hilbert function match, general case
  long long n_hf_improved = 0;  // sharper variant off the Cohen-Macaulay locus
  long long n_hf_cm = -1;       // Cohen-Macaulay variant
  long long n_lc = 0;           // cohomology length match
  long long n_sop = 0;          // sop preservation
  long long n_r1_lc = -1;       // shallow single-element cohomology match
  long long k_reduction = 0;    // reduction transfer level
  long long t = 1;              // power feeding the structure identities
};

BoundSet compute_bounds(const InvariantReport& rep_r,
                        const InvariantReport& rep_q, int r);
BoundSet compute_bounds(const Instance& inst);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct TrialReport {
  int index = 0;
  std::uint64_t seed = 0;
  bool adversarial = false;  // deterministic worst-case member of the family
  bool skipped = false;      // filtered out, not counted toward the verdict
  std::vector<Poly> eps;
  std::vector<CheckResult> checks;
  bool pass = true;
  std::vector<long long> len_base, len_pert;  // per-n length tables
  std::vector<long long> lc_base, lc_pert;    // per-i cohomology tables
};

struct VerifyReport {
  std::string mode;
  long long level = 0;  // perturbation depth in force
  bool pass = true;
  std::vector<TrialReport> trials;
};

struct LabOptions {
  long long n = -1;  // perturbation depth; -1 = the bound for the mode
  int trials = 20;
  std::uint64_t seed = 1;
  int threads = 1;
  int n_max = -1;      // hf horizon override; -1 = through both postulations
  bool r1_mode = false;  // lc: shallow single-element mode with sop filter
};

// The perturbed sequences f + eps with every eps_i in m^n; entry 0 is the
// unperturbed sequence, later entries independent draws forked by index.
std::vector<std::vector<Poly>> sample_family(const Instance& inst, int n,
                                             int trials, const Rng& rng);

VerifyReport verify_hf(const Instance& inst, const LabOptions& opt);
VerifyReport verify_lc(const Instance& inst, const LabOptions& opt);
VerifyReport verify_sop(const Instance& inst, const LabOptions& opt);
VerifyReport verify_structures(const Instance& inst, const LabOptions& opt);

struct SearchResult {
  long long n_emp = 1;
  bool certified = false;    // a failing trial exists one level below
  VerifyReport pass_level;   // the run at n_emp
  VerifyReport fail_level;   // the run at n_emp - 1 when certified
};

// Decreasing scan from the guaranteed bound; Monte Carlo, no completeness
// claim. Forces at least 10 nonzero trials per level.
SearchResult search_min_n(const Instance& inst, const LabOptions& opt);

Instance generate_two_planes(int c, std::uint32_t p = 32003);
Instance generate_complete_intersection(const std::vector<int>& degs,
                                        std::uint64_t seed = 1,
                                        std::uint32_t p = 32003);
Instance generate_monomial_curve(const std::vector<int>& exps,
                                 std::uint32_t p = 32003);

}  // namespace gcmlab
