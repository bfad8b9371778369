#pragma once

#include <string>
#include <vector>

#include "gcmlab/poly.hpp"

namespace gcmlab {

struct VTerm {
  coeff_t c;
  Monomial m;
  int comp;
};

// Order on module terms: position over term, lower component wins, ties
// broken by the ring order within a component.
struct ModuleOrder {
  MonomialOrder ring_order = MonomialOrder::degrevlex();

  int cmp(const VTerm& a, const VTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ring_order.cmp(a.m, b.m);
  }
};

// Element of a free module S^rank. Terms are kept strictly descending in
// the position-over-term degrevlex order and coefficients nonzero, same
// canonical shape as Poly.
class Vec {
 public:
  Vec() = default;
  Vec(Ring r, int rank) : ring_(std::move(r)), rank_(rank) {}
  Vec(Ring r, int rank, std::vector<VTerm> terms);  // normalizes

  static Vec unit(const Ring& r, int rank, int comp);
  static Vec embed(const Poly& p, int rank, int comp);

  const Ring& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Least total degree over all terms; INT_MAX for zero.
  int min_degree() const;
  int max_degree() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(coeff_t c) const;
  Vec term_mul(coeff_t c, const Monomial& m) const;
  Vec poly_mul(const Poly& p) const;

  Poly component(int comp) const;
  // Restriction to components [0, k), reinterpreted in S^k.
  Vec head_components(int k) const;
  // Drops the first k components and shifts the rest down.
  Vec tail_components(int k) const;

  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Ring ring_;
  int rank_ = 0;
  std::vector<VTerm> terms_;
};

}  // namespace gcmlab
