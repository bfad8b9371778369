#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gcmlab/field.hpp"
#include "gcmlab/monomial.hpp"

namespace gcmlab {

class Poly;

// A ring is F_p[x_1..x_n] plus an optional list of quotient relations.
// Polynomials are always plain elements of the free polynomial ring;
// the quotient generators are appended by every ideal-level computation,
// so an ideal of S/Q is handled as its preimage in S.
struct RingData {
  PrimeField field;
  std::vector<std::string> vars;
  std::vector<Poly> quotient;

  RingData(PrimeField f, std::vector<std::string> v);
  ~RingData();
};

class Ring {
 public:
  Ring() = default;

  static Ring make(std::uint32_t p, std::vector<std::string> vars);

  // Same ambient ring with quotient relations attached.
  Ring with_quotient(std::vector<Poly> gens) const;
  // The ambient ring, quotient relations dropped.
  Ring ambient() const;
  // Ambient ring extended by extra variables (placed first), quotient kept.
  Ring extended_front(const std::vector<std::string>& extra) const;

  const PrimeField& field() const { return data_->field; }
  std::size_t nvars() const { return data_->vars.size(); }
  const std::vector<std::string>& vars() const { return data_->vars; }
  const std::vector<Poly>& quotient() const { return data_->quotient; }
  bool has_quotient() const { return !data_->quotient.empty(); }

  // Rings are compatible when characteristic and variable list agree;
  // quotient relations do not enter (all polys live in the free ring).
  bool compatible(const Ring& o) const;

  Poly zero() const;
  Poly one() const;
  Poly constant(coeff_t c) const;
  Poly var(std::size_t i) const;
  Poly monomial(const Monomial& m, coeff_t c = 1) const;

  int var_index(const std::string& name) const;  // -1 when absent

  bool valid() const { return (bool)data_; }

 private:
  std::shared_ptr<const RingData> data_;
};

struct Term {
  coeff_t c;
  Monomial m;
};

// Polynomial with terms kept strictly descending in degrevlex and all
// coefficients nonzero. Every public operation restores this invariant.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring r) : ring_(std::move(r)) {}
  Poly(Ring r, std::vector<Term> terms);  // normalizes

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Total degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }
  // Order at the origin: least total degree of a term; INT_MAX for zero.
  int min_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(coeff_t c) const;
  Poly term_mul(coeff_t c, const Monomial& m) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;

  // Drops every term of total degree >= cap.
  Poly truncated_below(int cap) const;

  bool is_homogeneous() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;

  void normalize();
};

Poly poly_pow(const Poly& p, unsigned e);

}  // namespace gcmlab
