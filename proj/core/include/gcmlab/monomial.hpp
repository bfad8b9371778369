#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gcmlab {

// Exponent vector with cached total degree. The number of variables is
// fixed per ring; all monomials flowing through one computation share it.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return deg_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }

  void set_exp(std::size_t i, std::uint16_t e) {
    deg_ += (int)e - (int)exps_[i];
    exps_[i] = e;
  }

  Monomial mul(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial divide(const Monomial& o) const;  // this / o, assumes o | this
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  const std::vector<std::uint16_t>& exps() const { return exps_; }

  std::string str(const std::vector<std::string>& vars) const;

 private:
  std::vector<std::uint16_t> exps_;
  int deg_ = 0;
};

enum class OrderKind { Degrevlex, Block };

// Term order on monomials. Degrevlex: degree first, ties broken by the
// last nonzero entry of a-b being negative. Block: degrevlex on the first
// `block` variables, then degrevlex on the rest; eliminates the first
// `block` variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Degrevlex;
  int block = 0;

  static MonomialOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
  static MonomialOrder elim(int first_vars) { return {OrderKind::Block, first_vars}; }

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Monomial& a, const Monomial& b) const;
};

// Degrevlex comparison on a slice [lo, hi) of the exponent vectors.
int cmp_degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                        std::size_t hi);

// All monomials of the exact total degree, lexicographic generation order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg);

// All monomials of total degree < cap.
std::vector<Monomial> monomials_below(std::size_t nvars, int cap);

}  // namespace gcmlab
