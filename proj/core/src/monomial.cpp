#include "gcmlab/monomial.hpp"

#include <stdexcept>

namespace gcmlab {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  int d = 0;
  for (auto e : exps_) d += e;
  deg_ = d;
}

Monomial Monomial::mul(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    unsigned s = (unsigned)exps_[i] + o.exps_[i];
    if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = (std::uint16_t)s;
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - o.exps_[i];
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  int d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    d += r.exps_[i];
  }
  r.deg_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
  if (deg_ == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s;
}

int cmp_degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                        std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  // Equal degree: the last variable where they differ decides, and the
  // one with the smaller exponent there is the larger monomial.
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::Degrevlex) return cmp_degrevlex_range(a, b, 0, a.nvars());
  int c = cmp_degrevlex_range(a, b, 0, (std::size_t)block);
  if (c != 0) return c;
  return cmp_degrevlex_range(a, b, (std::size_t)block, a.nvars());
}

namespace {
void enum_rec(std::size_t nvars, std::size_t i, int left, Monomial& cur,
              std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    cur.set_exp(i, (std::uint16_t)left);
    out.push_back(cur);
    cur.set_exp(i, 0);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.set_exp(i, (std::uint16_t)e);
    enum_rec(nvars, i + 1, left - e, cur, out);
  }
  cur.set_exp(i, 0);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  Monomial cur(nvars);
  enum_rec(nvars, 0, deg, cur, out);
  return out;
}

std::vector<Monomial> monomials_below(std::size_t nvars, int cap) {
  std::vector<Monomial> out;
  for (int d = 0; d < cap; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace gcmlab
