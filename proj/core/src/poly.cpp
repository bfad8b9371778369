#include "gcmlab/poly.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace gcmlab {

RingData::RingData(PrimeField f, std::vector<std::string> v)
    : field(f), vars(std::move(v)) {}
RingData::~RingData() = default;

Ring Ring::make(std::uint32_t p, std::vector<std::string> vars) {
  if (vars.empty()) throw std::invalid_argument("ring needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw std::invalid_argument("duplicate variable name: " + vars[i]);
  Ring r;
  r.data_ = std::make_shared<RingData>(PrimeField(p), std::move(vars));
  return r;
}

Ring Ring::with_quotient(std::vector<Poly> gens) const {
  auto d = std::make_shared<RingData>(data_->field, data_->vars);
  for (auto& g : gens) {
    if (!g.ring().compatible(*this))
      throw std::invalid_argument("quotient generator from a different ring");
    if (!g.is_zero()) d->quotient.push_back(std::move(g));
  }
  Ring r;
  r.data_ = std::move(d);
  return r;
}

Ring Ring::ambient() const {
  if (!has_quotient()) return *this;
  Ring r;
  r.data_ = std::make_shared<RingData>(data_->field, data_->vars);
  return r;
}

Ring Ring::extended_front(const std::vector<std::string>& extra) const {
  std::vector<std::string> vars = extra;
  vars.insert(vars.end(), data_->vars.begin(), data_->vars.end());
  Ring bigger = Ring::make(data_->field.characteristic(), vars);
  return bigger;
}

bool Ring::compatible(const Ring& o) const {
  if (!data_ || !o.data_) return false;
  if (data_ == o.data_) return true;
  return data_->field == o.data_->field && data_->vars == o.data_->vars;
}

Poly Ring::zero() const { return Poly(*this); }

Poly Ring::constant(coeff_t c) const {
  Poly p(*this);
  if (c % field().characteristic() != 0)
    p = Poly(*this, {Term{field().from_int(c), Monomial(nvars())}});
  return p;
}

Poly Ring::one() const { return constant(1); }

Poly Ring::var(std::size_t i) const {
  if (i >= nvars()) throw std::out_of_range("variable index");
  Monomial m(nvars());
  m.set_exp(i, 1);
  return Poly(*this, {Term{1, m}});
}

Poly Ring::monomial(const Monomial& m, coeff_t c) const {
  if (m.nvars() != nvars()) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return zero();
  return Poly(*this, {Term{c, m}});
}

int Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (data_->vars[i] == name) return (int)i;
  return -1;
}

Poly::Poly(Ring r, std::vector<Term> terms)
    : ring_(std::move(r)), terms_(std::move(terms)) {
  normalize();
}

void Poly::normalize() {
  static const MonomialOrder drl = MonomialOrder::degrevlex();
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return drl.cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  const auto& F = ring_.field();
  for (auto& t : terms_) {
    coeff_t c = t.c % F.characteristic();
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(Term{c, t.m});
    }
  }
  terms_ = std::move(out);
}

int Poly::min_degree() const {
  return terms_.empty() ? INT_MAX : terms_.back().m.degree();
}

Poly Poly::operator+(const Poly& o) const {
  if (!ring_.compatible(o.ring_))
    throw std::invalid_argument("polynomials from incompatible rings");
  static const MonomialOrder drl = MonomialOrder::degrevlex();
  const auto& F = ring_.field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = drl.cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      coeff_t s = F.add(terms_[i].c, o.terms_[j].c);
      if (s != 0) out.push_back(Term{s, terms_[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Poly r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  const auto& F = ring_.field();
  for (auto& t : r.terms_) t.c = F.neg(t.c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(coeff_t c) const {
  const auto& F = ring_.field();
  c = c % F.characteristic();
  if (c == 0) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.c = F.mul(t.c, c);
  return r;
}

Poly Poly::term_mul(coeff_t c, const Monomial& m) const {
  const auto& F = ring_.field();
  if (c == 0) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{F.mul(t.c, c), t.m.mul(m)});
  // multiplying by one monomial preserves the degrevlex ordering of terms
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (!ring_.compatible(o.ring_))
    throw std::invalid_argument("polynomials from incompatible rings");
  Poly acc(ring_);
  if (terms_.empty() || o.terms_.empty()) return acc;
  // multiply by the shorter factor termwise
  const Poly& longer = terms_.size() >= o.terms_.size() ? *this : o;
  const Poly& shorter = terms_.size() >= o.terms_.size() ? o : *this;
  std::vector<Term> all;
  all.reserve(longer.terms_.size() * shorter.terms_.size());
  const auto& F = ring_.field();
  for (const auto& s : shorter.terms_)
    for (const auto& t : longer.terms_)
      all.push_back(Term{F.mul(s.c, t.c), s.m.mul(t.m)});
  return Poly(ring_, std::move(all));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) s += " + ";
    if (t.m.degree() == 0) {
      s += std::to_string(t.c);
    } else if (t.c == 1) {
      s += t.m.str(ring_.vars());
    } else {
      s += std::to_string(t.c) + "*" + t.m.str(ring_.vars());
    }
  }
  return s;
}

Poly Poly::truncated_below(int cap) const {
  Poly r(ring_);
  for (const auto& t : terms_)
    if (t.m.degree() < cap) r.terms_.push_back(t);
  return r;
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.front().m.degree() == terms_.back().m.degree();
}

Poly poly_pow(const Poly& p, unsigned e) {
  Poly r = p.ring().one();
  Poly base = p;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace gcmlab
