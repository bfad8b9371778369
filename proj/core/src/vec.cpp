#include "gcmlab/vec.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace gcmlab {

namespace {
const ModuleOrder kCanon{};
}

Vec::Vec(Ring r, int rank, std::vector<VTerm> terms)
    : ring_(std::move(r)), rank_(rank), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.comp < 0 || t.comp >= rank_)
      throw std::out_of_range("module term component out of range");
  std::sort(terms_.begin(), terms_.end(),
            [](const VTerm& a, const VTerm& b) { return kCanon.cmp(a, b) > 0; });
  std::vector<VTerm> out;
  out.reserve(terms_.size());
  const auto& F = ring_.field();
  for (auto& t : terms_) {
    coeff_t c = t.c % F.characteristic();
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(VTerm{c, t.m, t.comp});
    }
  }
  terms_ = std::move(out);
}

Vec Vec::unit(const Ring& r, int rank, int comp) {
  return Vec(r, rank, {VTerm{1, Monomial(r.nvars()), comp}});
}

Vec Vec::embed(const Poly& p, int rank, int comp) {
  std::vector<VTerm> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) ts.push_back(VTerm{t.c, t.m, comp});
  return Vec(p.ring(), rank, std::move(ts));
}

int Vec::min_degree() const {
  int d = INT_MAX;
  for (const auto& t : terms_) d = std::min(d, t.m.degree());
  return d;
}

int Vec::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

Vec Vec::operator+(const Vec& o) const {
  if (!ring_.compatible(o.ring_) || rank_ != o.rank_)
    throw std::invalid_argument("vectors from different modules");
  const auto& F = ring_.field();
  std::vector<VTerm> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kCanon.cmp(terms_[i], o.terms_[j]);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      coeff_t s = F.add(terms_[i].c, o.terms_[j].c);
      if (s != 0) out.push_back(VTerm{s, terms_[i].m, terms_[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Vec r(ring_, rank_);
  r.terms_ = std::move(out);
  return r;
}

Vec Vec::operator-() const {
  Vec r(*this);
  const auto& F = ring_.field();
  for (auto& t : r.terms_) t.c = F.neg(t.c);
  return r;
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::scaled(coeff_t c) const {
  const auto& F = ring_.field();
  c = c % F.characteristic();
  if (c == 0) return Vec(ring_, rank_);
  Vec r(*this);
  for (auto& t : r.terms_) t.c = F.mul(t.c, c);
  return r;
}

Vec Vec::term_mul(coeff_t c, const Monomial& m) const {
  const auto& F = ring_.field();
  if (c == 0) return Vec(ring_, rank_);
  Vec r(ring_, rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(VTerm{F.mul(t.c, c), t.m.mul(m), t.comp});
  // one monomial multiple keeps the canonical ordering intact
  return r;
}

Vec Vec::poly_mul(const Poly& p) const {
  Vec acc(ring_, rank_);
  for (const auto& t : p.terms()) acc = acc + term_mul(t.c, t.m);
  return acc;
}

Poly Vec::component(int comp) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == comp) ts.push_back(Term{t.c, t.m});
  return Poly(ring_, std::move(ts));
}

Vec Vec::head_components(int k) const {
  Vec r(ring_, k);
  for (const auto& t : terms_)
    if (t.comp < k) r.terms_.push_back(t);
  return r;
}

Vec Vec::tail_components(int k) const {
  Vec r(ring_, rank_ - k);
  for (const auto& t : terms_)
    if (t.comp >= k) r.terms_.push_back(VTerm{t.c, t.m, t.comp - k});
  return r;
}

bool Vec::operator==(const Vec& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].comp != o.terms_[i].comp ||
        terms_[i].m != o.terms_[i].m)
      return false;
  return true;
}

std::string Vec::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) s += " + ";
    if (t.c != 1 || t.m.degree() == 0) s += std::to_string(t.c);
    if (t.m.degree() > 0) {
      if (t.c != 1) s += "*";
      s += t.m.str(ring_.vars());
    }
    s += "<" + std::to_string(t.comp) + ">";
  }
  return s;
}

}  // namespace gcmlab
