#include "gcmlab/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gcmlab {

namespace {
constexpr int kMaxLocalCap = 96;
constexpr int kMaxSaturationRounds = 64;
constexpr int kMaxHomogeneousLayers = 512;

std::string fresh_aux_name(const Ring& ring) {
  std::string name = "@t";
  int k = 0;
  while (ring.var_index(name) >= 0) name = "@t" + std::to_string(++k);
  return name;
}

Poly transport_up(const Poly& p, const Ring& up) {
  // up = original ring with one extra variable in front
  std::vector<Term> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint16_t> e;
    e.reserve(up.nvars());
    e.push_back(0);
    e.insert(e.end(), t.m.exps().begin(), t.m.exps().end());
    ts.push_back(Term{t.c, Monomial(std::move(e))});
  }
  return Poly(up, std::move(ts));
}

Poly transport_down(const Poly& p, const Ring& down) {
  std::vector<Term> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    if (t.m[0] != 0)
      throw std::logic_error("transport_down hit the auxiliary variable");
    std::vector<std::uint16_t> e(t.m.exps().begin() + 1, t.m.exps().end());
    ts.push_back(Term{t.c, Monomial(std::move(e))});
  }
  return Poly(down, std::move(ts));
}

// Intersection of two ideals of the free polynomial ring: eliminate one
// auxiliary variable t from t*A + (1-t)*B.
std::vector<Poly> s_intersect(const Ring& ring, const std::vector<Poly>& A,
                              const std::vector<Poly>& B) {
  if (A.empty() || B.empty()) return {};
  Ring up = ring.extended_front({fresh_aux_name(ring)});
  Poly t = up.var(0);
  Poly one_minus_t = up.one() - t;
  std::vector<Vec> gens;
  for (const auto& a : A)
    gens.push_back(Vec::embed(t * transport_up(a, up), 1, 0));
  for (const auto& b : B)
    gens.push_back(Vec::embed(one_minus_t * transport_up(b, up), 1, 0));
  GBOptions opt;
  opt.order = MonomialOrder::elim(1);
  GBResult gb = buchberger(up, 1, gens, opt);
  std::vector<Poly> out;
  for (const auto& v : gb.basis) {
    Poly g = v.component(0);
    bool free_of_t = true;
    for (const auto& term : g.terms())
      if (term.m[0] != 0) {
        free_of_t = false;
        break;
      }
    if (free_of_t) out.push_back(transport_down(g, ring));
  }
  return out;
}

// Exact division by a single polynomial; the dividend must be a multiple.
Poly exact_divide(const Poly& w, const Poly& b) {
  Division d = divide_by(Vec::embed(w, 1, 0), {Vec::embed(b, 1, 0)},
                         MonomialOrder::degrevlex());
  if (!d.remainder.is_zero())
    throw std::logic_error("exact division left a remainder");
  return d.quotients[0];
}

std::vector<Vec> as_vecs(const std::vector<Poly>& ps) {
  std::vector<Vec> vs;
  vs.reserve(ps.size());
  for (const auto& p : ps) vs.push_back(Vec::embed(p, 1, 0));
  return vs;
}

}  // namespace

struct IdealHandle::Cache {
  std::mutex mu;
  bool have_gb = false;
  std::vector<Poly> gb;
  int homogeneous = -1;  // lazy tri-state
  std::map<int, long long> capped;
  long long local_len = -1;
};

IdealHandle::IdealHandle(Ring ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.ring().compatible(ring_))
      throw std::invalid_argument("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::vector<Poly> IdealHandle::effective_gens() const {
  std::vector<Poly> all = gens_;
  for (const auto& q : ring_.quotient()) all.push_back(q);
  return all;
}

const std::vector<Poly>& IdealHandle::groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->have_gb) {
    GBResult r = buchberger(ring_, 1, as_vecs(effective_gens()), GBOptions{});
    cache_->gb.clear();
    for (const auto& v : r.basis) cache_->gb.push_back(v.component(0));
    cache_->have_gb = true;
  }
#ifndef NDEBUG
  else {
    // paranoia on cache hits: every generator must still reduce to zero
    for (const auto& g : effective_gens()) {
      Vec nf = normal_form(Vec::embed(g, 1, 0), as_vecs(cache_->gb),
                           MonomialOrder::degrevlex());
      if (!nf.is_zero()) throw std::logic_error("ideal cache is inconsistent");
    }
  }
#endif
  return cache_->gb;
}

Poly IdealHandle::reduce(const Poly& f) const {
  Vec nf = normal_form(Vec::embed(f, 1, 0), as_vecs(groebner()),
                       MonomialOrder::degrevlex());
  return nf.component(0);
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool IdealHandle::same_ideal(const IdealHandle& other) const {
  // reduced bases under one fixed order are canonical
  return groebner() == other.groebner();
}

bool IdealHandle::contains_one() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].degree() == 0;
}

bool IdealHandle::homogeneous_input() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->homogeneous < 0) {
    bool h = true;
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) {
        h = false;
        break;
      }
    if (h)
      for (const auto& q : ring_.quotient())
        if (!q.is_homogeneous()) {
          h = false;
          break;
        }
    cache_->homogeneous = h ? 1 : 0;
  }
  return cache_->homogeneous == 1;
}

IdealHandle IdealHandle::plus(const std::vector<Poly>& more) const {
  std::vector<Poly> gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return IdealHandle(ring_, std::move(gens));
}

IdealHandle IdealHandle::plus(const IdealHandle& other) const {
  if (!ring_.compatible(other.ring_))
    throw std::invalid_argument("ideal sum across different rings");
  return plus(other.gens_);
}

IdealHandle IdealHandle::times(const IdealHandle& other) const {
  if (!ring_.compatible(other.ring_))
    throw std::invalid_argument("ideal product across different rings");
  std::vector<Poly> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) gens.push_back(a * b);
  return IdealHandle(ring_, std::move(gens));
}

namespace {
// All products of exactly `left` generators (with repetition) drawn from
// base[from..], one polynomial per multiset.
void power_rec(const std::vector<Poly>& base, std::size_t from, int left,
               const Poly& acc, std::vector<Poly>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  if (from >= base.size()) return;
  Poly cur = acc;
  for (int e = 0; e <= left; ++e) {
    if (e > 0) cur = cur * base[from];
    power_rec(base, from + 1, left - e, cur, out);
  }
}
}  // namespace

IdealHandle IdealHandle::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  if (k == 0) return IdealHandle(ring_, {ring_.one()});
  std::vector<Poly> gens;
  if (!gens_.empty()) power_rec(gens_, 0, k, ring_.one(), gens);
  return IdealHandle(ring_, std::move(gens));
}

IdealHandle IdealHandle::intersect(const IdealHandle& other) const {
  if (!ring_.compatible(other.ring_))
    throw std::invalid_argument("ideal intersection across different rings");
  return IdealHandle(
      ring_, s_intersect(ring_.ambient(), effective_gens(), other.effective_gens()));
}

IdealHandle IdealHandle::colon(const Poly& b) const {
  if (!b.ring().compatible(ring_))
    throw std::invalid_argument("colon divisor from a different ring");
  if (b.is_zero()) return IdealHandle(ring_, {ring_.one()});
  auto inter = s_intersect(ring_.ambient(), effective_gens(), {b});
  std::vector<Poly> out;
  out.reserve(inter.size());
  for (const auto& w : inter) out.push_back(exact_divide(w, b));
  return IdealHandle(ring_, std::move(out));
}

IdealHandle IdealHandle::colon(const IdealHandle& other) const {
  if (!ring_.compatible(other.ring_))
    throw std::invalid_argument("ideal colon across different rings");
  if (other.gens_.empty()) return IdealHandle(ring_, {ring_.one()});
  IdealHandle acc = colon(other.gens_[0]);
  for (std::size_t i = 1; i < other.gens_.size(); ++i)
    acc = acc.intersect(colon(other.gens_[i]));
  return acc;
}

IdealHandle IdealHandle::saturate(const IdealHandle& other) const {
  IdealHandle prev = *this;
  for (int round = 0; round < kMaxSaturationRounds; ++round) {
    IdealHandle next = prev.colon(other);
    if (next.same_ideal(prev)) return prev;
    prev = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize within 64 rounds");
}

long long IdealHandle::capped_length(int cap) const {
  if (cap < 0) throw std::invalid_argument("negative degree cutoff");
  if (cap == 0) return 0;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->capped.find(cap);
    if (it != cache_->capped.end()) return it->second;
  }
  long long n;
  if (homogeneous_input()) {
    n = count_standard_below(ring_, 1, as_vecs(groebner()), cap);
  } else {
    GBOptions opt;
    opt.modulo_degree = cap;
    GBResult r = buchberger(ring_, 1, as_vecs(effective_gens()), opt);
    n = count_standard_below(ring_, 1, r.basis, cap);
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->capped[cap] = n;
  return n;
}

long long IdealHandle::local_length() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->local_len >= 0) return cache_->local_len;
  }
  long long result = -1;
  if (homogeneous_input()) {
    // finite length needs a pure power of every variable among the leading
    // terms; after that, standard monomials vanish past the first empty layer
    std::vector<bool> covered(ring_.nvars(), false);
    for (const auto& g : groebner()) {
      const Monomial& l = g.terms().front().m;
      int support = -1;
      for (std::size_t i = 0; i < ring_.nvars(); ++i)
        if (l[i] != 0) {
          support = support < 0 ? (int)i : -2;
          if (support == -2) break;
        }
      if (l.degree() == 0)
        for (std::size_t i = 0; i < ring_.nvars(); ++i) covered[i] = true;
      if (support >= 0) covered[(std::size_t)support] = true;
    }
    for (std::size_t i = 0; i < ring_.nvars(); ++i)
      if (!covered[i])
        throw std::runtime_error(
            "local length did not stabilize: quotient has positive dimension");
    long long total = 0;
    bool stabilized = false;
    for (int d = 0; d < kMaxHomogeneousLayers; ++d) {
      long long layer = capped_length(d + 1) - capped_length(d);
      if (layer == 0) {
        stabilized = true;
        break;
      }
      total += layer;
    }
    if (!stabilized)
      throw std::runtime_error(
          "local length did not stabilize: quotient has positive dimension");
    result = total;
  } else {
    long long prev = capped_length(1);
    bool stabilized = false;
    for (int c = 2; c <= kMaxLocalCap; ++c) {
      long long cur = capped_length(c);
      if (cur == prev) {
        stabilized = true;
        break;
      }
      prev = cur;
    }
    if (!stabilized)
      throw std::runtime_error(
          "local length did not stabilize: quotient not of finite length at "
          "the origin");
    result = prev;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->local_len = result;
  return result;
}

std::vector<long long> IdealHandle::length_sequence(int count) const {
  std::vector<long long> out;
  out.reserve((std::size_t)std::max(count, 0));
  for (int n = 0; n < count; ++n) out.push_back(capped_length(n + 1));
  return out;
}

IdealHandle maximal_ideal(const Ring& ring) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.var(i));
  return IdealHandle(ring, std::move(vars));
}

long long count_standard_below(const Ring& ring, int rank,
                               const std::vector<Vec>& basis, int cap) {
  std::vector<std::vector<Monomial>> lts((std::size_t)rank);
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    const VTerm& lt = b.terms().front();  // canonical order leading term
    if (lt.m.degree() < cap) lts[(std::size_t)lt.comp].push_back(lt.m);
  }
  auto monos = monomials_below(ring.nvars(), cap);
  long long count = 0;
  for (int c = 0; c < rank; ++c) {
    const auto& ls = lts[(std::size_t)c];
    for (const auto& m : monos) {
      bool divisible = false;
      for (const auto& l : ls)
        if (l.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) ++count;
    }
  }
  return count;
}

}  // namespace gcmlab
