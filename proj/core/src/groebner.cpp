#include "gcmlab/groebner.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace gcmlab {

namespace {

// Engine-internal element: terms sorted strictly descending by the engine
// order. Vec keeps the canonical order, so elements are re-sorted on entry
// and handed back through the normalizing Vec constructor on exit.
using ETerms = std::vector<VTerm>;

ETerms sort_terms(std::vector<VTerm> ts, const ModuleOrder& ord) {
  std::sort(ts.begin(), ts.end(),
            [&](const VTerm& a, const VTerm& b) { return ord.cmp(a, b) > 0; });
  return ts;
}

// dst[from..] + c * x^m * src, merging two sorted term lists. A cap >= 0
// drops product terms at or above that total degree.
ETerms axpy(const ETerms& dst, std::size_t from, coeff_t c, const Monomial& m,
            const ETerms& src, const ModuleOrder& ord, const PrimeField& F,
            int cap) {
  ETerms scaled;
  scaled.reserve(src.size());
  for (const auto& t : src) {
    Monomial prod = t.m.mul(m);
    if (cap >= 0 && prod.degree() >= cap) continue;
    scaled.push_back(VTerm{F.mul(t.c, c), std::move(prod), t.comp});
  }
  ETerms out;
  out.reserve(dst.size() - from + scaled.size());
  std::size_t i = from, j = 0;
  while (i < dst.size() && j < scaled.size()) {
    int cm = ord.cmp(dst[i], scaled[j]);
    if (cm > 0) {
      out.push_back(dst[i++]);
    } else if (cm < 0) {
      out.push_back(scaled[j++]);
    } else {
      coeff_t s = F.add(dst[i].c, scaled[j].c);
      if (s != 0) out.push_back(VTerm{s, dst[i].m, dst[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < dst.size(); ++i) out.push_back(dst[i]);
  for (; j < scaled.size(); ++j) out.push_back(scaled[j]);
  return out;
}

struct Elem {
  ETerms f;            // monic: leading coefficient 1
  ETerms rep;          // representation over the inputs, canonical order
  bool synth = false;  // synthesized cutoff generator
  int tail_min = INT_MAX;  // least degree among non-leading terms
};

struct PairEntry {
  Monomial lcm;
  int deg;
  int comp;
  int i, j;  // i < j
};

struct Engine {
  const Ring& ring;
  int rank;
  GBOptions opt;
  ModuleOrder ord;
  ModuleOrder canon;  // for representations
  const PrimeField& F;
  int cap;  // modulo_degree

  std::vector<Elem> G;
  std::vector<int> poly_idx;  // indices of ordinary basis elements
  std::vector<int> mono_idx;  // indices of synthesized cutoff generators
  std::vector<ETerms> syz;
  std::unordered_set<std::uint64_t> processed;

  struct PairAfter {
    const Engine* e;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
      // true when a comes after b (priority_queue keeps its max on top)
      if (a.deg != b.deg) return a.deg > b.deg;
      int c = e->ord.ring_order.cmp(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.comp != b.comp) return a.comp > b.comp;
      if (a.i != b.i) return a.i > b.i;
      return a.j > b.j;
    }
  };
  std::priority_queue<PairEntry, std::vector<PairEntry>, PairAfter> pairs;

  Engine(const Ring& r, int rk, const GBOptions& o)
      : ring(r),
        rank(rk),
        opt(o),
        ord{o.order},
        canon{},
        F(r.field()),
        cap(o.modulo_degree),
        pairs(PairAfter{this}) {
    if (opt.track_syzygies && cap >= 0)
      throw std::logic_error("syzygy tracking cannot run modulo a degree cutoff");
    if (cap == 0)
      throw std::invalid_argument("degree cutoff must be at least 1");
  }

  static std::uint64_t key(int i, int j) {
    return ((std::uint64_t)(std::uint32_t)i << 32) | (std::uint32_t)j;
  }

  // Every term of the S-vector of a and b lands at or above the cutoff, so
  // it vanishes modulo the synthesized generators.
  bool clip_skip(const Elem& a, const Elem& b, const Monomial& L) const {
    if (cap < 0) return false;
    long long la = a.tail_min == INT_MAX
                       ? LLONG_MAX
                       : (long long)L.degree() - a.f.front().m.degree() + a.tail_min;
    long long lb = b.tail_min == INT_MAX
                       ? LLONG_MAX
                       : (long long)L.degree() - b.f.front().m.degree() + b.tail_min;
    return std::min(la, lb) >= cap;
  }

  // Pairs whose S-vector is zero or reduces to zero without inspection.
  // These never enter the queue and count as handled for the chain test.
  bool auto_done(int i, int j) const {
    if (opt.track_syzygies) return false;
    const Elem& a = G[i];
    const Elem& b = G[j];
    const VTerm& la = a.f.front();
    const VTerm& lb = b.f.front();
    if (la.comp != lb.comp) return true;
    if (a.f.size() == 1 && b.f.size() == 1) return true;
    if (rank == 1 && la.m.coprime(lb.m)) return true;
    return clip_skip(a, b, la.m.lcm(lb.m));
  }

  bool done(int i, int j) const {
    if (i > j) std::swap(i, j);
    return processed.count(key(i, j)) != 0 || auto_done(i, j);
  }

  void push_pair(Monomial L, int comp, int i, int j) {
    int d = L.degree();
    pairs.push(PairEntry{std::move(L), d, comp, i, j});
  }

  // Queues the border pairs of an element against the synthesized cutoff
  // generators. Distinct pairs sharing one lcm are interchangeable (the
  // others follow by the chain test), so one per lcm is kept.
  void pair_with_monos(int fi) {
    if (G[fi].f.size() == 1) return;  // S-vector of two monomials is zero
    const VTerm& lf = G[fi].f.front();
    std::map<std::vector<std::uint16_t>, int> seen;
    for (int mi : mono_idx) {
      const VTerm& lm = G[mi].f.front();
      if (lm.comp != lf.comp) continue;
      Monomial L = lf.m.lcm(lm.m);
      if (clip_skip(G[fi], G[mi], L)) continue;
      seen.emplace(L.exps(), mi);
    }
    for (auto& [exps, mi] : seen) {
      Monomial L{std::vector<std::uint16_t>(exps)};
      push_pair(std::move(L), lf.comp, std::min(fi, mi), std::max(fi, mi));
    }
  }

  void insert(ETerms f, ETerms rep) {
    int idx = (int)G.size();
    Elem e;
    int tm = INT_MAX;
    for (std::size_t t = 1; t < f.size(); ++t) tm = std::min(tm, f[t].m.degree());
    e.tail_min = tm;
    e.f = std::move(f);
    e.rep = std::move(rep);
    const VTerm& ltn = e.f.front();
    for (int j : poly_idx) {
      const VTerm& ltj = G[j].f.front();
      if (ltj.comp != ltn.comp) continue;
      if (!opt.track_syzygies) {
        if (G[j].f.size() == 1 && e.f.size() == 1) continue;
        if (rank == 1 && ltj.m.coprime(ltn.m)) continue;
      }
      Monomial L = ltj.m.lcm(ltn.m);
      if (!opt.track_syzygies && clip_skip(G[j], e, L)) continue;
      push_pair(std::move(L), ltn.comp, j, idx);
    }
    G.push_back(std::move(e));
    poly_idx.push_back(idx);
    if (cap >= 0) pair_with_monos(idx);
  }

  void make_monic(ETerms& f, ETerms& rep) const {
    coeff_t lc = f.front().c;
    if (lc == 1) return;
    coeff_t inv = F.inv(lc);
    for (auto& t : f) t.c = F.mul(t.c, inv);
    for (auto& t : rep) t.c = F.mul(t.c, inv);
  }

  // Full normal form of (f, rep) against the current basis. Returns false
  // when f drops to zero. skip >= 0 excludes that basis index.
  bool reduce(ETerms& f, ETerms& rep, int skip = -1) {
    ETerms out;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const VTerm& head = f[pos];
      if (cap >= 0 && head.m.degree() >= cap) {
        // covered by a synthesized monomial generator
        ++pos;
        continue;
      }
      int hit = -1;
      for (int k : poly_idx) {
        if (k == skip) continue;
        const VTerm& lt = G[k].f.front();
        if (lt.comp == head.comp && lt.m.degree() <= head.m.degree() &&
            lt.m.divides(head.m)) {
          hit = k;
          break;
        }
      }
      if (hit < 0) {
        out.push_back(head);
        ++pos;
        continue;
      }
      Monomial u = head.m.divide(G[hit].f.front().m);
      coeff_t c = F.neg(head.c);  // basis is monic
      ETerms nf = axpy(f, pos, c, u, G[hit].f, ord, F, cap);
      f = std::move(nf);
      pos = 0;
      if (opt.track_syzygies) rep = axpy(rep, 0, c, u, G[hit].rep, canon, F, -1);
    }
    f = std::move(out);
    return !f.empty();
  }

  void run(const std::vector<Vec>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].ring().compatible(ring) || gens[i].rank() != rank)
        throw std::invalid_argument("generator from a different module");
      ETerms f = sort_terms(gens[i].terms(), ord);
      if (cap >= 0) {
        ETerms clipped;
        for (auto& t : f)
          if (t.m.degree() < cap) clipped.push_back(std::move(t));
        f = std::move(clipped);
      }
      ETerms rep{VTerm{1, Monomial(ring.nvars()), (int)i}};
      if (f.empty()) {
        if (opt.track_syzygies) syz.push_back(std::move(rep));
        continue;
      }
      make_monic(f, rep);
      insert(std::move(f), std::move(rep));
    }
    if (cap >= 0) {
      // synthesized generators enter without mutual pairs; border pairs
      // against ordinary elements are queued by pair_with_monos
      std::vector<int> poly_before = poly_idx;
      for (int c = 0; c < rank; ++c)
        for (auto& m : monomials_of_degree(ring.nvars(), cap)) {
          int idx = (int)G.size();
          Elem e;
          e.synth = true;
          e.f = ETerms{VTerm{1, m, c}};
          G.push_back(std::move(e));
          mono_idx.push_back(idx);
        }
      for (int fi : poly_before) pair_with_monos(fi);
    }

    while (!pairs.empty()) {
      PairEntry p = pairs.top();
      pairs.pop();
      processed.insert(key(p.i, p.j));
      if (!opt.track_syzygies) {
        bool chained = false;
        for (int k : poly_idx) {
          if (k == p.i || k == p.j) continue;
          const VTerm& lt = G[k].f.front();
          if (lt.comp != p.comp || lt.m.degree() > p.deg || !lt.m.divides(p.lcm))
            continue;
          if (done(p.i, k) && done(k, p.j)) {
            chained = true;
            break;
          }
        }
        if (chained) continue;
      }
      const Elem& ei = G[p.i];
      const Elem& ej = G[p.j];
      Monomial ui = p.lcm.divide(ei.f.front().m);
      Monomial uj = p.lcm.divide(ej.f.front().m);
      ETerms S = axpy(ETerms{}, 0, 1, ui, ei.f, ord, F, cap);
      S = axpy(S, 0, F.neg(1), uj, ej.f, ord, F, cap);
      ETerms rep;
      if (opt.track_syzygies) {
        rep = axpy(ETerms{}, 0, 1, ui, ei.rep, canon, F, -1);
        rep = axpy(rep, 0, F.neg(1), uj, ej.rep, canon, F, -1);
      }
      if (reduce(S, rep)) {
        make_monic(S, rep);
        insert(std::move(S), std::move(rep));
      } else if (opt.track_syzygies && !rep.empty()) {
        syz.push_back(std::move(rep));
      }
    }
  }

  GBResult finish(std::size_t ninputs) {
    GBResult res;
    if (!opt.track_syzygies && opt.reduced) {
      std::vector<bool> keep(G.size(), true);
      for (std::size_t i = 0; i < G.size(); ++i) {
        const VTerm& li = G[i].f.front();
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
          if (j == i || !keep[j]) continue;
          const VTerm& lj = G[j].f.front();
          if (lj.comp != li.comp || !lj.m.divides(li.m)) continue;
          if (lj.m != li.m || j < i) keep[i] = false;
        }
      }
      std::vector<Elem> kept;
      for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) kept.push_back(std::move(G[i]));
      G = std::move(kept);
      poly_idx.clear();
      mono_idx.clear();
      for (std::size_t i = 0; i < G.size(); ++i)
        (G[i].synth ? mono_idx : poly_idx).push_back((int)i);
      for (int i : poly_idx) {
        ETerms f = G[i].f;
        ETerms rep;
        reduce(f, rep, i);
        G[i].f = std::move(f);  // head survives: kept leads are incomparable
      }
      std::sort(G.begin(), G.end(), [&](const Elem& a, const Elem& b) {
        return ord.cmp(a.f.front(), b.f.front()) < 0;
      });
    }
    for (auto& e : G) {
      std::vector<VTerm> ts(e.f.begin(), e.f.end());
      res.basis.emplace_back(ring, rank, std::move(ts));
    }
    if (opt.track_syzygies) {
      for (auto& s : syz) {
        std::vector<VTerm> ts(s.begin(), s.end());
        res.syzygies.emplace_back(ring, (int)ninputs, std::move(ts));
      }
    }
    return res;
  }
};

}  // namespace

GBResult buchberger(const Ring& ring, int rank, const std::vector<Vec>& gens,
                    const GBOptions& opt) {
  if (rank < 1) throw std::invalid_argument("module rank must be positive");
  Engine e(ring, rank, opt);
  e.run(gens);
  return e.finish(gens.size());
}

VTerm leading_term(const Vec& v, const ModuleOrder& order) {
  if (v.is_zero()) throw std::invalid_argument("leading term of zero");
  const auto& ts = v.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (order.cmp(ts[i], ts[best]) > 0) best = i;
  return ts[best];
}

Vec normal_form(const Vec& v, const std::vector<Vec>& basis,
                const MonomialOrder& order, int modulo_degree) {
  ModuleOrder ord{order};
  const auto& F = v.ring().field();
  int cap = modulo_degree;

  std::vector<ETerms> bs;
  bs.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    ETerms f = sort_terms(b.terms(), ord);
    if (cap >= 0) {
      ETerms clipped;
      for (auto& t : f)
        if (t.m.degree() < cap) clipped.push_back(std::move(t));
      f = std::move(clipped);
      if (f.empty()) continue;
    }
    coeff_t inv = F.inv(f.front().c);
    for (auto& t : f) t.c = F.mul(t.c, inv);
    bs.push_back(std::move(f));
  }

  ETerms f = sort_terms(v.terms(), ord);
  ETerms out;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const VTerm& head = f[pos];
    if (cap >= 0 && head.m.degree() >= cap) {
      ++pos;
      continue;
    }
    int hit = -1;
    for (int k = 0; k < (int)bs.size(); ++k) {
      const VTerm& lt = bs[k].front();
      if (lt.comp == head.comp && lt.m.degree() <= head.m.degree() &&
          lt.m.divides(head.m)) {
        hit = k;
        break;
      }
    }
    if (hit < 0) {
      out.push_back(head);
      ++pos;
      continue;
    }
    Monomial u = head.m.divide(bs[hit].front().m);
    ETerms nf = axpy(f, pos, F.neg(head.c), u, bs[hit], ord, F, cap);
    f = std::move(nf);
    pos = 0;
  }
  std::vector<VTerm> ts(out.begin(), out.end());
  return Vec(v.ring(), v.rank(), std::move(ts));
}

Division divide_by(const Vec& v, const std::vector<Vec>& basis,
                   const MonomialOrder& order) {
  ModuleOrder ord{order};
  const auto& F = v.ring().field();
  Ring amb = v.ring();

  std::vector<ETerms> bs;
  std::vector<coeff_t> lc;
  std::vector<int> src;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].is_zero()) continue;
    bs.push_back(sort_terms(basis[k].terms(), ord));
    lc.push_back(bs.back().front().c);
    src.push_back((int)k);
  }

  std::vector<std::vector<Term>> quo(basis.size());
  ETerms f = sort_terms(v.terms(), ord);
  ETerms out;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const VTerm& head = f[pos];
    int hit = -1;
    for (int k = 0; k < (int)bs.size(); ++k) {
      const VTerm& lt = bs[k].front();
      if (lt.comp == head.comp && lt.m.degree() <= head.m.degree() &&
          lt.m.divides(head.m)) {
        hit = k;
        break;
      }
    }
    if (hit < 0) {
      out.push_back(head);
      ++pos;
      continue;
    }
    Monomial u = head.m.divide(bs[hit].front().m);
    coeff_t q = F.div(head.c, lc[hit]);
    quo[src[hit]].push_back(Term{q, u});
    ETerms nf = axpy(f, pos, F.neg(q), u, bs[hit], ord, F, -1);
    f = std::move(nf);
    pos = 0;
  }

  Division d;
  std::vector<VTerm> ts(out.begin(), out.end());
  d.remainder = Vec(v.ring(), v.rank(), std::move(ts));
  for (std::size_t k = 0; k < basis.size(); ++k)
    d.quotients.push_back(Poly(amb, std::move(quo[k])));
  return d;
}

}  // namespace gcmlab
