#include "gcmlab/invariants.hpp"

#include <stdexcept>

namespace gcmlab {

namespace {

// relations of m together with g * e_k for every generator g and position k
std::vector<Vec> fold_in(const LocalModule& m, const std::vector<Poly>& gens) {
  std::vector<Vec> rels = m.relations();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (int k = 0; k < m.rank(); ++k)
      rels.push_back(Vec::embed(g, m.rank(), k));
  }
  return rels;
}

// Length at the origin of m / (gens) m. Cyclic modules go through the
// ideal route, which has the one-basis path for homogeneous input.
long long local_len_by(const LocalModule& m, const std::vector<Poly>& gens) {
  if (m.rank() == 1) {
    std::vector<Poly> base;
    base.reserve(m.relations().size());
    for (const auto& v : m.relations()) base.push_back(v.component(0));
    return make_ideal(m.ring().ambient(), base).plus(gens).local_length();
  }
  return finite_length(quotient_by(m, gens));
}

}  // namespace

LocalModule quotient_by(const LocalModule& m, const std::vector<Poly>& gens) {
  return LocalModule(m.ring(), m.rank(), fold_in(m, gens));
}

HilbertData hilbert_samuel(const LocalModule& m, const IdealHandle& j) {
  if (!m.ring().compatible(j.ring()))
    throw std::invalid_argument("ideal over a different ring");
  if (module_dim(quotient_by(m, j.effective_gens())) > 0)
    throw std::invalid_argument("not a parameter-like ideal at the origin");
  if (j.same_ideal(maximal_ideal(j.ring()))) return module_hilbert(m);
  return fit_hilbert([&](int n) {
    return local_len_by(m, j.power(n + 1).effective_gens());
  });
}

InvariantReport invariant_report(const LocalModule& m) {
  InvariantReport rep;
  rep.dim = module_dim(m);
  if (rep.dim < 0) throw std::invalid_argument("module is zero at the origin");
  rep.depth = module_depth(m);
  rep.cm = (rep.depth == rep.dim);
  rep.gcm = true;
  for (int i = 0; i < rep.dim; ++i) {
    long long li = lc_length(m, i);
    rep.lc.push_back(li);
    if (li < 0) rep.gcm = false;
  }
  rep.e = module_hilbert(m).e[0];
  if (rep.gcm) {
    rep.buchsbaum = 0;
    for (int i = 0; i < rep.dim; ++i)
      rep.buchsbaum += binom_conv(rep.dim - 1, i) * rep.lc[(std::size_t)i];
    rep.hdeg = rep.e + rep.buchsbaum;
  } else {
    rep.buchsbaum = -1;
    rep.hdeg = -1;
  }
  return rep;
}

bool is_part_of_sop(const LocalModule& m, const std::vector<Poly>& seq) {
  int target = module_dim(m) - (int)seq.size();
  if (target < 0) return false;
  return module_dim(quotient_by(m, seq)) == target;
}

bool is_filter_regular(const LocalModule& m, const std::vector<Poly>& seq) {
  const Ring& r = m.ring();
  std::vector<Poly> prior;
  for (const auto& x : seq) {
    auto rels = fold_in(m, prior);
    Submodule u(r, m.rank(), rels);
    Submodule c = u.colon_by_ideal({x});
    if (!c.gens().empty()) {
      auto pres = subquotient_relations(r, m.rank(), c.gens(), rels);
      LocalModule q(r, (int)c.gens().size(), pres);
      if (finite_length(q) < 0) return false;
    }
    prior.push_back(x);
  }
  return true;
}

StandardCheck standard_check(const LocalModule& m, const IdealHandle& j) {
  if ((int)j.gens().size() != module_dim(m) || !is_part_of_sop(m, j.gens()))
    throw std::invalid_argument("not a parameter ideal for the module");
  StandardCheck out;
  out.len_mod_j = local_len_by(m, j.effective_gens());
  out.e_j = hilbert_samuel(m, j).e[0];
  out.gap = out.len_mod_j - out.e_j;
  auto rep = invariant_report(m);
  if (rep.gcm && (out.gap < 0 || out.gap > rep.buchsbaum))
    throw std::logic_error(
        "length-multiplicity gap outside its admissible range");
  out.standard = rep.gcm && out.gap == rep.buchsbaum;
  return out;
}

long long predicted_standard_hf(const InvariantReport& rep, long long e_j,
                                int n) {
  int d = rep.dim;
  long long v = binom_conv(n + d, d) * e_j;
  for (int i = 1; i <= d; ++i) {
    long long inner = 0;
    for (int jj = 0; jj <= d - i; ++jj)
      inner += binom_conv(d - i - 1, jj - 1) * rep.lc[(std::size_t)jj];
    v += binom_conv(n + d - i, d - i) * inner;
  }
  return v;
}

int reduction_number(const LocalModule& m, const std::vector<Poly>& forms,
                     int cap) {
  const Ring& r = m.ring();
  IdealHandle mx = maximal_ideal(r);
  IdealHandle jf = make_ideal(r, forms);
  for (int k = 0; k <= cap; ++k) {
    long long len_m = m.relation_module().capped_quotient_length(k + 1);
    long long len_j =
        local_len_by(m, jf.times(mx.power(k)).effective_gens());
    if (len_j == len_m) return k;
  }
  return -1;
}

ReductionResult minimal_reduction(const LocalModule& m, Rng& rng,
                                  int max_attempts) {
  int s = module_dim(m);
  if (s < 0) throw std::invalid_argument("module is zero at the origin");
  const int kCap = 24;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Poly> forms;
    forms.reserve((std::size_t)s);
    for (int i = 0; i < s; ++i)
      forms.push_back(random_form(m.ring(), 1, 1.0, rng));
    if (!is_part_of_sop(m, forms)) continue;
    int rn = reduction_number(m, forms, kCap);
    if (rn >= 0) return {std::move(forms), rn};
  }
  throw std::runtime_error("no reduction found (field too small or bug)");
}

}  // namespace gcmlab
