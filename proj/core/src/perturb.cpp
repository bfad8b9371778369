#include "gcmlab/perturb.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "gcmlab/groebner.hpp"
#include "gcmlab/parse.hpp"

namespace gcmlab {

namespace {

constexpr double kEpsDensity = 0.6;

long long fact(int s) {
  long long f = 1;
  for (int i = 2; i <= s; ++i) f *= i;
  return f;
}

// The sampled numerical function, extended by its fitted polynomial past
// the sampling window.
long long value_at(const HilbertData& h, long long n) {
  if (n < (long long)h.values.size()) return h.values[(std::size_t)n];
  return h.poly_at(n);
}

std::vector<Poly> add_eps(const std::vector<Poly>& seq,
                          const std::vector<Poly>& eps) {
  std::vector<Poly> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out.push_back(seq[i] + eps[i]);
  return out;
}

std::string str_of(long long a, long long b, const char* what, long long at) {
  std::ostringstream os;
  os << what << " " << at << ": " << a << " vs " << b;
  return os.str();
}

// Trials run concurrently; each writes only its own slot.
void run_parallel(int count, int threads,
                  const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int w = std::min(threads, count);
  pool.reserve((std::size_t)w);
  for (int t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        body(i);
    });
  for (auto& th : pool) th.join();
}

struct TrialSpec {
  std::uint64_t seed = 0;
  bool adversarial = false;
  std::vector<Poly> eps;
};

// Entry 0 is the identity; a worst-case member -f_i (legal exactly when
// f_i lies in m^n) is appended when available, so shallow depths fail
// deterministically rather than by luck.
std::vector<TrialSpec> trial_specs(const Instance& inst, int n, int trials,
                                   std::uint64_t master, bool adversary) {
  std::vector<TrialSpec> specs;
  Rng base(master);
  for (int i = 0; i < trials; ++i) {
    TrialSpec sp;
    if (i == 0) {
      sp.seed = master;
      for (std::size_t j = 0; j < inst.seq.size(); ++j)
        sp.eps.push_back(inst.ring.zero());
    } else {
      Rng rng = base.fork((std::uint64_t)i);
      sp.seed = rng.seed();
      for (std::size_t j = 0; j < inst.seq.size(); ++j)
        sp.eps.push_back(random_in_power(inst.ring, n, 1, kEpsDensity, rng));
    }
    specs.push_back(std::move(sp));
  }
  if (adversary) {
    TrialSpec sp;
    sp.adversarial = true;
    bool any = false;
    for (const auto& f : inst.seq) {
      if (f.min_degree() >= n) {
        sp.eps.push_back(-f);
        any = true;
      } else {
        sp.eps.push_back(inst.ring.zero());
      }
    }
    if (any) specs.push_back(std::move(sp));
  }
  return specs;
}

long long resolve_level(const Instance& inst, const LabOptions& opt,
                        long long BoundSet::*field) {
  if (opt.n >= 1) return opt.n;
  if (opt.n == 0) throw std::invalid_argument("perturbation depth must be at least 1");
  BoundSet b = compute_bounds(inst);
  long long lvl = b.*field;
  if (lvl < 1) lvl = 1;
  return lvl;
}

void finish(TrialReport& tr) {
  for (const auto& c : tr.checks)
    if (!c.pass) tr.pass = false;
}

void run_trials(VerifyReport& rep, const Instance& inst,
                const std::vector<TrialSpec>& specs, int threads,
                const std::function<void(TrialReport&)>& body) {
  rep.trials.resize(specs.size());
  run_parallel((int)specs.size(), threads, [&](int i) {
    TrialReport& tr = rep.trials[(std::size_t)i];
    tr.index = i;
    tr.seed = specs[(std::size_t)i].seed;
    tr.adversarial = specs[(std::size_t)i].adversarial;
    tr.eps = specs[(std::size_t)i].eps;
    try {
      body(tr);
    } catch (const std::exception& e) {
      tr.checks.push_back({"engine", false, e.what()});
    }
    finish(tr);
  });
  for (const auto& tr : rep.trials)
    if (!tr.skipped && !tr.pass) rep.pass = false;
}

// i-th cohomology length at the origin; the kernel part reads off the
// saturation, higher indices go through duality.
long long lc_of(const LocalModule& m, int i) {
  if (i == 0) return finite_length(gamma_m(m));
  return lc_length(m, i);
}

Poly poly_pow(const Poly& f, long long t) {
  Poly acc = f;
  for (long long i = 1; i < t; ++i) acc = acc * f;
  return acc;
}

}  // namespace

Instance make_instance(Ring ring, std::vector<Poly> seq, std::string label) {
  Instance inst{std::move(ring), std::move(seq), std::move(label)};
  LocalModule R = ring_module(inst);
  int d = module_dim(R);
  if (d < 0) throw semantic_error("R is zero at the origin");
  InvariantReport rep = invariant_report(R);
  if (!rep.gcm) throw semantic_error("R is not generalized Cohen-Macaulay");
  if ((int)inst.seq.size() > d)
    throw semantic_error("sequence is longer than the dimension of R");
  if (!is_part_of_sop(R, inst.seq))
    throw semantic_error("sequence is not part of a sop");
  return inst;
}

LocalModule ring_module(const Instance& inst) {
  return LocalModule::cyclic(make_ideal(inst.ring, {}));
}

LocalModule quotient_module(const Instance& inst) {
  return LocalModule::cyclic(make_ideal(inst.ring, inst.seq));
}

BoundSet compute_bounds(const InvariantReport& rep_r,
                        const InvariantReport& rep_q, int r) {
  if (!rep_r.gcm)
    throw semantic_error("R is not generalized Cohen-Macaulay");
  if (!rep_q.gcm)
    throw semantic_error("R/I is not generalized Cohen-Macaulay");
  if (rep_q.dim != rep_r.dim - r)
    throw std::logic_error("sequence does not cut the dimension correctly");
  BoundSet b;
  b.s = rep_q.dim;
  long long sf = fact(b.s);
  long long ir = rep_r.buchsbaum;
  // the same bound through both degree bookkeepings must agree
  long long via_parts = sf * (rep_q.e + rep_q.buchsbaum) + (b.s + 1) * ir + 1;
  b.n_hf = sf * rep_q.hdeg + (b.s + 1) * ir + 1;
  if (via_parts != b.n_hf)
    throw std::logic_error("degree bookkeeping mismatch between bound routes");
  b.n_hf_improved = sf * rep_q.hdeg + (b.s + 1) * ir - b.s;
  b.n_hf_cm = rep_r.cm ? sf * rep_q.e + 1 : -1;
  b.n_lc = rep_q.e + ir + 1;
  b.n_sop = rep_q.hdeg + 1;
  b.n_r1_lc = (r == 1) ? ir : -1;
  b.k_reduction = sf * rep_q.hdeg + 1;
  b.t = std::max<long long>(ir, 1);
  return b;
}

BoundSet compute_bounds(const Instance& inst) {
  return compute_bounds(invariant_report(ring_module(inst)),
                        invariant_report(quotient_module(inst)),
                        (int)inst.seq.size());
}

std::vector<std::vector<Poly>> sample_family(const Instance& inst, int n,
                                             int trials, const Rng& rng) {
  if (n < 1) throw std::invalid_argument("perturbation depth must be at least 1");
  auto specs = trial_specs(inst, n, trials, rng.seed(), false);
  std::vector<std::vector<Poly>> fam;
  fam.reserve(specs.size());
  for (const auto& sp : specs) fam.push_back(add_eps(inst.seq, sp.eps));
  return fam;
}

VerifyReport verify_hf(const Instance& inst, const LabOptions& opt) {
  VerifyReport rep;
  rep.mode = "hf";
  rep.level = resolve_level(inst, opt, &BoundSet::n_hf);
  LocalModule R = ring_module(inst);
  module_dim(R);  // warm the shared cache before the workers start
  HilbertData base = module_hilbert(quotient_module(inst));

  auto specs = trial_specs(inst, (int)rep.level, opt.trials, opt.seed, true);
  run_trials(rep, inst, specs, opt.threads, [&](TrialReport& tr) {
    auto pert = add_eps(inst.seq, tr.eps);
    bool sop = is_part_of_sop(R, pert);
    tr.checks.push_back(
        {"sop-preserved", sop, sop ? "" : "perturbed sequence is not part of a sop"});

    HilbertData hp = module_hilbert(LocalModule::cyclic(make_ideal(inst.ring, pert)));
    long long post = std::max(base.postulation, hp.postulation);
    long long horizon = opt.n_max >= 0
                            ? opt.n_max
                            : std::max(post + 2, std::min(rep.level - 1, post + 6));
    CheckResult pw{"hf-pointwise", true, ""};
    for (long long n = 0; n <= horizon; ++n) {
      long long a = value_at(base, n), b = value_at(hp, n);
      tr.len_base.push_back(a);
      tr.len_pert.push_back(b);
      if (a != b && pw.pass) {
        pw.pass = false;
        pw.details = str_of(a, b, "first mismatch at n =", n);
      }
    }
    tr.checks.push_back(pw);

    bool coeff = base.degree == hp.degree && base.e == hp.e;
    std::string det;
    if (!coeff) {
      std::ostringstream os;
      if (base.degree != hp.degree)
        os << "degree " << base.degree << " vs " << hp.degree;
      else
        os << "fitted coefficients differ";
      det = os.str();
    }
    tr.checks.push_back({"hf-polynomial", coeff, det});
  });
  return rep;
}

VerifyReport verify_lc(const Instance& inst, const LabOptions& opt) {
  if (opt.r1_mode && inst.seq.size() != 1)
    throw std::invalid_argument("shallow mode applies to single-element sequences only");
  VerifyReport rep;
  rep.mode = opt.r1_mode ? "lc-r1" : "lc";
  rep.level = opt.r1_mode ? std::max(resolve_level(inst, opt, &BoundSet::n_r1_lc), 1ll)
                          : resolve_level(inst, opt, &BoundSet::n_lc);
  LocalModule R = ring_module(inst);
  int range = module_dim(R) - (int)inst.seq.size();
  std::vector<long long> base;
  {
    LocalModule Q = quotient_module(inst);
    for (int i = 0; i < range; ++i) base.push_back(lc_of(Q, i));
  }

  // With a single regular element g the long exact sequence of the
  // multiplication map splits each length into two cokernel lengths inside
  // the fixed duals of the ring's cohomology, so a trial never has to
  // saturate the perturbed ideal:
  //   len H^i(R/g) = len(H^i(R)/g H^i(R)) + len(0 : g in H^{i+1}(R)),
  // and kernel and cokernel of g have equal length on finite-length modules.
  bool les_route =
      inst.seq.size() == 1 && range > 0 && module_depth(R) >= 1;
  std::vector<LocalModule> duals;
  if (les_route) {
    int n = (int)inst.ring.nvars();
    for (int i = 0; i <= range; ++i)
      duals.push_back(ext_module(R, n - i));
  }

  auto specs = trial_specs(inst, (int)rep.level, opt.trials, opt.seed, false);
  run_trials(rep, inst, specs, opt.threads, [&](TrialReport& tr) {
    auto pert = add_eps(inst.seq, tr.eps);
    bool sop = is_part_of_sop(R, pert);
    if (opt.r1_mode && !sop) {
      tr.skipped = true;
      tr.checks.push_back({"sop-filter", true, "trial skipped: sop lost"});
      return;
    }
    tr.checks.push_back(
        {"sop-preserved", sop, sop ? "" : "perturbed sequence is not part of a sop"});
    if (les_route && !sop) {
      tr.checks.push_back({"lc-lengths", false,
                           "not computed: the perturbed element is not a parameter"});
      return;
    }
    CheckResult eq{"lc-lengths", true, ""};
    if (les_route) {
      const Poly& g = pert[0];
      for (int i = 0; i < range; ++i) {
        long long b = finite_length(quotient_by(duals[(std::size_t)i], {g})) +
                      finite_length(quotient_by(duals[(std::size_t)i + 1], {g}));
        tr.lc_base.push_back(base[(std::size_t)i]);
        tr.lc_pert.push_back(b);
        if (b != base[(std::size_t)i] && eq.pass) {
          eq.pass = false;
          eq.details = str_of(base[(std::size_t)i], b, "mismatch at i =", i);
        }
      }
    } else {
      LocalModule Q = LocalModule::cyclic(make_ideal(inst.ring, pert));
      for (int i = 0; i < range; ++i) {
        long long b = lc_of(Q, i);
        tr.lc_base.push_back(base[(std::size_t)i]);
        tr.lc_pert.push_back(b);
        if (b != base[(std::size_t)i] && eq.pass) {
          eq.pass = false;
          eq.details = str_of(base[(std::size_t)i], b, "mismatch at i =", i);
        }
      }
    }
    tr.checks.push_back(eq);
  });
  return rep;
}

VerifyReport verify_sop(const Instance& inst, const LabOptions& opt) {
  VerifyReport rep;
  rep.mode = "sop";
  rep.level = resolve_level(inst, opt, &BoundSet::n_sop);
  LocalModule R = ring_module(inst);
  module_dim(R);

  auto specs = trial_specs(inst, (int)rep.level, opt.trials, opt.seed, true);
  run_trials(rep, inst, specs, opt.threads, [&](TrialReport& tr) {
    auto pert = add_eps(inst.seq, tr.eps);
    bool sop = is_part_of_sop(R, pert);
    tr.checks.push_back(
        {"sop-preserved", sop, sop ? "" : "perturbed sequence is not part of a sop"});
  });
  return rep;
}

VerifyReport verify_structures(const Instance& inst, const LabOptions& opt) {
  VerifyReport rep;
  rep.mode = "structures";
  BoundSet b = compute_bounds(inst);
  long long k = b.k_reduction, t = b.t, s = b.s;
  rep.level = k;

  LocalModule Q = quotient_module(inst);
  InvariantReport rq = invariant_report(Q);
  Rng rng(opt.seed);
  auto red = minimal_reduction(Q, rng);

  TrialReport tr;
  tr.index = 0;
  tr.seed = opt.seed;
  auto push = [&tr](const std::string& name, bool ok, std::string det) {
    tr.checks.push_back({name, ok, std::move(det)});
  };

  {
    long long allowed = fact((int)s) * rq.hdeg - 1;
    std::ostringstream os;
    os << "r = " << red.r << ", allowed " << allowed;
    push("reduction-number-bound", red.r <= allowed, os.str());
  }

  const Ring& rr = inst.ring;
  IdealHandle Ih = make_ideal(rr, inst.seq);
  IdealHandle mx = maximal_ideal(rr);
  IdealHandle Jh = make_ideal(rr, red.forms);

  // these identities live in the local ring at the origin; the right side
  // sits inside the left by construction, so local equality amounts to one
  // containment plus equal local colengths (raw ideal comparison would
  // misjudge inhomogeneous perturbations)
  auto local_same = [](const IdealHandle& lhs, const IdealHandle& rhs,
                       std::string* det) {
    try {
      if (!lhs.contains(rhs)) {
        *det = "right side escapes the left";
        return false;
      }
      long long ll = lhs.local_length(), lr = rhs.local_length();
      std::ostringstream os;
      os << "colength " << ll << " vs " << lr;
      *det = os.str();
      return ll == lr;
    } catch (const std::exception& e) {
      *det = e.what();
      return false;
    }
  };

  // the power of the maximal ideal past the reduction level moves across
  // the sum with one factor of J per extra step
  auto transfer = [&](const IdealHandle& ideal, const std::string& tag) {
    for (int mm = 0; mm <= 2; ++mm) {
      IdealHandle lhs = mx.power((int)k + mm).plus(ideal);
      IdealHandle rhs =
          Jh.power(mm + 1).times(mx.power((int)k - 1)).plus(ideal);
      std::string det;
      bool ok = local_same(lhs, rhs, &det);
      push(tag + std::to_string(mm), ok, det);
    }
  };
  transfer(Ih, "power-transfer-base-m");

  {
    Rng fork = rng.fork(101);
    std::vector<Poly> eps;
    for (std::size_t j = 0; j < inst.seq.size(); ++j)
      eps.push_back(random_in_power(rr, (int)k, 1, kEpsDensity, fork));
    for (const auto& e : eps) tr.eps.push_back(e);
    transfer(make_ideal(rr, add_eps(inst.seq, eps)), "power-transfer-perturbed-m");
  }

  {
    Rng fork = rng.fork(102);
    std::vector<Poly> eps;
    for (std::size_t j = 0; j < inst.seq.size(); ++j)
      eps.push_back(random_in_power(rr, (int)k + 2, 1, kEpsDensity, fork));
    for (const auto& e : eps) tr.eps.push_back(e);
    LocalModule Qp = LocalModule::cyclic(make_ideal(rr, add_eps(inst.seq, eps)));
    int rn = reduction_number(Qp, red.forms, (int)k + 1);
    std::ostringstream os;
    os << "r = " << rn << ", allowed " << k + 1;
    push("reduction-carries", rn >= 0, os.str());
  }

  std::vector<Poly> jt;
  for (const auto& f : red.forms) jt.push_back(poly_pow(f, t));
  IdealHandle Jp = make_ideal(rr, jt);
  long long ns = k + s * (t - 1) + s;
  for (int mm = 0; mm <= 2; ++mm) {
    IdealHandle lhs = mx.power((int)(ns + mm * t)).plus(Ih);
    IdealHandle rhs = Jp.power(mm + 1).times(mx.power((int)(ns - t))).plus(Ih);
    std::string det;
    bool ok = local_same(lhs, rhs, &det);
    push("deep-power-transfer-m" + std::to_string(mm), ok, det);
  }

  IdealHandle Kh = Ih.plus(Jp);
  for (int mm = 0; mm <= 2; ++mm) {
    IdealHandle lhs = Kh.power(mm + 1).intersect(Ih);
    IdealHandle rhs = Ih.times(Kh.power(mm));
    push("power-intersection-m" + std::to_string(mm), lhs.same_ideal(rhs), "");
  }

  for (int mm = 0; mm <= 2; ++mm) {
    bool ok = Jp.power(mm).times(Ih).contains(Jp.power(mm + 1).intersect(Ih));
    push("d-sequence-containment-m" + std::to_string(mm), ok, "");
  }

  finish(tr);
  rep.trials.push_back(std::move(tr));
  rep.pass = rep.trials[0].pass;
  return rep;
}

SearchResult search_min_n(const Instance& inst, const LabOptions& opt) {
  LabOptions lvl = opt;
  lvl.trials = std::max(opt.trials, 11);  // at least 10 nonzero trials
  long long start = opt.n >= 1 ? opt.n : compute_bounds(inst).n_hf;

  SearchResult out;
  for (long long n = start; n >= 1; --n) {
    lvl.n = n;
    lvl.seed = Rng(opt.seed).fork((std::uint64_t)n).seed();
    VerifyReport rep = verify_hf(inst, lvl);
    if (rep.pass) {
      out.n_emp = n;
      out.pass_level = std::move(rep);
      continue;
    }
    if (n == start) {
      // the guaranteed level itself failed; surface it as the certificate
      out.n_emp = n + 1;
      out.certified = true;
      out.pass_level = VerifyReport{};
      out.fail_level = std::move(rep);
      return out;
    }
    out.n_emp = n + 1;
    out.certified = true;
    out.fail_level = std::move(rep);
    return out;
  }
  out.certified = false;  // nothing failed down to depth 1
  return out;
}

Instance generate_two_planes(int c, std::uint32_t p) {
  if (c < 1) throw std::invalid_argument("two_planes needs c >= 1");
  std::vector<std::string> names;
  if (c == 2) {
    names = {"x", "y", "z", "w"};
  } else {
    for (int i = 1; i <= 2 * c; ++i) names.push_back("x" + std::to_string(i));
  }
  Ring amb = Ring::make(p, names);
  std::vector<Poly> prods;
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      prods.push_back(amb.var((std::size_t)i) * amb.var((std::size_t)(c + j)));
  Ring ring = amb.with_quotient(prods);
  std::vector<Poly> seq = {amb.var(0) - amb.var((std::size_t)c)};
  return make_instance(ring, seq,
                       "two_planes(" + std::to_string(c) + ")");
}

Instance generate_complete_intersection(const std::vector<int>& degs,
                                        std::uint64_t seed, std::uint32_t p) {
  if (degs.empty()) throw std::invalid_argument("no degrees given");
  std::size_t nv = degs.size() + 2;
  std::vector<std::string> names;
  if (nv <= 4) {
    names = {"x", "y", "z", "w"};
    names.resize(nv);
  } else {
    for (std::size_t i = 1; i <= nv; ++i)
      names.push_back("x" + std::to_string(i));
  }
  Ring amb = Ring::make(p, names);
  Rng rng(seed);
  std::vector<Poly> forms;
  for (int d : degs) forms.push_back(random_form(amb, d, 1.0, rng));
  Ring ring = amb.with_quotient(forms);
  auto rep = invariant_report(LocalModule::cyclic(make_ideal(ring, {})));
  if (rep.dim != 2 || !rep.cm)
    throw std::runtime_error("generation error: forms are not a regular sequence");

  std::string lbl = "complete_intersection(";
  for (std::size_t i = 0; i < degs.size(); ++i)
    lbl += (i ? "," : "") + std::to_string(degs[i]);
  lbl += ")";
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Poly> seq = {random_form(amb, 1, 1.0, rng)};
    try {
      return make_instance(ring, seq, lbl);
    } catch (const semantic_error&) {
      continue;
    }
  }
  throw std::runtime_error("generation error: no parameter element found");
}

Instance generate_monomial_curve(const std::vector<int>& exps,
                                 std::uint32_t p) {
  if (exps.size() != 4)
    throw std::invalid_argument("monomial_curve expects four exponents");
  for (std::size_t i = 0; i + 1 < exps.size(); ++i)
    if (exps[i] <= exps[i + 1])
      throw std::invalid_argument("exponents must strictly decrease");
  if (exps.back() != 0)
    throw std::invalid_argument("last exponent must be zero");

  std::vector<std::string> names = {"x", "y", "z", "w"};
  Ring amb = Ring::make(p, names);
  Ring T = amb.extended_front({"s", "t"});
  int a0 = exps[0];
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < 4; ++i) {
    int a = exps[i], b = a0 - exps[i];
    std::ostringstream os;
    os << names[i] << " - ";
    if (a > 0) os << "s^" << a << (b > 0 ? "*" : "");
    if (b > 0) os << "t^" << b;
    gens.push_back(Vec::embed(parse_poly(T, os.str()), 1, 0));
  }
  GBOptions o;
  o.order = MonomialOrder::elim(2);
  o.reduced = true;
  auto gb = buchberger(T, 1, gens, o);
  std::vector<Poly> curve;
  for (const auto& v : gb.basis) {
    Poly g = v.component(0);
    bool pure = true;
    for (const auto& tm : g.terms())
      if (tm.m[0] != 0 || tm.m[1] != 0) {
        pure = false;
        break;
      }
    if (pure) curve.push_back(parse_poly(amb, g.str()));
  }
  Ring ring = amb.with_quotient(curve);

  std::string lbl = "monomial_curve(";
  for (std::size_t i = 0; i < exps.size(); ++i)
    lbl += (i ? "," : "") + std::to_string(exps[i]);
  lbl += ")";
  Rng rng(1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Poly> seq = {random_form(amb, 1, 1.0, rng)};
    try {
      return make_instance(ring, seq, lbl);
    } catch (const semantic_error&) {
      continue;
    }
  }
  throw std::runtime_error("generation error: no parameter element found");
}

}  // namespace gcmlab
