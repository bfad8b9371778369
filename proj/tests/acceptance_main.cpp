// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criteria 1..9 drive the library directly; 10 and 11 drive the CLI binary.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gcmlab/instance_io.hpp"
#include "gcmlab/parse.hpp"
#include "gcmlab/perturb.hpp"
#include "json.hpp"

using namespace gcmlab;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int criterion, bool pass, double secs, const std::string& note) {
  std::printf("criterion %2d: %s (%.1f s)%s%s\n", criterion,
              pass ? "PASS" : "FAIL", secs, note.empty() ? "" : " ",
              note.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// ---------------------------------------------------------------------------
// criterion 1: independent dense row-reduction length oracle

void monomials_of(int nv, int d, int var, Monomial& cur,
                  std::vector<Monomial>& out) {
  if (var == nv - 1) {
    cur.set_exp(var, (std::uint16_t)d);
    out.push_back(cur);
    cur.set_exp(var, 0);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur.set_exp(var, (std::uint16_t)e);
    monomials_of(nv, d - e, var + 1, cur, out);
  }
  cur.set_exp(var, 0);
}

std::vector<Monomial> monomials_of(int nv, int d) {
  std::vector<Monomial> out;
  Monomial cur((std::size_t)nv);
  monomials_of(nv, d, 0, cur, out);
  return out;
}

std::string exp_key(const Monomial& m) {
  std::string k;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    k += std::to_string(m[i]);
    k += ',';
  }
  return k;
}

long long rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows,
                     std::uint64_t p) {
  long long rank = 0;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    // normalize the pivot row
    std::uint64_t inv = 1, base = rows[r][c], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t j = c; j < ncols; ++j)
      rows[r][j] = (std::uint32_t)(rows[r][j] * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        rows[i][j] =
            (std::uint32_t)((rows[i][j] + (p - f) * rows[r][j]) % p);
    }
    ++r;
    ++rank;
  }
  return rank;
}

// colength of a homogeneous ideal by row-reducing each graded piece until the
// piece fills its degree
long long dense_colength(const Ring& ring, const std::vector<Poly>& gens,
                         bool* ok) {
  const std::uint64_t p = ring.field().characteristic();
  const int nv = (int)ring.nvars();
  long long colength = 0;
  *ok = false;
  for (int d = 0; d <= 15; ++d) {
    auto cols = monomials_of(nv, d);
    std::map<std::string, std::size_t> idx;
    for (std::size_t j = 0; j < cols.size(); ++j) idx[exp_key(cols[j])] = j;

    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& g : gens) {
      int dg = g.degree();
      if (dg > d) continue;
      for (const auto& mu : monomials_of(nv, d - dg)) {
        Poly prod = Poly(ring, {Term{1, mu}}) * g;
        std::vector<std::uint32_t> row(cols.size(), 0);
        for (const auto& t : prod.terms()) row[idx.at(exp_key(t.m))] = t.c;
        rows.push_back(std::move(row));
      }
    }
    long long rank = rank_mod_p(rows, p);
    colength += (long long)cols.size() - rank;
    if (rank == (long long)cols.size()) {
      *ok = true;
      return colength;
    }
  }
  return -1;
}

void criterion_1() {
  auto t0 = Clock::now();
  const char* names[] = {"x", "y", "z"};
  Rng rng(926001);
  int bad = 0;
  std::string note;
  for (int i = 0; i < 200; ++i) {
    int nv = 1 + i % 3;
    Ring ring = Ring::make(
        32003, std::vector<std::string>(names, names + nv));
    std::vector<Poly> gens;
    for (int v = 0; v < nv; ++v)
      gens.push_back(poly_pow(ring.var(v), 2 + (unsigned)rng.uniform(0, 1)));
    int extra = (int)rng.uniform(0, 3);
    for (int j = 0; j < extra; ++j)
      gens.push_back(random_form(ring, 1 + (int)rng.uniform(0, 2), 0.8, rng));

    long long lib = make_ideal(ring, gens).local_length();
    bool ok = false;
    long long oracle = dense_colength(ring, gens, &ok);
    if (!ok || lib != oracle) {
      if (bad == 0) {
        std::ostringstream os;
        os << "first mismatch at instance " << i << ": library " << lib
           << " vs row-reduction " << oracle;
        note = os.str();
      }
      ++bad;
    }
  }
  double dt = secs_since(t0);
  bool pass = bad == 0 && dt < 60.0;
  if (pass) note = "200 lengths match the dense oracle";
  if (bad == 0 && dt >= 60.0) note = "over the 60 s budget";
  report(1, pass, dt, note);
}

// ---------------------------------------------------------------------------

void criterion_2() {
  auto t0 = Clock::now();
  Instance inst = generate_two_planes(2);
  InvariantReport r = invariant_report(ring_module(inst));
  bool pass = r.dim == 2 && r.depth == 1 &&
              r.lc == std::vector<long long>{0, 1} && r.e == 2 &&
              r.buchsbaum == 1 && r.hdeg == 3;
  double dt = secs_since(t0);
  std::ostringstream os;
  os << "dim " << r.dim << " depth " << r.depth << " e " << r.e << " I "
     << r.buchsbaum << " hdeg " << r.hdeg;
  report(2, pass && dt < 30.0, dt, os.str());
}

// ---------------------------------------------------------------------------

struct Corpus {
  std::vector<std::string> paths;
  std::vector<Instance> instances;
};

Corpus load_corpus() {
  Corpus c;
  const char* files[] = {"two_planes.inst", "ci_22.inst",
                         "monomial_quartic.inst", "embedded_line.inst"};
  for (const char* f : files) {
    std::string path = std::string(GCMLAB_CORPUS_DIR) + "/" + f;
    c.paths.push_back(path);
    c.instances.push_back(read_instance(path));
  }
  return c;
}

// sample a parameter ideal for M generated in degree max(I(M),1); such ideals
// should always test standard
std::vector<Poly> sample_parameter(const LocalModule& M,
                                   const InvariantReport& rep, Rng& rng) {
  int deg = (int)std::max<long long>(rep.buchsbaum, 1);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Poly> forms;
    for (int i = 0; i < rep.dim; ++i)
      forms.push_back(random_form(M.ring(), deg, 1.0, rng));
    if (is_part_of_sop(M, forms)) return forms;
  }
  throw std::runtime_error("no parameter ideal found while sampling");
}

void criterion_3(const Corpus& corpus) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string note = "predicted Hilbert functions match on all samples";
  for (std::size_t ci = 0; ci < corpus.instances.size(); ++ci) {
    const Instance& inst = corpus.instances[ci];
    LocalModule M = ring_module(inst);
    InvariantReport rep = invariant_report(M);
    Rng rng(3000 + (std::uint64_t)ci);
    for (int s = 0; s < 5 && pass; ++s) {
      auto forms = sample_parameter(M, rep, rng);
      IdealHandle J = make_ideal(inst.ring, forms);
      StandardCheck sc = standard_check(M, J);
      if (!sc.standard) {
        pass = false;
        note = inst.label + ": sampled parameter ideal is not standard";
        break;
      }
      HilbertData hd = hilbert_samuel(M, J);
      for (int n = 0; n <= 8; ++n) {
        long long want = predicted_standard_hf(rep, sc.e_j, n);
        long long got = n < (int)hd.values.size() ? hd.values[n]
                                                  : hd.poly_at(n);
        if (want != got) {
          pass = false;
          std::ostringstream os;
          os << inst.label << ": sample " << s << " n " << n << ": predicted "
             << want << " vs measured " << got;
          note = os.str();
          break;
        }
      }
    }
    if (!pass) break;
  }

  // converse direction: a parameter ideal that misses the expected gap must
  // break the formula somewhere
  if (pass) {
    const Instance& el = corpus.instances[3];
    LocalModule M = ring_module(el);
    InvariantReport rep = invariant_report(M);
    IdealHandle J = make_ideal(el.ring, {parse_poly(el.ring, "y")});
    StandardCheck sc = standard_check(M, J);
    HilbertData hd = hilbert_samuel(M, J);
    bool mismatch = false;
    for (int n = 0; n <= 8; ++n)
      if (predicted_standard_hf(rep, sc.e_j, n) != hd.values[n])
        mismatch = true;
    if (sc.standard || !mismatch) {
      pass = false;
      note = "non-standard control did not separate the directions";
    }
    // one-dimensional convention: HF(n) = (n+1) e + len H^0
    for (int n = 0; n <= 8 && pass; ++n) {
      long long lhs = predicted_standard_hf(rep, sc.e_j, n);
      long long rhs = (n + 1) * sc.e_j + rep.lc[0];
      if (lhs != rhs) {
        pass = false;
        note = "one-dimensional convention check failed";
      }
    }
  }
  report(3, pass, secs_since(t0), note);
}

void criterion_4(const Corpus& corpus) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string note = "all deep parameter ideals are standard";
  for (std::size_t ci = 0; ci < corpus.instances.size() && pass; ++ci) {
    const Instance& inst = corpus.instances[ci];
    LocalModule M = ring_module(inst);
    InvariantReport rep = invariant_report(M);
    Rng rng(4000 + (std::uint64_t)ci);
    for (int s = 0; s < 10; ++s) {
      auto forms = sample_parameter(M, rep, rng);
      StandardCheck sc = standard_check(M, make_ideal(inst.ring, forms));
      if (!sc.standard) {
        pass = false;
        note = inst.label + ": sample " + std::to_string(s) +
               " is not standard";
        break;
      }
    }
  }
  report(4, pass, secs_since(t0), note);
}

void criterion_5(const Corpus& corpus) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string note = "perturbed sequences stay parts of sops";
  for (const Instance& inst : corpus.instances) {
    LabOptions opt;
    opt.trials = 21;  // identity plus 20 sampled perturbations
    opt.seed = 5;
    VerifyReport rep = verify_sop(inst, opt);
    long long sampled = 0;
    for (const auto& tr : rep.trials)
      if (!tr.skipped && tr.index > 0) ++sampled;
    if (!rep.pass || sampled < 20) {
      pass = false;
      note = inst.label + ": sop preservation failed";
      break;
    }
  }
  report(5, pass, secs_since(t0), note);
}

const CheckResult* find_check(const VerifyReport& rep, const std::string& name) {
  for (const auto& tr : rep.trials)
    for (const auto& c : tr.checks)
      if (c.name == name) return &c;
  return nullptr;
}

std::vector<VerifyReport> structure_reports(const Corpus& corpus,
                                            double* elapsed) {
  auto t0 = Clock::now();
  std::vector<VerifyReport> reps;
  for (const Instance& inst : corpus.instances) {
    LabOptions opt;
    opt.seed = 3;
    reps.push_back(verify_structures(inst, opt));
  }
  *elapsed = secs_since(t0);
  return reps;
}

void criterion_6(const Corpus& corpus, const std::vector<VerifyReport>& reps,
                 double shared) {
  bool pass = true;
  std::string note = "reductions stay small and survive deep perturbation";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const CheckResult* a = find_check(reps[i], "reduction-number-bound");
    const CheckResult* b = find_check(reps[i], "reduction-carries");
    if (!a || !a->pass || !b || !b->pass) {
      pass = false;
      note = corpus.instances[i].label + ": " +
             (a && !a->pass ? a->details : (b ? b->details : "missing check"));
      break;
    }
  }
  report(6, pass, shared, note);
}

void criterion_9(const Corpus& corpus, const std::vector<VerifyReport>& reps,
                 double shared) {
  bool pass = true;
  std::string note = "all structural identities hold exactly";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& c : reps[i].trials[0].checks) {
      if (!c.pass) {
        pass = false;
        note = corpus.instances[i].label + ": " + c.name +
               (c.details.empty() ? "" : " (" + c.details + ")");
        break;
      }
    }
    if (!pass) break;
  }
  report(9, pass, shared, note);
}

void criterion_7(const Corpus& corpus) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string note = "local cohomology lengths survive at the bound";
  for (const Instance& inst : corpus.instances) {
    LabOptions opt;
    opt.trials = 21;
    opt.seed = 11;
    opt.threads = 2;
    VerifyReport rep = verify_lc(inst, opt);
    if (!rep.pass) {
      pass = false;
      note = inst.label + ": lengths moved at the guaranteed depth";
      break;
    }
    LabOptions sh = opt;
    sh.seed = 13;
    sh.r1_mode = true;
    VerifyReport rep2 = verify_lc(inst, sh);
    if (!rep2.pass) {
      pass = false;
      note = inst.label + ": shallow single-element mode failed";
      break;
    }
  }
  report(7, pass, secs_since(t0), note);
}

bool hf_suite(const Corpus& corpus, std::uint64_t seed, bool improved,
              std::string* note) {
  for (const Instance& inst : corpus.instances) {
    LabOptions opt;
    opt.trials = 21;
    opt.seed = seed;
    opt.threads = 2;
    if (improved) opt.n = std::max(compute_bounds(inst).n_hf_improved, 1ll);
    VerifyReport rep = verify_hf(inst, opt);
    if (!rep.pass) {
      *note = inst.label + (improved ? " (improved depth)" : "") +
              ": Hilbert function moved";
      return false;
    }
  }
  return true;
}

void criterion_8(const Corpus& corpus) {
  auto t0 = Clock::now();
  std::string note = "Hilbert functions rigid at both depth bounds";
  bool pass = hf_suite(corpus, 17, false, &note) &&
              hf_suite(corpus, 17, true, &note);
  double dt = secs_since(t0);
  if (pass && dt > 900.0) {
    pass = false;
    note = "over the 15 minute budget";
  }
  report(8, pass, dt, note);
}

// ---------------------------------------------------------------------------
// criteria 10 and 11 drive the installed CLI

int run_cli(const std::string& args) {
  std::string cmd = std::string(GCMLAB_CLI_PATH) + " " + args +
                    " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

json load_json(const std::string& path) {
  std::ifstream f(path);
  return json::parse(f);
}

void criterion_10(const Corpus& corpus) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string note = "sabotage runs exit 1 and carry certificates";

  int rc = run_cli("verify hf " + corpus.paths[0] +
                   " --N 1 --trials 3 --out acc_sabotage_hf.json");
  if (rc != 1) {
    pass = false;
    note = "shallow run exited " + std::to_string(rc) + ", wanted 1";
  } else {
    json rep = load_json("acc_sabotage_hf.json");
    bool cert = false;
    for (const auto& tr : rep["trials"])
      if (tr["adversarial"].get<bool>() && !tr["pass"].get<bool>())
        for (const auto& c : tr["checks"])
          if (!c["pass"].get<bool>() &&
              !c["details"].get<std::string>().empty())
            cert = true;
    if (rep["pass"].get<bool>() || !cert) {
      pass = false;
      note = "shallow run carried no failing certificate";
    }
  }

  if (pass) {
    std::string bad = std::string(GCMLAB_CORPUS_DIR) +
                      "/sabotage_bad_direction.inst";
    rc = run_cli("invariants " + bad + " --out acc_sabotage_dir.json");
    if (rc != 1) {
      pass = false;
      note = "bad-direction run exited " + std::to_string(rc) + ", wanted 1";
    } else {
      json rep = load_json("acc_sabotage_dir.json");
      if (!rep.contains("error") ||
          rep["error"]["type"].get<std::string>() != "constraint-violation") {
        pass = false;
        note = "bad-direction run carried no violation record";
      }
    }
  }
  std::remove("acc_sabotage_hf.json");
  std::remove("acc_sabotage_dir.json");
  report(10, pass, secs_since(t0), note);
}

void criterion_11(const Corpus& corpus) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string note = "reports identical apart from timings";
  for (const std::string& path : corpus.paths) {
    int rc1 = run_cli("verify hf " + path +
                      " --trials 21 --seed 17 --threads 2 --out acc_d1.json");
    int rc2 = run_cli("verify hf " + path +
                      " --trials 21 --seed 17 --threads 2 --out acc_d2.json");
    if (rc1 != 0 || rc2 != 0) {
      pass = false;
      note = path + ": runs exited " + std::to_string(rc1) + "/" +
             std::to_string(rc2);
      break;
    }
    json a = load_json("acc_d1.json"), b = load_json("acc_d2.json");
    a.erase("timings");
    b.erase("timings");
    if (a != b) {
      pass = false;
      note = path + ": reports differ beyond timings";
      break;
    }
  }
  std::remove("acc_d1.json");
  std::remove("acc_d2.json");
  report(11, pass, secs_since(t0), note);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion_1();
  criterion_2();
  Corpus corpus = load_corpus();
  criterion_3(corpus);
  criterion_4(corpus);
  criterion_5(corpus);
  double structures_secs = 0;
  auto structures = structure_reports(corpus, &structures_secs);
  criterion_6(corpus, structures, structures_secs);
  criterion_7(corpus);
  criterion_8(corpus);
  criterion_9(corpus, structures, structures_secs);
  criterion_10(corpus);
  criterion_11(corpus);
  std::printf("acceptance: %d/11 passed (%.1f s total)\n", 11 - g_failures,
              secs_since(t0));
  return g_failures;
}
