#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcmlab/instance_io.hpp"
#include "gcmlab/perturb.hpp"
#include "gcmlab/version.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace gcmlab;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

json to_json(const InvariantReport& r) {
  return json{{"dim", r.dim},     {"depth", r.depth},
              {"lc", r.lc},       {"e", r.e},
              {"buchsbaum", r.buchsbaum}, {"hdeg", r.hdeg},
              {"gcm", r.gcm},     {"cm", r.cm}};
}

json to_json(const BoundSet& b) {
  return json{{"s", b.s},
              {"n_hf", b.n_hf},
              {"n_hf_improved", b.n_hf_improved},
              {"n_hf_cm", b.n_hf_cm},
              {"n_lc", b.n_lc},
              {"n_sop", b.n_sop},
              {"n_r1_lc", b.n_r1_lc},
              {"k_reduction", b.k_reduction},
              {"t", b.t}};
}

json to_json(const TrialReport& t) {
  json checks = json::array();
  for (const auto& c : t.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  json eps = json::array();
  for (const auto& e : t.eps) eps.push_back(e.str());

  json hf = json::array();
  std::size_t rows = std::min(t.len_base.size(), t.len_pert.size());
  for (std::size_t n = 0; n < rows; ++n)
    hf.push_back({{"n", n},
                  {"len_I", t.len_base[n]},
                  {"len_IN", t.len_pert[n]},
                  {"equal", t.len_base[n] == t.len_pert[n]}});

  json lc = json::array();
  std::size_t lrows = std::min(t.lc_base.size(), t.lc_pert.size());
  for (std::size_t i = 0; i < lrows; ++i)
    lc.push_back({{"i", i},
                  {"len_I", t.lc_base[i]},
                  {"len_IN", t.lc_pert[i]},
                  {"equal", t.lc_base[i] == t.lc_pert[i]}});

  return json{{"index", t.index},   {"seed", t.seed},
              {"adversarial", t.adversarial}, {"skipped", t.skipped},
              {"pass", t.pass},     {"epsilons", eps},
              {"checks", checks},   {"hf_table", hf},
              {"lc_table", lc}};
}

json trials_json(const VerifyReport& vr) {
  json arr = json::array();
  for (const auto& t : vr.trials) arr.push_back(to_json(t));
  return arr;
}

json level_json(const VerifyReport& vr) {
  return json{{"mode", vr.mode},
              {"level", vr.level},
              {"pass", vr.pass},
              {"trials", trials_json(vr)}};
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::string to_csv(const json& rep) {
  std::ostringstream os;
  os << "trial,n,len_I,len_IN,equal\n";
  if (!rep.contains("trials")) return os.str();
  for (const auto& tr : rep["trials"]) {
    long long idx = tr["index"].get<long long>();
    for (const auto& row : tr["hf_table"])
      os << idx << ',' << row["n"].get<long long>() << ','
         << row["len_I"].get<long long>() << ','
         << row["len_IN"].get<long long>() << ','
         << csv_bool(row["equal"].get<bool>()) << '\n';
    for (const auto& row : tr["lc_table"])
      os << idx << ',' << row["i"].get<long long>() << ','
         << row["len_I"].get<long long>() << ','
         << row["len_IN"].get<long long>() << ','
         << csv_bool(row["equal"].get<bool>()) << '\n';
  }
  return os.str();
}

void text_report_line(std::ostringstream& os, const char* name,
                      const json& r) {
  os << name << ": dim " << r["dim"] << "  depth " << r["depth"] << "  e "
     << r["e"] << "  I " << r["buchsbaum"] << "  hdeg " << r["hdeg"] << "  lc "
     << r["lc"].dump() << '\n';
}

std::string to_text(const json& rep) {
  std::ostringstream os;
  os << "gcmlab " << rep["tool_version"].get<std::string>() << "  ("
     << rep["command"].get<std::string>() << ")\n";
  if (rep.contains("instance")) {
    const auto& in = rep["instance"];
    os << "instance: " << in["label"].get<std::string>() << "  ["
       << in["path"].get<std::string>() << "]  hash "
       << in["content_hash"].get<std::string>() << '\n';
  }
  if (rep.contains("ring_report"))
    text_report_line(os, "ring    ", rep["ring_report"]);
  if (rep.contains("quotient_report"))
    text_report_line(os, "quotient", rep["quotient_report"]);
  if (rep.contains("bounds")) {
    const auto& b = rep["bounds"];
    os << "bounds: s " << b["s"] << "  N_hf " << b["n_hf"] << " (improved "
       << b["n_hf_improved"] << ", cm " << b["n_hf_cm"] << ")  N_lc "
       << b["n_lc"] << "  N_sop " << b["n_sop"] << "  N_r1_lc " << b["n_r1_lc"]
       << "  k " << b["k_reduction"] << "  t " << b["t"] << '\n';
  }
  if (rep.contains("level"))
    os << "mode " << rep["mode"].get<std::string>() << "  depth "
       << rep["level"] << "  master seed " << rep["master_seed"] << '\n';
  if (rep.contains("trials")) {
    for (const auto& tr : rep["trials"]) {
      os << "  trial " << tr["index"] << "  seed " << tr["seed"];
      if (tr["adversarial"].get<bool>()) os << "  adversarial";
      if (tr["skipped"].get<bool>()) {
        os << "  skipped\n";
        continue;
      }
      os << (tr["pass"].get<bool>() ? "  pass" : "  FAIL");
      for (const auto& c : tr["checks"])
        if (!c["pass"].get<bool>()) {
          os << "  [" << c["name"].get<std::string>();
          auto det = c["details"].get<std::string>();
          if (!det.empty()) os << ": " << det;
          os << "]";
        }
      os << '\n';
    }
  }
  if (rep.contains("search")) {
    const auto& s = rep["search"];
    os << "empirical threshold: " << s["n_emp"]
       << (s["certified"].get<bool>() ? "  (certified by a failure one level down)"
                                      : "  (no failing level found)")
       << '\n';
  }
  if (rep.contains("error"))
    os << "error: " << rep["error"]["what"].get<std::string>() << '\n';
  if (rep.contains("pass"))
    os << "result: " << (rep["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

void write_payload(const std::string& payload, const std::string& out) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out);
  f << payload;
}

void emit(const json& rep, const std::string& fmt, const std::string& out) {
  if (fmt == "csv")
    write_payload(to_csv(rep), out);
  else if (fmt == "text")
    write_payload(to_text(rep), out);
  else
    write_payload(rep.dump(2) + "\n", out);
}

json base_report(const std::string& command, const std::string& path,
                 const Instance& inst) {
  return json{{"tool_version", kVersion},
              {"command", command},
              {"instance",
               {{"label", inst.label},
                {"path", path},
                {"content_hash", content_hash(path)}}}};
}

long long parse_depth(const std::string& s) {
  if (s == "auto") return -1;
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("--N takes 'auto' or a positive integer");
  }
  if (pos != s.size() || v < 1)
    throw std::invalid_argument("--N takes 'auto' or a positive integer");
  return v;
}

struct CommonFlags {
  std::string file;
  std::string n = "auto";
  int trials = 20;
  std::uint64_t seed = 1;
  int threads = 1;
  int n_max = -1;
  bool shallow = false;
  std::string format = "json";
  std::string out;
};

int run_invariants(const CommonFlags& fl, bool with_bounds) {
  auto t0 = Clock::now();
  Instance inst = read_instance(fl.file);
  json rep = base_report(with_bounds ? "bounds" : "invariants", fl.file, inst);
  auto t1 = Clock::now();
  rep["ring_report"] = to_json(invariant_report(ring_module(inst)));
  rep["quotient_report"] = to_json(invariant_report(quotient_module(inst)));
  if (with_bounds) rep["bounds"] = to_json(compute_bounds(inst));
  rep["pass"] = true;
  rep["timings"] = {{"setup_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()},
                    {"total_ms", ms_since(t0)}};
  emit(rep, fl.format, fl.out);
  return 0;
}

int run_verify(const std::string& mode, const CommonFlags& fl) {
  auto t0 = Clock::now();
  Instance inst = read_instance(fl.file);
  json rep = base_report("verify " + mode, fl.file, inst);
  auto t1 = Clock::now();

  LabOptions opt;
  opt.n = parse_depth(fl.n);
  opt.trials = fl.trials;
  opt.seed = fl.seed;
  opt.threads = fl.threads;
  opt.n_max = fl.n_max;
  opt.r1_mode = fl.shallow;

  rep["ring_report"] = to_json(invariant_report(ring_module(inst)));
  rep["quotient_report"] = to_json(invariant_report(quotient_module(inst)));
  rep["bounds"] = to_json(compute_bounds(inst));
  rep["master_seed"] = opt.seed;
  auto t2 = Clock::now();

  VerifyReport vr;
  if (mode == "hf")
    vr = verify_hf(inst, opt);
  else if (mode == "lc")
    vr = verify_lc(inst, opt);
  else if (mode == "sop")
    vr = verify_sop(inst, opt);
  else
    vr = verify_structures(inst, opt);

  rep["mode"] = vr.mode;
  rep["level"] = vr.level;
  rep["pass"] = vr.pass;
  rep["trials"] = trials_json(vr);
  rep["timings"] = {{"setup_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()},
                    {"invariants_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t1).count()},
                    {"verify_ms", ms_since(t2)},
                    {"total_ms", ms_since(t0)}};
  emit(rep, fl.format, fl.out);
  return vr.pass ? 0 : 1;
}

int run_search(const CommonFlags& fl) {
  auto t0 = Clock::now();
  Instance inst = read_instance(fl.file);
  json rep = base_report("search-min-n", fl.file, inst);

  LabOptions opt;
  opt.n = parse_depth(fl.n);
  opt.trials = fl.trials;
  opt.seed = fl.seed;
  opt.threads = fl.threads;

  rep["bounds"] = to_json(compute_bounds(inst));
  rep["master_seed"] = opt.seed;
  auto t1 = Clock::now();

  SearchResult res = search_min_n(inst, opt);
  rep["search"] = {{"n_emp", res.n_emp}, {"certified", res.certified}};
  if (!res.pass_level.trials.empty())
    rep["search"]["pass_level"] = level_json(res.pass_level);
  if (res.certified) rep["search"]["fail_level"] = level_json(res.fail_level);
  rep["pass"] = true;
  rep["timings"] = {{"setup_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()},
                    {"search_ms", ms_since(t1)},
                    {"total_ms", ms_since(t0)}};
  emit(rep, fl.format, fl.out);
  return 0;
}

int run_gen(const std::string& family, int planes,
            const std::vector<int>& degrees, const std::vector<int>& exponents,
            std::uint32_t characteristic, std::uint64_t seed,
            const std::string& out) {
  Instance inst = [&] {
    if (family == "two_planes") return generate_two_planes(planes, characteristic);
    if (family == "ci" || family == "complete_intersection")
      return generate_complete_intersection(degrees, seed, characteristic);
    if (family == "monomial_curve")
      return generate_monomial_curve(exponents, characteristic);
    throw std::invalid_argument("unknown family: " + family);
  }();
  write_instance(out, inst);
  std::cout << "wrote " << out << "  (" << inst.label << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local invariants of quotient rings at the origin and "
               "perturbation experiments around them"};
  app.require_subcommand(1);

  CommonFlags fl;
  std::string verify_mode;

  auto add_common = [&](CLI::App* sub, bool with_lab) {
    sub->add_option("file", fl.file, "instance file")->required();
    if (with_lab) {
      sub->add_option("--trials", fl.trials, "number of sampled perturbations");
      sub->add_option("--seed", fl.seed, "master seed");
    }
    sub->add_option("--format", fl.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", fl.out, "write the report to this file");
  };

  CLI::App* inv = app.add_subcommand("invariants",
                                     "local invariants of R and R/I");
  add_common(inv, false);

  CLI::App* bnd = app.add_subcommand("bounds",
                                     "perturbation depth bounds for an instance");
  add_common(bnd, false);

  CLI::App* ver = app.add_subcommand("verify",
                                     "sample perturbations and check a claim");
  ver->add_option("mode", verify_mode, "hf | lc | sop | structures")
      ->required()
      ->check(CLI::IsMember({"hf", "lc", "sop", "structures"}));
  add_common(ver, true);
  ver->add_option("--N", fl.n, "perturbation depth, 'auto' picks the bound");
  ver->add_option("--threads", fl.threads, "worker threads for the trials");
  ver->add_option("--n-max", fl.n_max,
                  "compare Hilbert functions up to this degree");
  ver->add_flag("--shallow", fl.shallow,
                "single-element shallow depth with an sop filter (lc only)");

  CLI::App* sea = app.add_subcommand(
      "search-min-n", "scan downward for the least depth where all trials pass");
  add_common(sea, true);
  sea->add_option("--N", fl.n, "start the scan at this depth instead of the bound");

  CLI::App* gen = app.add_subcommand("gen", "write a generated instance file");
  std::string family, gen_out;
  int planes = 2;
  std::vector<int> degrees{2, 2};
  std::vector<int> exponents{4, 3, 1, 0};
  std::uint32_t characteristic = 32003;
  std::uint64_t gen_seed = 1;
  gen->add_option("family", family,
                  "two_planes | ci | monomial_curve")
      ->required();
  gen->add_option("-o,--out", gen_out, "instance file to write")->required();
  gen->add_option("--planes", planes, "dimension of each plane (two_planes)");
  gen->add_option("--degrees", degrees, "form degrees (ci)")->delimiter(',');
  gen->add_option("--exponents", exponents,
                  "curve exponents, strictly decreasing to 0 (monomial_curve)")
      ->delimiter(',');
  gen->add_option("--char", characteristic, "field characteristic");
  gen->add_option("--seed", gen_seed, "seed for random forms (ci)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (fl.shallow && verify_mode != "lc") {
    std::cerr << "error: --shallow only applies to verify lc\n";
    return 2;
  }

  try {
    if (inv->parsed()) return run_invariants(fl, false);
    if (bnd->parsed()) return run_invariants(fl, true);
    if (ver->parsed()) return run_verify(verify_mode, fl);
    if (sea->parsed()) return run_search(fl);
    if (gen->parsed())
      return run_gen(family, planes, degrees, exponents, characteristic,
                     gen_seed, gen_out);
  } catch (const semantic_error& e) {
    // the instance violates a structural requirement; report it as a failed
    // verification with the reason attached
    json rep{{"tool_version", kVersion},
             {"command", argc > 1 ? argv[1] : ""},
             {"pass", false},
             {"error", {{"type", "constraint-violation"}, {"what", e.what()}}}};
    if (!fl.file.empty()) {
      json in{{"path", fl.file}, {"label", ""}};
      try {
        in["content_hash"] = content_hash(fl.file);
      } catch (...) {
        in["content_hash"] = "";
      }
      rep["instance"] = in;
    }
    emit(rep, fl.format, fl.out);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
