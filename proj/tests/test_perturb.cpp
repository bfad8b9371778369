#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "gcmlab/instance_io.hpp"
#include "gcmlab/parse.hpp"
#include "gcmlab/perturb.hpp"

using namespace gcmlab;

namespace {

Instance toy_line() {
  Ring r = Ring::make(32003, {"x", "y"});
  return make_instance(r, {parse_poly(r, "x")}, "toy_line");
}

Instance embedded_line() {
  Ring amb = Ring::make(32003, {"x", "y"});
  Ring r = amb.with_quotient(parse_poly_list(amb, "x^3, x^2*y^2"));
  return make_instance(r, {parse_poly(r, "y")}, "embedded_line");
}

const TrialReport* find_adversarial(const VerifyReport& rep) {
  for (const auto& tr : rep.trials)
    if (tr.adversarial) return &tr;
  return nullptr;
}

}  // namespace

TEST_CASE("bounds for the two-planes instance") {
  Instance inst = generate_two_planes(2);
  CHECK(inst.ring.vars() == std::vector<std::string>{"x", "y", "z", "w"});
  CHECK(inst.seq.size() == 1);

  BoundSet b = compute_bounds(inst);
  CHECK(b.s == 1);
  CHECK(b.n_hf == 6);
  CHECK(b.n_hf_improved == 4);
  CHECK(b.n_hf_cm == -1);
  CHECK(b.n_lc == 4);
  CHECK(b.n_sop == 4);
  CHECK(b.n_r1_lc == 1);
  CHECK(b.k_reduction == 4);
  CHECK(b.t == 1);
}

TEST_CASE("sampled families are deterministic and lie deep enough") {
  Instance inst = generate_two_planes(2);
  Rng rng(42);
  auto fam = sample_family(inst, 3, 5, rng);
  REQUIRE(fam.size() == 5);
  CHECK(fam[0][0] == inst.seq[0]);
  for (std::size_t i = 1; i < fam.size(); ++i) {
    Poly eps = fam[i][0] - inst.seq[0];
    CHECK(!eps.is_zero());
    CHECK(eps.min_degree() >= 3);
  }
  auto fam2 = sample_family(inst, 3, 5, Rng(42));
  for (std::size_t i = 0; i < fam.size(); ++i)
    CHECK(fam[i][0] == fam2[i][0]);
  auto fam3 = sample_family(inst, 3, 5, Rng(43));
  CHECK(fam[1][0] != fam3[1][0]);
}

TEST_CASE("hf verification passes at the guaranteed depth") {
  Instance inst = generate_two_planes(2);
  LabOptions opt;
  opt.trials = 6;
  opt.seed = 7;
  opt.threads = 2;
  auto rep = verify_hf(inst, opt);
  CHECK(rep.level == 6);
  CHECK(rep.pass);
  // no worst-case member exists this deep: the sequence has order 1
  CHECK(find_adversarial(rep) == nullptr);
  for (const auto& tr : rep.trials) {
    CHECK(tr.pass);
    REQUIRE(!tr.len_base.empty());
    CHECK(tr.len_base == tr.len_pert);
    CHECK(tr.len_base[0] == 1);
  }
}

TEST_CASE("hf verification fails honestly at depth one") {
  Instance inst = generate_two_planes(2);
  LabOptions opt;
  opt.n = 1;
  opt.trials = 3;
  opt.seed = 11;
  auto rep = verify_hf(inst, opt);
  CHECK(!rep.pass);
  const TrialReport* adv = find_adversarial(rep);
  REQUIRE(adv != nullptr);
  CHECK(!adv->pass);
  bool sop_failed = false;
  for (const auto& c : adv->checks)
    if (c.name == "sop-preserved" && !c.pass) sop_failed = true;
  CHECK(sop_failed);
}

TEST_CASE("lc verification at the bound and in shallow mode") {
  Instance inst = generate_two_planes(2);
  LabOptions opt;
  opt.trials = 5;
  opt.seed = 13;
  opt.threads = 2;
  auto rep = verify_lc(inst, opt);
  CHECK(rep.level == 4);
  CHECK(rep.pass);
  for (const auto& tr : rep.trials) {
    REQUIRE(tr.lc_base.size() == 1);
    CHECK(tr.lc_base[0] == 1);
    CHECK(tr.lc_pert[0] == 1);
  }

  LabOptions shallow = opt;
  shallow.r1_mode = true;
  shallow.trials = 8;
  auto rep2 = verify_lc(inst, shallow);
  CHECK(rep2.level == 1);
  CHECK(rep2.pass);
}

TEST_CASE("lc verification handles sequences of length two") {
  Ring r = Ring::make(32003, {"x", "y", "z"});
  Instance inst = make_instance(r, parse_poly_list(r, "x, y"), "plane_pair_cut");
  LabOptions opt;
  opt.trials = 4;
  opt.seed = 23;
  auto rep = verify_lc(inst, opt);
  CHECK(rep.level == 2);
  CHECK(rep.pass);
  for (const auto& tr : rep.trials) {
    REQUIRE(tr.lc_base.size() == 1);
    CHECK(tr.lc_base[0] == 0);
    CHECK(tr.lc_pert[0] == 0);
  }
}

TEST_CASE("sop verification at its bound") {
  Instance inst = generate_two_planes(2);
  LabOptions opt;
  opt.trials = 8;
  opt.seed = 17;
  opt.threads = 2;
  auto rep = verify_sop(inst, opt);
  CHECK(rep.level == 4);
  CHECK(rep.pass);
  CHECK(rep.trials.size() == 8);
}

TEST_CASE("structure identities on the two-planes instance") {
  Instance inst = generate_two_planes(2);
  LabOptions opt;
  opt.seed = 3;
  auto rep = verify_structures(inst, opt);
  CHECK(rep.level == 4);
  REQUIRE(rep.trials.size() == 1);
  for (const auto& c : rep.trials[0].checks) {
    INFO(c.name << ": " << c.details);
    CHECK(c.pass);
  }
  CHECK(rep.pass);
}

TEST_CASE("structure identities survive an empty reduction") {
  Instance inst = embedded_line();
  LabOptions opt;
  opt.seed = 5;
  auto rep = verify_structures(inst, opt);
  REQUIRE(rep.trials.size() == 1);
  for (const auto& c : rep.trials[0].checks) {
    INFO(c.name << ": " << c.details);
    CHECK(c.pass);
  }
  CHECK(rep.pass);
}

TEST_CASE("the search pins the empirical threshold on a toy line") {
  Instance inst = toy_line();
  BoundSet b = compute_bounds(inst);
  CHECK(b.n_hf == 2);

  LabOptions opt;
  opt.trials = 11;
  opt.seed = 5;
  auto res = search_min_n(inst, opt);
  CHECK(res.n_emp == 2);
  CHECK(res.certified);
  CHECK(res.fail_level.level == 1);
  const TrialReport* adv = find_adversarial(res.fail_level);
  REQUIRE(adv != nullptr);
  CHECK(!adv->pass);
  CHECK(res.n_emp <= b.n_hf);
}

TEST_CASE("generated families validate and carry the advertised profiles") {
  Instance ci = generate_complete_intersection({2, 2});
  auto rep = invariant_report(ring_module(ci));
  CHECK(rep.dim == 2);
  CHECK(rep.cm);
  CHECK(rep.buchsbaum == 0);
  CHECK(rep.e == 4);
  BoundSet b = compute_bounds(ci);
  CHECK(b.n_hf_cm > 0);
  CHECK(b.t == 1);

  Instance mc = generate_monomial_curve({4, 3, 1, 0});
  auto mrep = invariant_report(ring_module(mc));
  CHECK(mrep.dim == 2);
  CHECK(mrep.depth == 1);
  CHECK(mrep.gcm);
  CHECK(!mrep.cm);
  CHECK(mrep.lc == std::vector<long long>{0, 1});
  CHECK(mrep.e == 4);
  CHECK(mrep.hdeg == 5);

  Instance tp3 = generate_two_planes(3);
  auto trep = invariant_report(ring_module(tp3));
  CHECK(trep.dim == 3);
  CHECK(trep.depth == 1);
  CHECK(trep.lc == std::vector<long long>{0, 1, 0});
  CHECK(trep.e == 2);
  CHECK(trep.buchsbaum == 2);
}

TEST_CASE("instance files round-trip and hash stably") {
  Instance inst = generate_two_planes(2);
  const char* path = "tmp_two_planes.inst";
  write_instance(path, inst);
  Instance back = read_instance(path);
  CHECK(back.label == inst.label);
  CHECK(back.ring.vars() == inst.ring.vars());
  REQUIRE(back.seq.size() == 1);
  CHECK(back.seq[0] == inst.seq[0]);
  CHECK(back.ring.quotient().size() == 4);

  std::string h = content_hash(path);
  CHECK(h.size() == 16);
  CHECK(h == content_hash(path));

  {
    std::ofstream bad("tmp_bad_char.inst");
    bad << "{\"characteristic\":4,\"variables\":[\"x\"],"
        << "\"sequence\":[\"x\"],\"label\":\"bad\"}\n";
  }
  try {
    read_instance("tmp_bad_char.inst");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("not prime") != std::string::npos);
  }

  {
    std::ofstream bad("tmp_bad_sop.inst");
    bad << "{\"characteristic\":32003,\"variables\":[\"x\",\"y\",\"z\",\"w\"],"
        << "\"ambient_quotient\":[\"x*z\",\"x*w\",\"y*z\",\"y*w\"],"
        << "\"sequence\":[\"x\"],\"label\":\"bad sop\"}\n";
  }
  CHECK_THROWS_AS(read_instance("tmp_bad_sop.inst"), semantic_error);

  std::remove(path);
  std::remove("tmp_bad_char.inst");
  std::remove("tmp_bad_sop.inst");
}
