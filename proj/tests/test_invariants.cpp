#include <stdexcept>

#include "doctest.h"
#include "gcmlab/invariants.hpp"
#include "gcmlab/parse.hpp"

using namespace gcmlab;

namespace {

Poly P(const Ring& r, const char* s) { return parse_poly(r, s); }

LocalModule cyclic_of(const Ring& r, const char* gens) {
  return LocalModule::cyclic(make_ideal(r, parse_poly_list(r, gens)));
}

}  // namespace

TEST_CASE("profile of two transverse planes") {
  Ring r = Ring::make(32003, {"x", "y", "z", "w"});
  auto M = cyclic_of(r, "x*z, x*w, y*z, y*w");
  auto rep = invariant_report(M);
  CHECK(rep.dim == 2);
  CHECK(rep.depth == 1);
  CHECK(rep.lc == std::vector<long long>{0, 1});
  CHECK(rep.e == 2);
  CHECK(rep.buchsbaum == 1);
  CHECK(rep.hdeg == 3);
  CHECK(rep.gcm);
  CHECK(!rep.cm);

  auto J = make_ideal(r, parse_poly_list(r, "x - z, y - w"));
  auto sc = standard_check(M, J);
  CHECK(sc.standard);
  CHECK(sc.len_mod_j == 3);
  CHECK(sc.e_j == 2);
  CHECK(sc.gap == 1);

  // a standard parameter ideal realizes the predicted function everywhere
  auto hs = hilbert_samuel(M, J);
  REQUIRE(hs.values.size() >= 9);
  for (int n = 0; n <= 8; ++n)
    CHECK(hs.values[(std::size_t)n] == predicted_standard_hf(rep, sc.e_j, n));
}

TEST_CASE("a line with an embedded point against its obvious parameter") {
  Ring r = Ring::make(32003, {"x", "y"});
  auto M = cyclic_of(r, "x^2, x*y");
  auto rep = invariant_report(M);
  CHECK(rep.dim == 1);
  CHECK(rep.depth == 0);
  CHECK(rep.lc == std::vector<long long>{1});
  CHECK(rep.e == 1);
  CHECK(rep.buchsbaum == 1);
  CHECK(rep.hdeg == 2);
  CHECK(rep.gcm);

  auto J = make_ideal(r, {P(r, "y")});
  auto hs = hilbert_samuel(M, J);
  CHECK(hs.e[0] == 1);
  auto sc = standard_check(M, J);
  CHECK(sc.standard);
  CHECK(sc.gap == 1);
  for (int n = 0; n <= 8; ++n) {
    CHECK(hs.values[(std::size_t)n] == n + 2);
    CHECK(predicted_standard_hf(rep, sc.e_j, n) == n + 2);
  }
}

TEST_CASE("a thicker embedded point breaks standardness") {
  Ring r = Ring::make(32003, {"x", "y"});
  auto M = cyclic_of(r, "x^3, x^2*y^2");
  auto rep = invariant_report(M);
  CHECK(rep.dim == 1);
  CHECK(rep.depth == 0);
  CHECK(rep.lc == std::vector<long long>{2});
  CHECK(rep.e == 2);
  CHECK(rep.buchsbaum == 2);
  CHECK(rep.hdeg == 4);
  CHECK(rep.gcm);

  auto J = make_ideal(r, {P(r, "y")});
  auto sc = standard_check(M, J);
  CHECK(!sc.standard);
  CHECK(sc.len_mod_j == 3);
  CHECK(sc.e_j == 2);
  CHECK(sc.gap == 1);

  // the length function disagrees with the standard prediction at n = 0
  auto hs = hilbert_samuel(M, J);
  CHECK(hs.values[0] == 3);
  CHECK(predicted_standard_hf(rep, sc.e_j, 0) == 4);
}

TEST_CASE("Cohen-Macaulay profiles collapse to the multiplicity") {
  Ring r3 = Ring::make(32003, {"x", "y", "z"});
  LocalModule S(r3, 1, {});
  auto rep = invariant_report(S);
  CHECK(rep.dim == 3);
  CHECK(rep.depth == 3);
  CHECK(rep.cm);
  CHECK(rep.gcm);
  CHECK(rep.buchsbaum == 0);
  CHECK(rep.e == 1);
  CHECK(rep.hdeg == 1);

  auto H = cyclic_of(r3, "x*y");
  auto hrep = invariant_report(H);
  CHECK(hrep.cm);
  CHECK(hrep.e == 2);
  CHECK(hrep.hdeg == 2);
  CHECK(hrep.lc == std::vector<long long>{0, 0});

  auto hs = hilbert_samuel(S, maximal_ideal(r3));
  CHECK(hs.degree == 3);
  CHECK(hs.e == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("kernel part splits off the extended degree") {
  Ring r = Ring::make(32003, {"x", "y"});
  Ring r4 = Ring::make(32003, {"x", "y", "z", "w"});
  const char* fixtures[] = {"x^2, x*y", "x^3, x^2*y^2"};
  for (const char* f : fixtures) {
    auto M = cyclic_of(r, f);
    auto rep = invariant_report(M);
    auto sat = M.relation_module().saturate_by_maximal();
    LocalModule Msat(r, 1, sat.gens());
    auto reps = invariant_report(Msat);
    CHECK(rep.hdeg == reps.hdeg + finite_length(gamma_m(M)));
    CHECK(reps.cm);
  }

  // a generic hyperplane section never raises the degree
  auto M = cyclic_of(r4, "x*z, x*w, y*z, y*w");
  auto rep = invariant_report(M);
  auto Q = quotient_by(M, {P(r4, "x - z + 2*y - 3*w")});
  auto repq = invariant_report(Q);
  CHECK(repq.gcm);
  CHECK(rep.hdeg >= repq.hdeg);
}

TEST_CASE("generic linear forms give small reductions") {
  Ring r = Ring::make(32003, {"x", "y", "z", "w"});
  auto M = cyclic_of(r, "x*z, x*w, y*z, y*w");
  auto rep = invariant_report(M);

  Rng rng(20240811);
  auto red = minimal_reduction(M, rng);
  CHECK((int)red.forms.size() == 2);
  CHECK(is_part_of_sop(M, red.forms));
  // factorial(dim) * hdeg - 1 bounds the reduction number
  CHECK(red.r <= 2 * (int)rep.hdeg - 1);

  // an explicit reduction: multiplicities agree and the number is small
  std::vector<Poly> forms = {P(r, "x - z"), P(r, "y - w")};
  int rn = reduction_number(M, forms, 8);
  CHECK(rn >= 0);
  CHECK(rn <= 2 * (int)rep.hdeg - 1);
  auto hs = hilbert_samuel(M, make_ideal(r, forms));
  CHECK(hs.e[0] == rep.e);
}

TEST_CASE("filter regularity distinguishes good and bad directions") {
  Ring r = Ring::make(32003, {"x", "y", "z", "w"});
  auto M = cyclic_of(r, "x*z, x*w, y*z, y*w");
  CHECK(is_filter_regular(M, parse_poly_list(r, "x - z, y - w")));
  // x kills the whole second plane, a positive-dimensional kernel
  CHECK(!is_filter_regular(M, {P(r, "x")}));
}

TEST_CASE("parameter preconditions are enforced") {
  Ring r = Ring::make(32003, {"x", "y", "z", "w"});
  auto M = cyclic_of(r, "x*z, x*w, y*z, y*w");
  CHECK_THROWS_AS(hilbert_samuel(M, make_ideal(r, {P(r, "x - z")})),
                  std::invalid_argument);
  CHECK_THROWS_AS(standard_check(M, make_ideal(r, {P(r, "x - z")})),
                  std::invalid_argument);
  CHECK_THROWS_AS(standard_check(M, maximal_ideal(r)),
                  std::invalid_argument);

  CHECK(is_part_of_sop(M, {P(r, "x - z")}));
  CHECK(!is_part_of_sop(M, {P(r, "x")}));
}

TEST_CASE("parameters deep inside the maximal ideal are standard") {
  Ring r = Ring::make(32003, {"x", "y", "z", "w"});
  auto M = cyclic_of(r, "x*z, x*w, y*z, y*w");
  Rng rng(7);
  int found = 0;
  while (found < 3) {
    std::vector<Poly> forms = {random_form(r, 1, 1.0, rng),
                               random_form(r, 1, 1.0, rng)};
    if (!is_part_of_sop(M, forms)) continue;
    ++found;
    CHECK(standard_check(M, make_ideal(r, forms)).standard);
  }

  // the thicker embedded point needs parameters one power deeper
  Ring r2 = Ring::make(32003, {"x", "y"});
  auto N = cyclic_of(r2, "x^3, x^2*y^2");
  int found2 = 0;
  while (found2 < 3) {
    std::vector<Poly> forms = {random_form(r2, 2, 1.0, rng)};
    if (!is_part_of_sop(N, forms)) continue;
    ++found2;
    CHECK(standard_check(N, make_ideal(r2, forms)).standard);
  }
}

TEST_CASE("quotient ring handles feed the same machinery") {
  Ring amb = Ring::make(32003, {"x", "y"});
  Ring r = amb.with_quotient(parse_poly_list(amb, "x^2, x*y"));
  auto M = LocalModule::cyclic(make_ideal(r, {}));
  auto rep = invariant_report(M);
  CHECK(rep.dim == 1);
  CHECK(rep.e == 1);
  CHECK(rep.buchsbaum == 1);

  auto J = make_ideal(r, {parse_poly(r, "y")});
  CHECK(standard_check(M, J).standard);
}
