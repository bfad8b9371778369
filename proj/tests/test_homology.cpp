#include "doctest.h"

#include <vector>

#include "gcmlab/homology.hpp"
#include "gcmlab/parse.hpp"

using namespace gcmlab;

namespace {

Poly P(const Ring& r, const std::string& s) { return parse_poly(r, s); }

LocalModule cyclic_of(const Ring& r, const std::string& gens) {
  return LocalModule::cyclic(make_ideal(r, parse_poly_list(r, gens)));
}

// consecutive maps must compose to zero
void check_complex(const Resolution& res, const Ring& r) {
  for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) {
    int rows = res.ranks[k];
    for (const auto& col : res.maps[k + 1]) {
      Vec image(r, rows);
      for (int j = 0; j < res.ranks[(int)k + 1]; ++j)
        image = image + res.maps[k][(std::size_t)j].poly_mul(col.component(j));
      CHECK(image.is_zero());
    }
  }
}

}  // namespace

TEST_CASE("the Koszul resolution of the maximal ideal") {
  Ring r = Ring::make(32003, {"x", "y"});
  auto M = cyclic_of(r, "x, y");
  auto res = free_resolution(M, 2);
  CHECK(res.complete);
  CHECK(res.ranks == std::vector<int>{1, 2, 1});
  check_complex(res, r);

  CHECK(module_dim(M) == 0);
  CHECK(module_depth(M) == 0);
  CHECK(finite_length(M) == 1);
  CHECK(finite_length(ext_module(M, 0)) == 0);
  CHECK(finite_length(ext_module(M, 1)) == 0);
  CHECK(finite_length(ext_module(M, 2)) == 1);
  CHECK(lc_length(M, 0) == 1);
}

TEST_CASE("two transverse planes: resolution, dimension, depth") {
  Ring r = Ring::make(32003, {"x", "y", "z", "w"});
  auto M = cyclic_of(r, "x*z, x*w, y*z, y*w");

  auto res = free_resolution(M, 4);
  CHECK(res.complete);
  CHECK(res.ranks == std::vector<int>{1, 4, 4, 1});
  check_complex(res, r);

  CHECK(module_dim(M) == 2);
  CHECK(module_depth(M) == 1);
  CHECK(lc_length(M, 0) == 0);
  CHECK(lc_length(M, 1) == 1);
  CHECK(lc_length(M, 2) == -1);  // top local cohomology is never finite here

  auto fit = module_hilbert(M);
  CHECK(fit.degree == 2);
  CHECK(fit.e == std::vector<long long>{2, 0, -1});

  // support meets the origin in dimension two, so no finite kernel part
  CHECK(finite_length(gamma_m(M)) == 0);
}

TEST_CASE("a complete intersection is Cohen-Macaulay") {
  Ring r = Ring::make(32003, {"x", "y"});
  auto M = cyclic_of(r, "x^2, y^2");
  auto res = free_resolution(M, 2);
  CHECK(res.complete);
  CHECK(res.ranks == std::vector<int>{1, 2, 1});
  CHECK(module_dim(M) == 0);
  CHECK(module_depth(M) == 0);
  CHECK(finite_length(M) == 4);
  CHECK(lc_length(M, 0) == 4);

  Ring r3 = Ring::make(32003, {"x", "y", "z"});
  auto H = cyclic_of(r3, "x*y");
  CHECK(module_dim(H) == 2);
  CHECK(module_depth(H) == 2);
  CHECK(lc_length(H, 0) == 0);
  CHECK(lc_length(H, 1) == 0);
  CHECK(module_hilbert(H).e[0] == 2);
}

TEST_CASE("finite kernel part of a line with an embedded point") {
  Ring r = Ring::make(32003, {"x", "y"});
  auto M = cyclic_of(r, "x^2, x*y");
  CHECK(module_dim(M) == 1);
  CHECK(module_depth(M) == 0);
  CHECK(lc_length(M, 0) == 1);
  CHECK(finite_length(gamma_m(M)) == 1);
  CHECK(module_hilbert(M).e[0] == 1);

  auto N = cyclic_of(r, "x^3, x^2*y^2");
  CHECK(module_dim(N) == 1);
  CHECK(module_depth(N) == 0);
  CHECK(lc_length(N, 0) == 2);
  CHECK(finite_length(gamma_m(N)) == 2);
  CHECK(module_hilbert(N).e[0] == 2);
}

TEST_CASE("free and zero modules") {
  Ring r = Ring::make(32003, {"x", "y"});
  LocalModule F(r, 2, {});
  auto res = free_resolution(F, 2);
  CHECK(res.complete);
  CHECK(res.ranks == std::vector<int>{2});
  CHECK_THROWS_AS(free_resolution(F, 3), std::invalid_argument);
  CHECK(module_dim(F) == 2);
  CHECK(module_depth(F) == 2);
  CHECK(finite_length(F) == -1);
  CHECK(finite_length(ext_module(F, 0)) == -1);
  CHECK(finite_length(ext_module(F, 1)) == 0);
  CHECK(finite_length(ext_module(F, 2)) == 0);

  LocalModule Z(r, 1, {Vec::unit(r, 1, 0)});
  CHECK(module_dim(Z) == -1);
  CHECK(module_depth(Z) == -1);
  CHECK(finite_length(Z) == 0);
  CHECK(finite_length(ext_module(Z, 0)) == 0);
  CHECK(finite_length(ext_module(Z, 1)) == 0);
}

TEST_CASE("a redundant presentation is trimmed away") {
  // e1 = y e0 collapses the second generator; the module is S/(x^2)
  Ring r = Ring::make(32003, {"x", "y"});
  Vec unitrel = Vec::embed(P(r, "y"), 2, 0) + Vec::embed(P(r, "-1"), 2, 1);
  LocalModule M(r, 2, {Vec::embed(P(r, "x^2"), 2, 0), unitrel});
  auto res = free_resolution(M, 2);
  CHECK(res.complete);
  CHECK(res.ranks == std::vector<int>{1, 1});
  CHECK(module_dim(M) == 1);
  CHECK(module_depth(M) == 1);
  auto fit = module_hilbert(M);
  CHECK(fit.e == std::vector<long long>{2, 1});
}

TEST_CASE("resolution prefixes are exact at the first joint") {
  Ring r = Ring::make(32003, {"x", "y", "z"});
  auto M = cyclic_of(r, "x^2 - y*z, x*y^2 - z^3, y^4");
  auto res = free_resolution(M, 2);
  REQUIRE(res.maps.size() >= 2);
  check_complex(res, r);

  // the first map generates the relation module, the second map generates
  // the relations of the first map's columns
  Submodule d1(r, 1, res.maps[0]);
  CHECK(d1.same_module(M.relation_module()));
  Submodule d2(r, res.ranks[1], res.maps[1]);
  Submodule syz(r, res.ranks[1], d1.syzygies());
  CHECK(d2.same_module(syz));
}

TEST_CASE("local cohomology over a quotient ring presentation") {
  // R = k[x,y]/(x^2, x*y): as an R-module, R has kernel part of length 1
  Ring s = Ring::make(32003, {"x", "y"});
  Ring r = s.with_quotient(parse_poly_list(s, "x^2, x*y"));
  auto M = LocalModule::cyclic(make_ideal(r, {}));
  CHECK(module_dim(M) == 1);
  CHECK(module_depth(M) == 0);
  CHECK(lc_length(M, 0) == 1);
}
