#include <benchmark/benchmark.h>

#include "gcmlab/homology.hpp"
#include "gcmlab/invariants.hpp"
#include "gcmlab/parse.hpp"
#include "gcmlab/perturb.hpp"

using namespace gcmlab;

namespace {

Ring two_planes_ring() {
  Ring amb = Ring::make(32003, {"x", "y", "z", "w"});
  return amb.with_quotient(parse_poly_list(amb, "x*z, x*w, y*z, y*w"));
}

void BM_groebner_power(benchmark::State& state) {
  Ring r = Ring::make(32003, {"x", "y", "z", "w"});
  IdealHandle mx = maximal_ideal(r);
  int k = (int)state.range(0);
  for (auto _ : state) {
    IdealHandle h = make_ideal(r, mx.power(k).gens());
    benchmark::DoNotOptimize(h.groebner());
  }
}
BENCHMARK(BM_groebner_power)->Arg(3)->Arg(5)->Arg(7);

void BM_local_length_inhomogeneous(benchmark::State& state) {
  Ring r = two_planes_ring();
  Rng rng(99);
  Poly f = parse_poly(r, "x - z");
  Poly eps = random_in_power(r, (int)state.range(0), 1, 0.6, rng);
  for (auto _ : state) {
    IdealHandle h =
        make_ideal(r, {f + eps}).plus(maximal_ideal(r).power(6));
    benchmark::DoNotOptimize(h.local_length());
  }
}
BENCHMARK(BM_local_length_inhomogeneous)->Arg(2)->Arg(4);

void BM_invariant_report(benchmark::State& state) {
  Ring r = two_planes_ring();
  for (auto _ : state) {
    LocalModule m = LocalModule::cyclic(make_ideal(r, {}));
    benchmark::DoNotOptimize(invariant_report(m));
  }
}
BENCHMARK(BM_invariant_report);

void BM_hilbert_samuel_fit(benchmark::State& state) {
  Ring r = two_planes_ring();
  IdealHandle j = make_ideal(r, parse_poly_list(r, "x - z, y - w"));
  for (auto _ : state) {
    LocalModule m = LocalModule::cyclic(make_ideal(r, {}));
    benchmark::DoNotOptimize(hilbert_samuel(m, j));
  }
}
BENCHMARK(BM_hilbert_samuel_fit);

void BM_verify_hf_trial(benchmark::State& state) {
  Instance inst = generate_two_planes(2);
  LabOptions opt;
  opt.trials = 2;
  opt.seed = 42;
  for (auto _ : state) benchmark::DoNotOptimize(verify_hf(inst, opt));
}
BENCHMARK(BM_verify_hf_trial);

}  // namespace

BENCHMARK_MAIN();
