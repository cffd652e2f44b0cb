#include <benchmark/benchmark.h>

#include <random>

#include "weilcensus/curve_zeta.hpp"
#include "weilcensus/ell_invariants.hpp"
#include "weilcensus/power_sums.hpp"
#include "weilcensus/twist_count.hpp"

using namespace weilcensus;

static void BM_PointCount(benchmark::State& state) {
  const auto w = WeilPolynomial::validate(3, {9, 9, 7, 3, 1});
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(point_count(w, n));
}
BENCHMARK(BM_PointCount)->Arg(16)->Arg(256)->Arg(4096);

static void BM_PointCountResultant(benchmark::State& state) {
  const auto w = WeilPolynomial::validate(3, {9, 9, 7, 3, 1});
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(point_count_via_resultant(w, n));
}
BENCHMARK(BM_PointCountResultant)->Arg(16)->Arg(256);

static void BM_BruteForceElliptic(benchmark::State& state) {
  CurveSpec c;
  c.q = 2;
  c.weierstrass = WeierstrassModel{{1, 0, 0, 0, 1}};
  EnumerationOptions opt;
  opt.threads = 1;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(c, n, opt));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_BruteForceElliptic)->Arg(10)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_BruteForceGenus2F3(benchmark::State& state) {
  CurveSpec c;
  c.q = 3;
  c.hyperelliptic = HyperellipticModel{{1, 2, 0, 0, 0, 1}, {}};
  EnumerationOptions opt;
  opt.threads = 1;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(c, n, opt));
}
BENCHMARK(BM_BruteForceGenus2F3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_EllInvariants(benchmark::State& state) {
  const auto w = WeilPolynomial::validate(3, {9, 9, 7, 3, 1});
  const auto ell = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_ell_invariants(w, ell));
}
BENCHMARK(BM_EllInvariants)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_FitRecurrence(benchmark::State& state) {
  const auto w = WeilPolynomial::validate(2, {4, -4, 4, -2, 1});
  const auto counts = point_count_sequence(w, static_cast<std::size_t>(state.range(0)));
  const std::vector<Rational> seq(counts.begin(), counts.end());
  for (auto _ : state) benchmark::DoNotOptimize(fit_recurrence(seq));
}
BENCHMARK(BM_FitRecurrence)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_TwistOracle(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<DihedralDatum> data;
  for (int i = 0; i < 16; ++i) data.push_back(random_datum(rng, static_cast<std::uint64_t>(state.range(0)), i % 2 == 0));
  for (auto _ : state)
    for (const auto& d : data) benchmark::DoNotOptimize(oracle_count(d));
}
BENCHMARK(BM_TwistOracle)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
