#include <benchmark/benchmark.h>

#include "eulersym/egf.hpp"
#include "eulersym/euler.hpp"
#include "eulersym/identities.hpp"
#include "eulersym/sweep.hpp"

namespace {

using eulersym::Rational;

void BM_EulerTable(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulersym::euler_polynomials_up_to(n));
}
BENCHMARK(BM_EulerTable)->Arg(12)->Arg(24)->Arg(48);

void BM_EgfDivision(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const auto num = eulersym::egf_exp(Rational::parse("1/3"), order);
  const auto den = eulersym::egf_exp(5, order) + eulersym::TruncatedEgf::unit(order);
  for (auto _ : state) benchmark::DoNotOptimize(num / den);
}
BENCHMARK(BM_EgfDivision)->Arg(12)->Arg(24);

void BM_LambdaSeries(benchmark::State& state) {
  const std::vector<Rational> y{Rational::parse("1/2"), Rational::parse("-1/3"), Rational::parse("2/7")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eulersym::lambda_series(eulersym::LambdaFamily::k23, 0, {3, 5, 7}, y, 12));
  }
}
BENCHMARK(BM_LambdaSeries);

void BM_T1Variant(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const eulersym::EvalTables tables(n, 8);
  const std::array<Rational, 3> y{Rational::parse("1/2"), Rational::parse("-1/3"), Rational::parse("2/7")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eulersym::eval_T1_variant(tables, eulersym::kAllPerms[3], n, {3, 5, 7}, y));
  }
}
BENCHMARK(BM_T1Variant)->Arg(4)->Arg(10);

void BM_T14Variant(benchmark::State& state) {
  const eulersym::EvalTables tables(10, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eulersym::eval_T14_variant(tables, eulersym::kAllPerms[0], 10, {3, 5, 7}, Rational::parse("2/7")));
  }
}
BENCHMARK(BM_T14Variant);

void BM_SweepSlice(benchmark::State& state) {
  eulersym::SweepConfig c;
  c.families = {"all"};
  c.w_set = {1, 3};
  c.n_max = 6;
  c.y_samples = {0, Rational::parse("1/2")};
  c.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulersym::run_sweep(c));
}
BENCHMARK(BM_SweepSlice)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
