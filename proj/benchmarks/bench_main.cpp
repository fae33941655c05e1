// SPDX-License-Identifier: Apache-2.0
//
// Timings for the kernels that dominate a verification run.

#include <benchmark/benchmark.h>

#include <cmath>

#include "ltoeplitz/ltoeplitz.hpp"

namespace {

using namespace ltoeplitz;

const long double kGolden = (std::sqrt(5.0L) - 1.0L) / 2.0L;

LambdaToeplitz laurent_operator() {
  const auto g = GroupSpec::lattice_lex(1);
  Symbol phi(g);
  phi.add(Character::unit(0, -2), 0.25);
  phi.add(Character{}, 2.0);
  phi.add(Character::unit(0, 1), 1.0);
  phi.add(Character::unit(0, 3), std::complex<double>(0, 0.5));
  return {GroupPoint::torus({Angle::real(kGolden)}), phi};
}

void BM_BuildSection(benchmark::State& state) {
  const auto op = laurent_operator();
  const auto w = TruncationWindow::leading(op.group(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_finite_section(op, w));
}
BENCHMARK(BM_BuildSection)->Arg(256)->Arg(1024);

void BM_SectionTorus(benchmark::State& state) {
  const auto g = GroupSpec::lattice_lex(2);
  Symbol phi(g);
  phi.add(Character::from_exponents({0, 1}), 1.0);
  phi.add(Character::from_exponents({1, -2}), 0.5);
  phi.add(Character{}, 0.3);
  const LambdaToeplitz op(GroupPoint::torus({Angle::rational(1, 2), Angle::rational(1, 3)}), phi);
  const auto w = TruncationWindow::from_box(g, ExponentBox::cube(2, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_finite_section(op, w));
}
BENCHMARK(BM_SectionTorus)->Arg(8)->Arg(16);

void BM_SigmaMax(benchmark::State& state) {
  const auto op = laurent_operator();
  const auto s = build_finite_section(op, TruncationWindow::leading(op.group(), static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_max(s.matrix));
}
BENCHMARK(BM_SigmaMax)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Winding(benchmark::State& state) {
  const auto op = laurent_operator();
  for (auto _ : state) benchmark::DoNotOptimize(winding_character(op.symbol()));
}
BENCHMARK(BM_Winding);

void BM_LogMean(benchmark::State& state) {
  const auto op = laurent_operator();
  for (auto _ : state) benchmark::DoNotOptimize(log_mean(op.symbol().analytic_part()));
}
BENCHMARK(BM_LogMean);

void BM_SupNorm(benchmark::State& state) {
  const auto op = laurent_operator();
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm(op.modified_symbol()));
}
BENCHMARK(BM_SupNorm);

}  // namespace

BENCHMARK_MAIN();
