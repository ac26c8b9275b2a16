#include <benchmark/benchmark.h>

#include <cmath>

#include "ionsim/atomic.hpp"
#include "ionsim/cz.hpp"
#include "ionsim/qubit.hpp"
#include "ionsim/readout.hpp"
#include "ionsim/signal.hpp"
#include "ionsim/trap.hpp"

using namespace ionsim;

static void BM_TermSymbols(benchmark::State& state) {
  const auto one = HalfInt::from_int(1);
  const auto half = HalfInt::half();
  for (auto _ : state)
    benchmark::DoNotOptimize(atomic::term_symbols({{one, half}, {one, half}}));
}
BENCHMARK(BM_TermSymbols);

static void BM_TrapClosedForm(benchmark::State& state) {
  const trap::TrapConfig cfg{0.04, 2.0 * M_PI * 8e6, 1e-5, 0.0};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trap::closed_form_position(cfg, t));
    t += 1e-9;
  }
}
BENCHMARK(BM_TrapClosedForm);

static void BM_TrapOracle(benchmark::State& state) {
  const trap::TrapConfig cfg{0.04, 2.0 * M_PI * 8e6, 1e-5, 0.0};
  const double t_end = 3.0 * 2.0 * M_PI / trap::secular_frequency(cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(trap::integrate_equation_of_motion(
        cfg, trap::closed_form_position(cfg, 0.0), 0.0, t_end,
        2.0 * M_PI / (50.0 * cfg.omega), 200));
}
BENCHMARK(BM_TrapOracle);

static void BM_EvolveFull(benchmark::State& state) {
  const qubit::QubitParams params{2.0 * M_PI * 1e6, 2.0 * M_PI * 1e4};
  const double t_pi = M_PI / params.omega_r;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qubit::evolve_full(qubit::QubitState::ground(), params, params.omega_l, t_pi));
}
BENCHMARK(BM_EvolveFull);

static void BM_ReadoutShots(benchmark::State& state) {
  const readout::ReadoutModel model{10.0, 0.1, 0.0};
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(readout::simulate_readout(1, model, shots, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_ReadoutShots)->Arg(1000)->Arg(10000);

static void BM_CzMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cz::cz_matrix());
}
BENCHMARK(BM_CzMatrix);

static void BM_VerifyEnvelope(benchmark::State& state) {
  const signal::MixConfig cfg{2.0 * M_PI * 5e3, 2.0 * M_PI * 500e3, 0.7};
  for (auto _ : state)
    benchmark::DoNotOptimize(signal::verify_envelope(cfg, 2e-3, 4e6));
}
BENCHMARK(BM_VerifyEnvelope);

BENCHMARK_MAIN();
