// SPDX-License-Identifier: MIT

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pstchain/m1hahn.hpp"
#include "pstchain/orthopoly.hpp"
#include "pstchain/pst.hpp"
#include "pstchain/spinchain.hpp"

namespace {

using namespace pstchain;

ChainParameters mirror_parameters(int order) {
  // alpha = beta = 2 for odd orders, N + 1 for even orders; both certifiable.
  return order % 2 == 0 ? ChainParameters(order, Rational(order + 1), Rational(order + 1))
                        : ChainParameters(order, Rational(2), Rational(2));
}

void BM_RecurrenceCoefficients(benchmark::State& state) {
  const auto p = mirror_parameters(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_coefficients(p));
}
BENCHMARK(BM_RecurrenceCoefficients)->Arg(8)->Arg(32)->Arg(128);

void BM_ClosedFormWeights(benchmark::State& state) {
  const auto p = mirror_parameters(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_weights(p));
}
BENCHMARK(BM_ClosedFormWeights)->Arg(8)->Arg(32)->Arg(128);

void BM_Eigensystem(benchmark::State& state) {
  const auto chain =
      build_jacobi(recurrence_coefficients(mirror_parameters(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(eigensystem(chain));
}
BENCHMARK(BM_Eigensystem)->Arg(16)->Arg(64)->Arg(256);

void BM_CertifyPst(benchmark::State& state) {
  const auto p = mirror_parameters(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_pst(p));
}
BENCHMARK(BM_CertifyPst)->Arg(7)->Arg(31)->Arg(63);

void BM_StieltjesReconstruct(benchmark::State& state) {
  const auto p = mirror_parameters(static_cast<int>(state.range(0)));
  const auto chain = build_jacobi(recurrence_coefficients(p));
  const auto eigen = eigensystem(chain);
  const auto weights = spectral_weights(eigen.eigenvalues);
  for (auto _ : state)
    benchmark::DoNotOptimize(stieltjes_reconstruct(eigen.eigenvalues, weights));
}
BENCHMARK(BM_StieltjesReconstruct)->Arg(8)->Arg(16)->Arg(20);

void BM_FidelityTrace(benchmark::State& state) {
  const auto chain = build_jacobi(recurrence_coefficients(mirror_parameters(15)));
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_trace(chain, 10.0, samples));
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_FidelityTrace)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
