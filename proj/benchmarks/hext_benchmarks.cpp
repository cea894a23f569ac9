// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include "hext/constants.hpp"
#include "hext/convolution.hpp"
#include "hext/extension.hpp"
#include "hext/inequalities.hpp"
#include "hext/kernels.hpp"
#include "hext/spectral.hpp"

namespace {

void BM_LemmaI(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(x += hext::lemma_I(2, 1, 0.5, 2.5));
}
BENCHMARK(BM_LemmaI);

void BM_Phi(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(x += hext::Phi(1, 1, 0.5, 0.7, 0.4, 0.3));
}
BENCHMARK(BM_Phi);

void BM_ConfluentSequence(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hext::confluent_sequence(1, 0.5, 0.8, count));
  state.SetComplexityN(count);
}
BENCHMARK(BM_ConfluentSequence)->RangeMultiplier(8)->Range(8, 4096)->Complexity();

void BM_GaussianSpectrum(benchmark::State& state) {
  const hext::LambdaGrid grid = hext::lambda_grid(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hext::gaussian_spectrum(1, 1.0, 1.0, grid));
}
BENCHMARK(BM_GaussianSpectrum)->Arg(15)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_KernelSpectrum(benchmark::State& state) {
  const hext::LambdaGrid grid = hext::lambda_grid(20.0);
  for (auto _ : state) benchmark::DoNotOptimize(hext::kernel_spectrum(1, 0.5, 1.0, grid));
}
BENCHMARK(BM_KernelSpectrum)->Unit(benchmark::kMillisecond);

void BM_SpectralExtensionValue(benchmark::State& state) {
  const auto f = hext::GaussianMixture::single(1.0, 1.0);
  hext::SpectralExtension u(f.spectrum(1, hext::lambda_grid(60.0)), 0.5);
  u.value(0.5, 0.3, 0.8);
  double r = 0.0;
  // Evaluation at a cached rho: one inverse transform per call.
  for (auto _ : state) benchmark::DoNotOptimize(u.value(r += 1e-9, 0.3, 0.8));
}
BENCHMARK(BM_SpectralExtensionValue)->Unit(benchmark::kMicrosecond);

void BM_Convolution(benchmark::State& state) {
  const auto f = hext::GaussianMixture::single(1.0, 1.0).function();
  const hext::BiRadialFunction k{
      [](double a, double b) { return hext::Phi(1, 1, 0.5, 0.8, a, b); }, 0.8, "Phi"};
  const hext::ConvolutionRule rule =
      hext::ConvolutionRule::for_tolerance(state.range(0) == 0 ? 1e-3 : 1e-5);
  for (auto _ : state) benchmark::DoNotOptimize(hext::convolve_biradial(1, f, k, 0.5, 0.3, rule));
}
BENCHMARK(BM_Convolution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnergyCoefficients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hext::energy_coefficients(1, 0.5, 64));
}
BENCHMARK(BM_EnergyCoefficients)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
