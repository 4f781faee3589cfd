// Copyright 2026 The qdouble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "qdouble/capelli.hpp"
#include "qdouble/invariants.hpp"
#include "qdouble/u2h_calculus.hpp"

namespace {

using namespace qdouble;

void BM_StandardHecke(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(standard_hecke(n));
}
BENCHMARK(BM_StandardHecke)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SkewSymmetrizer(benchmark::State& state) {
  const auto r = standard_hecke(3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skew_symmetrizer(r, k));
}
BENCHMARK(BM_SkewSymmetrizer)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RePresentationDegree3(benchmark::State& state) {
  const auto r = standard_hecke(2);
  for (auto _ : state) {
    // A fresh presentation so the ideal cache starts empty.
    const auto p = re_presentation(r, Tag::M);
    benchmark::DoNotOptimize(p.normal_word_count(3));
  }
}
BENCHMARK(BM_RePresentationDegree3)->Unit(benchmark::kMillisecond);

void BM_TrlOperator(benchmark::State& state) {
  const auto r = standard_hecke(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trl_operator(r, 2));
}
BENCHMARK(BM_TrlOperator)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

// Exact versus one sampled point on the same identity.
void BM_CapelliExact(benchmark::State& state) {
  const auto r = standard_hecke(2);
  for (auto _ : state) benchmark::DoNotOptimize(capelli_violation(r, 2, false));
}
BENCHMARK(BM_CapelliExact)->Unit(benchmark::kMillisecond);

void BM_CapelliSampled(benchmark::State& state) {
  const auto r = evaluate(standard_hecke(2), Rational(15, 2));
  for (auto _ : state) benchmark::DoNotOptimize(capelli_violation(r, 2, false));
}
BENCHMARK(BM_CapelliSampled)->Unit(benchmark::kMillisecond);

void BM_DhatRadiusSquare(benchmark::State& state) {
  const auto rad = u2h::PBWElement::radius();
  for (auto _ : state) benchmark::DoNotOptimize(u2h::dhat_matrix(rad) * u2h::dhat_matrix(rad));
}
BENCHMARK(BM_DhatRadiusSquare)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
