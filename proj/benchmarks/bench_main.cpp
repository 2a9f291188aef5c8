// Copyright 2026 The c4toric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "c4toric/circuits.hpp"
#include "c4toric/decode.hpp"
#include "c4toric/experiments.hpp"
#include "c4toric/matching.hpp"

using namespace c4toric;

namespace {

ExperimentConfig trial_config(CodeFamily family, Scenario scenario, int l, double p) {
  ExperimentConfig c;
  c.family = family;
  c.scenario = scenario;
  c.schedule = family == CodeFamily::Toric ? ScheduleKind::Toric4 : ScheduleKind::C4Four;
  c.l_values = {l};
  c.p_values = {p};
  return c;
}

void run_trials(benchmark::State& state, const ExperimentConfig& config) {
  TrialRunner runner(config, config.l_values.front());
  Rng rng(1);
  std::int64_t failures = 0;
  for (auto _ : state) failures += runner.run(config.p_values.front(), rng).failed;
  state.counters["fail_rate"] = benchmark::Counter(static_cast<double>(failures), benchmark::Counter::kAvgIterations);
}

void BM_DataOnlyTrial(benchmark::State& state) {
  run_trials(state, trial_config(CodeFamily::C4Toric, Scenario::DataOnly, static_cast<int>(state.range(0)), 0.1));
}
BENCHMARK(BM_DataOnlyTrial)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_DataSyndromeTrial(benchmark::State& state) {
  run_trials(state, trial_config(CodeFamily::C4Toric, Scenario::DataSyndrome, static_cast<int>(state.range(0)), 0.03));
}
BENCHMARK(BM_DataSyndromeTrial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CircuitTrial(benchmark::State& state) {
  run_trials(state, trial_config(CodeFamily::C4Toric, Scenario::CircuitLevel, static_cast<int>(state.range(0)), 0.005));
}
BENCHMARK(BM_CircuitTrial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CircuitSampler(benchmark::State& state) {
  const CodeSpec spec = build_c4_toric(static_cast<int>(state.range(0)));
  const Schedule schedule = build_c4_schedule_4step(spec);
  CircuitSampler sampler(spec, schedule, NoiseParams{0.005});
  Rng rng(2);
  std::vector<std::pair<std::uint32_t, std::int32_t>> defects;
  std::vector<std::uint8_t> x, z;
  for (auto _ : state) {
    sampler.sample(static_cast<int>(spec.d), rng, defects, x, z);
    benchmark::DoNotOptimize(defects.data());
  }
}
BENCHMARK(BM_CircuitSampler)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_Matching(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<std::int64_t> w(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) w[a * n + b] = w[b * n + a] = static_cast<std::int64_t>(1 + rng() % 64);
  }
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_perfect_matching(n, w));
}
BENCHMARK(BM_Matching)->Arg(10)->Arg(40)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
