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

#ifndef C4TORIC_EXPERIMENTS_HPP
#define C4TORIC_EXPERIMENTS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c4toric/circuits.hpp"
#include "c4toric/codes.hpp"
#include "c4toric/decode.hpp"
#include "c4toric/noise.hpp"

namespace c4toric {

enum class Scenario { DataOnly, DataSyndrome, CircuitLevel };

std::string_view to_string(Scenario scenario);
Scenario parse_scenario(std::string_view text);

struct ExperimentConfig {
  CodeFamily family = CodeFamily::C4Toric;
  Scenario scenario = Scenario::DataOnly;
  ScheduleKind schedule = ScheduleKind::C4Four;  // CircuitLevel only
  std::vector<int> l_values;
  std::vector<double> p_values;
  std::uint64_t trials = 10000;
  std::optional<double> q;  // syndrome flip rate; defaults to p
  double octagon_cnot_multiplier = 1.0;
  int time_weight = 1;
  std::optional<int> rounds;  // noisy rounds; defaults to the code distance
  std::uint64_t master_seed = 1;
  int threads = 1;

  // Throws InvalidParameter naming the offending field.
  void validate() const;
  int rounds_for(const CodeSpec& spec) const;
};

struct PointResult {
  int l = 0;
  std::size_t d = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::array<std::uint64_t, 4> flips{};  // X1, X2, Z1, Z2 flipped
  std::uint64_t seed = 0;
};

struct ThresholdEstimate {
  bool crossed = false;
  double p_c = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::vector<std::pair<int, int>> pairs;   // adjacent l values
  std::vector<std::optional<double>> pair_crossings;
  std::size_t bootstrap_samples = 0;
  std::string notes;
};

// Wilson score interval. Throws InvalidParameter when trials == 0.
std::pair<double, double> wilson_ci(std::uint64_t failures, std::uint64_t trials, double confidence = 0.95);

std::uint64_t trial_seed(std::uint64_t master, int l, std::size_t p_index, std::uint64_t trial);

// Per-(config, l) trial kernel: owns the code, schedule and decoder.
class TrialRunner {
 public:
  TrialRunner(const ExperimentConfig& config, int l);

  const CodeSpec& spec() const { return spec_; }
  int rounds() const { return rounds_; }

  LogicalOutcome run(double p, Rng& rng);

 private:
  void data_round(double p, double q, int round, Rng& rng);
  void push_defects(int round, bool ideal, double q, Rng& rng);

  ExperimentConfig config_;
  CodeSpec spec_;
  std::optional<Schedule> schedule_;
  std::optional<MatchingDecoder> decoder_;
  std::optional<CircuitSampler> sampler_;
  double sampler_p_ = -1.0;
  int rounds_ = 1;
  std::array<std::vector<std::uint32_t>, 4> logical_x_, logical_z_;  // supports
  std::vector<std::uint8_t> x_, z_, syndrome_, prev_;
  std::vector<std::pair<std::uint32_t, std::int32_t>> defects_;
};

// Runs config.trials trials at p_values[p_index].
PointResult run_point(const ExperimentConfig& config, int l, std::size_t p_index);
// Convenience: p must appear in config.p_values.
PointResult run_point(const ExperimentConfig& config, int l, double p);

struct ThresholdOptions {
  std::size_t bootstrap_samples = 400;
  std::size_t window = 5;  // points per local fit
  std::uint64_t seed = 12345;
};

// curves: one list of points per l, each sorted by p.
ThresholdEstimate estimate_threshold(const std::vector<std::vector<PointResult>>& curves,
                                     const ThresholdOptions& options = {});

struct SweepResult {
  std::vector<PointResult> points;  // sorted by l, then p
  ThresholdEstimate threshold;
};

using ProgressFn = std::function<void(const PointResult&)>;

SweepResult run_sweep(const ExperimentConfig& config, const ProgressFn& progress = {});

// CSV with header family,scenario,schedule,l,d,p,trials,failures,rate,ci_low,ci_high,seed
std::string results_csv(const ExperimentConfig& config, const std::vector<PointResult>& points);
// Per-logical breakdown: l,p,x1,x2,z1,z2 flip counts, same order as results_csv.
std::string flips_csv(const std::vector<PointResult>& points);

std::string threshold_json(const ThresholdEstimate& estimate);

}  // namespace c4toric

#endif  // C4TORIC_EXPERIMENTS_HPP
