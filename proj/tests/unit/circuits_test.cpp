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

#include "c4toric/circuits.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "c4toric/errors.hpp"

using namespace c4toric;

namespace {

using DefectSet = std::set<std::pair<std::uint32_t, std::int32_t>>;

DefectSet as_set(const std::vector<std::pair<std::uint32_t, std::int32_t>>& defects) {
  return DefectSet(defects.begin(), defects.end());
}

struct Case {
  CodeFamily family;
  ScheduleKind kind;
};

const Case kCases[] = {
    {CodeFamily::Toric, ScheduleKind::Toric4},
    {CodeFamily::C4Toric, ScheduleKind::C4Eight},
    {CodeFamily::C4Toric, ScheduleKind::C4Four},
};

std::uint32_t first_op_of_kind(const Schedule& s, OpKind kind, std::int32_t* measurement = nullptr) {
  std::uint32_t index = 0;
  for (const auto& step : s.timesteps) {
    for (const Op& op : step) {
      if (op.kind == kind) {
        if (measurement) *measurement = op.measurement;
        return index;
      }
      ++index;
    }
  }
  ADD_FAILURE() << "no op of the requested kind";
  return 0;
}

}  // namespace

TEST(Schedules, TimestepCounts) {
  const Schedule toric = build_toric_schedule(build_toric(4));
  EXPECT_EQ(toric.num_data_cnot_timesteps(), 4u);
  EXPECT_EQ(toric.timesteps.size(), 6u);

  const CodeSpec c4 = build_c4_toric(3);
  const Schedule eight = build_c4_schedule_8step(c4);
  EXPECT_EQ(eight.num_data_cnot_timesteps(), 8u);
  const Schedule four = build_c4_schedule_4step(c4);
  EXPECT_EQ(four.num_data_cnot_timesteps(), 4u);
  // The Bell-pair CNOT adds one ancilla-only CNOT layer.
  EXPECT_EQ(four.num_cnot_timesteps(), 5u);
  EXPECT_LT(four.timesteps.size(), eight.timesteps.size());
}

TEST(Schedules, WrongFamilyThrows) {
  EXPECT_THROW(build_toric_schedule(build_c4_toric(2)), InvalidParameter);
  EXPECT_THROW(build_c4_schedule_4step(build_toric(2)), InvalidParameter);
  EXPECT_THROW(build_c4_schedule_8step(build_toric(2)), InvalidParameter);
  EXPECT_THROW(build_schedule(build_toric(2), ScheduleKind::C4Four), InvalidParameter);
}

TEST(Schedules, ParseRoundTrip) {
  for (const Case& c : kCases) EXPECT_EQ(parse_schedule_kind(to_string(c.kind)), c.kind);
  EXPECT_THROW(parse_schedule_kind("C4Nine"), InvalidParameter);
}

TEST(Schedules, DumpIsStable) {
  const CodeSpec spec = build_c4_toric(2);
  const std::string a = build_c4_schedule_4step(spec).dump();
  const std::string b = build_c4_schedule_4step(spec).dump();
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
}

TEST(Schedules, ValidateWithoutSweep) {
  ValidationOptions options;
  options.fault_sweep = false;
  for (const Case& c : kCases) {
    for (int l : {2, 3, 4}) {
      const CodeSpec spec = build_code(c.family, l);
      const ValidationReport report = validate_schedule(spec, build_schedule(spec, c.kind), options);
      EXPECT_TRUE(report.ok()) << to_string(c.kind) << " l=" << l << ": "
                               << (report.failures.empty() ? "" : report.failures.front());
    }
  }
}

TEST(Schedules, SingleFaultSweepAtL3) {
  ValidationOptions options;
  options.sweep_rounds = 2;
  for (const Case& c : kCases) {
    const CodeSpec spec = build_code(c.family, 3);
    const ValidationReport report = validate_schedule(spec, build_schedule(spec, c.kind), options);
    EXPECT_TRUE(report.ok()) << to_string(c.kind);
    EXPECT_GT(report.faults_swept, 0u);
    EXPECT_EQ(report.sweep_logical_failures, 0u) << to_string(c.kind) << ": " << report.first_logical_failure;
  }
}

TEST(Schedules, DuplicateOpBreaksExclusivity) {
  const CodeSpec spec = build_toric(3);
  Schedule s = build_toric_schedule(spec);
  for (auto& step : s.timesteps) {
    auto it = std::find_if(step.begin(), step.end(), [](const Op& op) { return op.kind == OpKind::CNOT; });
    if (it != step.end()) {
      step.push_back(*it);
      break;
    }
  }
  const ValidationReport report = validate_schedule(spec, s, {});
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.failures.front().rfind("exclusivity", 0), 0u) << report.failures.front();
}

TEST(Schedules, ReversedCnotBreaksStabilizerReproduction) {
  const CodeSpec spec = build_c4_toric(2);
  Schedule s = build_c4_schedule_4step(spec);
  bool flipped = false;
  for (auto& step : s.timesteps) {
    for (Op& op : step) {
      if (op.kind == OpKind::CNOT && (op.q0 < s.num_data || op.q1 < s.num_data)) {
        std::swap(op.q0, op.q1);
        flipped = true;
        break;
      }
    }
    if (flipped) break;
  }
  ValidationOptions options;
  options.fault_sweep = false;
  const ValidationReport report = validate_schedule(spec, s, options);
  ASSERT_FALSE(report.ok());
  const bool named = std::any_of(report.failures.begin(), report.failures.end(), [](const std::string& f) {
    return f.rfind("stabilizer reproduction", 0) == 0;
  });
  EXPECT_TRUE(named) << report.failures.front();
}

TEST(Schedules, MismatchedSpecIsRejected) {
  const Schedule s = build_c4_schedule_4step(build_c4_toric(2));
  ValidationOptions options;
  options.fault_sweep = false;
  EXPECT_FALSE(validate_schedule(build_c4_toric(3), s, options).ok());
}

TEST(FrameSimulation, NoiselessRoundsHaveNoDefects) {
  for (const Case& c : kCases) {
    const CodeSpec spec = build_code(c.family, 3);
    const Schedule s = build_schedule(spec, c.kind);
    Rng rng(1);
    const SyndromeRecord record = simulate_rounds(spec, s, NoiseParams{0.0}, 3, rng);
    EXPECT_TRUE(record.defects.empty());
    EXPECT_EQ(record.rounds.size(), 4u);
    EXPECT_TRUE(record.final_data_error.is_identity());
  }
}

TEST(FrameSimulation, InitialErrorShowsItsSyndrome) {
  for (const Case& c : kCases) {
    const CodeSpec spec = build_code(c.family, 3);
    const Schedule s = build_schedule(spec, c.kind);
    for (std::size_t q : {std::size_t{0}, spec.n / 2, spec.n - 1}) {
      PauliOperator frame(spec.n);
      frame.flip_x(q);
      if (q % 2) frame.flip_z(q);
      const SyndromeRecord record = simulate_with_faults(spec, s, 2, {}, &frame);
      DefectSet expected;
      const auto syn = spec.syndrome(frame);
      for (std::uint32_t ch = 0; ch < syn.size(); ++ch) {
        if (syn[ch]) expected.insert({ch, 0});
      }
      EXPECT_EQ(as_set(record.defects), expected) << to_string(c.kind) << " qubit " << q;
      EXPECT_EQ(record.final_data_error, frame);
    }
  }
}

TEST(FrameSimulation, GaugeAndStabilizerFramesAreSilent) {
  const CodeSpec spec = build_c4_toric(3);
  for (ScheduleKind kind : {ScheduleKind::C4Eight, ScheduleKind::C4Four}) {
    const Schedule s = build_schedule(spec, kind);
    for (const PauliOperator& g : spec.gauge_generators) {
      EXPECT_TRUE(simulate_with_faults(spec, s, 2, {}, &g).defects.empty());
    }
    for (const Check& check : spec.checks) {
      EXPECT_TRUE(simulate_with_faults(spec, s, 2, {}, &check.op).defects.empty());
    }
  }
}

TEST(FrameSimulation, MeasurementFlipIsTimelike) {
  for (const Case& c : kCases) {
    const CodeSpec spec = build_code(c.family, 3);
    const Schedule s = build_schedule(spec, c.kind);
    std::int32_t m = -1;
    const std::uint32_t op = first_op_of_kind(s, OpKind::Measure, &m);
    ASSERT_GE(m, 0);
    std::uint32_t check = 0;
    for (std::uint32_t ch = 0; ch < s.check_measurements.size(); ++ch) {
      const auto& ms = s.check_measurements[ch];
      if (std::find(ms.begin(), ms.end(), static_cast<std::uint32_t>(m)) != ms.end()) check = ch;
    }
    const InjectedFault fault{{1, op}, 1};
    const SyndromeRecord record = simulate_with_faults(spec, s, 3, std::span(&fault, 1));
    EXPECT_EQ(as_set(record.defects), (DefectSet{{check, 1}, {check, 2}})) << to_string(c.kind);
    EXPECT_TRUE(record.final_data_error.is_identity());
  }
}

TEST(FrameSimulation, FaultsAreLinear) {
  for (const Case& c : kCases) {
    const CodeSpec spec = build_code(c.family, 2);
    const Schedule s = build_schedule(spec, c.kind);
    const auto locations = fault_locations(s);
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<InjectedFault> a, b;
      std::set<std::pair<int, std::uint32_t>> used;
      for (int k = 0; k < 6; ++k) {
        InjectedFault f;
        f.site.round = static_cast<int>(rng() % 2);
        f.site.op = static_cast<std::uint32_t>(rng() % locations.size());
        if (!used.insert({f.site.round, f.site.op}).second) continue;
        f.pauli = static_cast<std::uint8_t>(1 + rng() % fault_choices(locations[f.site.op]));
        (k % 2 ? a : b).push_back(f);
      }
      std::vector<InjectedFault> both = a;
      both.insert(both.end(), b.begin(), b.end());
      const SyndromeRecord ra = simulate_with_faults(spec, s, 2, a);
      const SyndromeRecord rb = simulate_with_faults(spec, s, 2, b);
      const SyndromeRecord rab = simulate_with_faults(spec, s, 2, both);
      for (std::size_t r = 0; r < rab.rounds.size(); ++r) {
        for (std::size_t ch = 0; ch < rab.rounds[r].size(); ++ch) {
          ASSERT_EQ(rab.rounds[r][ch], ra.rounds[r][ch] ^ rb.rounds[r][ch]) << to_string(c.kind);
        }
      }
      PauliOperator sum = ra.final_data_error;
      sum *= rb.final_data_error;
      EXPECT_EQ(rab.final_data_error, sum);
    }
  }
}

TEST(FrameSimulation, DefectsComeInPairsPerSublattice) {
  for (const Case& c : kCases) {
    const CodeSpec spec = build_code(c.family, 3);
    const Schedule s = build_schedule(spec, c.kind);
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const SyndromeRecord record = simulate_rounds(spec, s, NoiseParams{0.01}, 3, rng);
      int per_type[2] = {0, 0};
      for (const auto& [check, round] : record.defects) {
        per_type[check_type(spec.checks[check].kind) == CheckType::X ? 0 : 1]++;
      }
      EXPECT_EQ(per_type[0] % 2, 0);
      EXPECT_EQ(per_type[1] % 2, 0);
    }
  }
}

TEST(FrameSimulation, SamplerMatchesReferenceSimulation) {
  for (const Case& c : kCases) {
    const CodeSpec spec = build_code(c.family, 3);
    const Schedule s = build_schedule(spec, c.kind);
    const NoiseParams params{0.01, std::nullopt, 2.0};
    CircuitSampler sampler(spec, s, params);
    Rng a(77), b(77);
    std::vector<std::pair<std::uint32_t, std::int32_t>> defects;
    std::vector<std::uint8_t> x, z;
    for (int trial = 0; trial < 30; ++trial) {
      const SyndromeRecord record = simulate_rounds(spec, s, params, 3, a);
      sampler.sample(3, b, defects, x, z);
      EXPECT_EQ(as_set(defects), as_set(record.defects));
      for (std::size_t q = 0; q < spec.n; ++q) {
        ASSERT_EQ(x[q] != 0, record.final_data_error.x(q));
        ASSERT_EQ(z[q] != 0, record.final_data_error.z(q));
      }
    }
  }
}

TEST(FrameSimulation, FaultChoices) {
  FaultLocation loc;
  loc.kind = FaultKind::TwoQubitGate;
  EXPECT_EQ(fault_choices(loc), 15);
  loc.kind = FaultKind::Idle;
  EXPECT_EQ(fault_choices(loc), 3);
  loc.kind = FaultKind::Measure;
  EXPECT_EQ(fault_choices(loc), 1);
  loc.kind = FaultKind::Prep;
  EXPECT_EQ(fault_choices(loc), 1);
}

TEST(FrameSimulation, OctagonCnotsAreMarked) {
  const CodeSpec spec = build_c4_toric(2);
  const Schedule s = build_c4_schedule_4step(spec);
  std::size_t marked = 0;
  for (const FaultLocation& loc : fault_locations(s)) {
    if (loc.kind == FaultKind::TwoQubitGate && loc.touches_octagon_ancilla) ++marked;
  }
  // Per octagon: one Bell CNOT plus one CNOT per data qubit.
  std::size_t expected = 0;
  for (const Check& check : spec.checks) {
    if (check.kind == CheckKind::OctagonX || check.kind == CheckKind::OctagonZ) expected += check.op.weight() + 1;
  }
  EXPECT_EQ(marked, expected);
}
