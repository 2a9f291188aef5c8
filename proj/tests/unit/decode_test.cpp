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

#include "c4toric/decode.hpp"

#include <gtest/gtest.h>

#include "c4toric/errors.hpp"

using namespace c4toric;

namespace {

using Defects = std::vector<std::pair<std::uint32_t, std::int32_t>>;

Defects data_defects(const CodeSpec& spec, const PauliOperator& error) {
  Defects out;
  const auto syn = spec.syndrome(error);
  for (std::uint32_t c = 0; c < syn.size(); ++c) {
    if (syn[c]) out.push_back({c, 0});
  }
  return out;
}

std::vector<PauliOperator> stabilizers_and_gauge(const CodeSpec& spec) {
  std::vector<PauliOperator> gens;
  for (const Check& c : spec.checks) gens.push_back(c.op);
  for (const PauliOperator& g : spec.gauge_generators) gens.push_back(g);
  return gens;
}

PauliOperator residual_after_decoding(const MatchingDecoder& decoder, const PauliOperator& error) {
  PauliOperator residual = error;
  residual *= decoder.decode(data_defects(decoder.spec(), error));
  return residual;
}

}  // namespace

TEST(Decoder, NoDefectsNoCorrection) {
  const CodeSpec spec = build_c4_toric(3);
  const MatchingDecoder decoder(spec);
  EXPECT_TRUE(decoder.decode(Defects{}).is_identity());
}

TEST(Decoder, CorrectsEverySingleQubitError) {
  for (const CodeSpec& spec : {build_c4_toric(2), build_c4_toric(3), build_toric(3)}) {
    const MatchingDecoder decoder(spec);
    const auto gens = stabilizers_and_gauge(spec);
    for (std::size_t q = 0; q < spec.n; ++q) {
      for (int type = 1; type <= 3; ++type) {
        PauliOperator error(spec.n);
        if (type & 1) error.flip_x(q);
        if (type & 2) error.flip_z(q);
        const PauliOperator residual = residual_after_decoding(decoder, error);
        const LogicalOutcome outcome = judge_failure(spec, residual);
        EXPECT_FALSE(outcome.failed) << "qubit " << q << " type " << type;
        EXPECT_TRUE(in_row_space(gens, residual)) << "qubit " << q << " type " << type;
      }
    }
  }
}

TEST(Decoder, TimelikePairNeedsNoCorrection) {
  const CodeSpec spec = build_c4_toric(3);
  const MatchingDecoder decoder(spec);
  const Defects defects{{5, 0}, {5, 1}};
  EXPECT_TRUE(decoder.decode(defects).is_identity());
  const Defects far{{5, 0}, {5, 3}};
  EXPECT_TRUE(decoder.decode(far).is_identity());
}

TEST(Decoder, OddDefectCountThrows) {
  const CodeSpec spec = build_c4_toric(2);
  const MatchingDecoder decoder(spec);
  const Defects defects{{0, 0}};
  EXPECT_THROW(decoder.decode(defects), ParityError);
}

TEST(Decoder, DecodeIntoMatchesDecode) {
  const CodeSpec spec = build_c4_toric(3);
  const MatchingDecoder decoder(spec);
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliOperator error = sample_data_errors(spec, 0.05, rng);
    const Defects defects = data_defects(spec, error);
    const PauliOperator correction = decoder.decode(defects);
    std::vector<std::uint8_t> x(spec.n, 0), z(spec.n, 0);
    decoder.decode_into(defects, x, z);
    for (std::size_t q = 0; q < spec.n; ++q) {
      ASSERT_EQ(x[q] != 0, correction.x(q));
      ASSERT_EQ(z[q] != 0, correction.z(q));
    }
  }
}

TEST(Decoder, ResidualAlwaysHasTrivialSyndrome) {
  for (const CodeSpec& spec : {build_toric(4), build_c4_toric(3)}) {
    const MatchingDecoder decoder(spec);
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      const PauliOperator residual = residual_after_decoding(decoder, sample_data_errors(spec, 0.1, rng));
      for (std::uint8_t bit : spec.syndrome(residual)) ASSERT_EQ(bit, 0);
    }
  }
}

// A residual with trivial syndrome is harmless exactly when it lies in the
// group generated by checks and gauge operators.
TEST(Decoder, FailureFlagAgreesWithGroupMembership) {
  for (const CodeSpec& spec : {build_c4_toric(2), build_toric(3)}) {
    const MatchingDecoder decoder(spec);
    const auto gens = stabilizers_and_gauge(spec);
    Rng rng(7);
    int failures = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const PauliOperator residual = residual_after_decoding(decoder, sample_data_errors(spec, 0.12, rng));
      const bool failed = judge_failure(spec, residual).failed;
      failures += failed;
      ASSERT_EQ(failed, !in_row_space(gens, residual));
    }
    EXPECT_GT(failures, 0);
  }
}

TEST(Decoder, GaugeDoesNotChangeTheOutcome) {
  const CodeSpec spec = build_c4_toric(3);
  const MatchingDecoder decoder(spec);
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const PauliOperator error = sample_data_errors(spec, 0.08, rng);
    PauliOperator dressed = error;
    dressed *= spec.gauge_generators[rng() % spec.gauge_generators.size()];
    const LogicalOutcome a = judge_failure(spec, residual_after_decoding(decoder, error));
    const LogicalOutcome b = judge_failure(spec, residual_after_decoding(decoder, dressed));
    EXPECT_EQ(a.failed, b.failed);
    EXPECT_EQ(a.x_flips, b.x_flips);
    EXPECT_EQ(a.z_flips, b.z_flips);
  }
}

TEST(JudgeFailure, ClassifiesResiduals) {
  const CodeSpec spec = build_c4_toric(2);
  EXPECT_FALSE(judge_failure(spec, PauliOperator(spec.n)).failed);
  EXPECT_FALSE(judge_failure(spec, spec.checks.front().op).failed);
  EXPECT_FALSE(judge_failure(spec, spec.gauge_generators.front()).failed);

  // Z1 anticommutes with X1 only.
  const LogicalOutcome z1 = judge_failure(spec, spec.logicals[2]);
  EXPECT_TRUE(z1.failed);
  EXPECT_TRUE(z1.x_flips[0]);
  EXPECT_FALSE(z1.x_flips[1]);
  EXPECT_FALSE(z1.z_flips[0] || z1.z_flips[1]);

  const LogicalOutcome x2 = judge_failure(spec, spec.logicals[1]);
  EXPECT_TRUE(x2.failed);
  EXPECT_TRUE(x2.z_flips[1]);
  EXPECT_FALSE(x2.z_flips[0]);
  EXPECT_FALSE(x2.x_flips[0] || x2.x_flips[1]);

  PauliOperator single(spec.n);
  single.flip_x(0);
  EXPECT_THROW(judge_failure(spec, single), ContractViolation);
  EXPECT_THROW(judge_failure(spec, PauliOperator(spec.n + 1)), DimensionError);
}

TEST(ClusterWeight, ReducesModuloGauge) {
  const CodeSpec spec = build_c4_toric(2);
  PauliOperator e(spec.n);
  EXPECT_EQ(cluster_weight_mod_gauge(spec, e, 0), 0u);
  e.flip_x(0);
  EXPECT_EQ(cluster_weight_mod_gauge(spec, e, 0), 1u);
  EXPECT_EQ(cluster_weight_mod_gauge(spec, e, 1), 0u);
  e.flip_x(1);
  e.flip_x(2);
  EXPECT_EQ(cluster_weight_mod_gauge(spec, e, 0), 1u);
  e.flip_x(3);
  EXPECT_EQ(cluster_weight_mod_gauge(spec, e, 0), 0u);
  // A gauge generator is weightless.
  EXPECT_EQ(cluster_weight_mod_gauge(spec, spec.gauge_generators[0], 0), 0u);
}
