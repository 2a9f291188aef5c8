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

#ifndef C4TORIC_DECODE_HPP
#define C4TORIC_DECODE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "c4toric/circuits.hpp"
#include "c4toric/codes.hpp"
#include "c4toric/matching.hpp"
#include "c4toric/pauli.hpp"

namespace c4toric {

struct LogicalOutcome {
  std::array<bool, 2> x_flips{false, false};  // X1, X2 flipped by a Z-type residual
  std::array<bool, 2> z_flips{false, false};  // Z1, Z2 flipped by an X-type residual
  bool failed = false;
};

// Decoder with the per-sublattice metrics precomputed; reusable across trials.
class MatchingDecoder {
 public:
  explicit MatchingDecoder(const CodeSpec& spec, int time_weight = 1);

  const CodeSpec& spec() const { return *spec_; }
  int time_weight() const { return time_weight_; }

  // Defects are (check id, round). Throws ParityError if a sublattice has an
  // odd number of them.
  PauliOperator decode(std::span<const std::pair<std::uint32_t, std::int32_t>> defects) const;
  PauliOperator decode(const SyndromeRecord& record) const { return decode(record.defects); }

  // Same as decode, but toggles correction bits into raw per-qubit masks.
  // Used by the fast trial loops.
  void decode_into(std::span<const std::pair<std::uint32_t, std::int32_t>> defects, std::vector<std::uint8_t>& x,
                   std::vector<std::uint8_t>& z) const;

 private:
  const CodeSpec* spec_;
  int time_weight_;
  std::array<SublatticeMetric, 2> metrics_;
};

PauliOperator decode_record(const CodeSpec& spec, const SyndromeRecord& record, int time_weight = 1);

// Throws ContractViolation if the residual has a nontrivial syndrome.
LogicalOutcome judge_failure(const CodeSpec& spec, const PauliOperator& residual);

struct SweepReport {
  std::size_t faults = 0;
  std::size_t failures = 0;
  std::size_t wide_clusters = 0;  // faults leaving a cluster error of weight > 2 modulo its gauge pair
  std::size_t unmatchable = 0;    // faults whose defects the decoder cannot resolve
  std::string first_failure;
};

// Injects every single fault (every op of every noisy round, every Pauli)
// and decodes the record.
SweepReport single_fault_sweep(const CodeSpec& spec, const Schedule& schedule, int rounds, int time_weight = 1);

// Minimum weight of the cluster's restriction of `error` modulo that
// cluster's gauge operators.
std::size_t cluster_weight_mod_gauge(const CodeSpec& spec, const PauliOperator& error, std::size_t cluster);

}  // namespace c4toric

#endif  // C4TORIC_DECODE_HPP
