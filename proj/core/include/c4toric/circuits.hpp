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

#ifndef C4TORIC_CIRCUITS_HPP
#define C4TORIC_CIRCUITS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "c4toric/codes.hpp"
#include "c4toric/noise.hpp"
#include "c4toric/pauli.hpp"

namespace c4toric {

enum class ScheduleKind { Toric4, C4Eight, C4Four };

std::string_view to_string(ScheduleKind kind);
ScheduleKind parse_schedule_kind(std::string_view text);

enum class OpKind { Prep, CNOT, Measure, Idle };

/// One elementary operation. For CNOT, q0 is the control and q1 the target.
/// Measure ops carry the index of their outcome in the per-round record.
struct Op {
  OpKind kind = OpKind::Idle;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;
  Basis basis = Basis::Z;
  std::int32_t measurement = -1;
};

/// One round of syndrome extraction. Qubits [0, num_data) are the code's
/// data qubits; the rest are ancillas.
struct Schedule {
  ScheduleKind kind = ScheduleKind::Toric4;
  std::size_t num_data = 0;
  std::size_t num_qubits = 0;
  std::vector<std::vector<Op>> timesteps;
  /// check id -> ancilla qubits used for it.
  std::vector<std::vector<std::uint32_t>> ancilla_map;
  /// check id -> measurement indices; the syndrome bit is their XOR.
  std::vector<std::vector<std::uint32_t>> check_measurements;
  std::size_t num_measurements = 0;
  /// qubit -> true for ancillas of octagon checks.
  std::vector<std::uint8_t> octagon_ancilla;

  std::size_t num_cnot_timesteps() const;
  /// Timesteps containing at least one CNOT with a data-qubit operand.
  std::size_t num_data_cnot_timesteps() const;
  std::size_t num_ops() const;

  /// Stable text listing, one line per timestep.
  std::string dump() const;
};

Schedule build_toric_schedule(const CodeSpec& spec);
Schedule build_c4_schedule_8step(const CodeSpec& spec);
Schedule build_c4_schedule_4step(const CodeSpec& spec);
Schedule build_schedule(const CodeSpec& spec, ScheduleKind kind);

struct SyndromeRecord {
  /// rounds[r][check]: measured syndrome bit; the last row is the ideal
  /// closing round.
  std::vector<std::vector<std::uint8_t>> rounds;
  /// (check id, round) wherever consecutive rounds differ; round -1 is the
  /// all-trivial reference.
  std::vector<std::pair<std::uint32_t, std::int32_t>> defects;
  /// Data-qubit frame after the closing round. Never shown to the decoder.
  PauliOperator final_data_error;
};

/// Fills `defects` from `rounds`.
void compute_defects(SyndromeRecord& record);

/// `rounds` noisy rounds followed by one noiseless closing round, starting
/// from the trivial frame.
SyndromeRecord simulate_rounds(const CodeSpec& spec, const Schedule& schedule, const NoiseParams& params, int rounds,
                               Rng& rng);

/// Position of a fault: after op `op` (index into the flattened round) of
/// noisy round `round`.
// Precompiled noisy frame simulation for trial loops. Draws the same random
// stream as simulate_rounds.
class CircuitSampler {
 public:
  CircuitSampler(const CodeSpec& spec, const Schedule& schedule, const NoiseParams& params);

  // Runs `rounds` noisy rounds and the closing round. Defects are
  // (check id, round); x and z receive the final data frame.
  void sample(int rounds, Rng& rng, std::vector<std::pair<std::uint32_t, std::int32_t>>& defects,
              std::vector<std::uint8_t>& x, std::vector<std::uint8_t>& z);

 private:
  const Schedule* schedule_;
  std::size_t num_checks_;
  std::vector<Op> ops_;
  std::vector<double> rates_;
  std::vector<std::uint8_t> fx_, fz_, meas_, prev_;
};

struct FaultSite {
  int round = 0;
  std::uint32_t op = 0;
};

/// A deterministic fault. `pauli` uses the compact codes of the noise module
/// (two-qubit codes for CNOTs, low bits on the control); for Prep the flip is
/// implied and for Measure the outcome is flipped whenever pauli != 0.
struct InjectedFault {
  FaultSite site;
  std::uint8_t pauli = 0;
};

/// Noiseless simulation with the given faults injected, optionally starting
/// from a nontrivial data frame.
SyndromeRecord simulate_with_faults(const CodeSpec& spec, const Schedule& schedule, int rounds,
                                    std::span<const InjectedFault> faults,
                                    const PauliOperator* initial_frame = nullptr);

/// Every op of one round viewed as a fault location, in flattened order.
std::vector<FaultLocation> fault_locations(const Schedule& schedule);

/// Number of distinct nontrivial faults a location can suffer.
int fault_choices(const FaultLocation& loc);

struct ValidationOptions {
  int random_frames = 200;
  bool fault_sweep = true;
  /// Noisy rounds used by the single-fault sweep; 0 means the code distance.
  int sweep_rounds = 0;
  std::uint64_t seed = 1;
};

struct ValidationReport {
  /// Each entry names the violated property.
  std::vector<std::string> failures;
  std::size_t faults_swept = 0;
  // Single faults the decoder maps to a logical error. Reported, not a
  // validation failure: small lattices cannot correct every hook error.
  std::size_t sweep_logical_failures = 0;
  std::string first_logical_failure;

  bool ok() const { return failures.empty(); }
};

ValidationReport validate_schedule(const CodeSpec& spec, const Schedule& schedule, const ValidationOptions& options = {});

}  // namespace c4toric

#endif  // C4TORIC_CIRCUITS_HPP
