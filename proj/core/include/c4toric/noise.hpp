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

#ifndef C4TORIC_NOISE_HPP
#define C4TORIC_NOISE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "c4toric/codes.hpp"
#include "c4toric/pauli.hpp"

namespace c4toric {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct NoiseParams {
  double p = 0.0;
  /// Syndrome flip probability; defaults to p.
  std::optional<double> q;
  /// Applied to two-qubit gates that touch an octagon ancilla.
  double octagon_cnot_multiplier = 1.0;

  double syndrome_flip() const { return q.value_or(p); }

  /// Throws InvalidParameter unless every derived probability lies in [0, 1].
  void validate() const;
};

enum class Basis { Z, X };

enum class FaultKind { Prep, Measure, Idle, OneQubitGate, TwoQubitGate };

struct FaultLocation {
  FaultKind kind = FaultKind::Idle;
  std::array<std::uint32_t, 2> qubits{0, 0};
  int timestep = 0;
  bool touches_octagon_ancilla = false;
  /// Prepared or measured basis (Prep and Measure only).
  Basis basis = Basis::Z;

  int num_qubits() const { return kind == FaultKind::TwoQubitGate ? 2 : 1; }
};

/// Probability that the location faults. Throws InvalidParameter above 1.
double fault_rate(const FaultLocation& loc, const NoiseParams& params);

/// Outcome of sampling one location: a Pauli on the location's qubits (one or
/// two qubits, in location order) or a classical measurement flip.
struct FaultSample {
  PauliOperator pauli;
  bool measurement_flip = false;

  bool trivial() const { return pauli.is_identity() && !measurement_flip; }
};

FaultSample sample_fault(const FaultLocation& loc, const NoiseParams& params, Rng& rng);

/// Independent X and Z flips with probability p on every data qubit.
PauliOperator sample_data_errors(const CodeSpec& spec, double p, Rng& rng);

// Same stream as sample_data_errors, XORed into raw per-qubit frames.
void apply_data_errors(double p, Rng& rng, std::span<std::uint8_t> x, std::span<std::uint8_t> z);

bool sample_syndrome_flip(double q, Rng& rng);

/// Compact Pauli codes used by the simulators: bit 0 = X, bit 1 = Z.
/// A uniformly random non-identity one-qubit code (1..3).
inline std::uint8_t random_pauli1(Rng& rng) { return static_cast<std::uint8_t>(1 + rng() % 3); }
/// A uniformly random non-identity two-qubit code (1..15); low two bits act
/// on the first qubit.
inline std::uint8_t random_pauli2(Rng& rng) { return static_cast<std::uint8_t>(1 + rng() % 15); }

}  // namespace c4toric

#endif  // C4TORIC_NOISE_HPP
