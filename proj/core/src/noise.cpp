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

#include "c4toric/noise.hpp"

#include <cmath>
#include <string>

#include "c4toric/errors.hpp"

namespace c4toric {

namespace {

void require_probability(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidParameter(std::string(name) + " must lie in [0, 1] (got " + std::to_string(v) + ")");
  }
}

}  // namespace

void NoiseParams::validate() const {
  require_probability("p", p);
  require_probability("q", syndrome_flip());
  if (!(octagon_cnot_multiplier >= 0.0) || !std::isfinite(octagon_cnot_multiplier)) {
    throw InvalidParameter("octagon_cnot_multiplier must be a finite nonnegative number");
  }
  require_probability("p * octagon_cnot_multiplier", p * octagon_cnot_multiplier);
}

double fault_rate(const FaultLocation& loc, const NoiseParams& params) {
  double r = params.p;
  if (loc.kind == FaultKind::TwoQubitGate && loc.touches_octagon_ancilla) r *= params.octagon_cnot_multiplier;
  if (!(r >= 0.0 && r <= 1.0)) {
    throw InvalidParameter("effective fault rate " + std::to_string(r) + " outside [0, 1]");
  }
  return r;
}

FaultSample sample_fault(const FaultLocation& loc, const NoiseParams& params, Rng& rng) {
  const double r = fault_rate(loc, params);
  FaultSample out{PauliOperator(static_cast<std::size_t>(loc.num_qubits())), false};
  if (r <= 0.0 || uniform01(rng) >= r) return out;
  auto apply = [&](std::size_t q, std::uint8_t code) {
    out.pauli.set_x(q, code & 1);
    out.pauli.set_z(q, code & 2);
  };
  switch (loc.kind) {
    case FaultKind::Prep:
      // Flip of the prepared eigenstate.
      loc.basis == Basis::Z ? out.pauli.flip_x(0) : out.pauli.flip_z(0);
      break;
    case FaultKind::Measure:
      out.measurement_flip = true;
      break;
    case FaultKind::Idle:
    case FaultKind::OneQubitGate:
      apply(0, random_pauli1(rng));
      break;
    case FaultKind::TwoQubitGate: {
      const std::uint8_t code = random_pauli2(rng);
      apply(0, code & 3);
      apply(1, code >> 2);
      break;
    }
  }
  return out;
}

PauliOperator sample_data_errors(const CodeSpec& spec, double p, Rng& rng) {
  require_probability("p", p);
  PauliOperator e(spec.n);
  for (std::size_t q = 0; q < spec.n; ++q) {
    if (uniform01(rng) < p) e.flip_x(q);
    if (uniform01(rng) < p) e.flip_z(q);
  }
  return e;
}

void apply_data_errors(double p, Rng& rng, std::span<std::uint8_t> x, std::span<std::uint8_t> z) {
  require_probability("p", p);
  if (x.size() != z.size()) throw DimensionError("x and z frames differ in size");
  for (std::size_t q = 0; q < x.size(); ++q) {
    x[q] ^= uniform01(rng) < p;
    z[q] ^= uniform01(rng) < p;
  }
}

bool sample_syndrome_flip(double q, Rng& rng) {
  require_probability("q", q);
  return uniform01(rng) < q;
}

}  // namespace c4toric
