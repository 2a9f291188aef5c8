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

#ifndef C4TORIC_PAULI_HPP
#define C4TORIC_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace c4toric {

/// A phaseless n-qubit Pauli operator in binary-symplectic form.
///
/// The X and Z components are stored as packed 64-bit words so that the
/// group product is a word-wise XOR and the weight is a popcount. Bits past
/// `num_qubits()` in the last word are always zero.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_qubits);

  /// Parses a string over {I, X, Y, Z}; '_' is accepted as identity.
  static PauliOperator from_string(std::string_view text);

  /// X (or Z) on every listed qubit of an n-qubit register.
  static PauliOperator x_on(std::size_t num_qubits, std::span<const std::size_t> qubits);
  static PauliOperator z_on(std::size_t num_qubits, std::span<const std::size_t> qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_words() const { return x_.size(); }

  bool x(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1u; }
  bool z(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1u; }
  void flip_x(std::size_t q) { x_[q >> 6] ^= std::uint64_t{1} << (q & 63); }
  void flip_z(std::size_t q) { z_[q >> 6] ^= std::uint64_t{1} << (q & 63); }
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  /// Number of qubits on which the operator acts nontrivially.
  std::size_t weight() const;
  std::size_t x_weight() const;
  std::size_t z_weight() const;
  bool is_identity() const;

  /// Drops the Z (resp. X) component.
  PauliOperator x_part() const;
  PauliOperator z_part() const;

  /// Qubits with a nontrivial component, ascending.
  std::vector<std::size_t> support() const;

  /// In-place phaseless product.
  PauliOperator& operator*=(const PauliOperator& other);

  /// Rendering over {I, X, Y, Z}.
  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// Phaseless group product (componentwise XOR). Throws DimensionError on
/// mismatched lengths.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

/// Symplectic inner product, 0 or 1.
int symplectic_product(const PauliOperator& a, const PauliOperator& b);

/// True iff the two operators commute.
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// Conjugation by CNOT(control -> target): X on the control spreads to the
/// target, Z on the target spreads to the control.
PauliOperator conjugate_by_cnot(const PauliOperator& p, std::size_t control, std::size_t target);

/// Rank over GF(2) of the matrix whose rows are (x | z). Empty input has rank 0.
std::size_t gf2_rank(std::span<const PauliOperator> ops);

/// True iff `candidate` lies in the GF(2) row space spanned by `generators`.
bool in_row_space(std::span<const PauliOperator> generators, const PauliOperator& candidate);

}  // namespace c4toric

#endif  // C4TORIC_PAULI_HPP
