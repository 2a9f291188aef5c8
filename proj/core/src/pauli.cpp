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

#include "c4toric/pauli.hpp"

#include <bit>
#include <string>
#include <utility>

#include "c4toric/errors.hpp"

namespace c4toric {
namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_same_size(const PauliOperator& a, const PauliOperator& b, const char* what) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError(std::string(what) + ": operand lengths differ (" +
                         std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()) +
                         ")");
  }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t num_qubits)
    : num_qubits_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {}

PauliOperator PauliOperator::from_string(std::string_view text) {
  PauliOperator p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.flip_x(q);
        break;
      case 'Z':
        p.flip_z(q);
        break;
      case 'Y':
        p.flip_x(q);
        p.flip_z(q);
        break;
      default:
        throw InvalidParameter("PauliOperator::from_string: unexpected character '" +
                               std::string(1, text[q]) + "'");
    }
  }
  return p;
}

PauliOperator PauliOperator::x_on(std::size_t num_qubits, std::span<const std::size_t> qubits) {
  PauliOperator p(num_qubits);
  for (auto q : qubits) {
    if (q >= num_qubits) throw DimensionError("PauliOperator::x_on: qubit index out of range");
    p.flip_x(q);
  }
  return p;
}

PauliOperator PauliOperator::z_on(std::size_t num_qubits, std::span<const std::size_t> qubits) {
  PauliOperator p(num_qubits);
  for (auto q : qubits) {
    if (q >= num_qubits) throw DimensionError("PauliOperator::z_on: qubit index out of range");
    p.flip_z(q);
  }
  return p;
}

void PauliOperator::set_x(std::size_t q, bool v) {
  if (x(q) != v) flip_x(q);
}

void PauliOperator::set_z(std::size_t q, bool v) {
  if (z(q) != v) flip_z(q);
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < x_.size(); ++k) w += std::popcount(x_[k] | z_[k]);
  return w;
}

std::size_t PauliOperator::x_weight() const {
  std::size_t w = 0;
  for (auto word : x_) w += std::popcount(word);
  return w;
}

std::size_t PauliOperator::z_weight() const {
  std::size_t w = 0;
  for (auto word : z_) w += std::popcount(word);
  return w;
}

bool PauliOperator::is_identity() const {
  for (std::size_t k = 0; k < x_.size(); ++k) {
    if (x_[k] | z_[k]) return false;
  }
  return true;
}

PauliOperator PauliOperator::x_part() const {
  PauliOperator p = *this;
  std::fill(p.z_.begin(), p.z_.end(), 0);
  return p;
}

PauliOperator PauliOperator::z_part() const {
  PauliOperator p = *this;
  std::fill(p.x_.begin(), p.x_.end(), 0);
  return p;
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < x_.size(); ++k) {
    std::uint64_t bits = x_[k] | z_[k];
    while (bits) {
      out.push_back(k * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
  require_same_size(*this, other, "multiply");
  for (std::size_t k = 0; k < x_.size(); ++k) {
    x_[k] ^= other.x_[k];
    z_[k] ^= other.z_[k];
  }
  return *this;
}

std::string PauliOperator::str() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t q = 0; q < num_qubits_; ++q) out[q] = "IXZY"[x(q) | (z(q) << 1)];
  return out;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  PauliOperator out = a;
  out *= b;
  return out;
}

int symplectic_product(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b, "commutes");
  auto ax = a.x_words();
  auto az = a.z_words();
  auto bx = b.x_words();
  auto bz = b.z_words();
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < ax.size(); ++k) acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
  return std::popcount(acc) & 1;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) { return symplectic_product(a, b) == 0; }

PauliOperator conjugate_by_cnot(const PauliOperator& p, std::size_t control, std::size_t target) {
  if (control >= p.num_qubits() || target >= p.num_qubits()) {
    throw DimensionError("conjugate_by_cnot: qubit index out of range");
  }
  if (control == target) throw DimensionError("conjugate_by_cnot: control equals target");
  PauliOperator out = p;
  if (p.x(control)) out.flip_x(target);
  if (p.z(target)) out.flip_z(control);
  return out;
}

namespace {

// Row-reduces `rows` in place and returns the rank. Each row is 2*W words.
std::size_t eliminate(std::vector<std::vector<std::uint64_t>>& rows, std::size_t num_bits) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < num_bits && rank < rows.size(); ++col) {
    const std::size_t w = col >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (col & 63);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & mask)) {
        for (std::size_t k = w; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint64_t> to_row(const PauliOperator& p) {
  std::vector<std::uint64_t> row(p.x_words().begin(), p.x_words().end());
  row.insert(row.end(), p.z_words().begin(), p.z_words().end());
  return row;
}

}  // namespace

std::size_t gf2_rank(std::span<const PauliOperator> ops) {
  if (ops.empty()) return 0;
  const std::size_t n = ops.front().num_qubits();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(ops.size());
  for (const auto& p : ops) {
    if (p.num_qubits() != n) throw DimensionError("gf2_rank: operand lengths differ");
    rows.push_back(to_row(p));
  }
  return eliminate(rows, 2 * 64 * words_for(n));
}

bool in_row_space(std::span<const PauliOperator> generators, const PauliOperator& candidate) {
  std::vector<PauliOperator> extended(generators.begin(), generators.end());
  const std::size_t base = gf2_rank(extended);
  extended.push_back(candidate);
  return gf2_rank(extended) == base;
}

}  // namespace c4toric
