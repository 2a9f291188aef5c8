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

#ifndef C4TORIC_CODES_HPP
#define C4TORIC_CODES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c4toric/pauli.hpp"

namespace c4toric {

enum class CodeFamily { Toric, C4Toric };

enum class CheckKind { SquareX, SquareZ, OctagonX, OctagonZ, ToricStar, ToricPlaquette };

/// Which Pauli type a check is built from. X-type checks detect Z errors and
/// vice versa; the two types form the two independent decoding sublattices.
enum class CheckType { X, Z };

enum class EdgeOrientation { None, Horizontal, Vertical };

std::string_view to_string(CodeFamily family);
std::string_view to_string(CheckKind kind);
std::string_view to_string(CheckType type);
CodeFamily parse_family(std::string_view text);

CheckType check_type(CheckKind kind);
bool is_square(CheckKind kind);

/// Position of a check on the underlying l x l toric lattice. Octagons, stars
/// and plaquettes carry the integer coordinates of their vertex or face
/// (orientation None); squares carry the coordinates of their toric edge.
struct Coordinate {
  int i = 0;
  int j = 0;
  EdgeOrientation orientation = EdgeOrientation::None;
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

struct Check {
  PauliOperator op;
  CheckKind kind;
  Coordinate coord;
};

/// The defect graph of one check type. Nodes are the checks of that type;
/// every qubit is an edge between the two checks it flips when it suffers an
/// error of the opposite type.
struct Sublattice {
  CheckType type = CheckType::X;
  std::vector<std::size_t> check_ids;               // node -> check id
  std::vector<std::array<std::uint32_t, 2>> qubit_endpoints;  // qubit -> (node, node)
  std::vector<std::vector<std::uint32_t>> incident_qubits;    // node -> qubits
  /// For square nodes: the two adjacent octagon nodes. For octagon/toric nodes: empty.
  std::vector<std::vector<std::uint32_t>> octagon_neighbors;

  std::size_t num_nodes() const { return check_ids.size(); }
};

/// Cluster corner order used for C4 qubit indexing: qubit = 4 * edge + corner.
enum Corner : std::uint8_t { kBottomLeft = 0, kBottomRight = 1, kTopLeft = 2, kTopRight = 3 };

/// A concrete code instance.
///
/// Qubits are indexed cluster-major: for the toric family qubit = toric edge
/// id; for the C4 family qubit = 4 * edge + corner. Toric edge ids are
/// j * l + i for the horizontal edge leaving vertex (i, j) eastwards and
/// l * l + j * l + i for the vertical edge leaving it northwards.
struct CodeSpec {
  CodeFamily family = CodeFamily::Toric;
  int l = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::vector<Check> checks;
  /// Representatives in the order X1, X2, Z1, Z2 (toric-level labels).
  std::array<PauliOperator, 4> logicals;
  /// Per cluster: gauge X then gauge Z. Empty for the toric family.
  std::vector<PauliOperator> gauge_generators;
  /// check id -> node index within its sublattice.
  std::vector<std::uint32_t> node_of_check;
  /// Indexed by CheckType (X = 0, Z = 1).
  std::array<Sublattice, 2> sublattices;

  std::size_t num_edges() const { return 2 * static_cast<std::size_t>(l) * l; }
  std::size_t num_gauge_qubits() const { return gauge_generators.size() / 2; }
  const Sublattice& sublattice(CheckType t) const { return sublattices[t == CheckType::X ? 0 : 1]; }

  /// Toric edge (cluster) id of a qubit.
  std::size_t cluster_of(std::size_t qubit) const { return family == CodeFamily::C4Toric ? qubit / 4 : qubit; }

  /// Syndrome bits of `error` against every check.
  std::vector<std::uint8_t> syndrome(const PauliOperator& error) const;
};

CodeSpec build_toric(int l);
CodeSpec build_c4_toric(int l);
CodeSpec build_code(CodeFamily family, int l);

struct VerificationReport {
  std::vector<std::string> violations;
  std::map<CheckKind, std::size_t> counts;
  std::size_t num_generators = 0;
  std::size_t rank = 0;
  /// n - rank - (#gauge qubits).
  std::size_t derived_k = 0;
  /// (X index, Z index) pairs of anticommuting logical representatives.
  std::vector<std::pair<int, int>> logical_pairing;

  bool ok() const { return violations.empty(); }
};

VerificationReport verify_code(const CodeSpec& spec);

/// Smallest weight of an X-type or Z-type operator that commutes with every
/// check yet anticommutes with some logical representative, searching weights
/// up to `w_max`. Returns nullopt when none exists at or below `w_max`.
/// Throws BudgetExceeded when the number of supports to enumerate exceeds
/// `budget`.
std::optional<std::size_t> min_logical_weight(const CodeSpec& spec, std::size_t w_max,
                                              std::uint64_t budget = 200'000'000);

/// JSON document with the code parameters, checks (Pauli strings with kind
/// and coordinate), logicals and gauge generators.
std::string to_json(const CodeSpec& spec);

/// Number of supports of size <= w_max among n qubits, saturating at UINT64_MAX.
std::uint64_t count_supports(std::size_t n, std::size_t w_max);

}  // namespace c4toric

#endif  // C4TORIC_CODES_HPP
