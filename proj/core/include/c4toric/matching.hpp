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

#ifndef C4TORIC_MATCHING_HPP
#define C4TORIC_MATCHING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "c4toric/codes.hpp"
#include "c4toric/pauli.hpp"

namespace c4toric {

/// Toric-family checks are reported as Octagon nodes; the metric treats them
/// as plain lattice sites.
enum class NodeKind { Square, Octagon };

struct DefectNode {
  std::size_t check_id = 0;
  NodeKind kind = NodeKind::Octagon;
  Coordinate coord;
  int round = 0;
};

DefectNode make_defect_node(const CodeSpec& spec, std::size_t check_id, int round = 0);

/// Closed-form distance between two same-type checks on the defect graph:
/// the number of qubits on a shortest chain joining them. For C4 codes an
/// octagon-to-octagon step costs 2 and each square endpoint adds 1 (with the
/// better of its two neighboring octagons); toric codes use the plain torus
/// Manhattan distance. Throws InvalidParameter for mixed sublattices.
int spatial_distance(const CodeSpec& spec, const DefectNode& a, const DefectNode& b);

/// Breadth-first search on the explicit defect graph.
int spatial_distance_bfs(const CodeSpec& spec, const DefectNode& a, const DefectNode& b);

/// spatial_distance + time_weight * |round difference|.
int spacetime_distance(const CodeSpec& spec, const DefectNode& a, const DefectNode& b, int time_weight = 1);

/// All-pairs spatial distances of one sublattice, plus shortest-chain synthesis.
class SublatticeMetric {
 public:
  SublatticeMetric() = default;
  SublatticeMetric(const CodeSpec& spec, CheckType type);

  CheckType type() const { return type_; }
  std::size_t num_nodes() const { return num_nodes_; }
  int distance(std::uint32_t a, std::uint32_t b) const { return dist_[static_cast<std::size_t>(a) * num_nodes_ + b]; }
  int max_distance() const { return max_distance_; }

  /// Qubits of one shortest chain between two nodes, walked greedily along
  /// edges that decrease the distance to `b`.
  void append_path(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& qubits) const;

 private:
  CheckType type_ = CheckType::X;
  std::size_t num_nodes_ = 0;
  int max_distance_ = 0;
  std::vector<int> dist_;
  // node -> (qubit, neighbor node) pairs
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency_;
};

using Pairing = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// A complete graph on defect nodes with a dense symmetric weight matrix.
struct MatchingProblem {
  std::vector<DefectNode> nodes;
  std::vector<std::int64_t> weights;  // row-major, size() x size()

  std::size_t size() const { return nodes.size(); }
  std::int64_t weight(std::size_t a, std::size_t b) const { return weights[a * nodes.size() + b]; }

  static MatchingProblem from_nodes(const CodeSpec& spec, std::vector<DefectNode> nodes, int time_weight = 1);

  /// Nodes and weight matrix as a JSON document.
  std::string to_json() const;
};

/// Exact minimum-weight perfect matching on the complete graph with the
/// given dense symmetric weight matrix (row-major n x n). Throws ParityError
/// on an odd node count.
Pairing min_weight_perfect_matching(std::size_t n, std::span<const std::int64_t> weights);

Pairing mwpm(const MatchingProblem& problem);

/// Exhaustive minimum over all perfect matchings. Refuses (InvalidParameter)
/// above `max_nodes` nodes.
Pairing mwpm_bruteforce(const MatchingProblem& problem, std::size_t max_nodes = 12);

std::int64_t pairing_weight(const MatchingProblem& problem, const Pairing& pairs);

/// Product of one shortest chain per pair. Pairs index into `nodes`, which
/// must all lie on one sublattice. X-type checks are joined by Z chains and
/// Z-type checks by X chains; time separation contributes nothing.
PauliOperator pairing_to_correction(const CodeSpec& spec, const std::vector<DefectNode>& nodes, const Pairing& pairs);

}  // namespace c4toric

#endif  // C4TORIC_MATCHING_HPP
