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

#include <algorithm>
#include <bit>

#include "c4toric/errors.hpp"

namespace c4toric {

MatchingDecoder::MatchingDecoder(const CodeSpec& spec, int time_weight)
    : spec_(&spec),
      time_weight_(time_weight),
      metrics_{SublatticeMetric(spec, CheckType::X), SublatticeMetric(spec, CheckType::Z)} {
  if (time_weight < 0) throw InvalidParameter("time_weight must be >= 0");
}

void MatchingDecoder::decode_into(std::span<const std::pair<std::uint32_t, std::int32_t>> defects,
                                  std::vector<std::uint8_t>& x, std::vector<std::uint8_t>& z) const {
  std::array<std::vector<std::pair<std::uint32_t, std::int32_t>>, 2> split;
  for (const auto& [check, round] : defects) {
    if (check >= spec_->checks.size()) throw InvalidParameter("defect names an unknown check");
    const int side = check_type(spec_->checks[check].kind) == CheckType::X ? 0 : 1;
    split[side].emplace_back(spec_->node_of_check[check], round);
  }
  std::vector<std::int64_t> weights;
  std::vector<std::uint32_t> path;
  for (int side = 0; side < 2; ++side) {
    const auto& nodes = split[side];
    const std::size_t m = nodes.size();
    if (m == 0) continue;
    if (m % 2 != 0) {
      throw ParityError(std::string("odd number of defects (") + std::to_string(m) + ") on the " +
                        (side == 0 ? "X" : "Z") + " sublattice");
    }
    const SublatticeMetric& metric = metrics_[side];
    weights.assign(m * m, 0);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const std::int64_t w = metric.distance(nodes[a].first, nodes[b].first) +
                               static_cast<std::int64_t>(time_weight_) * std::abs(nodes[a].second - nodes[b].second);
        weights[a * m + b] = weights[b * m + a] = w;
      }
    }
    const Pairing pairs = min_weight_perfect_matching(m, weights);
    path.clear();
    for (const auto& [a, b] : pairs) metric.append_path(nodes[a].first, nodes[b].first, path);
    // X-type checks detect Z errors, so they are corrected with Z.
    auto& target = side == 0 ? z : x;
    for (auto q : path) target[q] ^= 1;
  }
}

PauliOperator MatchingDecoder::decode(std::span<const std::pair<std::uint32_t, std::int32_t>> defects) const {
  std::vector<std::uint8_t> x(spec_->n, 0), z(spec_->n, 0);
  decode_into(defects, x, z);
  PauliOperator out(spec_->n);
  for (std::size_t q = 0; q < spec_->n; ++q) {
    if (x[q]) out.flip_x(q);
    if (z[q]) out.flip_z(q);
  }
  return out;
}

PauliOperator decode_record(const CodeSpec& spec, const SyndromeRecord& record, int time_weight) {
  return MatchingDecoder(spec, time_weight).decode(record);
}

LogicalOutcome judge_failure(const CodeSpec& spec, const PauliOperator& residual) {
  if (residual.num_qubits() != spec.n) throw DimensionError("residual size does not match the code");
  for (const Check& check : spec.checks) {
    if (!commutes(check.op, residual)) {
      throw ContractViolation("residual has a nontrivial syndrome; the correction does not match the defects");
    }
  }
  LogicalOutcome out;
  for (int k = 0; k < 2; ++k) {
    out.x_flips[k] = !commutes(residual, spec.logicals[k]);
    out.z_flips[k] = !commutes(residual, spec.logicals[2 + k]);
  }
  out.failed = out.x_flips[0] || out.x_flips[1] || out.z_flips[0] || out.z_flips[1];
  return out;
}

std::size_t cluster_weight_mod_gauge(const CodeSpec& spec, const PauliOperator& error, std::size_t cluster) {
  if (spec.family != CodeFamily::C4Toric) {
    if (cluster >= spec.n) throw InvalidParameter("cluster out of range");
    return (error.x(cluster) || error.z(cluster)) ? 1 : 0;
  }
  if (cluster >= spec.num_edges()) throw InvalidParameter("cluster out of range");
  const std::size_t base = 4 * cluster;
  auto masks = [base](const PauliOperator& p) {
    unsigned x = 0, z = 0;
    for (unsigned c = 0; c < 4; ++c) {
      x |= static_cast<unsigned>(p.x(base + c)) << c;
      z |= static_cast<unsigned>(p.z(base + c)) << c;
    }
    return std::pair{x, z};
  };
  const auto [ex, ez] = masks(error);
  const auto [gx, gx_z] = masks(spec.gauge_generators[2 * cluster]);
  const auto [gz_x, gz] = masks(spec.gauge_generators[2 * cluster + 1]);
  (void)gx_z;
  (void)gz_x;
  std::size_t best = 4;
  // Products of the gauge pair and the cluster's square checks (XXXX, ZZZZ).
  for (unsigned a = 0; a < 2; ++a) {
    for (unsigned b = 0; b < 2; ++b) {
      for (unsigned c = 0; c < 2; ++c) {
        for (unsigned d = 0; d < 2; ++d) {
          const unsigned x = ex ^ (a ? gx : 0u) ^ (c ? 0xFu : 0u);
          const unsigned z = ez ^ (b ? gz : 0u) ^ (d ? 0xFu : 0u);
          best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(x | z)));
        }
      }
    }
  }
  return best;
}

SweepReport single_fault_sweep(const CodeSpec& spec, const Schedule& schedule, int rounds, int time_weight) {
  if (rounds < 1) throw InvalidParameter("rounds must be >= 1");
  SweepReport report;
  const MatchingDecoder decoder(spec, time_weight);
  const auto locs = fault_locations(schedule);
  const std::size_t clusters = spec.family == CodeFamily::C4Toric ? spec.num_edges() : spec.n;
  for (int r = 0; r < rounds; ++r) {
    for (std::uint32_t k = 0; k < locs.size(); ++k) {
      const int choices = fault_choices(locs[k]);
      for (int c = 1; c <= choices; ++c) {
        const InjectedFault fault{{r, k}, static_cast<std::uint8_t>(c)};
        const SyndromeRecord record = simulate_with_faults(spec, schedule, rounds, std::span(&fault, 1));
        ++report.faults;
        for (std::size_t cl = 0; cl < clusters; ++cl) {
          if (cluster_weight_mod_gauge(spec, record.final_data_error, cl) > 2) {
            ++report.wide_clusters;
            break;
          }
        }
        LogicalOutcome outcome;
        try {
          PauliOperator residual = decoder.decode(record);
          residual *= record.final_data_error;
          outcome = judge_failure(spec, residual);
        } catch (const std::logic_error&) {
          ++report.unmatchable;
          continue;
        }
        if (outcome.failed) {
          if (report.failures == 0) {
            report.first_failure = "round " + std::to_string(r) + ", timestep " +
                                   std::to_string(locs[k].timestep) + ", op " + std::to_string(k) + ", pauli " +
                                   std::to_string(c);
          }
          ++report.failures;
        }
      }
    }
  }
  return report;
}

}  // namespace c4toric
