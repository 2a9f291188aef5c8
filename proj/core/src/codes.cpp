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

#include "c4toric/codes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "c4toric/errors.hpp"
#include "json.hpp"

namespace c4toric {

std::string_view to_string(CodeFamily family) {
  return family == CodeFamily::Toric ? "Toric" : "C4Toric";
}

std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::SquareX: return "SquareX";
    case CheckKind::SquareZ: return "SquareZ";
    case CheckKind::OctagonX: return "OctagonX";
    case CheckKind::OctagonZ: return "OctagonZ";
    case CheckKind::ToricStar: return "ToricStar";
    case CheckKind::ToricPlaquette: return "ToricPlaquette";
  }
  return "?";
}

std::string_view to_string(CheckType type) { return type == CheckType::X ? "X" : "Z"; }

CodeFamily parse_family(std::string_view text) {
  if (text == "Toric" || text == "toric") return CodeFamily::Toric;
  if (text == "C4Toric" || text == "c4toric" || text == "C4" || text == "c4") return CodeFamily::C4Toric;
  throw InvalidParameter("unknown code family '" + std::string(text) + "'");
}

CheckType check_type(CheckKind kind) {
  switch (kind) {
    case CheckKind::SquareX:
    case CheckKind::OctagonX:
    case CheckKind::ToricStar:
      return CheckType::X;
    default:
      return CheckType::Z;
  }
}

bool is_square(CheckKind kind) { return kind == CheckKind::SquareX || kind == CheckKind::SquareZ; }

std::vector<std::uint8_t> CodeSpec::syndrome(const PauliOperator& error) const {
  std::vector<std::uint8_t> out(checks.size());
  for (std::size_t c = 0; c < checks.size(); ++c) out[c] = static_cast<std::uint8_t>(symplectic_product(checks[c].op, error));
  return out;
}

namespace {

// Periodic lattice index helpers.
struct Lattice {
  int l;
  int wrap(int v) const { return ((v % l) + l) % l; }
  std::size_t h(int i, int j) const { return static_cast<std::size_t>(wrap(j) * l + wrap(i)); }
  std::size_t v(int i, int j) const { return static_cast<std::size_t>(l * l + wrap(j) * l + wrap(i)); }
  std::size_t face(int i, int j) const { return static_cast<std::size_t>(wrap(j) * l + wrap(i)); }
};

void require_size(int l) {
  if (l < 2) throw InvalidParameter("lattice size l must be >= 2 (got " + std::to_string(l) + ")");
}

// Fills node_of_check and both sublattices' defect graphs from the check list.
void build_sublattices(CodeSpec& spec) {
  spec.node_of_check.assign(spec.checks.size(), 0);
  for (int t = 0; t < 2; ++t) {
    Sublattice& sub = spec.sublattices[t];
    sub.type = t == 0 ? CheckType::X : CheckType::Z;
    sub.check_ids.clear();
    for (std::size_t c = 0; c < spec.checks.size(); ++c) {
      if (check_type(spec.checks[c].kind) == sub.type) {
        spec.node_of_check[c] = static_cast<std::uint32_t>(sub.check_ids.size());
        sub.check_ids.push_back(c);
      }
    }
    const std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    sub.qubit_endpoints.assign(spec.n, {unset, unset});
    sub.incident_qubits.assign(sub.check_ids.size(), {});
    for (std::uint32_t node = 0; node < sub.check_ids.size(); ++node) {
      for (auto q : spec.checks[sub.check_ids[node]].op.support()) {
        auto& ends = sub.qubit_endpoints[q];
        if (ends[0] == unset) {
          ends[0] = node;
        } else if (ends[1] == unset) {
          ends[1] = node;
        } else {
          throw ContractViolation("qubit " + std::to_string(q) + " lies in more than two " +
                                  std::string(to_string(sub.type)) + " checks");
        }
        sub.incident_qubits[node].push_back(static_cast<std::uint32_t>(q));
      }
    }
    sub.octagon_neighbors.assign(sub.check_ids.size(), {});
    for (std::uint32_t node = 0; node < sub.check_ids.size(); ++node) {
      if (!is_square(spec.checks[sub.check_ids[node]].kind)) continue;
      for (auto q : sub.incident_qubits[node]) {
        const auto& ends = sub.qubit_endpoints[q];
        const std::uint32_t other = ends[0] == node ? ends[1] : ends[0];
        auto& nb = sub.octagon_neighbors[node];
        if (std::find(nb.begin(), nb.end(), other) == nb.end()) nb.push_back(other);
      }
    }
  }
}

}  // namespace

CodeSpec build_toric(int l) {
  require_size(l);
  const Lattice lat{l};
  CodeSpec spec;
  spec.family = CodeFamily::Toric;
  spec.l = l;
  spec.n = 2 * static_cast<std::size_t>(l) * l;
  spec.k = 2;
  spec.d = static_cast<std::size_t>(l);

  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) {
      const std::size_t qs[] = {lat.h(i, j), lat.h(i - 1, j), lat.v(i, j), lat.v(i, j - 1)};
      spec.checks.push_back({PauliOperator::x_on(spec.n, qs), CheckKind::ToricStar, {i, j}});
    }
  }
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) {
      const std::size_t qs[] = {lat.h(i, j), lat.h(i, j + 1), lat.v(i, j), lat.v(i + 1, j)};
      spec.checks.push_back({PauliOperator::z_on(spec.n, qs), CheckKind::ToricPlaquette, {i, j}});
    }
  }

  std::vector<std::size_t> row_v, col_h, col_v, row_h;
  for (int t = 0; t < l; ++t) {
    row_v.push_back(lat.v(t, 0));
    col_h.push_back(lat.h(0, t));
    col_v.push_back(lat.v(0, t));
    row_h.push_back(lat.h(t, 0));
  }
  spec.logicals = {PauliOperator::x_on(spec.n, row_v), PauliOperator::x_on(spec.n, col_h),
                   PauliOperator::z_on(spec.n, col_v), PauliOperator::z_on(spec.n, row_h)};
  build_sublattices(spec);
  return spec;
}

namespace {

constexpr std::array<std::uint8_t, 2> kLeft{kBottomLeft, kTopLeft};
constexpr std::array<std::uint8_t, 2> kRight{kBottomRight, kTopRight};
constexpr std::array<std::uint8_t, 2> kBottom{kBottomLeft, kBottomRight};
constexpr std::array<std::uint8_t, 2> kTop{kTopLeft, kTopRight};

void add_side(std::vector<std::size_t>& out, std::size_t edge, const std::array<std::uint8_t, 2>& side) {
  out.push_back(4 * edge + side[0]);
  out.push_back(4 * edge + side[1]);
}

}  // namespace

// Orientation convention. The used C4 logical of each cluster has its Z
// representative on a side parallel to the toric edge (bottom side for
// horizontal edges, left side for vertical ones); its X representative is on
// a perpendicular side. The remaining C4 logical is the gauge qubit.
// Octagons take, from each of their four clusters, the side facing them.
CodeSpec build_c4_toric(int l) {
  require_size(l);
  const Lattice lat{l};
  CodeSpec spec;
  spec.family = CodeFamily::C4Toric;
  spec.l = l;
  spec.n = 8 * static_cast<std::size_t>(l) * l;
  spec.k = 2;
  spec.d = 2 * static_cast<std::size_t>(l);
  const std::size_t edges = spec.num_edges();

  auto cluster = [](std::size_t e) {
    return std::vector<std::size_t>{4 * e, 4 * e + 1, 4 * e + 2, 4 * e + 3};
  };
  auto edge_coord = [l](std::size_t e) {
    const std::size_t ll = static_cast<std::size_t>(l) * l;
    const bool vertical = e >= ll;
    const std::size_t r = vertical ? e - ll : e;
    return Coordinate{static_cast<int>(r % l), static_cast<int>(r / l),
                      vertical ? EdgeOrientation::Vertical : EdgeOrientation::Horizontal};
  };

  for (std::size_t e = 0; e < edges; ++e) {
    spec.checks.push_back({PauliOperator::x_on(spec.n, cluster(e)), CheckKind::SquareX, edge_coord(e)});
  }
  for (std::size_t e = 0; e < edges; ++e) {
    spec.checks.push_back({PauliOperator::z_on(spec.n, cluster(e)), CheckKind::SquareZ, edge_coord(e)});
  }
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) {
      std::vector<std::size_t> qs;
      add_side(qs, lat.h(i, j), kLeft);
      add_side(qs, lat.h(i - 1, j), kRight);
      add_side(qs, lat.v(i, j), kBottom);
      add_side(qs, lat.v(i, j - 1), kTop);
      spec.checks.push_back({PauliOperator::x_on(spec.n, qs), CheckKind::OctagonX, {i, j}});
    }
  }
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) {
      std::vector<std::size_t> qs;
      add_side(qs, lat.h(i, j), kTop);
      add_side(qs, lat.h(i, j + 1), kBottom);
      add_side(qs, lat.v(i, j), kRight);
      add_side(qs, lat.v(i + 1, j), kLeft);
      spec.checks.push_back({PauliOperator::z_on(spec.n, qs), CheckKind::OctagonZ, {i, j}});
    }
  }

  // Lifted toric logicals: used-qubit representatives along the same cycles.
  std::vector<std::size_t> x1, x2, z1, z2;
  for (int t = 0; t < l; ++t) {
    add_side(x1, lat.v(t, 0), kBottom);
    add_side(x2, lat.h(0, t), kLeft);
    add_side(z1, lat.v(0, t), kLeft);
    add_side(z2, lat.h(t, 0), kBottom);
  }
  spec.logicals = {PauliOperator::x_on(spec.n, x1), PauliOperator::x_on(spec.n, x2),
                   PauliOperator::z_on(spec.n, z1), PauliOperator::z_on(spec.n, z2)};

  const std::size_t ll = static_cast<std::size_t>(l) * l;
  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<std::size_t> gx, gz;
    if (e < ll) {
      add_side(gx, e, kTop);
      add_side(gz, e, kLeft);
    } else {
      add_side(gx, e, kLeft);
      add_side(gz, e, kBottom);
    }
    spec.gauge_generators.push_back(PauliOperator::x_on(spec.n, gx));
    spec.gauge_generators.push_back(PauliOperator::z_on(spec.n, gz));
  }
  build_sublattices(spec);
  return spec;
}

CodeSpec build_code(CodeFamily family, int l) {
  return family == CodeFamily::Toric ? build_toric(l) : build_c4_toric(l);
}

VerificationReport verify_code(const CodeSpec& spec) {
  VerificationReport report;
  auto violation = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  for (const auto& c : spec.checks) ++report.counts[c.kind];
  report.num_generators = spec.checks.size();

  for (std::size_t a = 0; a < spec.checks.size(); ++a) {
    if (spec.checks[a].op.num_qubits() != spec.n) {
      violation("check " + std::to_string(a) + " has wrong qubit count");
      return report;
    }
    for (std::size_t b = a + 1; b < spec.checks.size(); ++b) {
      if (!commutes(spec.checks[a].op, spec.checks[b].op)) {
        violation("checks " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
      }
    }
  }
  static constexpr const char* kLogicalNames[] = {"X1", "X2", "Z1", "Z2"};
  for (std::size_t g = 0; g < 4; ++g) {
    for (std::size_t c = 0; c < spec.checks.size(); ++c) {
      if (!commutes(spec.logicals[g], spec.checks[c].op)) {
        violation(std::string("logical ") + kLogicalNames[g] + " anticommutes with check " + std::to_string(c));
      }
    }
  }
  for (std::size_t g = 0; g < spec.gauge_generators.size(); ++g) {
    const auto& gauge = spec.gauge_generators[g];
    for (std::size_t c = 0; c < spec.checks.size(); ++c) {
      if (!commutes(gauge, spec.checks[c].op)) {
        violation("gauge generator " + std::to_string(g) + " anticommutes with check " + std::to_string(c));
      }
    }
    for (std::size_t m = 0; m < 4; ++m) {
      if (!commutes(gauge, spec.logicals[m])) {
        violation("gauge generator " + std::to_string(g) + " anticommutes with logical " + kLogicalNames[m]);
      }
    }
    // Gauge generators come in (X, Z) pairs per cluster: anticommuting within
    // the pair, commuting with every other generator.
    for (std::size_t h = g + 1; h < spec.gauge_generators.size(); ++h) {
      const bool partner = (g / 2 == h / 2);
      if (commutes(gauge, spec.gauge_generators[h]) == partner) {
        violation("gauge generators " + std::to_string(g) + " and " + std::to_string(h) +
                  (partner ? " commute but should anticommute" : " anticommute but should commute"));
      }
    }
  }

  for (int xi = 0; xi < 2; ++xi) {
    for (int zi = 2; zi < 4; ++zi) {
      if (!commutes(spec.logicals[xi], spec.logicals[zi])) report.logical_pairing.emplace_back(xi, zi - 2);
    }
  }
  if (report.logical_pairing.size() != 2 || report.logical_pairing[0].first == report.logical_pairing[1].first ||
      report.logical_pairing[0].second == report.logical_pairing[1].second) {
    violation("logical representatives do not form a symplectic pairing");
  }
  for (int a = 0; a < 2; ++a) {
    if (!commutes(spec.logicals[a], spec.logicals[1 - a])) violation("X logicals anticommute");
    if (!commutes(spec.logicals[2 + a], spec.logicals[3 - a])) violation("Z logicals anticommute");
  }

  std::vector<PauliOperator> gens;
  gens.reserve(spec.checks.size());
  for (const auto& c : spec.checks) gens.push_back(c.op);
  report.rank = gf2_rank(gens);
  const std::size_t gauge_qubits = spec.num_gauge_qubits();
  report.derived_k = spec.n >= report.rank + gauge_qubits ? spec.n - report.rank - gauge_qubits : 0;
  if (report.derived_k != spec.k) {
    violation("derived k = " + std::to_string(report.derived_k) + " but spec says k = " + std::to_string(spec.k));
  }
  if (report.rank + 2 != report.num_generators) {
    violation("rank " + std::to_string(report.rank) + " != #generators - 2 (" +
              std::to_string(report.num_generators) + " generators)");
  }

  const std::size_t ll = static_cast<std::size_t>(spec.l) * spec.l;
  auto expect_count = [&](CheckKind kind, std::size_t expected) {
    const std::size_t got = report.counts.count(kind) ? report.counts.at(kind) : 0;
    if (got != expected) {
      violation(std::string(to_string(kind)) + " count " + std::to_string(got) + " != " + std::to_string(expected));
    }
  };
  if (spec.family == CodeFamily::C4Toric) {
    expect_count(CheckKind::SquareX, 2 * ll);
    expect_count(CheckKind::SquareZ, 2 * ll);
    expect_count(CheckKind::OctagonX, ll);
    expect_count(CheckKind::OctagonZ, ll);
    if (gauge_qubits != 2 * ll) violation("gauge qubit count != 2 l^2");
    for (const auto& c : spec.checks) {
      const std::size_t want = is_square(c.kind) ? 4 : 8;
      if (c.op.weight() != want) {
        violation(std::string(to_string(c.kind)) + " check has weight " + std::to_string(c.op.weight()));
        break;
      }
    }
  } else {
    expect_count(CheckKind::ToricStar, ll);
    expect_count(CheckKind::ToricPlaquette, ll);
  }
  return report;
}

std::uint64_t count_supports(std::size_t n, std::size_t w_max) {
  std::uint64_t total = 0;
  long double binom = 1;  // C(n, 0)
  for (std::size_t w = 0; w <= w_max && w <= n; ++w) {
    if (w > 0) binom = binom * static_cast<long double>(n - w + 1) / static_cast<long double>(w);
    if (binom + total >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += static_cast<std::uint64_t>(binom + 0.5L);
  }
  return total;
}

namespace {

// Enumerates all supports of size w in [0, n) and calls `visit(support)`;
// stops and returns true as soon as `visit` does.
template <typename Visit>
bool for_each_support(std::size_t n, std::size_t w, std::vector<std::size_t>& idx, Visit&& visit) {
  idx.resize(w);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (w > n) return false;
  while (true) {
    if (visit(idx)) return true;
    std::size_t pos = w;
    while (pos > 0 && idx[pos - 1] == n - w + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < w; ++k) idx[k] = idx[k - 1] + 1;
  }
}

}  // namespace

std::optional<std::size_t> min_logical_weight(const CodeSpec& spec, std::size_t w_max, std::uint64_t budget) {
  const std::uint64_t needed = count_supports(spec.n, w_max);
  if (needed > budget) {
    throw BudgetExceeded("min_logical_weight: " + std::to_string(needed) + " supports exceed budget of " +
                         std::to_string(budget) + " (reduce w_max)");
  }
  // An X-type operator is undetected iff it has even overlap with every
  // Z-type check, and nontrivial iff it anticommutes with a Z logical.
  // Work on per-qubit bitmasks of Z-type checks and Z logicals (and dually).
  struct Side {
    std::vector<std::vector<std::uint64_t>> check_mask;  // qubit -> bitset over checks of opposite type
    std::vector<std::uint8_t> logical_mask;              // qubit -> bits over the two opposite logicals
  };
  auto make_side = [&](CheckType detecting, int logical_offset) {
    Side s;
    std::vector<std::size_t> ids;
    for (std::size_t c = 0; c < spec.checks.size(); ++c) {
      if (check_type(spec.checks[c].kind) == detecting) ids.push_back(c);
    }
    const std::size_t words = (ids.size() + 63) / 64;
    s.check_mask.assign(spec.n, std::vector<std::uint64_t>(words, 0));
    s.logical_mask.assign(spec.n, 0);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      for (auto q : spec.checks[ids[k]].op.support()) s.check_mask[q][k / 64] |= std::uint64_t{1} << (k % 64);
    }
    for (int m = 0; m < 2; ++m) {
      for (auto q : spec.logicals[logical_offset + m].support()) s.logical_mask[q] |= static_cast<std::uint8_t>(1u << m);
    }
    return s;
  };
  const Side x_errors = make_side(CheckType::Z, 2);  // X-type candidates vs Z checks / Z logicals
  const Side z_errors = make_side(CheckType::X, 0);

  std::vector<std::size_t> idx;
  for (std::size_t w = 1; w <= w_max; ++w) {
    for (const Side* side : {&x_errors, &z_errors}) {
      const std::size_t words = side->check_mask.empty() ? 0 : side->check_mask[0].size();
      std::vector<std::uint64_t> acc(words);
      const bool found = for_each_support(spec.n, w, idx, [&](const std::vector<std::size_t>& sup) {
        std::fill(acc.begin(), acc.end(), 0);
        std::uint8_t logical = 0;
        for (auto q : sup) {
          for (std::size_t k = 0; k < words; ++k) acc[k] ^= side->check_mask[q][k];
          logical ^= side->logical_mask[q];
        }
        if (logical == 0) return false;
        return std::all_of(acc.begin(), acc.end(), [](std::uint64_t v) { return v == 0; });
      });
      if (found) return w;
    }
  }
  return std::nullopt;
}

std::string to_json(const CodeSpec& spec) {
  nlohmann::json doc;
  doc["family"] = to_string(spec.family);
  doc["l"] = spec.l;
  doc["n"] = spec.n;
  doc["k"] = spec.k;
  doc["d"] = spec.d;
  auto& checks = doc["checks"] = nlohmann::json::array();
  for (const auto& c : spec.checks) {
    nlohmann::json coord = {{"i", c.coord.i}, {"j", c.coord.j}};
    if (c.coord.orientation != EdgeOrientation::None) {
      coord["orientation"] = c.coord.orientation == EdgeOrientation::Horizontal ? "h" : "v";
    }
    checks.push_back({{"kind", to_string(c.kind)}, {"pauli", c.op.str()}, {"coord", coord}});
  }
  doc["logicals"] = {{"X1", spec.logicals[0].str()},
                     {"X2", spec.logicals[1].str()},
                     {"Z1", spec.logicals[2].str()},
                     {"Z2", spec.logicals[3].str()}};
  auto& gauge = doc["gauge_generators"] = nlohmann::json::array();
  for (const auto& g : spec.gauge_generators) gauge.push_back(g.str());
  return doc.dump(1);
}

}  // namespace c4toric
