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

#include "c4toric/circuits.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "c4toric/decode.hpp"
#include "c4toric/errors.hpp"

namespace c4toric {

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Toric4: return "Toric4";
    case ScheduleKind::C4Eight: return "C4Eight";
    case ScheduleKind::C4Four: return "C4Four";
  }
  return "?";
}

ScheduleKind parse_schedule_kind(std::string_view text) {
  if (text == "Toric4") return ScheduleKind::Toric4;
  if (text == "C4Eight") return ScheduleKind::C4Eight;
  if (text == "C4Four") return ScheduleKind::C4Four;
  throw InvalidParameter("unknown schedule '" + std::string(text) + "' (expected Toric4, C4Eight or C4Four)");
}

std::size_t Schedule::num_cnot_timesteps() const {
  return static_cast<std::size_t>(std::count_if(timesteps.begin(), timesteps.end(), [](const auto& ops) {
    return std::any_of(ops.begin(), ops.end(), [](const Op& op) { return op.kind == OpKind::CNOT; });
  }));
}

std::size_t Schedule::num_data_cnot_timesteps() const {
  return static_cast<std::size_t>(std::count_if(timesteps.begin(), timesteps.end(), [this](const auto& ops) {
    return std::any_of(ops.begin(), ops.end(), [this](const Op& op) {
      return op.kind == OpKind::CNOT && (op.q0 < num_data || op.q1 < num_data);
    });
  }));
}

std::size_t Schedule::num_ops() const {
  std::size_t total = 0;
  for (const auto& ops : timesteps) total += ops.size();
  return total;
}

std::string Schedule::dump() const {
  std::ostringstream out;
  out << to_string(kind) << " data=" << num_data << " qubits=" << num_qubits << " timesteps=" << timesteps.size()
      << "\n";
  for (std::size_t t = 0; t < timesteps.size(); ++t) {
    out << "t" << t << ":";
    for (const Op& op : timesteps[t]) {
      const char basis = op.basis == Basis::Z ? 'Z' : 'X';
      switch (op.kind) {
        case OpKind::Prep: out << " R" << basis << "(" << op.q0 << ")"; break;
        case OpKind::CNOT: out << " CX(" << op.q0 << "," << op.q1 << ")"; break;
        case OpKind::Measure: out << " M" << basis << "(" << op.q0 << ")#" << op.measurement; break;
        case OpKind::Idle: out << " I(" << op.q0 << ")"; break;
      }
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// ---------------------------------------------------------------------------
// A tiny backtracking solver for the translation-invariant unit cell of a
// schedule. Variables are CNOT step indices.

class StepCsp {
 public:
  int add_var(std::vector<int> domain) {
    domains_.push_back(std::move(domain));
    return static_cast<int>(domains_.size()) - 1;
  }

  // Partial constraints are rechecked whenever one of their variables is
  // assigned (unassigned variables read as 0); others once all are set.
  void add(std::string name, std::vector<int> vars, std::function<bool(const std::vector<int>&)> ok,
           bool partial = false) {
    constraints_.push_back({std::move(name), std::move(vars), std::move(ok), partial});
  }

  void all_different(const std::string& name, std::vector<int> vars) {
    add(
        name, vars,
        [vars](const std::vector<int>& v) {
          for (std::size_t a = 0; a < vars.size(); ++a) {
            for (std::size_t b = a + 1; b < vars.size(); ++b) {
              if (v[vars[a]] != 0 && v[vars[a]] == v[vars[b]]) return false;
            }
          }
          return true;
        },
        true);
  }

  // Number of (x, z) pairs with the x step first must be even.
  void even_order(const std::string& name, std::vector<std::pair<int, int>> pairs) {
    std::vector<int> vars;
    for (auto [x, z] : pairs) {
      vars.push_back(x);
      vars.push_back(z);
    }
    add(name, vars, [pairs](const std::vector<int>& v) {
      int count = 0;
      for (auto [x, z] : pairs) count += v[x] < v[z];
      return count % 2 == 0;
    });
  }

  // The two latest-scheduled variables of `vars` must form one of `allowed`
  // (pairs of positions into vars).
  void last_two_in(const std::string& name, std::vector<int> vars, std::vector<std::pair<int, int>> allowed) {
    add(name, vars, [vars, allowed](const std::vector<int>& v) {
      std::vector<int> idx(vars.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[vars[a]] > v[vars[b]]; });
      const std::pair<int, int> last{std::min(idx[0], idx[1]), std::max(idx[0], idx[1])};
      return std::find(allowed.begin(), allowed.end(), last) != allowed.end();
    });
  }

  // Depth-first search in variable-index order. On failure `worst` receives
  // the constraint that rejected the most partial assignments.
  std::optional<std::vector<int>> solve(std::string* worst) {
    const int n = static_cast<int>(domains_.size());
    std::vector<std::vector<int>> due(n);
    for (int c = 0; c < static_cast<int>(constraints_.size()); ++c) {
      const auto& vars = constraints_[c].vars;
      if (constraints_[c].partial) {
        for (int v : vars) due[v].push_back(c);
      } else {
        due[*std::max_element(vars.begin(), vars.end())].push_back(c);
      }
    }
    std::vector<int> value(n, 0);
    std::vector<long> rejections(constraints_.size(), 0);
    std::function<bool(int)> rec = [&](int k) {
      if (k == n) return true;
      for (int d : domains_[k]) {
        value[k] = d;
        bool good = true;
        for (int c : due[k]) {
          if (!constraints_[c].ok(value)) {
            ++rejections[c];
            good = false;
            break;
          }
        }
        if (good && rec(k + 1)) return true;
      }
      value[k] = 0;
      return false;
    };
    if (rec(0)) return value;
    if (worst != nullptr && !constraints_.empty()) {
      const auto it = std::max_element(rejections.begin(), rejections.end());
      *worst = constraints_[it - rejections.begin()].name;
    }
    return std::nullopt;
  }

 private:
  struct Constraint {
    std::string name;
    std::vector<int> vars;
    std::function<bool(const std::vector<int>&)> ok;
    bool partial = false;
  };
  std::vector<std::vector<int>> domains_;
  std::vector<Constraint> constraints_;
};

// Unit cell of the C4 lattice: the clusters of h(i,j) and v(i,j).
enum Role : int { hBL, hBR, hTL, hTR, vBL, vBR, vTL, vTR, kNumRoles };
enum Slot : int { kSqX, kSqZ, kOctX, kOctZ, kNumSlots };
// Faces meeting at a role: the octagon pair it belongs to, named by the
// direction of the Z octagon as seen from the X octagon's vertex.
enum Dir : int { NE, NW, SW, SE };
constexpr std::array<Dir, kNumRoles> kRoleDir = {SE, SW, NE, NW, NW, NE, SW, SE};
constexpr std::array<const char*, kNumRoles> kRoleName = {"hBL", "hBR", "hTL", "hTR", "vBL", "vBR", "vTL", "vTR"};
constexpr std::array<const char*, 4> kDirName = {"NE", "NW", "SW", "SE"};

int var_of(int role, int slot) { return role * kNumSlots + slot; }

struct CellLayout {
  int l;
  std::size_t E;
  int wrap(int v) const { return ((v % l) + l) % l; }
  std::size_t h(int i, int j) const { return static_cast<std::size_t>(wrap(j) * l + wrap(i)); }
  std::size_t v(int i, int j) const { return static_cast<std::size_t>(l) * l + static_cast<std::size_t>(wrap(j) * l + wrap(i)); }
  std::uint32_t qubit(std::size_t edge, int corner) const { return static_cast<std::uint32_t>(4 * edge + corner); }
  static int corner_of(int role) { return role % 4; }

  std::size_t square_x(std::size_t edge) const { return edge; }
  std::size_t square_z(std::size_t edge) const { return E + edge; }
  std::size_t octagon_x(int i, int j) const { return 2 * E + static_cast<std::size_t>(wrap(j) * l + wrap(i)); }
  std::size_t octagon_z(int i, int j) const {
    return 2 * E + static_cast<std::size_t>(l) * l + static_cast<std::size_t>(wrap(j) * l + wrap(i));
  }

  // Cluster (edge) holding `role` inside octagon X at vertex (i, j).
  std::size_t octagon_x_edge(int role, int i, int j) const {
    switch (role) {
      case hBL: case hTL: return h(i, j);
      case hBR: case hTR: return h(i - 1, j);
      case vBL: case vBR: return v(i, j);
      default: return v(i, j - 1);
    }
  }
  std::size_t octagon_z_edge(int role, int i, int j) const {
    switch (role) {
      case hTL: case hTR: return h(i, j);
      case hBL: case hBR: return h(i, j + 1);
      case vBR: case vTR: return v(i, j);
      default: return v(i + 1, j);
    }
  }
};

void add_c4_common_constraints(StepCsp& csp) {
  for (int r = 0; r < kNumRoles; ++r) {
    csp.all_different(std::string("data qubit exclusivity (") + kRoleName[r] + ")",
                      {var_of(r, kSqX), var_of(r, kSqZ), var_of(r, kOctX), var_of(r, kOctZ)});
  }
  for (int slot : {kSqX, kSqZ}) {
    const char* s = slot == kSqX ? "SqX" : "SqZ";
    csp.all_different(std::string(s) + " ancilla exclusivity (h)",
                      {var_of(hBL, slot), var_of(hBR, slot), var_of(hTL, slot), var_of(hTR, slot)});
    csp.all_different(std::string(s) + " ancilla exclusivity (v)",
                      {var_of(vBL, slot), var_of(vBR, slot), var_of(vTL, slot), var_of(vTR, slot)});
  }
  auto pairs = [](std::initializer_list<int> roles, int xs, int zs) {
    std::vector<std::pair<int, int>> out;
    for (int r : roles) out.emplace_back(var_of(r, xs), var_of(r, zs));
    return out;
  };
  csp.even_order("commutation SqX/SqZ (h)", pairs({hBL, hBR, hTL, hTR}, kSqX, kSqZ));
  csp.even_order("commutation SqX/SqZ (v)", pairs({vBL, vBR, vTL, vTR}, kSqX, kSqZ));
  csp.even_order("commutation SqX/OctZ (h top)", pairs({hTL, hTR}, kSqX, kOctZ));
  csp.even_order("commutation SqX/OctZ (h bottom)", pairs({hBL, hBR}, kSqX, kOctZ));
  csp.even_order("commutation SqX/OctZ (v right)", pairs({vBR, vTR}, kSqX, kOctZ));
  csp.even_order("commutation SqX/OctZ (v left)", pairs({vBL, vTL}, kSqX, kOctZ));
  csp.even_order("commutation OctX/SqZ (h left)", pairs({hBL, hTL}, kOctX, kSqZ));
  csp.even_order("commutation OctX/SqZ (h right)", pairs({hBR, hTR}, kOctX, kSqZ));
  csp.even_order("commutation OctX/SqZ (v bottom)", pairs({vBL, vBR}, kOctX, kSqZ));
  csp.even_order("commutation OctX/SqZ (v top)", pairs({vTL, vTR}, kOctX, kSqZ));
  csp.even_order("commutation OctX/OctZ (NE)", pairs({hTL, vBR}, kOctX, kOctZ));
  csp.even_order("commutation OctX/OctZ (SW)", pairs({hBR, vTL}, kOctX, kOctZ));
  csp.even_order("commutation OctX/OctZ (NW)", pairs({hTR, vBL}, kOctX, kOctZ));
  csp.even_order("commutation OctX/OctZ (SE)", pairs({hBL, vTR}, kOctX, kOctZ));

  // A fault on a square ancilla halfway through spreads to the last two
  // qubits; those must form a gauge pair. Positions index {BL, BR, TL, TR}.
  auto square = [](int base, int slot) {
    return std::vector<int>{var_of(base + 0, slot), var_of(base + 1, slot), var_of(base + 2, slot),
                            var_of(base + 3, slot)};
  };
  const std::vector<std::pair<int, int>> bottom_top = {{0, 1}, {2, 3}};
  const std::vector<std::pair<int, int>> left_right = {{0, 2}, {1, 3}};
  csp.last_two_in("SqX hook is a gauge pair (h)", square(hBL, kSqX), bottom_top);
  csp.last_two_in("SqX hook is a gauge pair (v)", square(vBL, kSqX), left_right);
  csp.last_two_in("SqZ hook is a gauge pair (h)", square(hBL, kSqZ), left_right);
  csp.last_two_in("SqZ hook is a gauge pair (v)", square(vBL, kSqZ), bottom_top);
}

// Collects ops per timestep and fills in explicit idles.
class ScheduleWriter {
 public:
  ScheduleWriter(ScheduleKind kind, std::size_t num_data, std::size_t num_qubits, std::size_t num_timesteps,
                 std::size_t num_checks)
      : used_(num_timesteps, std::vector<char>(num_qubits, 0)), prep_(num_qubits, -1), meas_(num_qubits, -1) {
    s_.kind = kind;
    s_.num_data = num_data;
    s_.num_qubits = num_qubits;
    s_.timesteps.resize(num_timesteps);
    s_.ancilla_map.resize(num_checks);
    s_.check_measurements.resize(num_checks);
    s_.octagon_ancilla.assign(num_qubits, 0);
  }

  void prep(std::size_t t, std::uint32_t q, Basis b) {
    claim(t, q);
    prep_[q] = static_cast<int>(t);
    s_.timesteps[t].push_back({OpKind::Prep, q, 0, b, -1});
  }
  void cnot(std::size_t t, std::uint32_t c, std::uint32_t target) {
    claim(t, c);
    claim(t, target);
    s_.timesteps[t].push_back({OpKind::CNOT, c, target, Basis::Z, -1});
  }
  void measure(std::size_t t, std::uint32_t q, Basis b, std::size_t check) {
    claim(t, q);
    meas_[q] = static_cast<int>(t);
    const auto idx = static_cast<std::int32_t>(s_.num_measurements++);
    s_.timesteps[t].push_back({OpKind::Measure, q, 0, b, idx});
    s_.check_measurements[check].push_back(static_cast<std::uint32_t>(idx));
  }
  void assign(std::size_t check, std::uint32_t ancilla, bool octagon) {
    s_.ancilla_map[check].push_back(ancilla);
    if (octagon) s_.octagon_ancilla[ancilla] = 1;
  }

  Schedule finish() {
    for (std::size_t t = 0; t < s_.timesteps.size(); ++t) {
      for (std::uint32_t q = 0; q < s_.num_qubits; ++q) {
        if (used_[t][q]) continue;
        const bool alive = q < s_.num_data ||
                           (prep_[q] >= 0 && static_cast<int>(t) > prep_[q] && static_cast<int>(t) < meas_[q]);
        if (alive) s_.timesteps[t].push_back({OpKind::Idle, q, 0, Basis::Z, -1});
      }
    }
    return std::move(s_);
  }

 private:
  void claim(std::size_t t, std::uint32_t q) {
    if (used_[t][q]) {
      throw ConstructionError("qubit " + std::to_string(q) + " used twice in timestep " + std::to_string(t));
    }
    used_[t][q] = 1;
  }

  Schedule s_;
  std::vector<std::vector<char>> used_;
  std::vector<int> prep_, meas_;
};

void require_family(const CodeSpec& spec, CodeFamily family, const char* what) {
  if (spec.family != family) {
    throw InvalidParameter(std::string(what) + " requires a " + std::string(to_string(family)) + " code");
  }
}

}  // namespace

Schedule build_toric_schedule(const CodeSpec& spec) {
  require_family(spec, CodeFamily::Toric, "build_toric_schedule");
  // Variables: star touches E, W, N, S; plaquette touches N, S, E, W.
  enum { sE, sW, sN, sS, pN, pS, pE, pW };
  StepCsp csp;
  for (int k = 0; k < 8; ++k) csp.add_var({1, 2, 3, 4});
  csp.all_different("star ancilla exclusivity", {sE, sW, sN, sS});
  csp.all_different("plaquette ancilla exclusivity", {pN, pS, pE, pW});
  csp.all_different("data qubit exclusivity (h)", {sE, sW, pS, pN});
  csp.all_different("data qubit exclusivity (v)", {sN, sS, pW, pE});
  csp.even_order("commutation star/plaquette NE", {{sE, pS}, {sN, pW}});
  csp.even_order("commutation star/plaquette NW", {{sW, pS}, {sN, pE}});
  csp.even_order("commutation star/plaquette SW", {{sW, pN}, {sS, pE}});
  csp.even_order("commutation star/plaquette SE", {{sE, pN}, {sS, pW}});
  std::string worst;
  const auto sol = csp.solve(&worst);
  if (!sol) throw ConstructionError("toric schedule: no solution; violated constraint: " + worst);
  const auto& st = *sol;

  const int l = spec.l;
  const std::size_t ll = static_cast<std::size_t>(l) * l;
  auto wrap = [l](int v) { return ((v % l) + l) % l; };
  auto h = [&](int i, int j) { return static_cast<std::uint32_t>(wrap(j) * l + wrap(i)); };
  auto v = [&](int i, int j) { return static_cast<std::uint32_t>(ll + wrap(j) * l + wrap(i)); };
  const std::size_t n = spec.n;
  ScheduleWriter w(ScheduleKind::Toric4, n, n + spec.checks.size(), 6, spec.checks.size());
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) {
      const std::size_t star = static_cast<std::size_t>(j * l + i);
      const std::size_t plaq = ll + star;
      const auto as = static_cast<std::uint32_t>(n + star);
      const auto ap = static_cast<std::uint32_t>(n + plaq);
      w.assign(star, as, false);
      w.assign(plaq, ap, false);
      w.prep(0, as, Basis::X);
      w.prep(0, ap, Basis::Z);
      w.cnot(st[sE], as, h(i, j));
      w.cnot(st[sW], as, h(i - 1, j));
      w.cnot(st[sN], as, v(i, j));
      w.cnot(st[sS], as, v(i, j - 1));
      w.cnot(st[pS], h(i, j), ap);
      w.cnot(st[pN], h(i, j + 1), ap);
      w.cnot(st[pW], v(i, j), ap);
      w.cnot(st[pE], v(i + 1, j), ap);
      w.measure(5, as, Basis::X, star);
      w.measure(5, ap, Basis::Z, plaq);
    }
  }
  return w.finish();
}

namespace {

// Fills squares and octagons of a C4 schedule from a unit-cell solution.
// `timestep_of_step` maps CNOT step numbers to timesteps; `octagon_ancilla`
// returns the ancilla (and whether it is the second of a pair) per role.
struct C4Expansion {
  const CodeSpec& spec;
  CellLayout cell;
  const std::vector<int>& sol;
  std::function<std::size_t(int)> timestep_of_step;
};

void expand_squares(ScheduleWriter& w, const C4Expansion& ex, std::size_t prep_x, std::size_t meas_x,
                    std::size_t prep_z, std::size_t meas_z) {
  const std::size_t n = ex.spec.n;
  for (std::size_t e = 0; e < ex.cell.E; ++e) {
    const int base = e < ex.cell.E / 2 ? hBL : vBL;
    const std::size_t cx = ex.cell.square_x(e), cz = ex.cell.square_z(e);
    const auto ax = static_cast<std::uint32_t>(n + cx), az = static_cast<std::uint32_t>(n + cz);
    w.assign(cx, ax, false);
    w.assign(cz, az, false);
    w.prep(prep_x, ax, Basis::X);
    w.prep(prep_z, az, Basis::Z);
    for (int corner = 0; corner < 4; ++corner) {
      const std::uint32_t q = ex.cell.qubit(e, corner);
      w.cnot(ex.timestep_of_step(ex.sol[var_of(base + corner, kSqX)]), ax, q);
      w.cnot(ex.timestep_of_step(ex.sol[var_of(base + corner, kSqZ)]), q, az);
    }
    w.measure(meas_x, ax, Basis::X, cx);
    w.measure(meas_z, az, Basis::Z, cz);
  }
}

}  // namespace

Schedule build_c4_schedule_8step(const CodeSpec& spec) {
  require_family(spec, CodeFamily::C4Toric, "build_c4_schedule_8step");
  // Each data qubit meets one octagon in the top row (steps 1-4, alongside
  // the square X checks) and the other in the bottom row (steps 5-8, with
  // the square Z checks). Which octagon goes first is fixed per direction
  // class; directions in `x_first` take their X octagon in the top row.
  // Corner pairs share a direction, so X/Z octagon overlaps stay consistent.
  const std::vector<std::pair<Dir, Dir>> options = {{NE, NW}, {SW, SE}, {NE, SE}, {NW, SW}, {NE, SW}, {NW, SE}};
  std::string failures;
  for (auto [d1, d2] : options) {
    StepCsp csp;
    for (int r = 0; r < kNumRoles; ++r) {
      const bool x_first = kRoleDir[r] == d1 || kRoleDir[r] == d2;
      const std::vector<int> top = {1, 2, 3, 4}, bottom = {5, 6, 7, 8};
      csp.add_var(top);                       // SqX
      csp.add_var(bottom);                    // SqZ
      csp.add_var(x_first ? top : bottom);    // OctX
      csp.add_var(x_first ? bottom : top);    // OctZ
    }
    add_c4_common_constraints(csp);
    std::vector<int> ox, oz;
    for (int r = 0; r < kNumRoles; ++r) {
      ox.push_back(var_of(r, kOctX));
      oz.push_back(var_of(r, kOctZ));
    }
    csp.all_different("OctX ancilla exclusivity", ox);
    csp.all_different("OctZ ancilla exclusivity", oz);
    std::string worst;
    const auto sol = csp.solve(&worst);
    if (!sol) {
      failures += std::string(failures.empty() ? "" : "; ") + kDirName[d1] + "/" + kDirName[d2] + ": " + worst;
      continue;
    }

    // Timesteps: 0 prep, 1-4 top row, 5 measure SqX and prepare SqZ,
    // 6-9 bottom row, 10 measure SqZ and octagons.
    const std::size_t n = spec.n;
    const CellLayout cell{spec.l, spec.num_edges()};
    ScheduleWriter w(ScheduleKind::C4Eight, n, n + spec.checks.size(), 11, spec.checks.size());
    const C4Expansion ex{spec, cell, *sol, [](int step) { return static_cast<std::size_t>(step <= 4 ? step : step + 1); }};
    expand_squares(w, ex, 0, 5, 5, 10);
    for (int j = 0; j < spec.l; ++j) {
      for (int i = 0; i < spec.l; ++i) {
        const std::size_t cx = cell.octagon_x(i, j), cz = cell.octagon_z(i, j);
        const auto ax = static_cast<std::uint32_t>(n + cx), az = static_cast<std::uint32_t>(n + cz);
        w.assign(cx, ax, true);
        w.assign(cz, az, true);
        w.prep(0, ax, Basis::X);
        w.prep(0, az, Basis::Z);
        for (int r = 0; r < kNumRoles; ++r) {
          const int corner = CellLayout::corner_of(r);
          w.cnot(ex.timestep_of_step((*sol)[var_of(r, kOctX)]), ax, cell.qubit(cell.octagon_x_edge(r, i, j), corner));
          w.cnot(ex.timestep_of_step((*sol)[var_of(r, kOctZ)]), cell.qubit(cell.octagon_z_edge(r, i, j), corner), az);
        }
        w.measure(10, ax, Basis::X, cx);
        w.measure(10, az, Basis::Z, cz);
      }
    }
    return w.finish();
  }
  throw ConstructionError("8-step schedule: no solution; violated constraints: " + failures);
}

namespace {

bool in_half(const std::pair<Dir, Dir>& half, int role) {
  return kRoleDir[role] == half.first || kRoleDir[role] == half.second;
}

// Timesteps: 0 prepare octagon pairs, 1 entangle pairs and prepare square
// ancillas, 2-5 data CNOTs, 6 measure everything.
Schedule expand_4step(const CodeSpec& spec, const std::vector<int>& sol, const std::pair<Dir, Dir>& hx,
                      const std::pair<Dir, Dir>& hz) {
  const std::size_t n = spec.n;
  const std::size_t num_oct = static_cast<std::size_t>(2) * spec.l * spec.l;
  const CellLayout cell{spec.l, spec.num_edges()};
  ScheduleWriter w(ScheduleKind::C4Four, n, n + spec.checks.size() + num_oct, 7, spec.checks.size());
  const C4Expansion ex{spec, cell, sol, [](int step) { return static_cast<std::size_t>(step + 1); }};
  expand_squares(w, ex, 1, 6, 1, 6);
  for (int j = 0; j < spec.l; ++j) {
    for (int i = 0; i < spec.l; ++i) {
      for (int type = 0; type < 2; ++type) {
        const std::size_t check = type == 0 ? cell.octagon_x(i, j) : cell.octagon_z(i, j);
        const auto a1 = static_cast<std::uint32_t>(n + check);
        const auto a2 = static_cast<std::uint32_t>(n + spec.checks.size() + (check - 2 * cell.E));
        const Basis basis = type == 0 ? Basis::X : Basis::Z;
        w.assign(check, a1, true);
        w.assign(check, a2, true);
        w.prep(0, a1, Basis::X);
        w.prep(0, a2, Basis::Z);
        w.cnot(1, a1, a2);
        for (int r = 0; r < kNumRoles; ++r) {
          const int corner = CellLayout::corner_of(r);
          const std::uint32_t anc = in_half(type == 0 ? hx : hz, r) ? a1 : a2;
          if (type == 0) {
            w.cnot(ex.timestep_of_step(sol[var_of(r, kOctX)]), anc, cell.qubit(cell.octagon_x_edge(r, i, j), corner));
          } else {
            w.cnot(ex.timestep_of_step(sol[var_of(r, kOctZ)]), cell.qubit(cell.octagon_z_edge(r, i, j), corner), anc);
          }
        }
        w.measure(6, a1, basis, check);
        w.measure(6, a2, basis, check);
      }
    }
  }
  return w.finish();
}

}  // namespace

Schedule build_c4_schedule_4step(const CodeSpec& spec) {
  require_family(spec, CodeFamily::C4Toric, "build_c4_schedule_4step");
  // Each octagon is measured with a Bell pair; each half of the pair takes
  // two opposite corner pairs, i.e. one qubit from each of the four
  // clusters, so a fault on one half spreads to at most one qubit per cluster.
  const std::vector<std::pair<Dir, Dir>> halves = {{NE, SW}, {NW, SE}};
  std::string failures;
  for (const auto& hx : halves) {
    for (const auto& hz : halves) {
      StepCsp csp;
      for (int k = 0; k < static_cast<int>(kNumRoles) * kNumSlots; ++k) csp.add_var({1, 2, 3, 4});
      add_c4_common_constraints(csp);
      for (int half = 0; half < 2; ++half) {
        std::vector<int> ox, oz;
        for (int r = 0; r < kNumRoles; ++r) {
          if (in_half(hx, r) == (half == 0)) ox.push_back(var_of(r, kOctX));
          if (in_half(hz, r) == (half == 0)) oz.push_back(var_of(r, kOctZ));
        }
        csp.all_different("OctX Bell half " + std::to_string(half) + " exclusivity", ox);
        csp.all_different("OctZ Bell half " + std::to_string(half) + " exclusivity", oz);
      }
      std::string worst;
      const auto sol = csp.solve(&worst);
      if (!sol) {
        failures += std::string(failures.empty() ? "" : "; ") + worst;
        continue;
      }
      return expand_4step(spec, *sol, hx, hz);
    }
  }
  throw ConstructionError("4-step schedule: no solution; violated constraints: " + failures);
}

Schedule build_schedule(const CodeSpec& spec, ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Toric4: return build_toric_schedule(spec);
    case ScheduleKind::C4Eight: return build_c4_schedule_8step(spec);
    case ScheduleKind::C4Four: return build_c4_schedule_4step(spec);
  }
  throw InvalidParameter("unknown schedule kind");
}

// ---------------------------------------------------------------------------
// Pauli-frame simulation.

void compute_defects(SyndromeRecord& record) {
  record.defects.clear();
  for (std::size_t r = 0; r < record.rounds.size(); ++r) {
    const auto& cur = record.rounds[r];
    for (std::size_t c = 0; c < cur.size(); ++c) {
      const std::uint8_t prev = r == 0 ? 0 : record.rounds[r - 1][c];
      if (cur[c] != prev) record.defects.emplace_back(static_cast<std::uint32_t>(c), static_cast<std::int32_t>(r));
    }
  }
}

namespace {

std::vector<Op> flatten(const Schedule& s) {
  std::vector<Op> ops;
  ops.reserve(s.num_ops());
  for (const auto& step : s.timesteps) ops.insert(ops.end(), step.begin(), step.end());
  return ops;
}

class FrameSim {
 public:
  FrameSim(const Schedule& s, std::size_t num_checks)
      : s_(s), ops_(flatten(s)), x_(s.num_qubits, 0), z_(s.num_qubits, 0), meas_(s.num_measurements, 0),
        num_checks_(num_checks) {}

  const std::vector<Op>& ops() const { return ops_; }

  void set_data_frame(const PauliOperator& frame) {
    for (std::size_t q = 0; q < s_.num_data; ++q) {
      x_[q] = frame.x(q);
      z_[q] = frame.z(q);
    }
  }

  // Applies op k; returns nothing. Faults are applied separately.
  void apply(const Op& op) {
    switch (op.kind) {
      case OpKind::Prep:
        x_[op.q0] = z_[op.q0] = 0;
        break;
      case OpKind::CNOT:
        x_[op.q1] ^= x_[op.q0];
        z_[op.q0] ^= z_[op.q1];
        break;
      case OpKind::Measure:
        meas_[op.measurement] = op.basis == Basis::Z ? x_[op.q0] : z_[op.q0];
        break;
      case OpKind::Idle:
        break;
    }
  }

  void fault(const Op& op, std::uint8_t code) {
    switch (op.kind) {
      case OpKind::Prep:
        (op.basis == Basis::Z ? x_ : z_)[op.q0] ^= 1;
        break;
      case OpKind::Measure:
        meas_[op.measurement] ^= 1;
        break;
      case OpKind::Idle:
        x_[op.q0] ^= code & 1;
        z_[op.q0] ^= (code >> 1) & 1;
        break;
      case OpKind::CNOT:
        x_[op.q0] ^= code & 1;
        z_[op.q0] ^= (code >> 1) & 1;
        x_[op.q1] ^= (code >> 2) & 1;
        z_[op.q1] ^= (code >> 3) & 1;
        break;
    }
  }

  std::vector<std::uint8_t> syndrome() const {
    std::vector<std::uint8_t> out(num_checks_, 0);
    for (std::size_t c = 0; c < num_checks_; ++c) {
      for (auto m : s_.check_measurements[c]) out[c] ^= meas_[m];
    }
    return out;
  }

  PauliOperator data_frame() const {
    PauliOperator out(s_.num_data);
    for (std::size_t q = 0; q < s_.num_data; ++q) {
      if (x_[q]) out.flip_x(q);
      if (z_[q]) out.flip_z(q);
    }
    return out;
  }

 private:
  const Schedule& s_;
  std::vector<Op> ops_;
  std::vector<std::uint8_t> x_, z_, meas_;
  std::size_t num_checks_;
};

FaultKind fault_kind_of(OpKind kind) {
  switch (kind) {
    case OpKind::Prep: return FaultKind::Prep;
    case OpKind::Measure: return FaultKind::Measure;
    case OpKind::CNOT: return FaultKind::TwoQubitGate;
    case OpKind::Idle: return FaultKind::Idle;
  }
  return FaultKind::Idle;
}

}  // namespace

std::vector<FaultLocation> fault_locations(const Schedule& schedule) {
  std::vector<FaultLocation> out;
  out.reserve(schedule.num_ops());
  for (std::size_t t = 0; t < schedule.timesteps.size(); ++t) {
    for (const Op& op : schedule.timesteps[t]) {
      FaultLocation loc;
      loc.kind = fault_kind_of(op.kind);
      loc.qubits = {op.q0, op.q1};
      loc.timestep = static_cast<int>(t);
      loc.basis = op.basis;
      loc.touches_octagon_ancilla =
          op.kind == OpKind::CNOT && (schedule.octagon_ancilla[op.q0] || schedule.octagon_ancilla[op.q1]);
      out.push_back(loc);
    }
  }
  return out;
}

int fault_choices(const FaultLocation& loc) {
  switch (loc.kind) {
    case FaultKind::Prep:
    case FaultKind::Measure:
      return 1;
    case FaultKind::Idle:
    case FaultKind::OneQubitGate:
      return 3;
    case FaultKind::TwoQubitGate:
      return 15;
  }
  return 0;
}

SyndromeRecord simulate_rounds(const CodeSpec& spec, const Schedule& schedule, const NoiseParams& params, int rounds,
                               Rng& rng) {
  if (rounds < 1) throw InvalidParameter("rounds must be >= 1");
  params.validate();
  FrameSim sim(schedule, spec.checks.size());
  const auto locs = fault_locations(schedule);
  std::vector<double> rate(locs.size());
  for (std::size_t k = 0; k < locs.size(); ++k) rate[k] = fault_rate(locs[k], params);

  SyndromeRecord record;
  record.rounds.reserve(rounds + 1);
  const auto& ops = sim.ops();
  for (int r = 0; r <= rounds; ++r) {
    const bool noisy = r < rounds;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      sim.apply(ops[k]);
      if (noisy && rate[k] > 0.0 && uniform01(rng) < rate[k]) {
        const Op& op = ops[k];
        std::uint8_t code = 1;
        if (op.kind == OpKind::Idle) code = random_pauli1(rng);
        if (op.kind == OpKind::CNOT) code = random_pauli2(rng);
        sim.fault(op, code);
      }
    }
    record.rounds.push_back(sim.syndrome());
  }
  record.final_data_error = sim.data_frame();
  compute_defects(record);
  return record;
}

CircuitSampler::CircuitSampler(const CodeSpec& spec, const Schedule& schedule, const NoiseParams& params)
    : schedule_(&schedule), num_checks_(spec.checks.size()), ops_(flatten(schedule)) {
  params.validate();
  if (schedule.check_measurements.size() != num_checks_) throw DimensionError("schedule does not match the code");
  const auto locs = fault_locations(schedule);
  rates_.resize(locs.size());
  for (std::size_t k = 0; k < locs.size(); ++k) rates_[k] = fault_rate(locs[k], params);
  fx_.resize(schedule.num_qubits);
  fz_.resize(schedule.num_qubits);
  meas_.resize(schedule.num_measurements);
  prev_.resize(num_checks_);
}

void CircuitSampler::sample(int rounds, Rng& rng, std::vector<std::pair<std::uint32_t, std::int32_t>>& defects,
                            std::vector<std::uint8_t>& x, std::vector<std::uint8_t>& z) {
  if (rounds < 1) throw InvalidParameter("rounds must be >= 1");
  std::fill(fx_.begin(), fx_.end(), 0);
  std::fill(fz_.begin(), fz_.end(), 0);
  std::fill(prev_.begin(), prev_.end(), 0);
  defects.clear();
  const std::size_t num_ops = ops_.size();
  for (int r = 0; r <= rounds; ++r) {
    const bool noisy = r < rounds;
    for (std::size_t k = 0; k < num_ops; ++k) {
      const Op& op = ops_[k];
      switch (op.kind) {
        case OpKind::Prep: fx_[op.q0] = fz_[op.q0] = 0; break;
        case OpKind::CNOT:
          fx_[op.q1] ^= fx_[op.q0];
          fz_[op.q0] ^= fz_[op.q1];
          break;
        case OpKind::Measure: meas_[op.measurement] = op.basis == Basis::Z ? fx_[op.q0] : fz_[op.q0]; break;
        case OpKind::Idle: break;
      }
      if (!noisy || rates_[k] <= 0.0 || uniform01(rng) >= rates_[k]) continue;
      switch (op.kind) {
        case OpKind::Prep: (op.basis == Basis::Z ? fx_ : fz_)[op.q0] ^= 1; break;
        case OpKind::Measure: meas_[op.measurement] ^= 1; break;
        case OpKind::Idle: {
          const std::uint8_t code = random_pauli1(rng);
          fx_[op.q0] ^= code & 1;
          fz_[op.q0] ^= code >> 1;
          break;
        }
        case OpKind::CNOT: {
          const std::uint8_t code = random_pauli2(rng);
          fx_[op.q0] ^= code & 1;
          fz_[op.q0] ^= (code >> 1) & 1;
          fx_[op.q1] ^= (code >> 2) & 1;
          fz_[op.q1] ^= (code >> 3) & 1;
          break;
        }
      }
    }
    for (std::size_t c = 0; c < num_checks_; ++c) {
      std::uint8_t bit = 0;
      for (auto m : schedule_->check_measurements[c]) bit ^= meas_[m];
      if (bit != prev_[c]) defects.emplace_back(static_cast<std::uint32_t>(c), r);
      prev_[c] = bit;
    }
  }
  x.assign(fx_.begin(), fx_.begin() + static_cast<std::ptrdiff_t>(schedule_->num_data));
  z.assign(fz_.begin(), fz_.begin() + static_cast<std::ptrdiff_t>(schedule_->num_data));
}

SyndromeRecord simulate_with_faults(const CodeSpec& spec, const Schedule& schedule, int rounds,
                                    std::span<const InjectedFault> faults, const PauliOperator* initial_frame) {
  if (rounds < 0) throw InvalidParameter("rounds must be >= 0");
  FrameSim sim(schedule, spec.checks.size());
  if (initial_frame != nullptr) sim.set_data_frame(*initial_frame);
  std::vector<InjectedFault> sorted(faults.begin(), faults.end());
  std::sort(sorted.begin(), sorted.end(), [](const InjectedFault& a, const InjectedFault& b) {
    return std::pair{a.site.round, a.site.op} < std::pair{b.site.round, b.site.op};
  });
  const auto& ops = sim.ops();
  for (const auto& f : sorted) {
    if (f.site.round < 0 || f.site.round >= rounds || f.site.op >= ops.size()) {
      throw InvalidParameter("injected fault outside the noisy rounds");
    }
  }
  SyndromeRecord record;
  std::size_t next = 0;
  for (int r = 0; r <= rounds; ++r) {
    for (std::size_t k = 0; k < ops.size(); ++k) {
      sim.apply(ops[k]);
      while (next < sorted.size() && sorted[next].site.round == r && sorted[next].site.op == k) {
        if (sorted[next].pauli != 0) sim.fault(ops[k], sorted[next].pauli);
        ++next;
      }
    }
    record.rounds.push_back(sim.syndrome());
  }
  record.final_data_error = sim.data_frame();
  compute_defects(record);
  return record;
}

// ---------------------------------------------------------------------------
// Validation.

namespace {

void check_exclusivity(const Schedule& s, ValidationReport& report) {
  for (std::size_t t = 0; t < s.timesteps.size(); ++t) {
    std::vector<int> count(s.num_qubits, 0);
    for (const Op& op : s.timesteps[t]) {
      if (op.q0 >= s.num_qubits || (op.kind == OpKind::CNOT && op.q1 >= s.num_qubits)) {
        report.failures.push_back("qubit index out of range in timestep " + std::to_string(t));
        return;
      }
      ++count[op.q0];
      if (op.kind == OpKind::CNOT) ++count[op.q1];
    }
    for (std::size_t q = 0; q < s.num_qubits; ++q) {
      if (count[q] > 1) {
        report.failures.push_back("exclusivity: qubit " + std::to_string(q) + " appears in " +
                                  std::to_string(count[q]) + " ops in timestep " + std::to_string(t));
      }
      if (q < s.num_data && count[q] == 0) {
        report.failures.push_back("exclusivity: data qubit " + std::to_string(q) + " missing from timestep " +
                                  std::to_string(t) + " (idles must be explicit)");
      }
    }
  }
}

// Back-propagates each check's measured observable to the start of the round
// and compares it with the check operator.
void check_measured_observables(const CodeSpec& spec, const Schedule& s, ValidationReport& report) {
  std::vector<std::pair<std::size_t, const Op*>> meas_ops(s.num_measurements, {0, nullptr});
  for (std::size_t t = 0; t < s.timesteps.size(); ++t) {
    for (const Op& op : s.timesteps[t]) {
      if (op.kind == OpKind::Measure) meas_ops[op.measurement] = {t, &op};
    }
  }
  for (std::size_t c = 0; c < spec.checks.size(); ++c) {
    PauliOperator obs(s.num_qubits);
    std::vector<char> pending(s.num_measurements, 0);
    for (auto m : s.check_measurements[c]) pending[m] = 1;
    if (s.check_measurements[c].empty()) {
      report.failures.push_back("check " + std::to_string(c) + " is never measured");
      continue;
    }
    bool bad = false;
    for (std::size_t t = s.timesteps.size(); t-- > 0 && !bad;) {
      const auto& ops = s.timesteps[t];
      for (auto it = ops.rbegin(); it != ops.rend() && !bad; ++it) {
        const Op& op = *it;
        switch (op.kind) {
          case OpKind::Measure:
            if (pending[op.measurement]) {
              op.basis == Basis::Z ? obs.flip_z(op.q0) : obs.flip_x(op.q0);
            } else if ((op.basis == Basis::Z ? obs.x(op.q0) : obs.z(op.q0))) {
              report.failures.push_back("stabilizer reproduction: check " + std::to_string(c) +
                                        " observable anticommutes with measurement of qubit " + std::to_string(op.q0));
              bad = true;
            }
            break;
          case OpKind::CNOT:
            obs = conjugate_by_cnot(obs, op.q0, op.q1);
            break;
          case OpKind::Prep:
            if (op.basis == Basis::Z ? obs.x(op.q0) : obs.z(op.q0)) {
              report.failures.push_back("stabilizer reproduction: check " + std::to_string(c) +
                                        " observable is randomized by preparation of qubit " + std::to_string(op.q0) +
                                        " in timestep " + std::to_string(t));
              bad = true;
            }
            obs.set_x(op.q0, false);
            obs.set_z(op.q0, false);
            break;
          case OpKind::Idle:
            break;
        }
      }
    }
    if (bad) continue;
    PauliOperator data(spec.n);
    for (std::size_t q = 0; q < s.num_qubits; ++q) {
      if (q >= spec.n) {
        if (obs.x(q) || obs.z(q)) {
          report.failures.push_back("stabilizer reproduction: check " + std::to_string(c) +
                                    " observable retains support on ancilla " + std::to_string(q));
          bad = true;
          break;
        }
        continue;
      }
      data.set_x(q, obs.x(q));
      data.set_z(q, obs.z(q));
    }
    if (!bad && data != spec.checks[c].op) {
      report.failures.push_back("stabilizer reproduction: check " + std::to_string(c) + " measures " + data.str() +
                                " instead of its operator");
    }
  }
}

void check_random_frames(const CodeSpec& spec, const Schedule& s, const ValidationOptions& options,
                         ValidationReport& report) {
  Rng rng(options.seed);
  for (int trial = 0; trial < options.random_frames; ++trial) {
    const PauliOperator frame = sample_data_errors(spec, 0.5, rng);
    const SyndromeRecord rec = simulate_with_faults(spec, s, 0, {}, &frame);
    if (rec.rounds.front() != spec.syndrome(frame)) {
      report.failures.push_back("stabilizer reproduction: random frame " + std::to_string(trial) +
                                " yields a syndrome different from its commutation pattern");
      return;
    }
    if (rec.final_data_error != frame) {
      report.failures.push_back("stabilizer reproduction: a noiseless round alters data frame " +
                                std::to_string(trial));
      return;
    }
  }
}

bool is_octagon(const CodeSpec& spec, std::size_t c) {
  const CheckKind k = spec.checks[c].kind;
  return k == CheckKind::OctagonX || k == CheckKind::OctagonZ;
}

void check_ordering(const CodeSpec& spec, const Schedule& s, ValidationReport& report) {
  auto fail = [&](const std::string& what) { report.failures.push_back("ordering: " + what); };
  // Timesteps of each qubit's ops.
  std::vector<std::vector<std::pair<std::size_t, const Op*>>> by_qubit(s.num_qubits);
  for (std::size_t t = 0; t < s.timesteps.size(); ++t) {
    for (const Op& op : s.timesteps[t]) {
      by_qubit[op.q0].push_back({t, &op});
      if (op.kind == OpKind::CNOT) by_qubit[op.q1].push_back({t, &op});
    }
  }
  auto meas_step = [&](std::uint32_t q) -> long {
    for (auto [t, op] : by_qubit[q]) {
      if (op->kind == OpKind::Measure) return static_cast<long>(t);
    }
    return -1;
  };
  auto cnot_steps = [&](std::uint32_t q) {
    std::vector<std::size_t> out;
    for (auto [t, op] : by_qubit[q]) {
      if (op->kind == OpKind::CNOT) out.push_back(t);
    }
    return out;
  };
  // Every ancilla is prepared, used, then measured.
  for (std::uint32_t q = static_cast<std::uint32_t>(s.num_data); q < s.num_qubits; ++q) {
    const auto& ops = by_qubit[q];
    if (ops.empty()) continue;
    if (ops.front().second->kind != OpKind::Prep || ops.back().second->kind != OpKind::Measure) {
      fail("ancilla " + std::to_string(q) + " is not prepared first and measured last");
    }
  }

  if (s.kind == ScheduleKind::Toric4) {
    if (s.num_cnot_timesteps() != 4) fail("toric schedule needs 4 CNOT timesteps");
    if (s.timesteps.size() != 6) fail("toric schedule needs 6 timesteps");
    return;
  }
  long sqx_meas = -1, sqz_meas_min = -1;
  std::size_t first_bottom = s.timesteps.size();
  for (std::size_t c = 0; c < spec.checks.size(); ++c) {
    const CheckKind k = spec.checks[c].kind;
    const auto& anc = s.ancilla_map[c];
    if (is_octagon(spec, c)) {
      const std::size_t want = s.kind == ScheduleKind::C4Four ? 2 : 1;
      if (anc.size() != want || s.check_measurements[c].size() != want) {
        fail("octagon check " + std::to_string(c) + " needs " + std::to_string(want) + " ancilla(s)");
      }
      continue;
    }
    if (anc.size() != 1 || s.check_measurements[c].size() != 1) {
      fail("square check " + std::to_string(c) + " needs a single ancilla");
      continue;
    }
    const long m = meas_step(anc[0]);
    if (k == CheckKind::SquareX) {
      if (sqx_meas >= 0 && sqx_meas != m) fail("square X checks are not measured in one timestep");
      sqx_meas = m;
    } else {
      if (sqz_meas_min < 0 || m < sqz_meas_min) sqz_meas_min = m;
      for (auto t : cnot_steps(anc[0])) first_bottom = std::min(first_bottom, t);
    }
  }
  if (s.kind == ScheduleKind::C4Eight) {
    if (s.num_cnot_timesteps() != 8) fail("8-step schedule needs exactly 8 CNOT timesteps");
    if (!(sqx_meas >= 0 && sqx_meas < sqz_meas_min)) fail("square X checks must be measured before square Z checks");
    if (!(sqx_meas >= 0 && static_cast<std::size_t>(sqx_meas) < first_bottom)) {
      fail("top-row ancillas must be measured before the bottom-row CNOTs");
    }
    std::size_t cnot_before = 0;
    for (std::size_t t = 0; t < static_cast<std::size_t>(std::max(sqx_meas, 0L)); ++t) {
      if (std::any_of(s.timesteps[t].begin(), s.timesteps[t].end(), [](const Op& op) { return op.kind == OpKind::CNOT; })) {
        ++cnot_before;
      }
    }
    if (cnot_before != 4) fail("top row must hold exactly 4 CNOT timesteps");
  } else {
    if (s.num_data_cnot_timesteps() != 4) fail("4-step schedule needs exactly 4 data-ancilla CNOT timesteps");
    if (sqx_meas != sqz_meas_min) fail("square X and Z checks must be measured simultaneously");
    for (std::size_t c = 0; c < spec.checks.size(); ++c) {
      if (!is_octagon(spec, c) || s.ancilla_map[c].size() != 2) continue;
      const auto a1 = s.ancilla_map[c][0], a2 = s.ancilla_map[c][1];
      // Bell pair: |+> on a1, |0> on a2, CNOT a1 -> a2 before any data CNOT.
      bool prep_ok = !by_qubit[a1].empty() && !by_qubit[a2].empty() &&
                     by_qubit[a1].front().second->kind == OpKind::Prep &&
                     by_qubit[a1].front().second->basis == Basis::X &&
                     by_qubit[a2].front().second->kind == OpKind::Prep &&
                     by_qubit[a2].front().second->basis == Basis::Z;
      const auto c1 = cnot_steps(a1);
      if (prep_ok && !c1.empty()) {
        const Op* first = nullptr;
        for (auto [t, op] : by_qubit[a1]) {
          if (op->kind == OpKind::CNOT) {
            first = op;
            break;
          }
        }
        prep_ok = first->q0 == a1 && first->q1 == a2 && cnot_steps(a2).front() == c1.front();
      }
      if (!prep_ok) fail("octagon check " + std::to_string(c) + " ancillas are not entangled into a Bell pair first");
      // Two data interactions per pair per data-CNOT timestep.
      std::map<std::size_t, int> per_step;
      for (auto a : {a1, a2}) {
        for (auto [t, op] : by_qubit[a]) {
          if (op->kind == OpKind::CNOT && (op->q0 < s.num_data || op->q1 < s.num_data)) ++per_step[t];
        }
      }
      if (per_step.size() != 4 || std::any_of(per_step.begin(), per_step.end(), [](auto& kv) { return kv.second != 2; })) {
        fail("octagon check " + std::to_string(c) + " pair does not meet two data qubits per timestep");
      }
    }
  }
}

}  // namespace

ValidationReport validate_schedule(const CodeSpec& spec, const Schedule& schedule, const ValidationOptions& options) {
  ValidationReport report;
  if (schedule.num_data != spec.n || schedule.check_measurements.size() != spec.checks.size() ||
      schedule.octagon_ancilla.size() != schedule.num_qubits) {
    report.failures.push_back("schedule does not match the code's dimensions");
    return report;
  }
  check_exclusivity(schedule, report);
  if (!report.ok()) return report;
  check_measured_observables(spec, schedule, report);
  check_random_frames(spec, schedule, options, report);
  check_ordering(spec, schedule, report);
  if (report.ok() && options.fault_sweep) {
    const int rounds = options.sweep_rounds > 0 ? options.sweep_rounds : static_cast<int>(spec.d);
    const SweepReport sweep = single_fault_sweep(spec, schedule, rounds);
    report.faults_swept = sweep.faults;
    report.sweep_logical_failures = sweep.failures;
    report.first_logical_failure = sweep.first_failure;
    if (sweep.wide_clusters > 0) {
      report.failures.push_back("single-fault residual: " + std::to_string(sweep.wide_clusters) +
                                " faults leave a cluster error of weight > 2 modulo gauge");
    }
    if (sweep.unmatchable > 0) {
      report.failures.push_back("single-fault residual: " + std::to_string(sweep.unmatchable) +
                                " faults produce defects the decoder cannot match");
    }
  }
  return report;
}

}  // namespace c4toric
