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

#include "c4toric/matching.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>

#include "json.hpp"

#include "c4toric/errors.hpp"

namespace c4toric {

DefectNode make_defect_node(const CodeSpec& spec, std::size_t check_id, int round) {
  if (check_id >= spec.checks.size()) throw DimensionError("check id " + std::to_string(check_id) + " out of range");
  const Check& c = spec.checks[check_id];
  return {check_id, is_square(c.kind) ? NodeKind::Square : NodeKind::Octagon, c.coord, round};
}

namespace {

int torus_gap(int a, int b, int l) {
  const int d = std::abs(a - b) % l;
  return std::min(d, l - d);
}

const Sublattice& common_sublattice(const CodeSpec& spec, const DefectNode& a, const DefectNode& b) {
  if (a.check_id >= spec.checks.size() || b.check_id >= spec.checks.size()) {
    throw DimensionError("defect node check id out of range");
  }
  const CheckType ta = check_type(spec.checks[a.check_id].kind);
  const CheckType tb = check_type(spec.checks[b.check_id].kind);
  if (ta != tb) throw InvalidParameter("defect nodes lie on different sublattices");
  return spec.sublattice(ta);
}

// Closed-form distance between two nodes of one sublattice.
int node_distance(const CodeSpec& spec, const Sublattice& sub, std::uint32_t a, std::uint32_t b) {
  if (a == b) return 0;
  const Check& ca = spec.checks[sub.check_ids[a]];
  const Check& cb = spec.checks[sub.check_ids[b]];
  const int l = spec.l;
  if (spec.family == CodeFamily::Toric) {
    return torus_gap(ca.coord.i, cb.coord.i, l) + torus_gap(ca.coord.j, cb.coord.j, l);
  }
  auto octagon = [&](std::uint32_t u, std::uint32_t v) {
    const Coordinate& p = spec.checks[sub.check_ids[u]].coord;
    const Coordinate& q = spec.checks[sub.check_ids[v]].coord;
    return 2 * (torus_gap(p.i, q.i, l) + torus_gap(p.j, q.j, l));
  };
  const bool sa = is_square(ca.kind);
  const bool sb = is_square(cb.kind);
  if (!sa && !sb) return octagon(a, b);
  if (sa && !sb) {
    int best = std::numeric_limits<int>::max();
    for (auto u : sub.octagon_neighbors[a]) best = std::min(best, octagon(u, b));
    return 1 + best;
  }
  if (!sa && sb) {
    int best = std::numeric_limits<int>::max();
    for (auto v : sub.octagon_neighbors[b]) best = std::min(best, octagon(a, v));
    return 1 + best;
  }
  int best = std::numeric_limits<int>::max();
  for (auto u : sub.octagon_neighbors[a]) {
    for (auto v : sub.octagon_neighbors[b]) best = std::min(best, octagon(u, v));
  }
  return 2 + best;
}

}  // namespace

int spatial_distance(const CodeSpec& spec, const DefectNode& a, const DefectNode& b) {
  const Sublattice& sub = common_sublattice(spec, a, b);
  return node_distance(spec, sub, spec.node_of_check[a.check_id], spec.node_of_check[b.check_id]);
}

int spatial_distance_bfs(const CodeSpec& spec, const DefectNode& a, const DefectNode& b) {
  const Sublattice& sub = common_sublattice(spec, a, b);
  const std::uint32_t src = spec.node_of_check[a.check_id];
  const std::uint32_t dst = spec.node_of_check[b.check_id];
  std::vector<int> dist(sub.num_nodes(), -1);
  std::deque<std::uint32_t> frontier{src};
  dist[src] = 0;
  while (!frontier.empty()) {
    const std::uint32_t u = frontier.front();
    frontier.pop_front();
    if (u == dst) return dist[u];
    for (auto q : sub.incident_qubits[u]) {
      const auto& ends = sub.qubit_endpoints[q];
      const std::uint32_t w = ends[0] == u ? ends[1] : ends[0];
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  throw ContractViolation("defect graph is disconnected");
}

int spacetime_distance(const CodeSpec& spec, const DefectNode& a, const DefectNode& b, int time_weight) {
  return spatial_distance(spec, a, b) + time_weight * std::abs(a.round - b.round);
}

SublatticeMetric::SublatticeMetric(const CodeSpec& spec, CheckType type)
    : type_(type), num_nodes_(spec.sublattice(type).num_nodes()) {
  const Sublattice& sub = spec.sublattice(type);
  dist_.resize(num_nodes_ * num_nodes_);
  for (std::uint32_t a = 0; a < num_nodes_; ++a) {
    for (std::uint32_t b = a; b < num_nodes_; ++b) {
      const int d = node_distance(spec, sub, a, b);
      dist_[a * num_nodes_ + b] = dist_[b * num_nodes_ + a] = d;
      max_distance_ = std::max(max_distance_, d);
    }
  }
  adjacency_.resize(num_nodes_);
  for (std::uint32_t u = 0; u < num_nodes_; ++u) {
    for (auto q : sub.incident_qubits[u]) {
      const auto& ends = sub.qubit_endpoints[q];
      adjacency_[u].emplace_back(q, ends[0] == u ? ends[1] : ends[0]);
    }
  }
}

void SublatticeMetric::append_path(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& qubits) const {
  std::uint32_t cur = a;
  while (cur != b) {
    const int remaining = distance(cur, b);
    bool stepped = false;
    for (const auto& [q, w] : adjacency_[cur]) {
      if (distance(w, b) == remaining - 1) {
        qubits.push_back(q);
        cur = w;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw ContractViolation("metric admits no descending step; closed form disagrees with the graph");
  }
}

MatchingProblem MatchingProblem::from_nodes(const CodeSpec& spec, std::vector<DefectNode> nodes, int time_weight) {
  MatchingProblem problem;
  problem.nodes = std::move(nodes);
  const std::size_t n = problem.nodes.size();
  problem.weights.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::int64_t w = spacetime_distance(spec, problem.nodes[a], problem.nodes[b], time_weight);
      problem.weights[a * n + b] = problem.weights[b * n + a] = w;
    }
  }
  return problem;
}

std::string MatchingProblem::to_json() const {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (const auto& node : nodes) {
    doc["nodes"].push_back({{"check_id", node.check_id},
                            {"kind", node.kind == NodeKind::Square ? "Square" : "Octagon"},
                            {"i", node.coord.i},
                            {"j", node.coord.j},
                            {"round", node.round}});
  }
  const std::size_t n = nodes.size();
  doc["weights"] = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a) {
    doc["weights"].push_back(std::vector<std::int64_t>(weights.begin() + a * n, weights.begin() + (a + 1) * n));
  }
  return doc.dump();
}

namespace {

// Maximum-weight matching on a general graph with integer weights, following
// Galil's O(n^3) primal-dual formulation of Edmonds' blossom algorithm (the
// structure of Joris van Rantwijk's reference implementation). Endpoint p of
// edge k is vertex endpoint[p]; p ^ 1 is the other end of the same edge.
class BlossomMatcher {
 public:
  BlossomMatcher(int nvertex, std::vector<std::array<std::int64_t, 3>> edges, bool max_cardinality)
      : n_(nvertex), edges_(std::move(edges)), max_cardinality_(max_cardinality) {}

  // Returns mate[v] (vertex) or -1.
  std::vector<int> solve();

 private:
  std::int64_t slack(int k) const {
    const auto& e = edges_[k];
    return dual_[e[0]] + dual_[e[1]] - 2 * e[2];
  }
  void leaves(int b, std::vector<int>& out) const;
  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);
  int child_index(int b, int j) const {
    const int len = static_cast<int>(childs_[b].size());
    return ((j % len) + len) % len;
  }

  int n_;
  std::vector<std::array<std::int64_t, 3>> edges_;
  bool max_cardinality_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, parent_, base_, bestedge_;
  std::vector<std::vector<int>> childs_, endps_, bestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

void BlossomMatcher::leaves(int b, std::vector<int>& out) const {
  if (b < n_) {
    out.push_back(b);
    return;
  }
  for (int t : childs_[b]) leaves(t, out);
}

void BlossomMatcher::assign_label(int w, int t, int p) {
  const int b = inblossom_[w];
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    leaves(b, queue_);
  } else if (t == 2) {
    const int base = base_[b];
    assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
  }
}

int BlossomMatcher::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = base_[b];
      break;
    }
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint_[labelend_[b]];
      b = inblossom_[v];
      v = endpoint_[labelend_[b]];
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

void BlossomMatcher::add_blossom(int base, int k) {
  int v = static_cast<int>(edges_[k][0]);
  int w = static_cast<int>(edges_[k][1]);
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unused_.back();
  unused_.pop_back();
  base_[b] = base;
  parent_[b] = -1;
  parent_[bb] = b;
  auto& path = childs_[b];
  auto& endps = endps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    parent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = endpoint_[labelend_[bv]];
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    parent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint_[labelend_[bw]];
    bw = inblossom_[w];
  }
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = 0;
  std::vector<int> lv;
  leaves(b, lv);
  for (int u : lv) {
    if (label_[inblossom_[u]] == 2) queue_.push_back(u);
    inblossom_[u] = b;
  }
  std::vector<int> bestedgeto(2 * n_, -1);
  for (int sub : path) {
    auto consider = [&](int kk) {
      int i = static_cast<int>(edges_[kk][0]);
      int j = static_cast<int>(edges_[kk][1]);
      if (inblossom_[j] == b) std::swap(i, j);
      const int bj = inblossom_[j];
      if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
        bestedgeto[bj] = kk;
      }
    };
    if (!has_bestedges_[sub]) {
      std::vector<int> sl;
      leaves(sub, sl);
      for (int u : sl) {
        for (int p : neighbend_[u]) consider(p / 2);
      }
    } else {
      for (int kk : bestedges_[sub]) consider(kk);
    }
    bestedges_[sub].clear();
    has_bestedges_[sub] = 0;
    bestedge_[sub] = -1;
  }
  bestedges_[b].clear();
  for (int kk : bestedgeto) {
    if (kk != -1) bestedges_[b].push_back(kk);
  }
  has_bestedges_[b] = 1;
  bestedge_[b] = -1;
  for (int kk : bestedges_[b]) {
    if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }
}

void BlossomMatcher::expand_blossom(int b, bool endstage) {
  const std::vector<int> children = childs_[b];
  for (int s : children) {
    parent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      std::vector<int> sl;
      leaves(s, sl);
      for (int u : sl) inblossom_[u] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
    const int len = static_cast<int>(childs_[b].size());
    int j = static_cast<int>(std::find(childs_[b].begin(), childs_[b].end(), entrychild) - childs_[b].begin());
    int jstep, endptrick;
    if (j & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = 0;
      label_[endpoint_[endps_[b][child_index(b, j - endptrick)] ^ endptrick ^ 1]] = 0;
      assign_label(endpoint_[p ^ 1], 2, p);
      allowedge_[endps_[b][child_index(b, j - endptrick)] / 2] = 1;
      j += jstep;
      p = endps_[b][child_index(b, j - endptrick)] ^ endptrick;
      allowedge_[p / 2] = 1;
      j += jstep;
    }
    int bv = childs_[b][child_index(b, j)];
    label_[endpoint_[p ^ 1]] = label_[bv] = 2;
    labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (childs_[b][child_index(b, j)] != entrychild) {
      bv = childs_[b][child_index(b, j)];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      std::vector<int> sl;
      leaves(bv, sl);
      int found = -1;
      for (int u : sl) {
        if (label_[u] != 0) {
          found = u;
          break;
        }
      }
      if (found >= 0) {
        label_[found] = 0;
        label_[endpoint_[mate_[base_[bv]]]] = 0;
        assign_label(found, 2, labelend_[found]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  childs_[b].clear();
  endps_[b].clear();
  base_[b] = -1;
  bestedges_[b].clear();
  has_bestedges_[b] = 0;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void BlossomMatcher::augment_blossom(int b, int v) {
  int t = v;
  while (parent_[t] != b) t = parent_[t];
  if (t >= n_) augment_blossom(t, v);
  const int len = static_cast<int>(childs_[b].size());
  const int i = static_cast<int>(std::find(childs_[b].begin(), childs_[b].end(), t) - childs_[b].begin());
  int j = i;
  int jstep, endptrick;
  if (i & 1) {
    j -= len;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = childs_[b][child_index(b, j)];
    const int p = endps_[b][child_index(b, j - endptrick)] ^ endptrick;
    if (t >= n_) augment_blossom(t, endpoint_[p]);
    j += jstep;
    t = childs_[b][child_index(b, j)];
    if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(childs_[b].begin(), childs_[b].begin() + i, childs_[b].end());
  std::rotate(endps_[b].begin(), endps_[b].begin() + i, endps_[b].end());
  base_[b] = base_[childs_[b][0]];
}

void BlossomMatcher::augment_matching(int k) {
  const int v = static_cast<int>(edges_[k][0]);
  const int w = static_cast<int>(edges_[k][1]);
  for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
    while (true) {
      const int bs = inblossom_[s];
      if (bs >= n_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = endpoint_[labelend_[bs]];
      const int bt = inblossom_[t];
      s = endpoint_[labelend_[bt]];
      const int j = endpoint_[labelend_[bt] ^ 1];
      if (bt >= n_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> BlossomMatcher::solve() {
  const int nedge = static_cast<int>(edges_.size());
  if (nedge == 0) return std::vector<int>(n_, -1);
  std::int64_t maxweight = 0;
  for (const auto& e : edges_) maxweight = std::max(maxweight, e[2]);
  endpoint_.resize(2 * nedge);
  neighbend_.assign(n_, {});
  for (int k = 0; k < nedge; ++k) {
    const int i = static_cast<int>(edges_[k][0]);
    const int j = static_cast<int>(edges_[k][1]);
    endpoint_[2 * k] = i;
    endpoint_[2 * k + 1] = j;
    neighbend_[i].push_back(2 * k + 1);
    neighbend_[j].push_back(2 * k);
  }
  mate_.assign(n_, -1);
  label_.assign(2 * n_, 0);
  labelend_.assign(2 * n_, -1);
  inblossom_.resize(n_);
  std::iota(inblossom_.begin(), inblossom_.end(), 0);
  parent_.assign(2 * n_, -1);
  childs_.assign(2 * n_, {});
  endps_.assign(2 * n_, {});
  base_.assign(2 * n_, -1);
  std::iota(base_.begin(), base_.begin() + n_, 0);
  bestedge_.assign(2 * n_, -1);
  bestedges_.assign(2 * n_, {});
  has_bestedges_.assign(2 * n_, 0);
  unused_.clear();
  for (int b = 2 * n_ - 1; b >= n_; --b) unused_.push_back(b);
  // unused_ is used as a stack; pop order does not matter.
  dual_.assign(2 * n_, 0);
  std::fill(dual_.begin(), dual_.begin() + n_, maxweight);
  allowedge_.assign(nedge, 0);

  for (int stage = 0; stage < n_; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      bestedges_[b].clear();
      has_bestedges_[b] = 0;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allowedge_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allowedge_[k] = 1;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int deltatype = -1;
      std::int64_t delta = 0;
      int deltaedge = -1;
      int deltablossom = -1;
      if (!max_cardinality_) {
        deltatype = 1;
        delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const std::int64_t d = slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const std::int64_t d = slack(bestedge_[b]) / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 && (deltatype == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        deltatype = 1;
        delta = std::max<std::int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n_));
      }
      for (int v = 0; v < n_; ++v) {
        const int lb = label_[inblossom_[v]];
        if (lb == 1) {
          dual_[v] -= delta;
        } else if (lb == 2) {
          dual_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }
      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[deltaedge] = 1;
        int i = static_cast<int>(edges_[deltaedge][0]);
        const int j = static_cast<int>(edges_[deltaedge][1]);
        if (label_[inblossom_[i]] == 0) i = j;
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = 1;
        queue_.push_back(static_cast<int>(edges_[deltaedge][0]));
      } else {
        expand_blossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n_; b < 2 * n_; ++b) {
      if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) expand_blossom(b, true);
    }
  }
  std::vector<int> result(n_, -1);
  for (int v = 0; v < n_; ++v) {
    if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
  }
  return result;
}

}  // namespace

Pairing min_weight_perfect_matching(std::size_t n, std::span<const std::int64_t> weights) {
  if (n % 2 != 0) throw ParityError("perfect matching needs an even node count (got " + std::to_string(n) + ")");
  if (weights.size() != n * n) throw DimensionError("weight matrix must be n x n");
  Pairing pairs;
  if (n == 0) return pairs;
  if (n == 2) {
    pairs.emplace_back(0, 1);
    return pairs;
  }
  std::int64_t wmax = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (weights[a * n + b] < 0) throw InvalidParameter("matching weights must be nonnegative");
      wmax = std::max(wmax, weights[a * n + b]);
    }
  }
  // Maximizing sum(C - w) over maximum-cardinality matchings of the complete
  // graph minimizes sum(w) over perfect matchings. Doubling keeps every dual
  // update integral.
  std::vector<std::array<std::int64_t, 3>> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      edges.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), 2 * (wmax + 1 - weights[a * n + b])});
    }
  }
  BlossomMatcher matcher(static_cast<int>(n), std::move(edges), true);
  const std::vector<int> mate = matcher.solve();
  for (std::size_t v = 0; v < n; ++v) {
    if (mate[v] < 0) throw ContractViolation("blossom matcher returned an imperfect matching");
    if (static_cast<std::size_t>(mate[v]) > v) pairs.emplace_back(static_cast<std::uint32_t>(v), mate[v]);
  }
  return pairs;
}

Pairing mwpm(const MatchingProblem& problem) { return min_weight_perfect_matching(problem.size(), problem.weights); }

Pairing mwpm_bruteforce(const MatchingProblem& problem, std::size_t max_nodes) {
  const std::size_t n = problem.size();
  if (n % 2 != 0) throw ParityError("perfect matching needs an even node count (got " + std::to_string(n) + ")");
  if (n > max_nodes) {
    throw InvalidParameter("brute-force matching refuses " + std::to_string(n) + " nodes (limit " +
                           std::to_string(max_nodes) + ")");
  }
  Pairing best, current;
  std::int64_t best_weight = std::numeric_limits<std::int64_t>::max();
  std::vector<char> used(n, 0);
  auto recurse = [&](auto&& self, std::int64_t acc) -> void {
    if (acc >= best_weight) return;
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      best_weight = acc;
      best = current;
      return;
    }
    used[first] = 1;
    for (std::size_t other = first + 1; other < n; ++other) {
      if (used[other]) continue;
      used[other] = 1;
      current.emplace_back(static_cast<std::uint32_t>(first), static_cast<std::uint32_t>(other));
      self(self, acc + problem.weight(first, other));
      current.pop_back();
      used[other] = 0;
    }
    used[first] = 0;
  };
  recurse(recurse, 0);
  return best;
}

std::int64_t pairing_weight(const MatchingProblem& problem, const Pairing& pairs) {
  std::int64_t total = 0;
  for (const auto& [a, b] : pairs) total += problem.weight(a, b);
  return total;
}

PauliOperator pairing_to_correction(const CodeSpec& spec, const std::vector<DefectNode>& nodes, const Pairing& pairs) {
  PauliOperator correction(spec.n);
  if (pairs.empty()) return correction;
  const CheckType type = check_type(spec.checks.at(nodes.at(pairs.front().first).check_id).kind);
  const SublatticeMetric metric(spec, type);
  std::vector<std::uint32_t> qubits;
  for (const auto& [a, b] : pairs) {
    const DefectNode& na = nodes.at(a);
    const DefectNode& nb = nodes.at(b);
    common_sublattice(spec, na, nodes.at(pairs.front().first));
    common_sublattice(spec, na, nb);
    metric.append_path(spec.node_of_check[na.check_id], spec.node_of_check[nb.check_id], qubits);
  }
  for (auto q : qubits) {
    if (type == CheckType::X) {
      correction.flip_z(q);
    } else {
      correction.flip_x(q);
    }
  }
  return correction;
}

}  // namespace c4toric
