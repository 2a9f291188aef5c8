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

#include "c4toric/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <thread>

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>

#include "c4toric/errors.hpp"
#include "json.hpp"

namespace c4toric {

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::DataOnly: return "DataOnly";
    case Scenario::DataSyndrome: return "DataSyndrome";
    case Scenario::CircuitLevel: return "CircuitLevel";
  }
  return "?";
}

Scenario parse_scenario(std::string_view text) {
  if (text == "DataOnly") return Scenario::DataOnly;
  if (text == "DataSyndrome") return Scenario::DataSyndrome;
  if (text == "CircuitLevel") return Scenario::CircuitLevel;
  throw InvalidParameter("unknown scenario '" + std::string(text) + "' (expected DataOnly, DataSyndrome or CircuitLevel)");
}

namespace {

bool is_probability(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void ExperimentConfig::validate() const {
  if (l_values.empty()) throw InvalidParameter("l_values: at least one lattice size is required");
  for (int l : l_values) {
    if (l < 2) throw InvalidParameter("l_values: every l must be >= 2 (got " + std::to_string(l) + ")");
  }
  if (p_values.empty()) throw InvalidParameter("p_values: at least one error rate is required");
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    if (!is_probability(p_values[i])) throw InvalidParameter("p_values: entries must lie in [0, 1]");
    if (i > 0 && !(p_values[i] > p_values[i - 1])) throw InvalidParameter("p_values: must be strictly ascending");
  }
  if (trials < 1) throw InvalidParameter("trials: must be >= 1");
  if (q && !is_probability(*q)) throw InvalidParameter("q: must lie in [0, 1]");
  if (!(octagon_cnot_multiplier >= 0.0) || !std::isfinite(octagon_cnot_multiplier)) {
    throw InvalidParameter("octagon_cnot_multiplier: must be finite and >= 0");
  }
  if (scenario == Scenario::CircuitLevel) {
    if (!is_probability(p_values.back() * octagon_cnot_multiplier)) {
      throw InvalidParameter("octagon_cnot_multiplier: p * multiplier exceeds 1");
    }
    const bool toric_schedule = schedule == ScheduleKind::Toric4;
    if (toric_schedule != (family == CodeFamily::Toric)) {
      throw InvalidParameter("schedule: " + std::string(c4toric::to_string(schedule)) + " does not fit family " +
                             std::string(c4toric::to_string(family)));
    }
  }
  if (time_weight < 0) throw InvalidParameter("time_weight: must be >= 0");
  if (rounds && *rounds < 1) throw InvalidParameter("rounds: must be >= 1");
  if (threads < 1) throw InvalidParameter("threads: must be >= 1");
}

int ExperimentConfig::rounds_for(const CodeSpec& spec) const {
  if (scenario == Scenario::DataOnly) return 1;
  return rounds.value_or(static_cast<int>(spec.d));
}

std::pair<double, double> wilson_ci(std::uint64_t failures, std::uint64_t trials, double confidence) {
  if (trials == 0) throw InvalidParameter("wilson_ci: trials must be > 0");
  if (failures > trials) throw InvalidParameter("wilson_ci: failures exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0)) throw InvalidParameter("wilson_ci: confidence must lie in (0, 1)");
  const double z = boost::math::quantile(boost::math::normal(), 1.0 - (1.0 - confidence) / 2.0);
  const double n = static_cast<double>(trials);
  const double k = static_cast<double>(failures);
  const double z2 = z * z;
  const double center = (k + z2 / 2.0) / (n + z2);
  const double half = z / (n + z2) * std::sqrt(k * (n - k) / n + z2 / 4.0);
  const double low = failures == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = failures == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, int l, std::size_t p_index, std::uint64_t trial) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(l));
  h = splitmix64(h ^ static_cast<std::uint64_t>(p_index));
  return splitmix64(h ^ trial);
}

// ---------------------------------------------------------------------------

TrialRunner::TrialRunner(const ExperimentConfig& config, int l) : config_(config), spec_(build_code(config.family, l)) {
  config_.validate();
  rounds_ = config_.rounds_for(spec_);
  if (config_.scenario == Scenario::CircuitLevel) schedule_ = build_schedule(spec_, config_.schedule);
  decoder_.emplace(spec_, config_.time_weight);
  for (int k = 0; k < 4; ++k) {
    for (std::size_t q = 0; q < spec_.n; ++q) {
      if (spec_.logicals[k].x(q)) logical_x_[k].push_back(static_cast<std::uint32_t>(q));
      if (spec_.logicals[k].z(q)) logical_z_[k].push_back(static_cast<std::uint32_t>(q));
    }
  }
  x_.assign(spec_.n, 0);
  z_.assign(spec_.n, 0);
  syndrome_.assign(spec_.checks.size(), 0);
  prev_.assign(spec_.checks.size(), 0);
}

// Syndrome of the current data frame, through the sublattice incidences.
void TrialRunner::push_defects(int round, bool ideal, double q, Rng& rng) {
  std::fill(syndrome_.begin(), syndrome_.end(), 0);
  for (int side = 0; side < 2; ++side) {
    const Sublattice& sub = spec_.sublattices[side];
    const auto& frame = side == 0 ? z_ : x_;  // X checks see Z errors
    for (std::size_t qb = 0; qb < spec_.n; ++qb) {
      if (!frame[qb]) continue;
      for (auto node : sub.qubit_endpoints[qb]) syndrome_[sub.check_ids[node]] ^= 1;
    }
  }
  for (std::size_t c = 0; c < syndrome_.size(); ++c) {
    std::uint8_t bit = syndrome_[c];
    if (!ideal && q > 0.0 && uniform01(rng) < q) bit ^= 1;
    if (bit != prev_[c]) defects_.emplace_back(static_cast<std::uint32_t>(c), round);
    prev_[c] = bit;
  }
}

void TrialRunner::data_round(double p, double q, int round, Rng& rng) {
  apply_data_errors(p, rng, x_, z_);
  push_defects(round, false, q, rng);
}

LogicalOutcome TrialRunner::run(double p, Rng& rng) {
  defects_.clear();
  const double q = config_.q.value_or(p);
  switch (config_.scenario) {
    case Scenario::DataOnly:
      std::fill(x_.begin(), x_.end(), 0);
      std::fill(z_.begin(), z_.end(), 0);
      std::fill(prev_.begin(), prev_.end(), 0);
      apply_data_errors(p, rng, x_, z_);
      push_defects(0, true, 0.0, rng);
      break;
    case Scenario::DataSyndrome:
      std::fill(x_.begin(), x_.end(), 0);
      std::fill(z_.begin(), z_.end(), 0);
      std::fill(prev_.begin(), prev_.end(), 0);
      for (int r = 0; r < rounds_; ++r) data_round(p, q, r, rng);
      push_defects(rounds_, true, 0.0, rng);
      break;
    case Scenario::CircuitLevel:
      if (!sampler_ || sampler_p_ != p) {
        NoiseParams params{p, config_.q, config_.octagon_cnot_multiplier};
        sampler_.emplace(spec_, *schedule_, params);
        sampler_p_ = p;
      }
      sampler_->sample(rounds_, rng, defects_, x_, z_);
      break;
  }

  // Residual = error x correction.
  decoder_->decode_into(defects_, x_, z_);

  std::fill(syndrome_.begin(), syndrome_.end(), 0);
  for (int side = 0; side < 2; ++side) {
    const Sublattice& sub = spec_.sublattices[side];
    const auto& frame = side == 0 ? z_ : x_;
    for (std::size_t qb = 0; qb < spec_.n; ++qb) {
      if (!frame[qb]) continue;
      for (auto node : sub.qubit_endpoints[qb]) syndrome_[sub.check_ids[node]] ^= 1;
    }
  }
  if (std::any_of(syndrome_.begin(), syndrome_.end(), [](std::uint8_t b) { return b != 0; })) {
    throw ContractViolation("residual has a nontrivial syndrome; the correction does not match the defects");
  }
  auto anticommutes = [&](int k) {
    std::uint8_t parity = 0;
    for (auto qb : logical_x_[k]) parity ^= z_[qb];
    for (auto qb : logical_z_[k]) parity ^= x_[qb];
    return parity != 0;
  };
  LogicalOutcome out;
  for (int k = 0; k < 2; ++k) {
    out.x_flips[k] = anticommutes(k);
    out.z_flips[k] = anticommutes(2 + k);
  }
  out.failed = out.x_flips[0] || out.x_flips[1] || out.z_flips[0] || out.z_flips[1];
  return out;
}

// ---------------------------------------------------------------------------

PointResult run_point(const ExperimentConfig& config, int l, std::size_t p_index) {
  config.validate();
  if (p_index >= config.p_values.size()) throw InvalidParameter("p index out of range");
  const double p = config.p_values[p_index];
  const std::uint64_t trials = config.trials;
  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(config.threads), trials));

  struct Tally {
    std::uint64_t failures = 0;
    std::array<std::uint64_t, 4> flips{};
  };
  std::vector<Tally> tallies(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      TrialRunner runner(config, l);
      const std::uint64_t begin = trials * w / workers, end = trials * (w + 1) / workers;
      for (std::uint64_t t = begin; t < end; ++t) {
        Rng rng(trial_seed(config.master_seed, l, p_index, t));
        const LogicalOutcome out = runner.run(p, rng);
        tallies[w].failures += out.failed;
        tallies[w].flips[0] += out.x_flips[0];
        tallies[w].flips[1] += out.x_flips[1];
        tallies[w].flips[2] += out.z_flips[0];
        tallies[w].flips[3] += out.z_flips[1];
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  PointResult out;
  out.l = l;
  out.d = build_code(config.family, l).d;
  out.p = p;
  out.trials = trials;
  for (const auto& t : tallies) {
    out.failures += t.failures;
    for (int k = 0; k < 4; ++k) out.flips[k] += t.flips[k];
  }
  out.rate = static_cast<double>(out.failures) / static_cast<double>(trials);
  std::tie(out.ci_low, out.ci_high) = wilson_ci(out.failures, trials);
  out.seed = config.master_seed;
  return out;
}

PointResult run_point(const ExperimentConfig& config, int l, double p) {
  const auto it = std::find(config.p_values.begin(), config.p_values.end(), p);
  if (it == config.p_values.end()) throw InvalidParameter("p is not one of the configured p_values");
  return run_point(config, l, static_cast<std::size_t>(it - config.p_values.begin()));
}

// ---------------------------------------------------------------------------
// Threshold from curve crossings.

namespace {

struct CurvePair {
  std::vector<double> p;
  std::vector<std::uint64_t> trials;
  std::vector<std::uint64_t> fail_a, fail_b;  // smaller l, larger l
};

double log_rate(std::uint64_t failures, std::uint64_t trials) {
  // Zero counts are replaced by half a failure so the log stays finite.
  const double k = failures == 0 ? 0.5 : static_cast<double>(failures);
  return std::log(k / static_cast<double>(trials));
}

// Least-squares quadratic through (x, y); coefficients of 1, x, x^2.
Eigen::Vector3d fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  Eigen::MatrixXd a(x.size(), 3);
  Eigen::VectorXd b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = x[i];
    a(i, 2) = x[i] * x[i];
    b(i) = y[i];
  }
  return a.colPivHouseholderQr().solve(b);
}

// Roots of c0 + c1 x + c2 x^2 in [lo, hi].
std::vector<double> roots_in(const Eigen::Vector3d& c, double lo, double hi) {
  std::vector<double> out;
  auto keep = [&](double r) {
    if (std::isfinite(r) && r >= lo && r <= hi) out.push_back(r);
  };
  const double scale = std::max({std::abs(c(0)), std::abs(c(1)), std::abs(c(2)), 1e-300});
  if (std::abs(c(2)) < 1e-12 * scale) {
    if (std::abs(c(1)) > 0) keep(-c(0) / c(1));
    return out;
  }
  const double disc = c(1) * c(1) - 4 * c(2) * c(0);
  if (disc < 0) return out;
  const double s = std::sqrt(disc);
  keep((-c(1) - s) / (2 * c(2)));
  keep((-c(1) + s) / (2 * c(2)));
  return out;
}

std::optional<double> pair_crossing(const CurvePair& c, std::size_t window) {
  const std::size_t m = c.p.size();
  if (m < 3) return std::nullopt;
  std::vector<double> diff(m);
  bool below = false, above = false;
  for (std::size_t i = 0; i < m; ++i) {
    diff[i] = log_rate(c.fail_b[i], c.trials[i]) - log_rate(c.fail_a[i], c.trials[i]);
    below |= diff[i] < 0;
    above |= diff[i] > 0;
  }
  if (!below || !above) return std::nullopt;

  // Work in a centred, scaled coordinate for conditioning.
  const double mid = 0.5 * (c.p.front() + c.p.back());
  const double half = std::max(0.5 * (c.p.back() - c.p.front()), 1e-300);
  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = (c.p[i] - mid) / half;

  // Global fit locates the crossing; a local fit refines it.
  std::size_t center = m;
  const auto global = roots_in(fit_quadratic(x, diff), x.front(), x.back());
  if (!global.empty()) {
    double best = 0;
    for (double r : global) {
      // Prefer the root where larger lattices turn from better to worse.
      const std::size_t idx = static_cast<std::size_t>(
          std::min_element(x.begin(), x.end(), [r](double a, double b) { return std::abs(a - r) < std::abs(b - r); }) -
          x.begin());
      if (center == m || std::abs(r) < std::abs(best)) {
        center = idx;
        best = r;
      }
    }
  } else {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (diff[i] < 0 && diff[i + 1] >= 0) {
        center = i;
        break;
      }
    }
    if (center == m) return std::nullopt;
  }
  const std::size_t w = std::min(std::max<std::size_t>(window, 3), m);
  std::size_t lo = center >= w / 2 ? center - w / 2 : 0;
  lo = std::min(lo, m - w);
  const std::vector<double> xs(x.begin() + static_cast<std::ptrdiff_t>(lo), x.begin() + static_cast<std::ptrdiff_t>(lo + w));
  const std::vector<double> ys(diff.begin() + static_cast<std::ptrdiff_t>(lo),
                               diff.begin() + static_cast<std::ptrdiff_t>(lo + w));
  auto local = roots_in(fit_quadratic(xs, ys), xs.front(), xs.back());
  if (local.empty()) local = global;
  if (local.empty()) {
    // Linear interpolation across the first upward sign change.
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (diff[i] < 0 && diff[i + 1] >= 0) {
        const double t = diff[i] / (diff[i] - diff[i + 1]);
        return c.p[i] + t * (c.p[i + 1] - c.p[i]);
      }
    }
    return std::nullopt;
  }
  const double target = x[center];
  const double r = *std::min_element(local.begin(), local.end(),
                                     [target](double a, double b) { return std::abs(a - target) < std::abs(b - target); });
  return mid + r * half;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

std::optional<double> combine(const std::vector<CurvePair>& pairs, std::size_t window,
                              std::vector<std::optional<double>>* per_pair) {
  std::vector<double> found;
  for (const auto& c : pairs) {
    const auto x = pair_crossing(c, window);
    if (per_pair != nullptr) per_pair->push_back(x);
    if (x) found.push_back(*x);
  }
  if (found.empty()) return std::nullopt;
  return median(found);
}

double quantile_sorted(const std::vector<double>& v, double q) {
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto i = static_cast<std::size_t>(pos);
  const double t = pos - static_cast<double>(i);
  return i + 1 < v.size() ? v[i] * (1 - t) + v[i + 1] * t : v[i];
}

}  // namespace

ThresholdEstimate estimate_threshold(const std::vector<std::vector<PointResult>>& curves,
                                     const ThresholdOptions& options) {
  std::vector<const std::vector<PointResult>*> sorted;
  for (const auto& c : curves) {
    if (c.empty()) throw InvalidParameter("estimate_threshold: empty curve");
    sorted.push_back(&c);
  }
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->front().l < b->front().l; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i]->front().l == sorted[i + 1]->front().l) throw InvalidParameter("estimate_threshold: duplicate l");
  }
  if (sorted.size() < 2) throw InvalidParameter("estimate_threshold: needs at least two lattice sizes");

  std::vector<CurvePair> pairs;
  ThresholdEstimate est;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const auto& a = *sorted[i];
    const auto& b = *sorted[i + 1];
    CurvePair c;
    for (const auto& pa : a) {
      for (const auto& pb : b) {
        if (pa.p == pb.p && pa.trials > 0 && pb.trials > 0) {
          if (pa.trials != pb.trials) throw InvalidParameter("estimate_threshold: unequal trial counts at one p");
          c.p.push_back(pa.p);
          c.trials.push_back(pa.trials);
          c.fail_a.push_back(pa.failures);
          c.fail_b.push_back(pb.failures);
        }
      }
    }
    if (c.p.size() < 3) throw InvalidParameter("estimate_threshold: curves share fewer than three p values");
    est.pairs.emplace_back(a.front().l, b.front().l);
    pairs.push_back(std::move(c));
  }

  const auto p_c = combine(pairs, options.window, &est.pair_crossings);
  if (!p_c) {
    est.notes = "NoCrossing: no adjacent pair of curves crosses inside the swept range";
    return est;
  }
  est.crossed = true;
  est.p_c = *p_c;

  // Parametric bootstrap: redraw every point's failures from its own rate.
  Rng rng(options.seed);
  std::vector<double> samples;
  for (std::size_t b = 0; b < options.bootstrap_samples; ++b) {
    std::vector<CurvePair> resampled = pairs;
    for (std::size_t k = 0; k < resampled.size(); ++k) {
      for (std::size_t i = 0; i < resampled[k].p.size(); ++i) {
        const auto n = pairs[k].trials[i];
        auto draw = [&](std::uint64_t f) {
          std::binomial_distribution<std::uint64_t> dist(n, static_cast<double>(f) / static_cast<double>(n));
          return dist(rng);
        };
        resampled[k].fail_a[i] = draw(pairs[k].fail_a[i]);
        resampled[k].fail_b[i] = draw(pairs[k].fail_b[i]);
      }
    }
    if (const auto x = combine(resampled, options.window, nullptr)) samples.push_back(*x);
  }
  est.bootstrap_samples = samples.size();
  if (!samples.empty()) {
    std::sort(samples.begin(), samples.end());
    est.ci_low = std::min(quantile_sorted(samples, 0.025), est.p_c);
    est.ci_high = std::max(quantile_sorted(samples, 0.975), est.p_c);
  } else {
    est.ci_low = est.ci_high = est.p_c;
  }
  const std::size_t crossed =
      static_cast<std::size_t>(std::count_if(est.pair_crossings.begin(), est.pair_crossings.end(), [](auto& x) { return x.has_value(); }));
  est.notes = "median of " + std::to_string(crossed) + "/" + std::to_string(pairs.size()) +
              " pairwise crossings; local quadratic fits of log-rate differences; " +
              std::to_string(samples.size()) + "/" + std::to_string(options.bootstrap_samples) +
              " bootstrap resamples crossed";
  return est;
}

SweepResult run_sweep(const ExperimentConfig& config, const ProgressFn& progress) {
  config.validate();
  std::vector<int> ls = config.l_values;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  SweepResult out;
  std::vector<std::vector<PointResult>> curves;
  for (int l : ls) {
    curves.emplace_back();
    for (std::size_t i = 0; i < config.p_values.size(); ++i) {
      PointResult point = run_point(config, l, i);
      if (progress) progress(point);
      curves.back().push_back(point);
      out.points.push_back(point);
    }
  }
  if (ls.size() >= 2 && config.p_values.size() >= 3) {
    out.threshold = estimate_threshold(curves);
  } else {
    out.threshold.notes = "NoCrossing: a threshold needs at least two lattice sizes and three p values";
  }
  return out;
}

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string results_csv(const ExperimentConfig& config, const std::vector<PointResult>& points) {
  std::vector<PointResult> sorted = points;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PointResult& a, const PointResult& b) { return std::pair{a.l, a.p} < std::pair{b.l, b.p}; });
  const std::string schedule =
      config.scenario == Scenario::CircuitLevel ? std::string(to_string(config.schedule)) : std::string("none");
  std::string out = "family,scenario,schedule,l,d,p,trials,failures,rate,ci_low,ci_high,seed\n";
  for (const auto& pt : sorted) {
    out += std::string(to_string(config.family)) + "," + std::string(to_string(config.scenario)) + "," + schedule +
           "," + std::to_string(pt.l) + "," + std::to_string(pt.d) + "," + fixed(pt.p, 6) + "," +
           std::to_string(pt.trials) + "," + std::to_string(pt.failures) + "," + fixed(pt.rate, 8) + "," +
           fixed(pt.ci_low, 8) + "," + fixed(pt.ci_high, 8) + "," + std::to_string(pt.seed) + "\n";
  }
  return out;
}

std::string flips_csv(const std::vector<PointResult>& points) {
  std::vector<PointResult> sorted = points;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PointResult& a, const PointResult& b) { return std::pair{a.l, a.p} < std::pair{b.l, b.p}; });
  std::string out = "l,p,x1_flips,x2_flips,z1_flips,z2_flips\n";
  for (const auto& pt : sorted) {
    out += std::to_string(pt.l) + "," + fixed(pt.p, 6);
    for (auto f : pt.flips) out += "," + std::to_string(f);
    out += "\n";
  }
  return out;
}

std::string threshold_json(const ThresholdEstimate& est) {
  nlohmann::ordered_json doc;
  doc["crossed"] = est.crossed;
  doc["p_c"] = est.crossed ? nlohmann::ordered_json(est.p_c) : nlohmann::ordered_json(nullptr);
  doc["ci"] = est.crossed ? nlohmann::ordered_json::array({est.ci_low, est.ci_high}) : nlohmann::ordered_json(nullptr);
  auto& pairs = doc["pairs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < est.pairs.size(); ++i) {
    nlohmann::ordered_json pair;
    pair["l_small"] = est.pairs[i].first;
    pair["l_large"] = est.pairs[i].second;
    pair["crossing"] = i < est.pair_crossings.size() && est.pair_crossings[i]
                           ? nlohmann::ordered_json(*est.pair_crossings[i])
                           : nlohmann::ordered_json(nullptr);
    pairs.push_back(pair);
  }
  doc["bootstrap_samples"] = est.bootstrap_samples;
  doc["method"] = "local quadratic fit of log-rate differences per adjacent pair; median; parametric bootstrap";
  doc["notes"] = est.notes;
  return doc.dump(2) + "\n";
}

}  // namespace c4toric
