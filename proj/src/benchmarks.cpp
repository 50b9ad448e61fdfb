// Copyright 2026 The qnir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnir/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qnir/errors.hpp"
#include "qnir/io.hpp"
#include "qnir/rng.hpp"

namespace qnir {

std::vector<double> narma_input(int length, const NarmaInputSpec& spec) {
  QNIR_REQUIRE(length >= 1, "narma_input: length must be positive");
  std::vector<double> u(static_cast<std::size_t>(length));
  const double w = 2.0 * std::numbers::pi / spec.period;
  for (int t = 0; t < length; ++t) {
    const double x = static_cast<double>(t);
    u[static_cast<std::size_t>(t)] =
        0.1 * std::sin(w * spec.a * x) * std::sin(w * spec.b * x) * std::sin(w * spec.c * x) + 0.1;
  }
  return u;
}

std::vector<double> narma2(const std::vector<double>& u) {
  QNIR_REQUIRE(u.size() >= 3, "narma2: input too short");
  std::vector<double> y(u.size());
  y[0] = 0.196;
  y[1] = 0.19468;
  for (std::size_t t = 1; t + 1 < u.size(); ++t)
    y[t + 1] = 0.4 * y[t] + 0.4 * y[t] * y[t - 1] + 0.6 * std::pow(u[t], 3) + 0.1;
  return y;
}

std::vector<double> narma_general(const std::vector<double>& u, int order, double alpha,
                                  double beta, double gamma, double delta) {
  QNIR_REQUIRE(order >= 2, "narma_general: order must be >= 2");
  QNIR_REQUIRE(u.size() > static_cast<std::size_t>(order), "narma_general: input shorter than order");
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<double> y(u.size(), 0.0);
  y[n - 1] = 0.196;
  for (std::size_t t = n - 1; t + 1 < u.size(); ++t) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += y[t - i];
    y[t + 1] = alpha * y[t] + beta * y[t] * s + gamma * u[t - (n - 1)] * u[t] + delta;
  }
  return y;
}

namespace {

// Delay-buffer lookup with constant history before t = 0. Grid index may be
// half-integral (RK4 midpoint stages); those use 4-point Lagrange cubic
// interpolation on the surrounding samples.
class DelayBuffer {
public:
  DelayBuffer(double x0, int lag_steps) : x0_(x0), lag_(lag_steps) {}

  void push(double v) { xs_.push_back(v); }
  double back() const { return xs_.back(); }
  std::size_t size() const { return xs_.size(); }

  double at_grid(long k) const {
    if (k <= 0) return x0_;
    return xs_[static_cast<std::size_t>(k)];
  }

  // x at grid position k + frac, frac in [0, 1).
  double at(long k, double frac) const {
    if (frac == 0.0) return at_grid(k);
    const double tm1 = at_grid(k - 1), t0 = at_grid(k), t1 = at_grid(k + 1), t2 = at_grid(k + 2);
    const double s = frac;
    return -s * (s - 1.0) * (s - 2.0) / 6.0 * tm1 + (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0 * t0 -
           (s + 1.0) * s * (s - 2.0) / 2.0 * t1 + (s + 1.0) * s * (s - 1.0) / 6.0 * t2;
  }

  int lag() const { return lag_; }

private:
  double x0_;
  int lag_;
  std::vector<double> xs_;
};

} // namespace

std::vector<double> mackey_glass_raw(const MackeyGlassSpec& spec) {
  QNIR_REQUIRE(spec.tau > 0.0 && spec.step > 0.0, "mackey_glass: tau and step must be positive");
  QNIR_REQUIRE(spec.raw_length >= 2, "mackey_glass: raw_length too small");
  const double ratio = spec.tau / spec.step;
  QNIR_REQUIRE(std::abs(ratio - std::round(ratio)) < 1e-9,
               "mackey_glass: tau must be an integer multiple of the integration step");
  const int lag = static_cast<int>(std::round(ratio));
  const double per_unit = 1.0 / spec.step;
  QNIR_REQUIRE(std::abs(per_unit - std::round(per_unit)) < 1e-9,
               "mackey_glass: step must divide the unit sampling interval");
  const int substeps = static_cast<int>(std::round(per_unit));
  const double h = spec.step;
  const long total = static_cast<long>(spec.raw_length - 1) * substeps;

  DelayBuffer buf(spec.x0, lag);
  buf.push(spec.x0);
  const auto deriv = [&](double x, double xd) {
    return spec.a * xd / (1.0 + std::pow(xd, spec.exponent)) - spec.b * x;
  };
  for (long k = 0; k < total; ++k) {
    const double x = buf.back();
    const long d = k - lag;
    const double k1 = deriv(x, buf.at(d, 0.0));
    const double xd_half = buf.at(d, 0.5);
    const double k2 = deriv(x + 0.5 * h * k1, xd_half);
    const double k3 = deriv(x + 0.5 * h * k2, xd_half);
    const double k4 = deriv(x + h * k3, buf.at(d + 1, 0.0));
    const double xn = x + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    if (!std::isfinite(xn) || std::abs(xn) > 1e6)
      throw numeric_error("mackey_glass: series diverged");
    buf.push(xn);
  }
  std::vector<double> out(static_cast<std::size_t>(spec.raw_length));
  for (int t = 0; t < spec.raw_length; ++t)
    out[static_cast<std::size_t>(t)] = buf.at_grid(static_cast<long>(t) * substeps);
  return out;
}

std::vector<double> mackey_glass(const MackeyGlassSpec& spec) {
  QNIR_REQUIRE(spec.downsample >= 1, "mackey_glass: bad downsample factor");
  const std::vector<double> raw = mackey_glass_raw(spec);
  std::vector<double> out;
  out.reserve(raw.size() / static_cast<std::size_t>(spec.downsample));
  for (std::size_t t = 0; t < raw.size(); t += static_cast<std::size_t>(spec.downsample))
    out.push_back(raw[t]);
  return out;
}

std::vector<double> mc_probe(int length, double lo, double hi, std::uint64_t seed) {
  QNIR_REQUIRE(length >= 1, "mc_probe: length must be positive");
  QNIR_REQUIRE(lo <= hi, "mc_probe: empty range");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> u(static_cast<std::size_t>(length));
  for (double& v : u) v = dist(rng);
  return u;
}

namespace {

TaskBundle make_mg_task(const std::string& name, double tau) {
  MackeyGlassSpec spec;
  spec.tau = tau;
  const std::vector<double> raw = mackey_glass_raw(spec);
  const int lag = static_cast<int>(tau);
  TaskBundle task;
  task.name = name;
  const int n = spec.raw_length / spec.downsample;
  task.u.resize(static_cast<std::size_t>(n));
  task.y.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int t = k * spec.downsample;
    // input x(t - tau): constant history covers t < tau
    task.u[static_cast<std::size_t>(k)] = t >= lag ? raw[static_cast<std::size_t>(t - lag)] : spec.x0;
    task.y[static_cast<std::size_t>(k)] = raw[static_cast<std::size_t>(t)];
  }
  task.split = SplitSpec{20, 300, n - 1};
  return task;
}

} // namespace

TaskBundle make_task(const std::string& name) {
  if (name == "narma2" || name == "narma5" || name == "narma10") {
    const int length = 101;
    TaskBundle task;
    task.name = name;
    task.u = narma_input(length);
    if (name == "narma2") task.y = narma2(task.u);
    else task.y = narma_general(task.u, name == "narma5" ? 5 : 10);
    task.split = SplitSpec{20, 80, 100};
    return task;
  }
  if (name == "mg19") return make_mg_task(name, 19.0);
  if (name == "mg25") return make_mg_task(name, 25.0);
  throw contract_error("unknown benchmark task: " + name);
}

bool is_known_task(const std::string& name) {
  return name == "narma2" || name == "narma5" || name == "narma10" || name == "mg19" ||
         name == "mg25";
}

void TaskBundle::save_csv(const std::string& path) const {
  std::ostringstream out;
  out << "t,u,y\n";
  for (std::size_t t = 0; t < u.size(); ++t)
    out << t << ',' << format_double(u[t]) << ',' << format_double(y[t]) << '\n';
  write_text_file(path, out.str());
}

std::string TaskBundle::spec_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["length"] = u.size();
  j["split"] = {{"washout_end", split.t_i}, {"train_end", split.t_tr}, {"test_end", split.t_f}};
  return j.dump(2) + "\n";
}

TaskBundle TaskBundle::load_csv(const std::string& path, const std::string& name,
                                const SplitSpec& split) {
  TaskBundle task;
  task.name = name;
  task.split = split;
  const auto rows = read_csv(path);
  QNIR_REQUIRE(!rows.empty() && rows[0].size() >= 3, "TaskBundle: malformed CSV");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    QNIR_REQUIRE(rows[i].size() >= 3, "TaskBundle: malformed CSV row");
    task.u.push_back(parse_double(rows[i][1]));
    task.y.push_back(parse_double(rows[i][2]));
  }
  return task;
}

} // namespace qnir
