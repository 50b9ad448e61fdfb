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

#ifndef QNIR_BENCHMARKS_HPP
#define QNIR_BENCHMARKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qnir/readout.hpp"

namespace qnir {

// Smooth input signal shared by all NARMA tasks:
// u_t = 0.1 sin(2 pi a t / T) sin(2 pi b t / T) sin(2 pi c t / T) + 0.1.
struct NarmaInputSpec {
  double a = 2.11;
  double b = 3.73;
  double c = 4.11;
  double period = 100.0;
};

struct NarmaSpec {
  int order = 2;
  // General-form coefficients, used for orders >= 3.
  double alpha = 0.3;
  double beta = 0.05;
  double gamma = 1.5;
  double delta = 0.1;
  NarmaInputSpec input{};
};

std::vector<double> narma_input(int length, const NarmaInputSpec& spec = {});

// Order-2 recurrence y_{t+1} = 0.4 y_t + 0.4 y_t y_{t-1} + 0.6 u_t^3 + 0.1,
// seeded with y_0 = 0.196, y_1 = 0.19468. Output aligned with u indexwise.
std::vector<double> narma2(const std::vector<double>& u);

// General recursion y_{t+1} = alpha y_t + beta y_t sum_{i=0}^{n-1} y_{t-i}
//                           + gamma u_{t-(n-1)} u_t + delta.
// The seed sequence is (n-1) zeros then 0.196; the zeros stay in place at the
// head of the returned series (they fall inside the washout interval and are
// never used as targets).
std::vector<double> narma_general(const std::vector<double>& u, int order, double alpha = 0.3,
                                  double beta = 0.05, double gamma = 1.5, double delta = 0.1);

struct MackeyGlassSpec {
  double tau = 19.0;     // DDE delay (17 < tau gives chaotic regimes; 19/25 here)
  double x0 = 1.2;
  double a = 0.2;
  double b = 0.1;
  double exponent = 10.0; // n in x(t-tau)^n
  int raw_length = 800;   // samples at unit time before downsampling
  int downsample = 2;
  double step = 0.1;      // RK4 integration step
};

// dx/dt = a x(t-tau) / (1 + x(t-tau)^n) - b x(t), integrated by fixed-step
// RK4 over a delay-history buffer with constant history x(t) = x0 for t <= 0.
// Returns samples at unit times t = 0..raw_length-1.
std::vector<double> mackey_glass_raw(const MackeyGlassSpec& spec);

// Downsampled series (raw_length / downsample values; 400 for the defaults).
std::vector<double> mackey_glass(const MackeyGlassSpec& spec);

// Uniform i.i.d. probe sequence in [lo, hi]; the memory-capacity input.
std::vector<double> mc_probe(int length, double lo, double hi, std::uint64_t seed);

// A supervised prediction task: input u, target y, split bookkeeping.
struct TaskBundle {
  std::string name;
  std::vector<double> u;
  std::vector<double> y;
  SplitSpec split{};

  void save_csv(const std::string& path) const;    // columns: t,u,y
  std::string spec_json() const;                   // provenance sidecar
  static TaskBundle load_csv(const std::string& path, const std::string& name,
                             const SplitSpec& split);
};

// Builds one of the paper's benchmarks: narma2 | narma5 | narma10 (length 101,
// splits 20/80/100) or mg19 | mg25 (length 400, splits 20/300/399, input
// x(t - tau) paired with target x(t) before downsampling).
TaskBundle make_task(const std::string& name);

bool is_known_task(const std::string& name);

} // namespace qnir

#endif // QNIR_BENCHMARKS_HPP
