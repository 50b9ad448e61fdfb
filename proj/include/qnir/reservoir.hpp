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

#ifndef QNIR_RESERVOIR_HPP
#define QNIR_RESERVOIR_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qnir/density_matrix.hpp"

namespace qnir {

enum class Scheme { PairSeparable, LinearEntanglement };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

// Angle encoding theta = a*u + b (radians per data unit). Both benchmarks use
// the identity map; the memory-capacity probe keeps it as well.
struct ScalingMap {
  double a = 1.0;
  double b = 0.0;
  double operator()(double u) const { return a * u + b; }
};

struct ReservoirConfig {
  int qubits = 2;
  Scheme scheme = Scheme::PairSeparable;
  ScalingMap scaling{};
  int washout = 20;

  // Entangler placement: PS {(0,1),(2,3),...}, LE {(0,1),(1,2),...} with each
  // LE entangler in its own layer.
  std::vector<std::pair<int, int>> pairs() const;

  // Number of reset-noise probabilities: 7n/2 for PS (n even), 6n-5 for LE.
  int param_count() const;

  void validate() const;
};

// Per-channel reset probabilities, ordered by gate occurrence in the step
// circuit: the RX layer's channels in ascending qubit order, then for each
// entangler [CX@i, CX@j, RZ@j, CX@i, CX@j] pair-by-pair (PS) or
// layer-by-layer (LE).
class NoiseParams {
public:
  NoiseParams() = default;
  explicit NoiseParams(std::vector<double> p);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& values() const { return p_; }

private:
  std::vector<double> p_;
};

// One entry of a step's instruction list.
struct ChannelOp {
  KrausChannel channel;
  int qubit;
};
using StepInstruction = std::variant<Gate, ChannelOp>;

// Ordered gate/channel sequence implementing the noisy reservoir map T_u for
// one input value. Channel probabilities are consumed from p in order.
std::vector<StepInstruction> build_step(double u, const ReservoirConfig& cfg,
                                        const NoiseParams& p);

// Signals <Z_i> per time step. Row i holds qubit i's sequence; column t is
// the step-t snapshot h_t. The first `washout` columns are retained but
// flagged so the readout can exclude them.
struct FeatureMatrix {
  Eigen::MatrixXd signals; // qubits x steps, every entry in [-1, 1]
  int washout = 0;

  Eigen::Index rows() const { return signals.rows(); }
  Eigen::Index cols() const { return signals.cols(); }

  // Design matrix for the linear readout: signals plus an appended bias row
  // of ones when requested.
  Eigen::MatrixXd design_matrix(bool bias) const;

  // RFC-4180 CSV, one row per signal (plus "bias"), header = time indices.
  void save_csv(const std::string& path, bool bias = true) const;
};

// Applies one noisy step to rho in place and returns h_t = [<Z_1>,...,<Z_n>]
// measured from the post-step state (virtual measurement, no collapse).
std::vector<double> evolve_step(DensityMatrix& rho, double u, const ReservoirConfig& cfg,
                                const NoiseParams& p);

// Folds evolve_step over the input sequence starting from |+>^n on the full
// register. Works for both schemes up to the full-register qubit cap.
FeatureMatrix run_reservoir(const std::vector<double>& u, const ReservoirConfig& cfg,
                            const NoiseParams& p);

// Pair-separable fast path: n/2 independent 2-qubit blocks, evaluated
// concurrently. Matches run_reservoir elementwise for PS configurations and
// lifts the register cap (used by the 32-qubit Mackey-Glass reservoirs).
FeatureMatrix run_reservoir_ps_blocks(const std::vector<double>& u, const ReservoirConfig& cfg,
                                      const NoiseParams& p);

// Dispatches to the PS block path when possible, else the full register.
FeatureMatrix run_reservoir_auto(const std::vector<double>& u, const ReservoirConfig& cfg,
                                 const NoiseParams& p);

} // namespace qnir

#endif // QNIR_RESERVOIR_HPP
