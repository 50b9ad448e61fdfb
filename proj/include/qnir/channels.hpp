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

#ifndef QNIR_CHANNELS_HPP
#define QNIR_CHANNELS_HPP

#include <vector>

#include "qnir/gates.hpp"

namespace qnir {

// Completeness tolerance for constructed operator sets.
inline constexpr double kCptpTol = 1e-12;

// Single-qubit CPTP map given by Kraus operators {K_j}: rho -> sum_j K_j rho K_j^dagger.
// Construction validates sum_j K_j^dagger K_j = I to within kCptpTol.
class KrausChannel {
public:
  explicit KrausChannel(std::vector<Mat2> operators, double parameter = 0.0);

  const std::vector<Mat2>& operators() const { return ops_; }
  double parameter() const { return param_; }

  // True for channels built by reset_channel; enables a closed-form fast path
  // in DensityMatrix::apply_channel. Both paths agree to ~1e-15.
  bool is_reset() const { return is_reset_; }

  // max_ij |(sum_j K_j^dagger K_j - I)_ij|
  double completeness_defect() const;

private:
  friend KrausChannel reset_channel(double p);

  std::vector<Mat2> ops_;
  double param_;
  bool is_reset_ = false;
};

// Probabilistic reset to |0>: E_PR(rho) = p |0><0| + (1-p) rho on one qubit.
// Kraus set { sqrt(1-p) I, sqrt(p) |0><0|, sqrt(p) |0><1| }.
KrausChannel reset_channel(double p);

} // namespace qnir

#endif // QNIR_CHANNELS_HPP
