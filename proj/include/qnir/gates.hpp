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

#ifndef QNIR_GATES_HPP
#define QNIR_GATES_HPP

#include <array>
#include <complex>

#include "qnir/errors.hpp"

namespace qnir {

using cplx = std::complex<double>;

// 2x2 matrix in row-major order {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

enum class GateKind { RX, RZ, CX, H, X };

// One- or two-qubit gate. For CX, q0 is the control and q1 the target;
// one-qubit gates use q0 only. theta is in radians.
struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;
  double theta = 0.0;

  static Gate rx(int q, double theta) { return {GateKind::RX, q, -1, theta}; }
  static Gate rz(int q, double theta) { return {GateKind::RZ, q, -1, theta}; }
  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate x(int q) { return {GateKind::X, q, -1, 0.0}; }
  static Gate cx(int control, int target) { return {GateKind::CX, control, target, 0.0}; }

  bool is_two_qubit() const { return kind == GateKind::CX; }

  // 2x2 unitary of a one-qubit gate; contract violation for CX.
  Mat2 matrix() const;
};

Mat2 rx_matrix(double theta);
Mat2 rz_matrix(double theta);
Mat2 h_matrix();
Mat2 x_matrix();

// max_ij |(M M^dagger - I)_ij| -- unitarity defect used by invariant checks.
double unitarity_defect(const Mat2& m);

} // namespace qnir

#endif // QNIR_GATES_HPP
