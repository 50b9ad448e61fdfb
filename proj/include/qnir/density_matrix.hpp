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

#ifndef QNIR_DENSITY_MATRIX_HPP
#define QNIR_DENSITY_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qnir/channels.hpp"
#include "qnir/gates.hpp"

namespace qnir {

// Full-register density matrices are capped here; pair-separable reservoirs
// bypass the cap by evolving 2-qubit blocks (see reservoir.hpp).
inline constexpr int kMaxFullRegisterQubits = 12;

// Default tolerance for state invariants (trace one, Hermiticity).
inline constexpr double kStateTol = 1e-10;

// Mixed state of an n-qubit register, stored dense row-major. Qubit i is bit
// i of the basis index (qubit 0 = least significant bit). Gates and channels
// are applied in place over index strides; no 2^n x 2^n operator is ever
// materialized.
class DensityMatrix {
public:
  // |0...0><0...0| on n qubits.
  explicit DensityMatrix(int num_qubits, int max_qubits = kMaxFullRegisterQubits);

  static DensityMatrix plus_state(int num_qubits, int max_qubits = kMaxFullRegisterQubits);
  static DensityMatrix basis_state(int num_qubits, std::size_t index,
                                   int max_qubits = kMaxFullRegisterQubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dim_; }

  cplx operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  cplx& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  std::span<const cplx> data() const { return a_; }

  // rho -> U rho U^dagger with U embedded on the gate's target qubit(s).
  void apply_gate(const Gate& g);

  // RZZ_{i,j}(theta) via the CX_{i,j} RZ_j(theta) CX_{i,j} decomposition.
  // When noise is supplied it must hold exactly 5 channels, interleaved as
  // [after CX on i, after CX on j, after RZ on j, after CX on i, after CX on j].
  void apply_rzz(int i, int j, double theta, std::span<const KrausChannel> noise = {});

  // rho -> sum_j K_j rho K_j^dagger with the channel embedded on qubit q.
  void apply_channel(const KrausChannel& ch, int q);

  // <Z_q> = Tr(Z_q rho). Real part of the trace; the imaginary residue is
  // below kStateTol for any valid state.
  double expect_z(int q) const;

  cplx trace() const;
  double trace_defect() const;      // |Tr(rho) - 1|
  double hermiticity_defect() const; // max_ij |rho_ij - conj(rho_ji)|

private:
  void check_qubit(int q) const;
  // Left pass: rho -> M rho (M 2x2 embedded on q). Right pass uses M^dagger.
  void mul_left(const Mat2& m, int q);
  void mul_right_dagger(const Mat2& m, int q);
  void apply_cx(int control, int target);
  void apply_diag(const cplx& d0, const cplx& d1, int q);
  void apply_reset(double p, int q);

  int num_qubits_;
  std::size_t dim_;
  std::vector<cplx> a_;
};

// |+><+|^{tensor n}: the reservoir's initial state.
DensityMatrix make_plus_state(int num_qubits, int max_qubits = kMaxFullRegisterQubits);

} // namespace qnir

#endif // QNIR_DENSITY_MATRIX_HPP
