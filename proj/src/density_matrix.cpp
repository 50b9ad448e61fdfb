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

#include "qnir/density_matrix.hpp"

#include <cmath>
#include <string>

namespace qnir {

DensityMatrix::DensityMatrix(int num_qubits, int max_qubits)
    : num_qubits_(num_qubits) {
  QNIR_REQUIRE(num_qubits >= 1, "DensityMatrix: need at least one qubit");
  if (num_qubits > max_qubits)
    throw resource_error("DensityMatrix: " + std::to_string(num_qubits) +
                         " qubits exceeds the full-register cap of " +
                         std::to_string(max_qubits));
  dim_ = std::size_t{1} << num_qubits;
  a_.assign(dim_ * dim_, cplx(0.0));
  a_[0] = 1.0;
}

DensityMatrix DensityMatrix::plus_state(int num_qubits, int max_qubits) {
  DensityMatrix rho(num_qubits, max_qubits);
  const double v = 1.0 / static_cast<double>(rho.dim_);
  std::fill(rho.a_.begin(), rho.a_.end(), cplx(v));
  return rho;
}

DensityMatrix DensityMatrix::basis_state(int num_qubits, std::size_t index, int max_qubits) {
  DensityMatrix rho(num_qubits, max_qubits);
  QNIR_REQUIRE(index < rho.dim_, "basis_state: index out of range");
  rho.a_[0] = 0.0;
  rho.a_[index * rho.dim_ + index] = 1.0;
  return rho;
}

DensityMatrix make_plus_state(int num_qubits, int max_qubits) {
  return DensityMatrix::plus_state(num_qubits, max_qubits);
}

void DensityMatrix::check_qubit(int q) const {
  QNIR_REQUIRE(q >= 0 && q < num_qubits_, "qubit index out of range");
}

void DensityMatrix::mul_left(const Mat2& m, int q) {
  const std::size_t stride = std::size_t{1} << q;
  const cplx m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
  cplx* a = a_.data();
  for (std::size_t base = 0; base < dim_; base += 2 * stride) {
    for (std::size_t r0 = base; r0 < base + stride; ++r0) {
      cplx* row0 = a + r0 * dim_;
      cplx* row1 = row0 + stride * dim_;
      for (std::size_t c = 0; c < dim_; ++c) {
        const cplx x = row0[c], y = row1[c];
        row0[c] = m00 * x + m01 * y;
        row1[c] = m10 * x + m11 * y;
      }
    }
  }
}

void DensityMatrix::mul_right_dagger(const Mat2& m, int q) {
  const std::size_t stride = std::size_t{1} << q;
  const cplx c00 = std::conj(m[0]), c01 = std::conj(m[1]);
  const cplx c10 = std::conj(m[2]), c11 = std::conj(m[3]);
  cplx* a = a_.data();
  for (std::size_t r = 0; r < dim_; ++r) {
    cplx* row = a + r * dim_;
    for (std::size_t base = 0; base < dim_; base += 2 * stride) {
      for (std::size_t c0 = base; c0 < base + stride; ++c0) {
        const cplx x = row[c0], y = row[c0 + stride];
        row[c0] = x * c00 + y * c01;
        row[c0 + stride] = x * c10 + y * c11;
      }
    }
  }
}

void DensityMatrix::apply_cx(int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  cplx* a = a_.data();
  // Row permutation: swap rows r <-> r^tbit where the control bit is set.
  for (std::size_t r = 0; r < dim_; ++r) {
    if ((r & cbit) && !(r & tbit)) {
      cplx* row0 = a + r * dim_;
      cplx* row1 = a + (r | tbit) * dim_;
      for (std::size_t c = 0; c < dim_; ++c) std::swap(row0[c], row1[c]);
    }
  }
  // Column permutation (right-multiplying by the same involution).
  for (std::size_t r = 0; r < dim_; ++r) {
    cplx* row = a + r * dim_;
    for (std::size_t c = 0; c < dim_; ++c)
      if ((c & cbit) && !(c & tbit)) std::swap(row[c], row[c | tbit]);
  }
}

void DensityMatrix::apply_diag(const cplx& d0, const cplx& d1, int q) {
  const std::size_t bit = std::size_t{1} << q;
  const cplx e0 = std::conj(d0), e1 = std::conj(d1);
  cplx* a = a_.data();
  for (std::size_t r = 0; r < dim_; ++r) {
    const cplx dr = (r & bit) ? d1 : d0;
    cplx* row = a + r * dim_;
    for (std::size_t c = 0; c < dim_; ++c) row[c] *= dr * ((c & bit) ? e1 : e0);
  }
}

void DensityMatrix::apply_gate(const Gate& g) {
  check_qubit(g.q0);
  switch (g.kind) {
  case GateKind::CX: {
    check_qubit(g.q1);
    QNIR_REQUIRE(g.q0 != g.q1, "CX: control equals target");
    apply_cx(g.q0, g.q1);
    return;
  }
  case GateKind::RZ: {
    const Mat2 m = rz_matrix(g.theta);
    apply_diag(m[0], m[3], g.q0);
    return;
  }
  default: {
    const Mat2 m = g.matrix();
    mul_left(m, g.q0);
    mul_right_dagger(m, g.q0);
    return;
  }
  }
}

void DensityMatrix::apply_rzz(int i, int j, double theta, std::span<const KrausChannel> noise) {
  check_qubit(i);
  check_qubit(j);
  QNIR_REQUIRE(i != j, "apply_rzz: qubits must differ");
  QNIR_REQUIRE(noise.empty() || noise.size() == 5,
               "apply_rzz: noise must supply exactly 5 channels");
  apply_cx(i, j);
  if (!noise.empty()) {
    apply_channel(noise[0], i);
    apply_channel(noise[1], j);
  }
  apply_gate(Gate::rz(j, theta));
  if (!noise.empty()) apply_channel(noise[2], j);
  apply_cx(i, j);
  if (!noise.empty()) {
    apply_channel(noise[3], i);
    apply_channel(noise[4], j);
  }
}

void DensityMatrix::apply_reset(double p, int q) {
  // E_PR(rho) = (1-p) rho + p |0><0|_q (x) Tr_q(rho), done in one pass:
  //   block(0,0) -> block(0,0) + p block(1,1);  block(1,1) -> (1-p) block(1,1)
  //   off-diagonal blocks scale by (1-p)
  const std::size_t bit = std::size_t{1} << q;
  const double keep = 1.0 - p;
  cplx* a = a_.data();
  for (std::size_t r = 0; r < dim_; ++r) {
    const bool rb = (r & bit) != 0;
    cplx* row = a + r * dim_;
    if (rb) {
      for (std::size_t c = 0; c < dim_; ++c) row[c] *= keep;
    } else {
      const cplx* row1 = a + (r | bit) * dim_;
      for (std::size_t c = 0; c < dim_; ++c) {
        if (c & bit) row[c] *= keep;
        else row[c] += p * row1[c | bit];
      }
    }
  }
}

void DensityMatrix::apply_channel(const KrausChannel& ch, int q) {
  check_qubit(q);
  if (ch.is_reset()) {
    apply_reset(ch.parameter(), q);
    return;
  }
  std::vector<cplx> acc(dim_ * dim_, cplx(0.0));
  std::vector<cplx> save(a_);
  for (const Mat2& k : ch.operators()) {
    a_ = save;
    mul_left(k, q);
    mul_right_dagger(k, q);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a_[i];
  }
  a_ = std::move(acc);
}

double DensityMatrix::expect_z(int q) const {
  check_qubit(q);
  const std::size_t bit = std::size_t{1} << q;
  double re = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    const double d = a_[r * dim_ + r].real();
    re += (r & bit) ? -d : d;
  }
  return re;
}

cplx DensityMatrix::trace() const {
  cplx t(0.0);
  for (std::size_t r = 0; r < dim_; ++r) t += a_[r * dim_ + r];
  return t;
}

double DensityMatrix::trace_defect() const { return std::abs(trace() - cplx(1.0)); }

double DensityMatrix::hermiticity_defect() const {
  double defect = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      defect = std::max(defect, std::abs(a_[r * dim_ + c] - std::conj(a_[c * dim_ + r])));
  return defect;
}

} // namespace qnir
