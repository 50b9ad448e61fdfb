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

#include "qnir/gates.hpp"

#include <cmath>

namespace qnir {

Mat2 rx_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {cplx(c, 0.0), cplx(0.0, -s), cplx(0.0, -s), cplx(c, 0.0)};
}

Mat2 rz_matrix(double theta) {
  return {std::polar(1.0, -theta / 2.0), cplx(0.0), cplx(0.0), std::polar(1.0, theta / 2.0)};
}

Mat2 h_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  return {cplx(r), cplx(r), cplx(r), cplx(-r)};
}

Mat2 x_matrix() { return {cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)}; }

Mat2 Gate::matrix() const {
  switch (kind) {
  case GateKind::RX: return rx_matrix(theta);
  case GateKind::RZ: return rz_matrix(theta);
  case GateKind::H: return h_matrix();
  case GateKind::X: return x_matrix();
  case GateKind::CX: break;
  }
  throw contract_error("Gate::matrix: CX has no one-qubit matrix");
}

double unitarity_defect(const Mat2& m) {
  // G = M M^dagger; G_rc = sum_k m[r][k] * conj(m[c][k])
  double defect = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      cplx g = m[2 * r] * std::conj(m[2 * c]) + m[2 * r + 1] * std::conj(m[2 * c + 1]);
      if (r == c) g -= 1.0;
      defect = std::max(defect, std::abs(g));
    }
  }
  return defect;
}

} // namespace qnir
