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

#include "qnir/channels.hpp"

#include <cmath>
#include <utility>

namespace qnir {

namespace {

double completeness_defect_of(const std::vector<Mat2>& ops) {
  // S = sum_j K_j^dagger K_j; S_rc = sum_j sum_k conj(K[k][r]) K[k][c]
  Mat2 s{cplx(0.0), cplx(0.0), cplx(0.0), cplx(0.0)};
  for (const Mat2& k : ops) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        s[2 * r + c] += std::conj(k[r]) * k[c] + std::conj(k[2 + r]) * k[2 + c];
  }
  s[0] -= 1.0;
  s[3] -= 1.0;
  double defect = 0.0;
  for (const cplx& v : s) defect = std::max(defect, std::abs(v));
  return defect;
}

} // namespace

KrausChannel::KrausChannel(std::vector<Mat2> operators, double parameter)
    : ops_(std::move(operators)), param_(parameter) {
  QNIR_REQUIRE(!ops_.empty(), "KrausChannel: empty operator set");
  const double defect = completeness_defect_of(ops_);
  if (defect >= kCptpTol)
    throw contract_error("KrausChannel: operator set is not trace preserving (defect " +
                         std::to_string(defect) + ")");
}

double KrausChannel::completeness_defect() const { return completeness_defect_of(ops_); }

KrausChannel reset_channel(double p) {
  QNIR_REQUIRE(p >= 0.0 && p <= 1.0, "reset_channel: p must be in [0,1]");
  const double sq = std::sqrt(p);
  const double sk = std::sqrt(1.0 - p);
  KrausChannel ch({Mat2{cplx(sk), cplx(0.0), cplx(0.0), cplx(sk)},   // sqrt(1-p) I
                   Mat2{cplx(sq), cplx(0.0), cplx(0.0), cplx(0.0)},  // sqrt(p) |0><0|
                   Mat2{cplx(0.0), cplx(sq), cplx(0.0), cplx(0.0)}}, // sqrt(p) |0><1|
                  p);
  ch.is_reset_ = true;
  return ch;
}

} // namespace qnir
