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

#ifndef QNIR_READOUT_HPP
#define QNIR_READOUT_HPP

#include <string>

#include <Eigen/Dense>

#include "qnir/reservoir.hpp"

namespace qnir {

// Inclusive time-step ranges: washout [0, t_i), train [t_i, t_tr], test (t_tr, t_f].
struct SplitSpec {
  int t_i = 20;
  int t_tr = 80;
  int t_f = 100;

  int train_size() const { return t_tr - t_i + 1; }
  int test_size() const { return t_f - t_tr; }
  int test_begin() const { return t_tr + 1; }
  void validate(int sequence_length) const;
};

struct ReadoutOptions {
  bool bias = true;   // append a row of ones to the design matrix
  double ridge = 0.0; // optional Tikhonov term; 0 = plain least squares
};

// Linear output layer y_hat = w^T x, trained by least squares.
struct ReadoutModel {
  Eigen::VectorXd weights; // one entry per design-matrix row (bias last)
  bool bias = true;
  double train_mse = 0.0;

  std::string to_json() const;
  static ReadoutModel from_json(const std::string& text);
};

// Minimum-norm least squares fit of w against columns of X (rows = features,
// cols = time steps): minimizes |y - X^T w|_2 via a rank-revealing
// decomposition. ridge > 0 switches to the regularized normal equations.
ReadoutModel fit(const Eigen::MatrixXd& x_columns, const Eigen::VectorXd& y,
                 const ReadoutOptions& opts = {});

Eigen::VectorXd predict(const ReadoutModel& model, const Eigen::MatrixXd& x_columns);

// Convenience: fit on the train columns of a feature matrix / target series,
// then predict the test columns.
struct SplitFit {
  ReadoutModel model;
  Eigen::VectorXd y_hat_test;
};
SplitFit fit_and_predict(const FeatureMatrix& features, const Eigen::VectorXd& y_full,
                         const SplitSpec& split, const ReadoutOptions& opts = {});

} // namespace qnir

#endif // QNIR_READOUT_HPP
