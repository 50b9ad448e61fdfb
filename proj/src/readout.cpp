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

#include "qnir/readout.hpp"

#include <nlohmann/json.hpp>

#include "qnir/errors.hpp"
#include "qnir/io.hpp"

namespace qnir {

void SplitSpec::validate(int sequence_length) const {
  QNIR_REQUIRE(t_i >= 0 && t_i <= t_tr && t_tr < t_f, "SplitSpec: ranges must be ordered");
  QNIR_REQUIRE(t_f < sequence_length, "SplitSpec: ranges exceed sequence length");
}

ReadoutModel fit(const Eigen::MatrixXd& x_columns, const Eigen::VectorXd& y,
                 const ReadoutOptions& opts) {
  QNIR_REQUIRE(x_columns.cols() == y.size(), "fit: column/target count mismatch");
  QNIR_REQUIRE(x_columns.cols() > 0, "fit: empty training range");
  QNIR_REQUIRE(x_columns.allFinite() && y.allFinite(), "fit: non-finite inputs");
  const Eigen::MatrixXd a = x_columns.transpose(); // T x rows
  ReadoutModel model;
  model.bias = opts.bias;
  if (opts.ridge > 0.0) {
    const Eigen::MatrixXd gram =
        a.transpose() * a +
        opts.ridge * Eigen::MatrixXd::Identity(a.cols(), a.cols());
    model.weights = gram.ldlt().solve(a.transpose() * y);
  } else {
    model.weights = a.completeOrthogonalDecomposition().solve(y);
  }
  const Eigen::VectorXd residual = y - a * model.weights;
  model.train_mse = residual.squaredNorm() / static_cast<double>(y.size());
  return model;
}

Eigen::VectorXd predict(const ReadoutModel& model, const Eigen::MatrixXd& x_columns) {
  QNIR_REQUIRE(x_columns.rows() == model.weights.size(),
               "predict: feature row count differs from training");
  return x_columns.transpose() * model.weights;
}

SplitFit fit_and_predict(const FeatureMatrix& features, const Eigen::VectorXd& y_full,
                         const SplitSpec& split, const ReadoutOptions& opts) {
  split.validate(static_cast<int>(features.cols()));
  QNIR_REQUIRE(y_full.size() == features.cols(), "fit_and_predict: target length mismatch");
  const Eigen::MatrixXd x = features.design_matrix(opts.bias);
  const Eigen::MatrixXd x_train = x.middleCols(split.t_i, split.train_size());
  const Eigen::VectorXd y_train = y_full.segment(split.t_i, split.train_size());
  SplitFit out;
  out.model = fit(x_train, y_train, opts);
  out.y_hat_test = predict(out.model, x.middleCols(split.test_begin(), split.test_size()));
  return out;
}

std::string ReadoutModel::to_json() const {
  nlohmann::json j;
  j["bias"] = bias;
  j["train_mse"] = train_mse;
  auto& w = j["weights"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < weights.size(); ++i) w.push_back(weights[i]);
  return j.dump(2) + "\n";
}

ReadoutModel ReadoutModel::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ReadoutModel model;
  model.bias = j.at("bias").get<bool>();
  model.train_mse = j.at("train_mse").get<double>();
  const auto& w = j.at("weights");
  model.weights.resize(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i)
    model.weights[static_cast<Eigen::Index>(i)] = w[i].get<double>();
  return model;
}

} // namespace qnir
