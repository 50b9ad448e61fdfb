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

#include "qnir/reservoir.hpp"

#include <sstream>

#include "qnir/io.hpp"
#include "qnir/parallel.hpp"

namespace qnir {

std::string to_string(Scheme s) {
  return s == Scheme::PairSeparable ? "ps" : "le";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "ps" || s == "pair-separable") return Scheme::PairSeparable;
  if (s == "le" || s == "linear") return Scheme::LinearEntanglement;
  throw contract_error("unknown entanglement scheme: " + s);
}

std::vector<std::pair<int, int>> ReservoirConfig::pairs() const {
  std::vector<std::pair<int, int>> out;
  if (scheme == Scheme::PairSeparable) {
    for (int i = 0; i + 1 < qubits; i += 2) out.emplace_back(i, i + 1);
  } else {
    for (int i = 0; i + 1 < qubits; ++i) out.emplace_back(i, i + 1);
  }
  return out;
}

int ReservoirConfig::param_count() const {
  validate();
  if (scheme == Scheme::PairSeparable) return 7 * qubits / 2;
  return 6 * qubits - 5;
}

void ReservoirConfig::validate() const {
  QNIR_REQUIRE(qubits >= 2, "ReservoirConfig: need at least 2 qubits");
  QNIR_REQUIRE(washout >= 0, "ReservoirConfig: washout must be non-negative");
  if (scheme == Scheme::PairSeparable)
    QNIR_REQUIRE(qubits % 2 == 0, "ReservoirConfig: PS scheme requires an even qubit count");
}

NoiseParams::NoiseParams(std::vector<double> p) : p_(std::move(p)) {
  for (double v : p_)
    QNIR_REQUIRE(v >= 0.0 && v <= 1.0, "NoiseParams: probabilities must lie in [0,1]");
}

std::vector<StepInstruction> build_step(double u, const ReservoirConfig& cfg,
                                        const NoiseParams& p) {
  cfg.validate();
  const int m = cfg.param_count();
  QNIR_REQUIRE(static_cast<int>(p.size()) == m,
               "build_step: expected " + std::to_string(m) + " noise parameters, got " +
                   std::to_string(p.size()));
  const double theta = cfg.scaling(u);
  std::vector<StepInstruction> seq;
  seq.reserve(static_cast<std::size_t>(cfg.qubits) * 2 + cfg.pairs().size() * 8);
  std::size_t next = 0;
  for (int q = 0; q < cfg.qubits; ++q) {
    seq.emplace_back(Gate::rx(q, theta));
    seq.emplace_back(ChannelOp{reset_channel(p[next++]), q});
  }
  for (const auto& [i, j] : cfg.pairs()) {
    seq.emplace_back(Gate::cx(i, j));
    seq.emplace_back(ChannelOp{reset_channel(p[next++]), i});
    seq.emplace_back(ChannelOp{reset_channel(p[next++]), j});
    seq.emplace_back(Gate::rz(j, theta));
    seq.emplace_back(ChannelOp{reset_channel(p[next++]), j});
    seq.emplace_back(Gate::cx(i, j));
    seq.emplace_back(ChannelOp{reset_channel(p[next++]), i});
    seq.emplace_back(ChannelOp{reset_channel(p[next++]), j});
  }
  return seq;
}

std::vector<double> evolve_step(DensityMatrix& rho, double u, const ReservoirConfig& cfg,
                                const NoiseParams& p) {
  QNIR_REQUIRE(rho.num_qubits() == cfg.qubits, "evolve_step: state/config qubit mismatch");
  for (const StepInstruction& ins : build_step(u, cfg, p)) {
    if (std::holds_alternative<Gate>(ins)) {
      rho.apply_gate(std::get<Gate>(ins));
    } else {
      const auto& [ch, q] = std::get<ChannelOp>(ins);
      rho.apply_channel(ch, q);
    }
  }
  std::vector<double> h(static_cast<std::size_t>(cfg.qubits));
  for (int q = 0; q < cfg.qubits; ++q) h[static_cast<std::size_t>(q)] = rho.expect_z(q);
  return h;
}

FeatureMatrix run_reservoir(const std::vector<double>& u, const ReservoirConfig& cfg,
                            const NoiseParams& p) {
  cfg.validate();
  QNIR_REQUIRE(static_cast<int>(u.size()) >= cfg.washout + 2,
               "run_reservoir: input shorter than washout + 2");
  DensityMatrix rho = make_plus_state(cfg.qubits);
  FeatureMatrix fm;
  fm.washout = cfg.washout;
  fm.signals.resize(cfg.qubits, static_cast<Eigen::Index>(u.size()));
  for (std::size_t t = 0; t < u.size(); ++t) {
    const std::vector<double> h = evolve_step(rho, u[t], cfg, p);
    for (int q = 0; q < cfg.qubits; ++q) fm.signals(q, static_cast<Eigen::Index>(t)) = h[q];
  }
  return fm;
}

namespace {

// One pair-separable block: qubits (2b, 2b+1) as local (0,1), with the
// block's slice of the global parameter vector. Channel order matches
// build_step restricted to the block's qubits.
void run_ps_block(const std::vector<double>& u, const ReservoirConfig& cfg,
                  const NoiseParams& p, int block, Eigen::MatrixXd& signals) {
  const int n = cfg.qubits;
  const KrausChannel rx0 = reset_channel(p[2 * block]);
  const KrausChannel rx1 = reset_channel(p[2 * block + 1]);
  const std::size_t e = static_cast<std::size_t>(n + 5 * block);
  const KrausChannel cx1a = reset_channel(p[e]);
  const KrausChannel cx1b = reset_channel(p[e + 1]);
  const KrausChannel rzb = reset_channel(p[e + 2]);
  const KrausChannel cx2a = reset_channel(p[e + 3]);
  const KrausChannel cx2b = reset_channel(p[e + 4]);
  DensityMatrix rho = make_plus_state(2);
  for (std::size_t t = 0; t < u.size(); ++t) {
    const double theta = cfg.scaling(u[t]);
    rho.apply_gate(Gate::rx(0, theta));
    rho.apply_channel(rx0, 0);
    rho.apply_gate(Gate::rx(1, theta));
    rho.apply_channel(rx1, 1);
    rho.apply_gate(Gate::cx(0, 1));
    rho.apply_channel(cx1a, 0);
    rho.apply_channel(cx1b, 1);
    rho.apply_gate(Gate::rz(1, theta));
    rho.apply_channel(rzb, 1);
    rho.apply_gate(Gate::cx(0, 1));
    rho.apply_channel(cx2a, 0);
    rho.apply_channel(cx2b, 1);
    signals(2 * block, static_cast<Eigen::Index>(t)) = rho.expect_z(0);
    signals(2 * block + 1, static_cast<Eigen::Index>(t)) = rho.expect_z(1);
  }
}

} // namespace

FeatureMatrix run_reservoir_ps_blocks(const std::vector<double>& u, const ReservoirConfig& cfg,
                                      const NoiseParams& p) {
  QNIR_REQUIRE(cfg.scheme == Scheme::PairSeparable,
               "run_reservoir_ps_blocks: config is not pair-separable");
  cfg.validate();
  QNIR_REQUIRE(static_cast<int>(p.size()) == cfg.param_count(),
               "run_reservoir_ps_blocks: parameter count mismatch");
  QNIR_REQUIRE(static_cast<int>(u.size()) >= cfg.washout + 2,
               "run_reservoir_ps_blocks: input shorter than washout + 2");
  FeatureMatrix fm;
  fm.washout = cfg.washout;
  fm.signals.resize(cfg.qubits, static_cast<Eigen::Index>(u.size()));
  const std::size_t blocks = static_cast<std::size_t>(cfg.qubits / 2);
  parallel_for(blocks, [&](std::size_t b) {
    run_ps_block(u, cfg, p, static_cast<int>(b), fm.signals);
  });
  return fm;
}

FeatureMatrix run_reservoir_auto(const std::vector<double>& u, const ReservoirConfig& cfg,
                                 const NoiseParams& p) {
  if (cfg.scheme == Scheme::PairSeparable) return run_reservoir_ps_blocks(u, cfg, p);
  return run_reservoir(u, cfg, p);
}

Eigen::MatrixXd FeatureMatrix::design_matrix(bool bias) const {
  if (!bias) return signals;
  Eigen::MatrixXd x(signals.rows() + 1, signals.cols());
  x.topRows(signals.rows()) = signals;
  x.row(signals.rows()).setOnes();
  return x;
}

void FeatureMatrix::save_csv(const std::string& path, bool bias) const {
  std::ostringstream out;
  out << "signal";
  for (Eigen::Index t = 0; t < signals.cols(); ++t) out << ',' << t;
  out << '\n';
  for (Eigen::Index q = 0; q < signals.rows(); ++q) {
    out << 'q' << q;
    for (Eigen::Index t = 0; t < signals.cols(); ++t)
      out << ',' << format_double(signals(q, t));
    out << '\n';
  }
  if (bias) {
    out << "bias";
    for (Eigen::Index t = 0; t < signals.cols(); ++t) out << ",1";
    out << '\n';
  }
  write_text_file(path, out.str());
}

} // namespace qnir
