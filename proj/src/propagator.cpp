// Copyright 2026 The nhqc authors
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

#include "nhqc/propagator.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

namespace nhqc {

DenseOperator expm_hermitian(const DenseOperator& h, double t) {
  const double defect = hermiticity_defect(h.matrix());
  if (defect > 1e-10) {
    throw ContractViolation("expm_hermitian: input is not Hermitian (defect " +
                                std::to_string(defect) + ")",
                            defect);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericError("expm_hermitian: eigendecomposition failed");
  }
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  Vector phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -evals(k) * t));
  }
  Matrix u = evecs * phases.asDiagonal() * evecs.adjoint();
  return {h.n_qubits(), std::move(u)};
}

DenseOperator exact_evolution(const OperatorSum& h, double t) {
  return expm_hermitian(h.to_dense(), t);
}

TrotterSchedule::TrotterSchedule(double total_time, int steps)
    : total_time(total_time), steps(steps), dt(total_time / steps) {
  if (steps < 1) {
    throw std::invalid_argument("TrotterSchedule: steps must be >= 1");
  }
  if (!std::isfinite(total_time)) {
    throw std::invalid_argument("TrotterSchedule: total_time must be finite");
  }
}

int FactorSequence::n_qubits() const {
  return factors.empty() ? 0 : factors.front().generator.n_qubits();
}

DenseOperator FactorSequence::step(double dt) const {
  DenseOperator out = DenseOperator::identity(n_qubits());
  for (const auto& factor : factors) {
    out = out * exact_evolution(factor.generator, factor.angle_scale * dt);
  }
  return out;
}

FactorSequence build_t1_sequence(double phi1, double j1) {
  const double a1 = j1 * std::cos(phi1 / 2);
  const double b1 = j1 * std::sin(phi1 / 2);

  OperatorSum anc_y(2, {{b1 / 2, "YI"}, {-b1 / 2, "YZ"}});
  OperatorSum anc_x(2, {{a1 / 2, "XI"}, {-a1 / 2, "XZ"}});
  OperatorSum swap_b(2, {{b1 / 2, "XY"}, {-b1 / 2, "YX"}});
  OperatorSum swap_a(2, {{a1 / 2, "XX"}, {a1 / 2, "YY"}});

  FactorSequence seq;
  seq.source = "t1";
  seq.factors = {{anc_y, -0.5}, {anc_x, -0.5}, {swap_b, 0.5}, {swap_a, 1.0},
                 {swap_b, 0.5}, {anc_x, -0.5}, {anc_y, -0.5}};
  return seq;
}

FactorSequence build_t2_sequence(double phi2, double j2) {
  const double a2 = j2 * std::sin(phi2 / 2);
  const double b2 = j2 * std::cos(phi2 / 2);

  OperatorSum anc_x(2, {{b2 / 2, "XI"}, {-b2 / 2, "XZ"}});
  OperatorSum swap(2, {{a2 / 2, "YX"}, {-a2 / 2, "XY"}});

  FactorSequence seq;
  seq.source = "t2";
  seq.factors = {{anc_x, -0.5}, {swap, 1.0}, {anc_x, -0.5}};
  return seq;
}

FactorSequence build_t3_sequence(double j3) {
  const double c = j3 / 4;

  OperatorSum cond(3, {{c, "XII"}, {-c, "XZI"}, {-c, "XIZ"}, {c, "XZZ"}});
  OperatorSum cond_xx(3, {{c, "XIX"}, {-c, "XZX"}});
  OperatorSum cond_yy(3, {{c, "YIY"}, {-c, "YZY"}});

  FactorSequence seq;
  seq.source = "t3";
  seq.factors = {{cond, -0.5}, {cond_xx, 1.0}, {cond_yy, 1.0}, {cond, -0.5}};
  return seq;
}

DenseOperator trotter_product(const FactorSequence& seq,
                              const TrotterSchedule& schedule) {
  const DenseOperator step = seq.step(schedule.dt);
  DenseOperator out = DenseOperator::identity(step.n_qubits());
  for (int i = 0; i < schedule.steps; ++i) {
    out = step * out;
  }
  return out;
}

DenseOperator phase_align(const DenseOperator& a, const DenseOperator& b) {
  const Complex overlap = hs_inner(a, b);
  const double mag = std::abs(overlap);
  if (mag < 1e-300) {
    return a;
  }
  return (overlap / mag) * a;
}

double product_error(const DenseOperator& a, const DenseOperator& b) {
  return frobenius_norm(phase_align(a, b).matrix() - b.matrix());
}

double frobenius_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("frobenius_distance: dimension mismatch");
  }
  return frobenius_norm(a.matrix() - b.matrix());
}

}  // namespace nhqc
