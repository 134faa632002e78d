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

#pragma once

#include <string>
#include <vector>

#include "nhqc/pauli.hpp"

namespace nhqc {

/// exp(-i t H) for Hermitian H via spectral decomposition H = V Λ V†; the
/// result is unitary to rounding. Throws ContractViolation if the hermiticity
/// defect exceeds 1e-10.
DenseOperator expm_hermitian(const DenseOperator& h, double t);

/// exp(-i t H) for an operator sum (Hermitian by construction).
DenseOperator exact_evolution(const OperatorSum& h, double t);

/// Uniform step schedule: total_time split into `steps` equal slices.
struct TrotterSchedule {
  double total_time;
  int steps;
  double dt;

  TrotterSchedule(double total_time, int steps);
};

/// One product-formula factor exp(-i * angle_scale * dt * generator). The
/// generators keep the positive coefficients readable from their defining
/// sums; factors built from e^{+i...} carry a negative angle_scale instead.
struct TrotterFactor {
  OperatorSum generator;
  double angle_scale;
};

/// Ordered factor list for one short-time step; the product is taken in
/// listed order (first factor leftmost).
struct FactorSequence {
  std::vector<TrotterFactor> factors;
  std::string source;

  int n_qubits() const;
  /// Product of all factors at step length dt.
  DenseOperator step(double dt) const;
};

/// Symmetrized 7-factor step for the rotation-pair Hamiltonian h1(phi1);
/// palindromic in generator order.
FactorSequence build_t1_sequence(double phi1, double j1 = 1.0);

/// 3-factor step for h2(phi2); palindromic.
FactorSequence build_t2_sequence(double phi2, double j2 = 1.0);

/// 4-factor step for the three-qubit controlled-gate Hamiltonian h3; first
/// and last factors are equal.
FactorSequence build_t3_sequence(double j3 = 1.0);

/// (step at schedule.dt)^steps.
DenseOperator trotter_product(const FactorSequence& seq,
                              const TrotterSchedule& schedule);

/// Multiplies `a` by the global phase that best matches it to `b` (the phase
/// of Tr(a† b)); returns `a` unchanged when the trace vanishes.
DenseOperator phase_align(const DenseOperator& a, const DenseOperator& b);

/// Frobenius norm of (a - b) minimized over a global phase applied to `a`.
double product_error(const DenseOperator& a, const DenseOperator& b);

/// Frobenius norm of (a - b) with no phase alignment, for comparisons against
/// fixed-phase matrix literals.
double frobenius_distance(const DenseOperator& a, const DenseOperator& b);

}  // namespace nhqc
