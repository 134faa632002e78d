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

#include "nhqc/parallel.hpp"
#include "nhqc/propagator.hpp"

namespace nhqc {

/// Orthonormal basis of an M-dimensional subspace of an n-qubit register.
/// Orthonormality is validated to 1e-12 at construction.
class Subspace {
 public:
  Subspace(int n_qubits, std::vector<Vector> basis);

  /// Basis of computational kets named by bit strings, e.g. {"10", "11"}.
  static Subspace from_labels(int n_qubits,
                              const std::vector<std::string>& labels);

  int n_qubits() const noexcept { return n_qubits_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  /// dim x M matrix whose columns are the basis vectors.
  const Matrix& basis_matrix() const noexcept { return columns_; }

 private:
  int n_qubits_;
  std::vector<Vector> basis_;
  Matrix columns_;
};

/// Rank-M orthogonal projector onto the subspace.
DenseOperator projector(const Subspace& s);

struct ConditionResult {
  double residual;
  bool pass;
};

/// Return condition: ||U P U† - P||_F with U = exact_evolution(h, tau).
ConditionResult check_condition_i(const OperatorSum& h, const Subspace& s,
                                  double tau, double tol);

/// No-dynamical-phase condition: max over a uniform time grid (grid points,
/// spacing tau/(grid-1)) and all basis pairs of |<phi_k(t)|H|phi_l(t)>|.
/// Grid points are evaluated independently under `exec`.
ConditionResult check_condition_ii(const OperatorSum& h, const Subspace& s,
                                   double tau, int grid, double tol,
                                   par::Exec exec = par::default_exec());

/// Serial reference for the condition-(ii) scan: propagates the basis
/// incrementally with a single short-time step instead of re-exponentiating
/// at every grid point. Kept for testing and benchmarking the parallel scan.
double condition_ii_scan_reference(const OperatorSum& h, const Subspace& s,
                                   double tau, int grid);

struct HolonomyReport {
  double condition_i_residual;
  double condition_ii_max;
  int grid_points;
  bool condition_i_pass;
  bool condition_ii_pass;

  bool passed() const noexcept { return condition_i_pass && condition_ii_pass; }
};

HolonomyReport holonomy_check(const OperatorSum& h, const Subspace& s,
                              double tau, int grid = 101, double tol = 1e-9);

/// ||U P U† - P||_F, the amplitude driven outside the subspace by U.
double subspace_leakage(const DenseOperator& u, const Subspace& s);

/// M x M matrix [<phi_k|U|phi_l>]. Requires the subspace to be preserved:
/// throws ContractViolation carrying the leakage when it exceeds 1e-6.
Matrix logical_action(const DenseOperator& u, const Subspace& s);

/// The same block extraction with no preservation check, for deliberately
/// leaky (Trotterized) unitaries.
Matrix logical_block(const DenseOperator& u, const Subspace& s);

}  // namespace nhqc
