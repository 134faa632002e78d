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

#include "nhqc/holonomy.hpp"

#include <algorithm>
#include <cmath>

namespace nhqc {

Subspace::Subspace(int n_qubits, std::vector<Vector> basis)
    : n_qubits_(n_qubits), basis_(std::move(basis)) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits_;
  if (basis_.empty() || basis_.size() > static_cast<std::size_t>(d)) {
    throw std::invalid_argument("Subspace: need 1..2^n basis vectors");
  }
  for (const auto& v : basis_) {
    if (v.size() != d) {
      throw DimensionMismatch("Subspace: basis vector length " +
                              std::to_string(v.size()) + " != 2^" +
                              std::to_string(n_qubits_));
    }
  }
  columns_.resize(d, static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    columns_.col(static_cast<Eigen::Index>(k)) = basis_[k];
  }
  Matrix gram = columns_.adjoint() * columns_;
  gram -= Matrix::Identity(gram.rows(), gram.cols());
  const double defect = gram.cwiseAbs().maxCoeff();
  if (defect > 1e-12) {
    throw std::invalid_argument(
        "Subspace: basis is not orthonormal (defect " + std::to_string(defect) +
        ")");
  }
}

Subspace Subspace::from_labels(int n_qubits,
                               const std::vector<std::string>& labels) {
  std::vector<Vector> basis;
  basis.reserve(labels.size());
  for (const auto& label : labels) {
    if (label.size() != static_cast<std::size_t>(n_qubits)) {
      throw std::invalid_argument("Subspace: label \"" + label +
                                  "\" does not have " +
                                  std::to_string(n_qubits) + " bits");
    }
    Eigen::Index index = 0;
    for (char c : label) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("Subspace: label \"" + label +
                                    "\" is not a bit string");
      }
      index = (index << 1) | (c == '1' ? 1 : 0);
    }
    basis.push_back(basis_ket(n_qubits, index));
  }
  return Subspace(n_qubits, std::move(basis));
}

DenseOperator projector(const Subspace& s) {
  const Matrix& phi = s.basis_matrix();
  return {s.n_qubits(), phi * phi.adjoint()};
}

ConditionResult check_condition_i(const OperatorSum& h, const Subspace& s,
                                  double tau, double tol) {
  if (h.n_qubits() != s.n_qubits()) {
    throw DimensionMismatch("check_condition_i: register size mismatch");
  }
  const DenseOperator u = exact_evolution(h, tau);
  const Matrix p = projector(s).matrix();
  const double residual =
      frobenius_norm(u.matrix() * p * u.matrix().adjoint() - p);
  return {residual, residual < tol};
}

namespace {

// max |<phi_k|H|phi_l>| over all pairs for evolved basis columns.
double pair_max(const Matrix& hd, const Matrix& evolved) {
  Matrix block = evolved.adjoint() * hd * evolved;
  return block.cwiseAbs().maxCoeff();
}

}  // namespace

ConditionResult check_condition_ii(const OperatorSum& h, const Subspace& s,
                                   double tau, int grid, double tol,
                                   par::Exec exec) {
  if (h.n_qubits() != s.n_qubits()) {
    throw DimensionMismatch("check_condition_ii: register size mismatch");
  }
  if (grid < 2) {
    throw std::invalid_argument("check_condition_ii: grid must be >= 2");
  }
  const DenseOperator hd = h.to_dense();
  const Matrix& phi0 = s.basis_matrix();
  const double spacing = tau / (grid - 1);

  const double max_residual =
      par::max_index(exec, grid, [&](std::ptrdiff_t j) {
        const DenseOperator u = expm_hermitian(hd, spacing * j);
        return pair_max(hd.matrix(), u.matrix() * phi0);
      });
  return {max_residual, max_residual < tol};
}

double condition_ii_scan_reference(const OperatorSum& h, const Subspace& s,
                                   double tau, int grid) {
  if (grid < 2) {
    throw std::invalid_argument("condition_ii_scan_reference: grid must be >= 2");
  }
  const DenseOperator hd = h.to_dense();
  const DenseOperator step = expm_hermitian(hd, tau / (grid - 1));
  Matrix evolved = s.basis_matrix();
  double max_residual = pair_max(hd.matrix(), evolved);
  for (int j = 1; j < grid; ++j) {
    evolved = step.matrix() * evolved;
    max_residual = std::max(max_residual, pair_max(hd.matrix(), evolved));
  }
  return max_residual;
}

HolonomyReport holonomy_check(const OperatorSum& h, const Subspace& s,
                              double tau, int grid, double tol) {
  const ConditionResult ci = check_condition_i(h, s, tau, tol);
  const ConditionResult cii = check_condition_ii(h, s, tau, grid, tol);
  return {ci.residual, cii.residual, grid, ci.pass, cii.pass};
}

double subspace_leakage(const DenseOperator& u, const Subspace& s) {
  if (u.n_qubits() != s.n_qubits()) {
    throw DimensionMismatch("subspace_leakage: register size mismatch");
  }
  const Matrix p = projector(s).matrix();
  return frobenius_norm(u.matrix() * p * u.matrix().adjoint() - p);
}

Matrix logical_action(const DenseOperator& u, const Subspace& s) {
  const double leakage = subspace_leakage(u, s);
  if (leakage >= 1e-6) {
    throw ContractViolation(
        "logical_action: unitary does not preserve the subspace (leakage " +
            std::to_string(leakage) + ")",
        leakage);
  }
  return logical_block(u, s);
}

Matrix logical_block(const DenseOperator& u, const Subspace& s) {
  if (u.n_qubits() != s.n_qubits()) {
    throw DimensionMismatch("logical_block: register size mismatch");
  }
  const Matrix& phi = s.basis_matrix();
  return phi.adjoint() * u.matrix() * phi;
}

}  // namespace nhqc
