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

#include "nhqc/dense.hpp"
#include "nhqc/parallel.hpp"

namespace nhqc {

/// Linear map on operators of an n-qubit space, stored as the d²×d²
/// superoperator acting on column-stacked matrices: vec(out) = S vec(in).
class Channel {
 public:
  Channel(int n_qubits, Matrix superop);

  static Channel identity(int n_qubits);
  /// rho -> U rho U†.
  static Channel from_unitary(const DenseOperator& u);
  /// rho -> L rho L† for a (possibly non-unitary) block L.
  static Channel from_block(int n_qubits, const Matrix& block);

  /// Samples `action` on the d² matrix units |r><c| to assemble the
  /// superoperator. Columns are independent and evaluated under `exec`;
  /// `action` must be a linear map Matrix -> Matrix and must not throw when
  /// exec == openmp.
  template <typename Action>
  static Channel from_action(int n_qubits, const Action& action,
                             par::Exec exec = par::default_exec()) {
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    Matrix superop(d * d, d * d);
    par::for_index(exec, d * d, [&](std::ptrdiff_t j) {
      Matrix unit = Matrix::Zero(d, d);
      unit(j % d, j / d) = 1.0;  // column-major vec: index j is |r=j%d><c=j/d|
      const Matrix out = action(unit);
      superop.col(j) = Eigen::Map<const Vector>(out.data(), d * d);
    });
    return Channel(n_qubits, std::move(superop));
  }

  Matrix apply(const Matrix& rho) const;
  DenseOperator apply(const DenseOperator& rho) const;

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return dim_; }
  const Matrix& superoperator() const noexcept { return superop_; }

  /// max over matrix units of |Tr(E(unit)) - Tr(unit)|.
  double trace_preservation_defect() const;

 private:
  int n_qubits_;
  Eigen::Index dim_;
  Matrix superop_;
};

}  // namespace nhqc
