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

#include "nhqc/channel.hpp"

#include <cmath>

namespace nhqc {

Channel::Channel(int n_qubits, Matrix superop)
    : n_qubits_(n_qubits), dim_(Eigen::Index{1} << n_qubits),
      superop_(std::move(superop)) {
  if (superop_.rows() != dim_ * dim_ || superop_.cols() != dim_ * dim_) {
    throw DimensionMismatch("Channel: superoperator must be d^2 x d^2");
  }
}

Channel Channel::identity(int n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return Channel(n_qubits, Matrix::Identity(d * d, d * d));
}

Channel Channel::from_unitary(const DenseOperator& u) {
  // vec(U rho U†) = (conj(U) ⊗ U) vec(rho) in column-major stacking.
  return Channel(u.n_qubits(), kron(u.matrix().conjugate(), u.matrix()));
}

Channel Channel::from_block(int n_qubits, const Matrix& block) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  if (block.rows() != d || block.cols() != d) {
    throw DimensionMismatch("Channel::from_block: block must be d x d");
  }
  return Channel(n_qubits, kron(block.conjugate(), block));
}

Matrix Channel::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw DimensionMismatch("Channel::apply: state dimension " +
                            std::to_string(rho.rows()) + " != " +
                            std::to_string(dim_));
  }
  const Vector out = superop_ * Eigen::Map<const Vector>(rho.data(), dim_ * dim_);
  return Eigen::Map<const Matrix>(out.data(), dim_, dim_);
}

DenseOperator Channel::apply(const DenseOperator& rho) const {
  if (rho.n_qubits() != n_qubits_) {
    throw DimensionMismatch("Channel::apply: qubit count mismatch");
  }
  return {n_qubits_, apply(rho.matrix())};
}

double Channel::trace_preservation_defect() const {
  double defect = 0.0;
  for (Eigen::Index j = 0; j < dim_ * dim_; ++j) {
    Complex trace_out = 0.0;
    for (Eigen::Index r = 0; r < dim_; ++r) {
      trace_out += superop_(r * dim_ + r, j);
    }
    const double trace_in = (j % dim_ == j / dim_) ? 1.0 : 0.0;
    defect = std::max(defect, std::abs(trace_out - trace_in));
  }
  return defect;
}

}  // namespace nhqc
