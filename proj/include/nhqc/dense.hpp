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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "nhqc/errors.hpp"

namespace nhqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Square complex matrix tagged with its qubit count. Qubit 1 is the leftmost
/// tensor factor and the most significant bit of the computational-basis
/// index, so basis states are ordered |00..0>, |00..1>, ..., |11..1>.
/// Immutable after construction; all operations are pure.
class DenseOperator {
 public:
  DenseOperator(int n_qubits, Matrix entries);

  /// Infers the qubit count from the matrix dimension (must be a power of 2).
  static DenseOperator from_matrix(Matrix entries);
  static DenseOperator identity(int n_qubits);
  static DenseOperator zero(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const Matrix& matrix() const noexcept { return entries_; }

  Complex trace() const { return entries_.trace(); }
  DenseOperator adjoint() const { return {n_qubits_, entries_.adjoint()}; }

  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(Complex scale, const DenseOperator& a);
  friend DenseOperator operator*(double scale, const DenseOperator& a);

 private:
  int n_qubits_;
  Matrix entries_;
};

/// Kronecker product of raw matrices (no qubit bookkeeping).
Matrix kron(const Matrix& a, const Matrix& b);

/// Tensor product; qubit counts add, `a` supplies the high-order qubits.
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);

/// Traces out every qubit not listed in `keep` (1-based indices, qubit 1 is
/// the most significant). Kept qubits retain their relative order. Throws
/// std::domain_error for an empty, duplicated, or out-of-range keep set.
DenseOperator partial_trace(const DenseOperator& m, const std::vector<int>& keep);

/// Hilbert-Schmidt inner product Tr(a† b).
Complex hs_inner(const DenseOperator& a, const DenseOperator& b);

/// Computational-basis column vector |index> on n qubits.
Vector basis_ket(int n_qubits, Eigen::Index index);

/// Deterministic Haar-like random unitary: QR of a seeded complex Gaussian
/// matrix with the R diagonal phases absorbed. The Gaussian sampler is
/// hand-rolled so the result is reproducible across standard libraries.
DenseOperator random_unitary(int n_qubits, std::uint64_t seed);

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);
double frobenius_norm(const Matrix& a);

/// max entry of |M - M†|.
double hermiticity_defect(const Matrix& m);
/// max entry of |U†U - I|.
double unitarity_defect(const Matrix& u);

}  // namespace nhqc
