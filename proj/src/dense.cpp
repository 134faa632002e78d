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

#include "nhqc/dense.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

namespace nhqc {

namespace {

Eigen::Index pow2(int n) { return Eigen::Index{1} << n; }

void require_same_shape(const DenseOperator& a, const DenseOperator& b,
                        const char* op) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionMismatch(std::string(op) + ": operands act on " +
                            std::to_string(a.n_qubits()) + " and " +
                            std::to_string(b.n_qubits()) + " qubits");
  }
}

}  // namespace

DenseOperator::DenseOperator(int n_qubits, Matrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
  if (n_qubits_ < 1) {
    throw DimensionMismatch("DenseOperator: qubit count must be positive");
  }
  const Eigen::Index d = pow2(n_qubits_);
  if (entries_.rows() != d || entries_.cols() != d) {
    throw DimensionMismatch(
        "DenseOperator: " + std::to_string(entries_.rows()) + "x" +
        std::to_string(entries_.cols()) + " matrix does not match 2^" +
        std::to_string(n_qubits_));
  }
}

DenseOperator DenseOperator::from_matrix(Matrix entries) {
  const Eigen::Index d = entries.rows();
  if (d < 2 || entries.cols() != d || (d & (d - 1)) != 0) {
    throw DimensionMismatch("from_matrix: dimension " + std::to_string(d) +
                            " is not a power of 2");
  }
  int n = 0;
  for (Eigen::Index x = d; x > 1; x >>= 1) ++n;
  return {n, std::move(entries)};
}

DenseOperator DenseOperator::identity(int n_qubits) {
  return {n_qubits, Matrix::Identity(pow2(n_qubits), pow2(n_qubits))};
}

DenseOperator DenseOperator::zero(int n_qubits) {
  return {n_qubits, Matrix::Zero(pow2(n_qubits), pow2(n_qubits))};
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  require_same_shape(a, b, "operator+");
  return {a.n_qubits_, a.entries_ + b.entries_};
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  require_same_shape(a, b, "operator-");
  return {a.n_qubits_, a.entries_ - b.entries_};
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  require_same_shape(a, b, "operator*");
  return {a.n_qubits_, a.entries_ * b.entries_};
}

DenseOperator operator*(Complex scale, const DenseOperator& a) {
  return {a.n_qubits_, scale * a.entries_};
}

DenseOperator operator*(double scale, const DenseOperator& a) {
  return {a.n_qubits_, scale * a.entries_};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b) {
  return {a.n_qubits() + b.n_qubits(), kron(a.matrix(), b.matrix())};
}

DenseOperator partial_trace(const DenseOperator& m,
                            const std::vector<int>& keep) {
  const int n = m.n_qubits();
  if (keep.empty()) {
    throw std::domain_error("partial_trace: keep set is empty");
  }
  std::set<int> keep_set(keep.begin(), keep.end());
  if (keep_set.size() != keep.size()) {
    throw std::domain_error("partial_trace: duplicate qubit index in keep set");
  }
  for (int q : keep_set) {
    if (q < 1 || q > n) {
      throw std::domain_error("partial_trace: qubit index " +
                              std::to_string(q) + " outside 1.." +
                              std::to_string(n));
    }
  }

  std::vector<int> kept(keep_set.begin(), keep_set.end());
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!keep_set.count(q)) traced.push_back(q);
  }

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << nt;

  // Full index from (kept bits, traced bits); qubit q occupies bit (n - q).
  auto compose = [&](Eigen::Index k, Eigen::Index t) {
    Eigen::Index full = 0;
    for (int i = 0; i < nk; ++i) {
      const Eigen::Index bit = (k >> (nk - 1 - i)) & 1;
      full |= bit << (n - kept[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < nt; ++i) {
      const Eigen::Index bit = (t >> (nt - 1 - i)) & 1;
      full |= bit << (n - traced[static_cast<std::size_t>(i)]);
    }
    return full;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += m.matrix()(compose(r, t), compose(c, t));
      }
      out(r, c) = sum;
    }
  }
  return {nk, std::move(out)};
}

Complex hs_inner(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("hs_inner: dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
  return (a.matrix().adjoint() * b.matrix()).trace();
}

Vector basis_ket(int n_qubits, Eigen::Index index) {
  const Eigen::Index d = pow2(n_qubits);
  if (index < 0 || index >= d) {
    throw std::domain_error("basis_ket: index out of range");
  }
  Vector v = Vector::Zero(d);
  v(index) = 1.0;
  return v;
}

DenseOperator random_unitary(int n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  auto gaussian = [&] {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793 * u2);
  };

  const Eigen::Index d = pow2(n_qubits);
  Matrix a(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      a(r, c) = Complex(gaussian(), gaussian());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) {
      q.col(j) *= diag / std::abs(diag);
    }
  }
  return {n_qubits, std::move(q)};
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

double hermiticity_defect(const Matrix& m) {
  return (m - Matrix(m.adjoint())).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& u) {
  Matrix g = u.adjoint() * u;
  g -= Matrix::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

}  // namespace nhqc
