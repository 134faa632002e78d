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

#include "nhqc/channel.hpp"
#include "nhqc/gates.hpp"
#include "nhqc/pauli.hpp"

namespace nhqc {

/// Ordered operator basis {e_k} with Hilbert-Schmidt normalization
/// Tr(e_k† e_l) = d δ_kl, validated to 1e-12 at construction.
class OperatorBasis {
 public:
  /// {I, X, -iY, Z}.
  static OperatorBasis one_qubit();
  /// The 16 phased two-qubit products {II, IX, -iIY, IZ, XI, XX, -iXY, XZ,
  /// -iYI, -iYX, -YY, -iYZ, ZI, ZX, -iZY, ZZ}.
  static OperatorBasis two_qubit();
  /// Any list of Pauli-text labels forming an orthogonal basis.
  static OperatorBasis from_labels(const std::vector<std::string>& labels);

  Eigen::Index dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<DenseOperator>& elements() const noexcept {
    return elements_;
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  OperatorBasis(std::vector<std::string> labels,
                std::vector<DenseOperator> elements);

  std::vector<std::string> labels_;
  std::vector<DenseOperator> elements_;
  Eigen::Index dim_;
};

/// Process matrix over a declared basis: E(rho) = Σ_kl chi_kl e_k rho e_l†.
struct ChiMatrix {
  std::vector<std::string> basis_labels;
  Eigen::Index dim;
  Matrix entries;  // size d² x d²
  double fit_residual = 0.0;

  Complex trace() const { return entries.trace(); }
  double hermiticity() const { return hermiticity_defect(entries); }
};

/// Elementwise application of the channel; inputs may be traceless deviation
/// operators.
std::vector<DenseOperator> qst_outputs(const Channel& ch,
                                       const std::vector<DenseOperator>& inputs);

enum class QptInputs {
  full,   // the d² matrix units
  paper,  // the traceless preparation set {X,Y,Z} / 15 two-letter products
};

struct QptOptions {
  QptInputs inputs = QptInputs::full;
  /// With paper inputs, append the identity-preservation row E(I) = I that
  /// the deviation-only protocol books implicitly. Without it the system is
  /// rank-deficient and the minimum-norm solution is returned.
  bool identity_bookkeeping = true;
  double cutoff = 1e-12;
  par::Exec exec = par::default_exec();
};

/// Linear-inversion process tomography: applies the channel to the input set
/// and solves for chi by least squares. Throws NumericError when the full
/// input set yields a rank-deficient system.
ChiMatrix qpt_chi(const Channel& ch, const OperatorBasis& basis,
                  const QptOptions& options = {});

/// Analytic chi of a unitary: expand u = Σ c_k e_k, chi = c c† (rank 1,
/// trace 1). Oracle for qpt_chi.
ChiMatrix chi_of_unitary(const DenseOperator& u, const OperatorBasis& basis);

/// Σ_kl chi_kl e_k rho e_l†.
DenseOperator apply_chi(const ChiMatrix& chi, const OperatorBasis& basis,
                        const DenseOperator& rho);

/// Tr(rho_out rho_th) / sqrt(Tr(rho_th²) Tr(rho_in²)).
double state_fid_attenuated(const DenseOperator& rho_out,
                            const DenseOperator& rho_th,
                            const DenseOperator& rho_in);

/// Tr(rho_out rho_th) / sqrt(Tr(rho_out²) Tr(rho_th²)); invariant under
/// positive scaling of rho_out.
double state_fid_unattenuated(const DenseOperator& rho_out,
                              const DenseOperator& rho_th);

/// |Tr(chi_exp chi_th†)|.
double chi_fid_attenuated(const ChiMatrix& chi_exp, const ChiMatrix& chi_th);

/// |Tr(chi_exp chi_th†)| / sqrt(Tr(chi_exp chi_exp†) Tr(chi_th chi_th†)).
double chi_fid_unattenuated(const ChiMatrix& chi_exp, const ChiMatrix& chi_th);

/// Scalar signal-loss model: rho -> λ E(rho) + (1-λ) Tr(E(rho)) I/d. Keeps
/// the trace and scales the deviation (traceless) part by λ.
Channel attenuate(const Channel& ch, double lambda);

/// The traceless preparation set for 1 or 2 work qubits.
std::vector<std::string> paper_input_labels(int n_work);
std::vector<DenseOperator> paper_inputs(int n_work);

/// All four fidelity metrics of one gate realization against its ideal
/// logical target, over the traceless preparation set.
struct FidelityReport {
  std::vector<std::string> input_labels;
  std::vector<double> state_attenuated;
  std::vector<double> state_unattenuated;
  double state_avg_attenuated = 0.0;
  double state_avg_unattenuated = 0.0;
  double chi_attenuated = 0.0;
  double chi_unattenuated = 0.0;
};

/// Simulates the gate channel on the preparation set (under the scalar loss
/// lambda) and reconstructs chi from the unattenuated channel. The attenuated
/// chi metric carries the loss as lambda * |Tr(chi chi_th†)|: uniform signal
/// loss scales all deviation data and the inversion is linear in it.
FidelityReport gate_fidelity_report(const GateRealization& g, LeakageMode mode,
                                    QptInputs inputs, double lambda);

}  // namespace nhqc
