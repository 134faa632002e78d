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

#include "nhqc/tomography.hpp"

#include <cmath>

#include <Eigen/QR>

namespace nhqc {

OperatorBasis::OperatorBasis(std::vector<std::string> labels,
                             std::vector<DenseOperator> elements)
    : labels_(std::move(labels)), elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw std::invalid_argument("OperatorBasis: empty basis");
  }
  dim_ = elements_.front().dim();
  if (elements_.size() != static_cast<std::size_t>(dim_ * dim_)) {
    throw std::invalid_argument("OperatorBasis: need d^2 elements");
  }
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (std::size_t l = 0; l < elements_.size(); ++l) {
      const Complex g = hs_inner(elements_[k], elements_[l]);
      const Complex expected = (k == l) ? Complex(double(dim_), 0.0) : Complex(0.0, 0.0);
      if (std::abs(g - expected) > 1e-12) {
        throw std::invalid_argument(
            "OperatorBasis: elements \"" + labels_[k] + "\" and \"" +
            labels_[l] + "\" violate Tr(e_k† e_l) = d δ_kl");
      }
    }
  }
}

OperatorBasis OperatorBasis::one_qubit() {
  return from_labels({"I", "X", "-iY", "Z"});
}

OperatorBasis OperatorBasis::two_qubit() {
  return from_labels({"II", "IX", "-iIY", "IZ", "XI", "XX", "-iXY", "XZ",
                      "-iYI", "-iYX", "-YY", "-iYZ", "ZI", "ZX", "-iZY", "ZZ"});
}

OperatorBasis OperatorBasis::from_labels(
    const std::vector<std::string>& labels) {
  std::vector<DenseOperator> elements;
  elements.reserve(labels.size());
  for (const auto& label : labels) {
    elements.push_back(PauliString::parse(label).to_dense());
  }
  return OperatorBasis(labels, std::move(elements));
}

std::vector<DenseOperator> qst_outputs(
    const Channel& ch, const std::vector<DenseOperator>& inputs) {
  std::vector<DenseOperator> outputs;
  outputs.reserve(inputs.size());
  for (const auto& rho : inputs) {
    outputs.push_back(ch.apply(rho));
  }
  return outputs;
}

namespace {

void require_same_basis(const ChiMatrix& a, const ChiMatrix& b,
                        const char* op) {
  if (a.basis_labels != b.basis_labels) {
    throw DimensionMismatch(std::string(op) +
                            ": chi matrices use different bases");
  }
}

}  // namespace

ChiMatrix qpt_chi(const Channel& ch, const OperatorBasis& basis,
                  const QptOptions& options) {
  const Eigen::Index d = basis.dim();
  if (d != ch.dim()) {
    throw DimensionMismatch("qpt_chi: basis dimension " + std::to_string(d) +
                            " != channel dimension " +
                            std::to_string(ch.dim()));
  }
  const Eigen::Index nb = static_cast<Eigen::Index>(basis.size());

  std::vector<Matrix> ins;
  std::vector<Matrix> outs;
  if (options.inputs == QptInputs::full) {
    for (Eigen::Index c = 0; c < d; ++c) {
      for (Eigen::Index r = 0; r < d; ++r) {
        Matrix unit = Matrix::Zero(d, d);
        unit(r, c) = 1.0;
        ins.push_back(unit);
        outs.push_back(ch.apply(unit));
      }
    }
  } else {
    const int n_work = ch.n_qubits();
    for (const auto& rho : paper_inputs(n_work)) {
      ins.push_back(rho.matrix());
      outs.push_back(ch.apply(rho).matrix());
    }
    if (options.identity_bookkeeping) {
      ins.push_back(Matrix::Identity(d, d));
      outs.push_back(Matrix::Identity(d, d));
    }
  }

  const Eigen::Index n_inputs = static_cast<Eigen::Index>(ins.size());
  Matrix system(n_inputs * d * d, nb * nb);
  Vector rhs(n_inputs * d * d);

  // Row block for input j: vec(out_j) = Σ_kl chi_kl vec(e_k in_j e_l†).
  // Blocks are disjoint, so the fan-out may run in parallel.
  par::for_index(options.exec, n_inputs, [&](std::ptrdiff_t j) {
    const Matrix& rho = ins[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < nb; ++k) {
      const Matrix left = basis.elements()[static_cast<std::size_t>(k)].matrix() * rho;
      for (Eigen::Index l = 0; l < nb; ++l) {
        const Matrix col =
            left * basis.elements()[static_cast<std::size_t>(l)].matrix().adjoint();
        system.block(j * d * d, k * nb + l, d * d, 1) =
            Eigen::Map<const Vector>(col.data(), d * d);
      }
    }
    rhs.segment(j * d * d, d * d) =
        Eigen::Map<const Vector>(outs[static_cast<std::size_t>(j)].data(), d * d);
  });

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(system);
  cod.setThreshold(options.cutoff);
  if (options.inputs == QptInputs::full && cod.rank() < nb * nb) {
    throw NumericError("qpt_chi: inversion is rank-deficient (rank " +
                       std::to_string(cod.rank()) + " of " +
                       std::to_string(nb * nb) + ")");
  }
  const Vector chi_vec = cod.solve(rhs);

  ChiMatrix chi;
  chi.basis_labels = basis.labels();
  chi.dim = d;
  chi.entries = Eigen::Map<const Matrix>(chi_vec.data(), nb, nb).transpose();
  chi.fit_residual = (system * chi_vec - rhs).norm();
  return chi;
}

ChiMatrix chi_of_unitary(const DenseOperator& u, const OperatorBasis& basis) {
  if (u.dim() != basis.dim()) {
    throw DimensionMismatch("chi_of_unitary: dimension mismatch");
  }
  const double defect = unitarity_defect(u.matrix());
  if (defect > 1e-9) {
    throw ContractViolation("chi_of_unitary: input is not unitary (defect " +
                                std::to_string(defect) + ")",
                            defect);
  }
  const Eigen::Index nb = static_cast<Eigen::Index>(basis.size());
  Vector c(nb);
  for (Eigen::Index k = 0; k < nb; ++k) {
    c(k) = hs_inner(basis.elements()[static_cast<std::size_t>(k)], u) /
           double(basis.dim());
  }
  ChiMatrix chi;
  chi.basis_labels = basis.labels();
  chi.dim = basis.dim();
  chi.entries = c * c.adjoint();
  chi.fit_residual = 0.0;
  return chi;
}

DenseOperator apply_chi(const ChiMatrix& chi, const OperatorBasis& basis,
                        const DenseOperator& rho) {
  if (chi.basis_labels != basis.labels()) {
    throw DimensionMismatch("apply_chi: chi was built over a different basis");
  }
  if (rho.dim() != chi.dim) {
    throw DimensionMismatch("apply_chi: state dimension mismatch");
  }
  Matrix out = Matrix::Zero(chi.dim, chi.dim);
  const Eigen::Index nb = static_cast<Eigen::Index>(basis.size());
  for (Eigen::Index k = 0; k < nb; ++k) {
    const Matrix left = basis.elements()[static_cast<std::size_t>(k)].matrix() *
                        rho.matrix();
    for (Eigen::Index l = 0; l < nb; ++l) {
      out += chi.entries(k, l) * left *
             basis.elements()[static_cast<std::size_t>(l)].matrix().adjoint();
    }
  }
  return {rho.n_qubits(), std::move(out)};
}

namespace {

double real_checked(Complex value, const char* what) {
  if (std::abs(value.imag()) >= 1e-9) {
    throw NumericError(std::string(what) + ": imaginary residue " +
                       std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

double state_fid_attenuated(const DenseOperator& rho_out,
                            const DenseOperator& rho_th,
                            const DenseOperator& rho_in) {
  const double norm_th = real_checked(hs_inner(rho_th, rho_th), "state_fid");
  const double norm_in = real_checked(hs_inner(rho_in, rho_in), "state_fid");
  if (norm_th <= 0.0 || norm_in <= 0.0) {
    throw std::domain_error("state_fid_attenuated: zero-norm reference");
  }
  const double overlap =
      real_checked(hs_inner(rho_out, rho_th), "state_fid_attenuated");
  return overlap / std::sqrt(norm_th * norm_in);
}

double state_fid_unattenuated(const DenseOperator& rho_out,
                              const DenseOperator& rho_th) {
  const double norm_out = real_checked(hs_inner(rho_out, rho_out), "state_fid");
  const double norm_th = real_checked(hs_inner(rho_th, rho_th), "state_fid");
  if (norm_out <= 0.0 || norm_th <= 0.0) {
    throw std::domain_error("state_fid_unattenuated: zero-norm argument");
  }
  const double overlap =
      real_checked(hs_inner(rho_out, rho_th), "state_fid_unattenuated");
  return overlap / std::sqrt(norm_out * norm_th);
}

double chi_fid_attenuated(const ChiMatrix& chi_exp, const ChiMatrix& chi_th) {
  require_same_basis(chi_exp, chi_th, "chi_fid_attenuated");
  return std::abs((chi_exp.entries * chi_th.entries.adjoint()).trace());
}

double chi_fid_unattenuated(const ChiMatrix& chi_exp, const ChiMatrix& chi_th) {
  require_same_basis(chi_exp, chi_th, "chi_fid_unattenuated");
  const double norm_exp =
      std::abs((chi_exp.entries * chi_exp.entries.adjoint()).trace());
  const double norm_th =
      std::abs((chi_th.entries * chi_th.entries.adjoint()).trace());
  if (norm_exp <= 0.0 || norm_th <= 0.0) {
    throw std::domain_error("chi_fid_unattenuated: zero chi matrix");
  }
  return std::abs((chi_exp.entries * chi_th.entries.adjoint()).trace()) /
         std::sqrt(norm_exp * norm_th);
}

Channel attenuate(const Channel& ch, double lambda) {
  if (!(lambda > 0.0) || lambda > 1.0) {
    throw std::domain_error("attenuate: lambda must be in (0, 1]");
  }
  const Eigen::Index d = ch.dim();
  // vec(Tr(E(rho)) I/d) = vec(I)/d * (vec(I)^T S) vec(rho).
  Vector vec_identity = Vector::Zero(d * d);
  for (Eigen::Index r = 0; r < d; ++r) {
    vec_identity(r * d + r) = 1.0;
  }
  const Matrix replacer =
      (vec_identity / double(d)) *
      (vec_identity.transpose() * ch.superoperator());
  return Channel(ch.n_qubits(),
                 lambda * ch.superoperator() + (1.0 - lambda) * replacer);
}

std::vector<std::string> paper_input_labels(int n_work) {
  if (n_work == 1) {
    return {"X", "Y", "Z"};
  }
  if (n_work == 2) {
    return {"IX", "IY", "IZ", "XI", "XX", "XY", "XZ", "YI", "YX", "YY", "YZ",
            "ZI", "ZX", "ZY", "ZZ"};
  }
  throw std::domain_error("paper_input_labels: only 1- or 2-qubit work spaces");
}

std::vector<DenseOperator> paper_inputs(int n_work) {
  std::vector<DenseOperator> out;
  for (const auto& label : paper_input_labels(n_work)) {
    out.push_back(PauliString::parse(label).to_dense());
  }
  return out;
}

FidelityReport gate_fidelity_report(const GateRealization& g, LeakageMode mode,
                                    QptInputs inputs, double lambda) {
  const int n_work = g.encoding.n_work();
  const Channel channel = gate_channel(g, mode);
  const Channel dimmed = attenuate(channel, lambda);
  const Channel ideal = Channel::from_unitary(g.ideal_logical);

  FidelityReport report;
  report.input_labels = paper_input_labels(n_work);
  for (const auto& rho : paper_inputs(n_work)) {
    const DenseOperator rho_out = dimmed.apply(rho);
    const DenseOperator rho_th = ideal.apply(rho);
    report.state_attenuated.push_back(
        state_fid_attenuated(rho_out, rho_th, rho));
    report.state_unattenuated.push_back(
        state_fid_unattenuated(rho_out, rho_th));
    report.state_avg_attenuated += report.state_attenuated.back();
    report.state_avg_unattenuated += report.state_unattenuated.back();
  }
  report.state_avg_attenuated /= double(report.state_attenuated.size());
  report.state_avg_unattenuated /= double(report.state_unattenuated.size());

  const OperatorBasis basis =
      n_work == 1 ? OperatorBasis::one_qubit() : OperatorBasis::two_qubit();
  QptOptions options;
  options.inputs = inputs;
  const ChiMatrix chi_exp = qpt_chi(channel, basis, options);
  const ChiMatrix chi_th = chi_of_unitary(g.ideal_logical, basis);
  report.chi_attenuated = lambda * chi_fid_attenuated(chi_exp, chi_th);
  report.chi_unattenuated = chi_fid_unattenuated(chi_exp, chi_th);
  return report;
}

}  // namespace nhqc
