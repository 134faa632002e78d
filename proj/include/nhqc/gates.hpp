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

#include "nhqc/channel.hpp"
#include "nhqc/holonomy.hpp"
#include "nhqc/propagator.hpp"

namespace nhqc {

// Evolution periods at unit coupling; only the coupling*time products are
// physically fixed.
inline constexpr double kTau1J = 2.221441469079183;  // pi / sqrt(2)
inline constexpr double kTau2J = 3.141592653589793;  // pi
inline constexpr double kTau3J = 2.221441469079183;  // pi / sqrt(2)

/// Ancilla-plus-work register layout. Qubit 1 is the ancilla, prepared in
/// |1>; the logical basis is the ancilla=1 block of the computational basis.
class Encoding {
 public:
  /// 2-qubit register: |0>_L = |10>, |1>_L = |11>.
  static Encoding one_qubit();
  /// 3-qubit register: |100>,|101>,|110>,|111> = |00>_L..|11>_L. The first
  /// work qubit (register qubit 2) is the control of the two-qubit gate.
  static Encoding two_qubit();

  int n_register() const noexcept { return n_register_; }
  int n_work() const noexcept { return n_register_ - 1; }
  Eigen::Index logical_dim() const noexcept {
    return Eigen::Index{1} << n_work();
  }
  const Subspace& subspace() const noexcept { return subspace_; }
  /// 1-based register indices of the work qubits, {2} or {2, 3}.
  std::vector<int> work_qubits() const;

 private:
  Encoding(int n_register, Subspace subspace);

  int n_register_;
  Subspace subspace_;
};

enum class GateKind { rz, rx, cnot };
enum class GateMode { exact, trotter };

std::string to_string(GateKind kind);
std::string to_string(GateMode mode);

/// Parses "[+|-](decimal | [coef*]pi[/div])" exactly; throws ParseError.
double parse_angle(const std::string& text);

/// Parsed gate request. Text grammar (used by the CLI and config files):
///   rz:theta=pi/2:mode=trotter:n=3
///   rx:phi=pi:mode=exact
///   cnot:n=2
/// A spec with n given and no explicit mode is a trotter spec. Angles accept
/// pi-expressions ("pi/2", "-pi/4", "3*pi/4") or plain decimals.
struct GateSpec {
  GateKind kind = GateKind::rz;
  double angle = 0.0;
  GateMode mode = GateMode::exact;
  int trotter_steps = 0;  // 0 = per-kind default when mode == trotter
  double coupling = 1.0;
  std::string angle_text;  // original spelling, kept for canonical round-trips

  static GateSpec parse(const std::string& text);
  static int default_steps(GateKind kind);  // 3 (rz), 2 (rx), 2 (cnot)

  int steps() const;
  std::string canonical_text() const;
};

/// Exact-or-Trotterized register unitary together with its encoding and the
/// ideal logical target.
struct GateRealization {
  GateSpec spec;
  Encoding encoding;
  DenseOperator register_unitary;
  DenseOperator ideal_logical;

  double leakage() const;
};

/// Two-qubit generator of the z-rotation family; coefficients
/// a1 = j1 cos(phi1/2), b1 = j1 sin(phi1/2).
OperatorSum build_h1(double phi1, double j1 = 1.0);

/// Two-qubit generator of the x-rotation family; a2 = j2 sin(phi2/2),
/// b2 = j2 cos(phi2/2).
OperatorSum build_h2(double phi2, double j2 = 1.0);

/// Three-qubit generator of the controlled gate, fully expanded into 8
/// phase-+1 words with weight j3/4.
OperatorSum build_h3(double j3 = 1.0);

// Literal closed-form evolution operators at the fixed periods. Implemented
// as direct matrix constructors, independent of the exponentiation path, so
// the two routes can cross-validate.
DenseOperator exact_u1(double phi1);
DenseOperator exact_u2(double phi2);
DenseOperator exact_u3();

DenseOperator ideal_rz(double theta);
DenseOperator ideal_rx(double phi);
DenseOperator ideal_cnot();

GateRealization realize_gate(const GateSpec& spec);

/// rho_work -> Tr_ancilla[ U (|1><1| ⊗ rho_work) U† ], applied directly.
DenseOperator apply_to_work(const GateRealization& g, const DenseOperator& rho);

/// The same map assembled as a superoperator over the work space.
Channel induced_channel(const GateRealization& g,
                        par::Exec exec = par::default_exec());

/// How amplitude outside the encoded block is accounted when extracting the
/// work-qubit channel: trace discards the ancilla, project keeps only the
/// encoded block of the register unitary.
enum class LeakageMode { trace, project };

Channel gate_channel(const GateRealization& g, LeakageMode mode,
                     par::Exec exec = par::default_exec());

}  // namespace nhqc
