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
#include <utility>
#include <vector>

#include "nhqc/dense.hpp"

namespace nhqc {

/// A phased word over {I, X, Y, Z}: phase * L1 ⊗ L2 ⊗ ... ⊗ Ln, with the
/// first letter acting on qubit 1 (the most significant bit). The phase is
/// restricted to the fourth roots of unity {+1, -1, +i, -i}; the dense
/// realization is unitary, and Hermitian exactly when the phase is real.
///
/// Text grammar (case-sensitive, no interior whitespace):
///   [+|-][i]?[IXYZ]+        e.g. "XY", "-iZY", "ZZ"
class PauliString {
 public:
  PauliString(std::string word, Complex phase);

  /// Parses the grammar above; throws ParseError naming the 1-based position
  /// of the offending character.
  static PauliString parse(const std::string& text);

  /// Canonical text: "" / "-" / "i" / "-i" phase prefix followed by the word.
  /// format(parse(t)) is the canonical form of t.
  std::string str() const;

  const std::string& word() const noexcept { return word_; }
  Complex phase() const noexcept { return phase_; }
  int n_qubits() const noexcept { return static_cast<int>(word_.size()); }
  bool is_hermitian() const noexcept { return phase_.imag() == 0.0; }

  DenseOperator to_dense() const;

 private:
  std::string word_;
  Complex phase_;
};

DenseOperator pauli_to_dense(const PauliString& p);

/// Single term of an OperatorSum; the string always carries phase +1.
struct PauliTerm {
  double coefficient;
  PauliString string;
};

/// Real-weighted sum of phase-+1 Pauli words on a fixed register. Phases
/// of ±1 are absorbed into the coefficient at insertion; imaginary phases are
/// rejected so the dense realization is Hermitian by construction.
class OperatorSum {
 public:
  explicit OperatorSum(int n_qubits);
  OperatorSum(int n_qubits,
              std::initializer_list<std::pair<double, const char*>> terms);

  void add(double coefficient, const PauliString& s);
  void add(double coefficient, const std::string& text);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  DenseOperator to_dense() const;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

DenseOperator opsum_to_dense(const OperatorSum& h);

}  // namespace nhqc
