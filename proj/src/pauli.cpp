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

#include "nhqc/pauli.hpp"

#include <cmath>

namespace nhqc {

namespace {

const Matrix& single_qubit(char letter) {
  static const Matrix i2 = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, 1;
    return m;
  }();
  static const Matrix x = [] {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  static const Matrix y = [] {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
  }();
  static const Matrix z = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  switch (letter) {
    case 'I': return i2;
    case 'X': return x;
    case 'Y': return y;
    case 'Z': return z;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") +
                                  letter + "'");
  }
}

bool is_pauli_letter(char c) {
  return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

bool valid_phase(Complex p) {
  return p == Complex(1, 0) || p == Complex(-1, 0) || p == Complex(0, 1) ||
         p == Complex(0, -1);
}

}  // namespace

PauliString::PauliString(std::string word, Complex phase)
    : word_(std::move(word)), phase_(phase) {
  if (word_.empty()) {
    throw std::invalid_argument("PauliString: word must be non-empty");
  }
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!is_pauli_letter(word_[i])) {
      throw ParseError("PauliString: illegal letter '" +
                           std::string(1, word_[i]) + "' at position " +
                           std::to_string(i + 1),
                       i + 1);
    }
  }
  if (!valid_phase(phase_)) {
    throw std::invalid_argument(
        "PauliString: phase must be one of +1, -1, +i, -i");
  }
}

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  double sign = 1.0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1.0;
    ++pos;
  }
  Complex phase(sign, 0.0);
  if (pos < text.size() && text[pos] == 'i') {
    phase = Complex(0.0, sign);
    ++pos;
  }
  if (pos >= text.size()) {
    throw ParseError("parse_pauli: expected a Pauli letter at position " +
                         std::to_string(pos + 1) + " in \"" + text + "\"",
                     pos + 1);
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!is_pauli_letter(text[i])) {
      throw ParseError("parse_pauli: illegal character '" +
                           std::string(1, text[i]) + "' at position " +
                           std::to_string(i + 1) + " in \"" + text + "\"",
                       i + 1);
    }
  }
  return PauliString(text.substr(pos), phase);
}

std::string PauliString::str() const {
  std::string prefix;
  if (phase_ == Complex(-1, 0)) {
    prefix = "-";
  } else if (phase_ == Complex(0, 1)) {
    prefix = "i";
  } else if (phase_ == Complex(0, -1)) {
    prefix = "-i";
  }
  return prefix + word_;
}

DenseOperator PauliString::to_dense() const {
  Matrix m = single_qubit(word_[0]);
  for (std::size_t i = 1; i < word_.size(); ++i) {
    m = kron(m, single_qubit(word_[i]));
  }
  return {n_qubits(), phase_ * m};
}

DenseOperator pauli_to_dense(const PauliString& p) { return p.to_dense(); }

OperatorSum::OperatorSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits_ < 1) {
    throw std::invalid_argument("OperatorSum: qubit count must be positive");
  }
}

OperatorSum::OperatorSum(
    int n_qubits, std::initializer_list<std::pair<double, const char*>> terms)
    : OperatorSum(n_qubits) {
  for (const auto& [c, text] : terms) {
    add(c, std::string(text));
  }
}

void OperatorSum::add(double coefficient, const PauliString& s) {
  if (!std::isfinite(coefficient)) {
    throw std::invalid_argument("OperatorSum: coefficient must be finite");
  }
  if (s.n_qubits() != n_qubits_) {
    throw DimensionMismatch("OperatorSum: term acts on " +
                            std::to_string(s.n_qubits()) + " qubits, sum on " +
                            std::to_string(n_qubits_));
  }
  if (!s.is_hermitian()) {
    throw std::domain_error(
        "OperatorSum: imaginary phase cannot be absorbed into a real "
        "coefficient (term " +
        s.str() + ")");
  }
  const double absorbed = coefficient * s.phase().real();
  terms_.push_back({absorbed, PauliString(s.word(), Complex(1, 0))});
}

void OperatorSum::add(double coefficient, const std::string& text) {
  add(coefficient, PauliString::parse(text));
}

DenseOperator OperatorSum::to_dense() const {
  DenseOperator out = DenseOperator::zero(n_qubits_);
  for (const auto& term : terms_) {
    out = out + term.coefficient * term.string.to_dense();
  }
  return out;
}

DenseOperator opsum_to_dense(const OperatorSum& h) { return h.to_dense(); }

}  // namespace nhqc
