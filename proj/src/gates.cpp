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

#include "nhqc/gates.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

namespace nhqc {

namespace {

double parse_decimal(const std::string& text, const std::string& context) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(context + ": malformed number \"" + text + "\"",
                     static_cast<std::size_t>(ptr - begin) + 1);
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

// [+|-] (decimal | [decimal['*']] "pi" ["/" decimal])
double parse_angle(const std::string& text) {
  if (text.empty()) {
    throw ParseError("angle: empty expression", 1);
  }
  std::string body = text;
  double sign = 1.0;
  if (body[0] == '+' || body[0] == '-') {
    if (body[0] == '-') sign = -1.0;
    body = body.substr(1);
  }
  const std::size_t pi_pos = body.find("pi");
  if (pi_pos == std::string::npos) {
    return sign * parse_decimal(body, "angle");
  }
  double coefficient = 1.0;
  if (pi_pos > 0) {
    std::string coef = body.substr(0, pi_pos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    coefficient = parse_decimal(coef, "angle");
  }
  double divisor = 1.0;
  const std::string tail = body.substr(pi_pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') {
      throw ParseError("angle: unexpected \"" + tail + "\" after pi",
                       pi_pos + 3);
    }
    divisor = parse_decimal(tail.substr(1), "angle");
    if (divisor == 0.0) {
      throw ParseError("angle: division by zero", pi_pos + 4);
    }
  }
  return sign * coefficient * std::numbers::pi / divisor;
}

Encoding::Encoding(int n_register, Subspace subspace)
    : n_register_(n_register), subspace_(std::move(subspace)) {}

Encoding Encoding::one_qubit() {
  return Encoding(2, Subspace::from_labels(2, {"10", "11"}));
}

Encoding Encoding::two_qubit() {
  return Encoding(3, Subspace::from_labels(3, {"100", "101", "110", "111"}));
}

std::vector<int> Encoding::work_qubits() const {
  std::vector<int> out;
  for (int q = 2; q <= n_register_; ++q) out.push_back(q);
  return out;
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::rz: return "rz";
    case GateKind::rx: return "rx";
    case GateKind::cnot: return "cnot";
  }
  return "?";
}

std::string to_string(GateMode mode) {
  return mode == GateMode::exact ? "exact" : "trotter";
}

int GateSpec::default_steps(GateKind kind) {
  switch (kind) {
    case GateKind::rz: return 3;
    case GateKind::rx: return 2;
    case GateKind::cnot: return 2;
  }
  return 1;
}

int GateSpec::steps() const {
  return trotter_steps > 0 ? trotter_steps : default_steps(kind);
}

GateSpec GateSpec::parse(const std::string& text) {
  const std::vector<std::string> fields = split(text, ':');
  GateSpec spec;
  bool have_angle = false;
  bool have_mode = false;
  bool have_steps = false;

  const std::string& head = fields[0];
  if (head == "rz") {
    spec.kind = GateKind::rz;
  } else if (head == "rx") {
    spec.kind = GateKind::rx;
  } else if (head == "cnot") {
    spec.kind = GateKind::cnot;
  } else {
    throw std::invalid_argument("gate spec: unknown gate \"" + head + "\"");
  }

  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::size_t eq = fields[i].find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("gate spec: expected key=value, got \"" +
                                  fields[i] + "\"");
    }
    const std::string key = fields[i].substr(0, eq);
    const std::string value = fields[i].substr(eq + 1);
    if (key == "theta" || key == "phi") {
      if (spec.kind == GateKind::cnot) {
        throw std::invalid_argument("gate spec: cnot takes no angle");
      }
      if ((key == "theta") != (spec.kind == GateKind::rz)) {
        throw std::invalid_argument("gate spec: angle key \"" + key +
                                    "\" does not match gate \"" + head + "\"");
      }
      spec.angle = parse_angle(value);
      spec.angle_text = value;
      have_angle = true;
    } else if (key == "mode") {
      if (value == "exact") {
        spec.mode = GateMode::exact;
      } else if (value == "trotter") {
        spec.mode = GateMode::trotter;
      } else {
        throw std::invalid_argument("gate spec: unknown mode \"" + value +
                                    "\"");
      }
      have_mode = true;
    } else if (key == "n") {
      int n = 0;
      auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || ptr != value.data() + value.size() || n < 1) {
        throw std::invalid_argument("gate spec: n must be a positive integer");
      }
      spec.trotter_steps = n;
      have_steps = true;
    } else if (key == "j") {
      spec.coupling = parse_decimal(value, "gate spec");
      if (spec.coupling <= 0.0) {
        throw std::invalid_argument("gate spec: coupling must be positive");
      }
    } else {
      throw std::invalid_argument("gate spec: unknown key \"" + key + "\"");
    }
  }

  if (spec.kind != GateKind::cnot && !have_angle) {
    throw std::invalid_argument("gate spec: " + head + " requires an angle");
  }
  if (have_steps && !have_mode) {
    spec.mode = GateMode::trotter;
  }
  if (have_steps && spec.mode == GateMode::exact) {
    throw std::invalid_argument("gate spec: n is meaningless with mode=exact");
  }
  return spec;
}

std::string GateSpec::canonical_text() const {
  std::string out = to_string(kind);
  if (kind == GateKind::rz) {
    out += ":theta=" + (angle_text.empty() ? format_double(angle) : angle_text);
  } else if (kind == GateKind::rx) {
    out += ":phi=" + (angle_text.empty() ? format_double(angle) : angle_text);
  }
  out += ":mode=" + to_string(mode);
  if (mode == GateMode::trotter) {
    out += ":n=" + std::to_string(steps());
  }
  if (coupling != 1.0) {
    out += ":j=" + format_double(coupling);
  }
  return out;
}

OperatorSum build_h1(double phi1, double j1) {
  const double a1 = j1 * std::cos(phi1 / 2);
  const double b1 = j1 * std::sin(phi1 / 2);
  return OperatorSum(2, {{a1 / 2, "XX"},
                         {a1 / 2, "YY"},
                         {b1 / 2, "XY"},
                         {-b1 / 2, "YX"},
                         {-a1 / 2, "XI"},
                         {a1 / 2, "XZ"},
                         {-b1 / 2, "YI"},
                         {b1 / 2, "YZ"}});
}

OperatorSum build_h2(double phi2, double j2) {
  const double a2 = j2 * std::sin(phi2 / 2);
  const double b2 = j2 * std::cos(phi2 / 2);
  return OperatorSum(2, {{a2 / 2, "YX"},
                         {-a2 / 2, "XY"},
                         {-b2 / 2, "XI"},
                         {b2 / 2, "XZ"}});
}

OperatorSum build_h3(double j3) {
  const double c = j3 / 4;
  return OperatorSum(3, {{c, "XIX"},
                         {-c, "XZX"},
                         {c, "YIY"},
                         {-c, "YZY"},
                         {-c, "XII"},
                         {c, "XZI"},
                         {c, "XIZ"},
                         {-c, "XZZ"}});
}

DenseOperator exact_u1(double phi1) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  m(2, 3) = std::exp(Complex(0.0, -phi1));
  m(3, 2) = std::exp(Complex(0.0, phi1));
  return {2, std::move(m)};
}

DenseOperator exact_u2(double phi2) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  m(2, 2) = std::cos(phi2);
  m(2, 3) = Complex(0.0, std::sin(phi2));
  m(3, 2) = Complex(0.0, -std::sin(phi2));
  m(3, 3) = -std::cos(phi2);
  return {2, std::move(m)};
}

DenseOperator exact_u3() {
  Matrix m = Matrix::Zero(8, 8);
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  m(3, 3) = -1.0;
  m(4, 4) = m(5, 5) = 1.0;
  m(6, 7) = m(7, 6) = 1.0;
  return {3, std::move(m)};
}

DenseOperator ideal_rz(double theta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(Complex(0.0, -theta / 2));
  m(1, 1) = std::exp(Complex(0.0, theta / 2));
  return {1, std::move(m)};
}

DenseOperator ideal_rx(double phi) {
  Matrix m(2, 2);
  const double c = std::cos(phi / 2);
  const Complex s(0.0, -std::sin(phi / 2));
  m << c, s, s, c;
  return {1, std::move(m)};
}

DenseOperator ideal_cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return {2, std::move(m)};
}

namespace {

// Closed-form first segment of the x-rotation: exp(+i tau2 (j/2)(XI - XZ)).
DenseOperator direct_u2_zero(double j2) {
  OperatorSum g(2, {{j2 / 2, "XI"}, {-j2 / 2, "XZ"}});
  return exact_evolution(g, -kTau2J / j2);
}

}  // namespace

GateRealization realize_gate(const GateSpec& spec) {
  const double j = spec.coupling;
  switch (spec.kind) {
    case GateKind::rz: {
      const double tau1 = kTau1J / j;
      DenseOperator u = DenseOperator::identity(2);
      if (spec.mode == GateMode::exact) {
        u = exact_evolution(build_h1(0.0, j), tau1) *
            exact_evolution(build_h1(-spec.angle / 2, j), tau1);
      } else {
        const TrotterSchedule sched(tau1, spec.steps());
        u = trotter_product(build_t1_sequence(0.0, j), sched) *
            trotter_product(build_t1_sequence(-spec.angle / 2, j), sched);
      }
      return {spec, Encoding::one_qubit(), std::move(u), ideal_rz(spec.angle)};
    }
    case GateKind::rx: {
      const double tau2 = kTau2J / j;
      DenseOperator u = DenseOperator::identity(2);
      if (spec.mode == GateMode::exact) {
        u = exact_evolution(build_h2(0.0, j), tau2) *
            exact_evolution(build_h2(-spec.angle / 2, j), tau2);
      } else {
        // The first segment needs no product formula; only the angled
        // segment is Trotterized.
        const TrotterSchedule sched(tau2, spec.steps());
        u = direct_u2_zero(j) *
            trotter_product(build_t2_sequence(-spec.angle / 2, j), sched);
      }
      return {spec, Encoding::one_qubit(), std::move(u), ideal_rx(spec.angle)};
    }
    case GateKind::cnot: {
      const double tau3 = kTau3J / j;
      DenseOperator u =
          spec.mode == GateMode::exact
              ? exact_evolution(build_h3(j), tau3)
              : trotter_product(build_t3_sequence(j),
                                TrotterSchedule(tau3, spec.steps()));
      return {spec, Encoding::two_qubit(), std::move(u), ideal_cnot()};
    }
  }
  throw std::invalid_argument("realize_gate: unknown gate kind");
}

double GateRealization::leakage() const {
  return subspace_leakage(register_unitary, encoding.subspace());
}

DenseOperator apply_to_work(const GateRealization& g, const DenseOperator& rho) {
  if (rho.n_qubits() != g.encoding.n_work()) {
    throw DimensionMismatch("apply_to_work: state must act on the work qubits");
  }
  Matrix anc = Matrix::Zero(2, 2);
  anc(1, 1) = 1.0;
  const DenseOperator full =
      g.register_unitary * tensor(DenseOperator(1, anc), rho) *
      g.register_unitary.adjoint();
  return partial_trace(full, g.encoding.work_qubits());
}

Channel induced_channel(const GateRealization& g, par::Exec exec) {
  const int n_work = g.encoding.n_work();
  return Channel::from_action(
      n_work,
      [&g, n_work](const Matrix& rho) {
        return apply_to_work(g, DenseOperator(n_work, rho)).matrix();
      },
      exec);
}

Channel gate_channel(const GateRealization& g, LeakageMode mode,
                     par::Exec exec) {
  if (mode == LeakageMode::trace) {
    return induced_channel(g, exec);
  }
  return Channel::from_block(
      g.encoding.n_work(),
      logical_block(g.register_unitary, g.encoding.subspace()));
}

}  // namespace nhqc
