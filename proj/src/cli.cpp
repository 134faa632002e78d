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

#include "nhqc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nhqc/gates.hpp"
#include "nhqc/jsonout.hpp"
#include "nhqc/tomography.hpp"

namespace nhqc::cli {

namespace {

LeakageMode parse_leakage(const std::string& text) {
  if (text == "trace") return LeakageMode::trace;
  if (text == "project") return LeakageMode::project;
  throw std::invalid_argument("unknown leakage mode \"" + text + "\"");
}

QptInputs parse_inputs(const std::string& text) {
  if (text == "full") return QptInputs::full;
  if (text == "paper") return QptInputs::paper;
  throw std::invalid_argument("unknown input set \"" + text + "\"");
}

OperatorBasis work_basis(const GateRealization& g) {
  return g.encoding.n_work() == 1 ? OperatorBasis::one_qubit()
                                  : OperatorBasis::two_qubit();
}

struct ChiPair {
  ChiMatrix exp;
  ChiMatrix theory;
};

ChiPair gate_chi(const GateRealization& g, LeakageMode mode, QptInputs inputs) {
  const OperatorBasis basis = work_basis(g);
  QptOptions options;
  options.inputs = inputs;
  ChiPair pair{qpt_chi(gate_channel(g, mode), basis, options),
               chi_of_unitary(g.ideal_logical, basis)};
  return pair;
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file \"" + out_path + "\"");
  }
  file << text;
}

// ---------------------------------------------------------------------------
// gate

int cmd_gate(const GateSpec& spec, LeakageMode leakage, QptInputs inputs,
             double lambda, const std::string& out_path, std::ostream& out) {
  const GateRealization g = realize_gate(spec);
  const FidelityReport fr = gate_fidelity_report(g, leakage, inputs, lambda);
  const Channel attenuated = attenuate(gate_channel(g, leakage), lambda);

  JsonValue config = JsonValue::object();
  config["gate"] = JsonValue::string(spec.canonical_text());
  config["inputs"] =
      JsonValue::string(inputs == QptInputs::paper ? "paper" : "full");
  config["leakage"] =
      JsonValue::string(leakage == LeakageMode::trace ? "trace" : "project");
  config["lambda"] = JsonValue::number(lambda);

  JsonValue results = JsonValue::object();
  results["leakage_magnitude"] = JsonValue::number(g.leakage());
  results["register_unitary"] = json_matrix(g.register_unitary.matrix());
  results["logical_action"] = json_matrix(
      logical_block(g.register_unitary, g.encoding.subspace()));
  results["ideal_logical"] = json_matrix(g.ideal_logical.matrix());

  const auto ins = paper_inputs(g.encoding.n_work());
  JsonValue table = JsonValue::array();
  for (std::size_t i = 0; i < ins.size(); ++i) {
    JsonValue row = JsonValue::object();
    row["input"] = JsonValue::string(fr.input_labels[i]);
    row["output"] = json_matrix(attenuated.apply(ins[i]).matrix());
    row["state_fidelity_attenuated"] = JsonValue::number(fr.state_attenuated[i]);
    row["state_fidelity_unattenuated"] =
        JsonValue::number(fr.state_unattenuated[i]);
    table.append(std::move(row));
  }
  results["state_table"] = std::move(table);
  JsonValue averages = JsonValue::object();
  averages["attenuated"] = JsonValue::number(fr.state_avg_attenuated);
  averages["unattenuated"] = JsonValue::number(fr.state_avg_unattenuated);
  results["state_fidelity_average"] = std::move(averages);

  const ChiPair chi = gate_chi(g, leakage, inputs);
  results["chi"] = json_chi(chi.exp);
  results["chi_theory"] = json_chi(chi.theory);
  JsonValue chi_fids = JsonValue::object();
  chi_fids["attenuated"] = JsonValue::number(fr.chi_attenuated);
  chi_fids["unattenuated"] = JsonValue::number(fr.chi_unattenuated);
  results["chi_fidelity"] = std::move(chi_fids);

  JsonValue report = JsonValue::object();
  report["command"] = JsonValue::string("gate");
  report["config"] = std::move(config);
  report["results"] = std::move(results);
  report["pass"] = JsonValue::boolean(true);
  write_output(report.dump(), out_path, out);
  return 0;
}

// ---------------------------------------------------------------------------
// holonomy

int cmd_holonomy(const std::string& name, const std::string& phi_text,
                 double coupling, const std::string& tau_text,
                 const std::string& subspace_csv, int grid, double tol,
                 const std::string& out_path, std::ostream& out) {
  OperatorSum h(1);
  double tau = 0.0;
  int n_qubits = 0;
  double phi = phi_text.empty() ? 0.0 : parse_angle(phi_text);
  if (name == "h1") {
    h = build_h1(phi, coupling);
    tau = kTau1J / coupling;
    n_qubits = 2;
  } else if (name == "h2") {
    h = build_h2(phi, coupling);
    tau = kTau2J / coupling;
    n_qubits = 2;
  } else if (name == "h3") {
    if (!phi_text.empty()) {
      throw std::invalid_argument("holonomy: h3 takes no --phi");
    }
    h = build_h3(coupling);
    tau = kTau3J / coupling;
    n_qubits = 3;
  } else {
    throw std::invalid_argument("holonomy: unknown Hamiltonian \"" + name +
                                "\" (expected h1, h2 or h3)");
  }
  if (!tau_text.empty()) {
    tau = parse_angle(tau_text);
  }

  std::vector<std::string> labels;
  if (subspace_csv.empty()) {
    labels = n_qubits == 2 ? std::vector<std::string>{"10", "11"}
                           : std::vector<std::string>{"100", "101", "110", "111"};
  } else {
    std::stringstream ss(subspace_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      labels.push_back(item);
    }
  }
  const Subspace subspace = Subspace::from_labels(n_qubits, labels);
  const HolonomyReport hr = holonomy_check(h, subspace, tau, grid, tol);

  JsonValue config = JsonValue::object();
  config["hamiltonian"] = JsonValue::string(name);
  if (name != "h3") config["phi"] = JsonValue::number(phi);
  config["j"] = JsonValue::number(coupling);
  config["tau"] = JsonValue::number(tau);
  JsonValue basis = JsonValue::array();
  for (const auto& label : labels) basis.append(JsonValue::string(label));
  config["subspace"] = std::move(basis);
  config["grid"] = JsonValue::integer(grid);
  config["tol"] = JsonValue::number(tol);

  JsonValue results = JsonValue::object();
  JsonValue ci = JsonValue::object();
  ci["residual"] = JsonValue::number(hr.condition_i_residual);
  ci["pass"] = JsonValue::boolean(hr.condition_i_pass);
  results["condition_i"] = std::move(ci);
  JsonValue cii = JsonValue::object();
  cii["max_residual"] = JsonValue::number(hr.condition_ii_max);
  cii["pass"] = JsonValue::boolean(hr.condition_ii_pass);
  results["condition_ii"] = std::move(cii);

  JsonValue report = JsonValue::object();
  report["command"] = JsonValue::string("holonomy");
  report["config"] = std::move(config);
  report["results"] = std::move(results);
  report["pass"] = JsonValue::boolean(hr.passed());
  write_output(report.dump(), out_path, out);
  return hr.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// qpt

int cmd_qpt(const GateSpec& spec, LeakageMode leakage, QptInputs inputs,
            int random_count, std::uint64_t seed, const std::string& out_path,
            std::ostream& out) {
  const GateRealization g = realize_gate(spec);
  const ChiPair chi = gate_chi(g, leakage, inputs);

  JsonValue config = JsonValue::object();
  config["gate"] = JsonValue::string(spec.canonical_text());
  config["inputs"] =
      JsonValue::string(inputs == QptInputs::paper ? "paper" : "full");
  config["leakage"] =
      JsonValue::string(leakage == LeakageMode::trace ? "trace" : "project");
  config["seed"] = JsonValue::integer(static_cast<long long>(seed));

  JsonValue results = JsonValue::object();
  results["chi"] = json_chi(chi.exp);
  results["chi_theory"] = json_chi(chi.theory);
  JsonValue fids = JsonValue::object();
  fids["attenuated"] = JsonValue::number(chi_fid_attenuated(chi.exp, chi.theory));
  fids["unattenuated"] =
      JsonValue::number(chi_fid_unattenuated(chi.exp, chi.theory));
  results["chi_fidelity"] = std::move(fids);

  bool pass = true;
  if (random_count > 0) {
    // Inversion-vs-expansion cross-check on seeded random unitary channels.
    const OperatorBasis basis = work_basis(g);
    const int n_work = g.encoding.n_work();
    double max_dev = 0.0;
    for (int i = 0; i < random_count; ++i) {
      const DenseOperator u = random_unitary(n_work, seed + std::uint64_t(i));
      const ChiMatrix inverted = qpt_chi(Channel::from_unitary(u), basis);
      const ChiMatrix expanded = chi_of_unitary(u, basis);
      max_dev = std::max(max_dev,
                         max_abs_diff(inverted.entries, expanded.entries));
    }
    pass = max_dev < 1e-9;
    JsonValue random = JsonValue::object();
    random["count"] = JsonValue::integer(random_count);
    random["max_deviation"] = JsonValue::number(max_dev);
    random["pass"] = JsonValue::boolean(pass);
    results["random_oracle_check"] = std::move(random);
  }

  JsonValue report = JsonValue::object();
  report["command"] = JsonValue::string("qpt");
  report["config"] = std::move(config);
  report["results"] = std::move(results);
  report["pass"] = JsonValue::boolean(pass);
  write_output(report.dump(), out_path, out);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepRow {
  int steps;
  double error;
  double chi_fidelity;
};

int cmd_sweep(GateKind kind, const std::string& angle_text,
              const std::vector<int>& n_list, LeakageMode leakage,
              const std::string& format, const std::string& out_path,
              std::ostream& out) {
  if (n_list.empty()) {
    throw std::invalid_argument("sweep: empty step list");
  }
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("sweep: steps must be positive");
  }

  GateSpec base;
  base.kind = kind;
  if (kind != GateKind::cnot) {
    base.angle = parse_angle(angle_text);
    base.angle_text = angle_text;
  }
  base.mode = GateMode::exact;
  const GateRealization exact = realize_gate(base);
  const OperatorBasis basis = work_basis(exact);
  const ChiMatrix chi_th = chi_of_unitary(exact.ideal_logical, basis);

  // Sweep points are independent; results land in per-index slots and the
  // report is assembled in input order. Exceptions may not cross the
  // parallel region, so they are parked and rethrown after the join.
  std::vector<SweepRow> rows(n_list.size());
  std::exception_ptr failure;
  par::for_index(
      par::default_exec(), static_cast<std::ptrdiff_t>(n_list.size()),
      [&](std::ptrdiff_t i) {
        try {
          GateSpec spec = base;
          spec.mode = GateMode::trotter;
          spec.trotter_steps = n_list[static_cast<std::size_t>(i)];
          const GateRealization g = realize_gate(spec);
          const double err =
              product_error(g.register_unitary, exact.register_unitary);
          const ChiMatrix chi =
              qpt_chi(gate_channel(g, leakage, par::Exec::serial), basis,
                      QptOptions{.exec = par::Exec::serial});
          rows[static_cast<std::size_t>(i)] =
              SweepRow{spec.trotter_steps, err,
                       chi_fid_unattenuated(chi, chi_th)};
        } catch (...) {
          failure = std::current_exception();
        }
      });
  if (failure) {
    std::rethrow_exception(failure);
  }

  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].chi_fidelity < rows[i - 1].chi_fidelity - 1e-12) {
      monotone = false;
    }
  }

  std::string gate_label = to_string(kind);
  if (kind != GateKind::cnot) gate_label += "(" + angle_text + ")";

  if (format == "csv") {
    std::string text = "N,frobenius_error,chi_fidelity_unattenuated\n";
    for (const auto& row : rows) {
      text += std::to_string(row.steps) + "," + format_sig12(row.error) + "," +
              format_sig12(row.chi_fidelity) + "\n";
    }
    text += std::string("# gate=") + gate_label + "\n";
    text += std::string("# chi_fidelity_monotone=") +
            (monotone ? "true" : "false") + "\n";
    write_output(text, out_path, out);
  } else {
    JsonValue config = JsonValue::object();
    config["gate"] = JsonValue::string(gate_label);
    config["leakage"] =
        JsonValue::string(leakage == LeakageMode::trace ? "trace" : "project");
    JsonValue results = JsonValue::object();
    JsonValue jrows = JsonValue::array();
    for (const auto& row : rows) {
      JsonValue jrow = JsonValue::object();
      jrow["n"] = JsonValue::integer(row.steps);
      jrow["frobenius_error"] = JsonValue::number(row.error);
      jrow["chi_fidelity_unattenuated"] = JsonValue::number(row.chi_fidelity);
      jrows.append(std::move(jrow));
    }
    results["rows"] = std::move(jrows);
    results["chi_fidelity_monotone"] = JsonValue::boolean(monotone);
    JsonValue report = JsonValue::object();
    report["command"] = JsonValue::string("sweep");
    report["config"] = std::move(config);
    report["results"] = std::move(results);
    report["pass"] = JsonValue::boolean(monotone);
    write_output(report.dump(), out_path, out);
  }
  return monotone ? 0 : 1;
}

// ---------------------------------------------------------------------------
// report

struct ReportRow {
  const char* spec_text;
  double target;
};

int cmd_report(double lambda, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  constexpr double kTolerance = 0.003;
  const ReportRow table[] = {
      {"rz:theta=pi/2:mode=trotter:n=3", 0.992},
      {"rz:theta=pi:mode=trotter:n=3", 0.986},
      {"rx:phi=pi/2:mode=trotter:n=2", 0.992},
      {"rx:phi=pi:mode=trotter:n=2", 0.974},
      {"cnot:mode=trotter:n=2", 0.987},
  };

  bool all_pass = true;
  JsonValue rows = JsonValue::array();
  std::string csv =
      "gate,target,chi_fid_trace,chi_fid_project,pass,passing_modes\n";
  for (const ReportRow& row : table) {
    const GateSpec spec = GateSpec::parse(row.spec_text);
    const GateRealization g = realize_gate(spec);
    const OperatorBasis basis = work_basis(g);
    const ChiMatrix chi_th = chi_of_unitary(g.ideal_logical, basis);

    const ChiMatrix chi_trace =
        qpt_chi(gate_channel(g, LeakageMode::trace), basis);
    const ChiMatrix chi_project =
        qpt_chi(gate_channel(g, LeakageMode::project), basis);
    const double fid_trace = chi_fid_unattenuated(chi_trace, chi_th);
    const double fid_project = chi_fid_unattenuated(chi_project, chi_th);

    std::vector<std::string> passing;
    if (std::abs(fid_trace - row.target) <= kTolerance) passing.push_back("trace");
    if (std::abs(fid_project - row.target) <= kTolerance) {
      passing.push_back("project");
    }
    const bool pass = !passing.empty();
    all_pass = all_pass && pass;

    JsonValue jrow = JsonValue::object();
    jrow["gate"] = JsonValue::string(spec.canonical_text());
    jrow["target"] = JsonValue::number(row.target);
    JsonValue unatt = JsonValue::object();
    unatt["trace"] = JsonValue::number(fid_trace);
    unatt["project"] = JsonValue::number(fid_project);
    jrow["chi_fidelity_unattenuated"] = std::move(unatt);
    JsonValue att = JsonValue::object();
    att["trace"] =
        JsonValue::number(lambda * chi_fid_attenuated(chi_trace, chi_th));
    att["project"] =
        JsonValue::number(lambda * chi_fid_attenuated(chi_project, chi_th));
    jrow["chi_fidelity_attenuated"] = std::move(att);
    jrow["pass"] = JsonValue::boolean(pass);
    JsonValue modes = JsonValue::array();
    for (const auto& mode : passing) modes.append(JsonValue::string(mode));
    jrow["passing_modes"] = std::move(modes);
    rows.append(std::move(jrow));

    std::string modes_text;
    for (std::size_t i = 0; i < passing.size(); ++i) {
      modes_text += passing[i];
      if (i + 1 < passing.size()) modes_text += '+';
    }
    csv += spec.canonical_text() + "," + format_sig12(row.target) + "," +
           format_sig12(fid_trace) + "," + format_sig12(fid_project) + "," +
           (pass ? "PASS" : "FAIL") + "," + modes_text + "\n";
  }

  if (format == "csv") {
    write_output(csv, out_path, out);
  } else {
    JsonValue config = JsonValue::object();
    config["lambda"] = JsonValue::number(lambda);
    config["n1"] = JsonValue::integer(3);
    config["n2"] = JsonValue::integer(2);
    config["n3"] = JsonValue::integer(2);
    config["tolerance"] = JsonValue::number(kTolerance);
    JsonValue results = JsonValue::object();
    results["rows"] = std::move(rows);
    results["all_pass"] = JsonValue::boolean(all_pass);
    JsonValue report = JsonValue::object();
    report["command"] = JsonValue::string("report");
    report["config"] = std::move(config);
    report["results"] = std::move(results);
    report["pass"] = JsonValue::boolean(all_pass);
    write_output(report.dump(), out_path, out);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"nonadiabatic holonomic gate simulator"};
  app.require_subcommand(1);

  // gate
  auto* gate_cmd = app.add_subcommand("gate", "simulate one gate end to end");
  std::string gate_spec_text;
  std::string gate_inputs = "paper";
  std::string gate_leakage = "trace";
  double gate_lambda = 1.0;
  std::string gate_out;
  gate_cmd->add_option("spec", gate_spec_text, "gate spec, e.g. rz:theta=pi/2:mode=trotter:n=3")
      ->required();
  gate_cmd->add_option("--inputs", gate_inputs, "chi inversion input set")
      ->check(CLI::IsMember({"paper", "full"}));
  gate_cmd->add_option("--leakage", gate_leakage, "leakage accounting")
      ->check(CLI::IsMember({"trace", "project"}));
  gate_cmd->add_option("--lambda", gate_lambda, "signal attenuation in (0,1]");
  gate_cmd->add_option("--out", gate_out, "write the report to a file");

  // holonomy
  auto* hol_cmd = app.add_subcommand("holonomy", "verify the two holonomy conditions");
  std::string hol_name;
  std::string hol_phi;
  double hol_j = 1.0;
  std::string hol_tau;
  std::string hol_subspace;
  int hol_grid = 101;
  double hol_tol = 1e-9;
  std::string hol_out;
  hol_cmd->add_option("hamiltonian", hol_name, "h1, h2 or h3")->required();
  hol_cmd->add_option("--phi", hol_phi, "angle (pi-expressions accepted)");
  hol_cmd->add_option("--j", hol_j, "coupling strength");
  hol_cmd->add_option("--tau", hol_tau, "evolution period override");
  hol_cmd->add_option("--subspace", hol_subspace,
                      "comma-separated basis labels, e.g. 10,11");
  hol_cmd->add_option("--grid", hol_grid, "time-grid points");
  hol_cmd->add_option("--tol", hol_tol, "residual tolerance");
  hol_cmd->add_option("--out", hol_out, "write the report to a file");

  // qpt
  auto* qpt_cmd = app.add_subcommand("qpt", "process tomography of one gate");
  std::string qpt_spec_text;
  std::string qpt_inputs = "full";
  std::string qpt_leakage = "trace";
  int qpt_random = 0;
  std::uint64_t qpt_seed = 1;
  std::string qpt_out;
  qpt_cmd->add_option("spec", qpt_spec_text, "gate spec")->required();
  qpt_cmd->add_option("--inputs", qpt_inputs, "chi inversion input set")
      ->check(CLI::IsMember({"paper", "full"}));
  qpt_cmd->add_option("--leakage", qpt_leakage, "leakage accounting")
      ->check(CLI::IsMember({"trace", "project"}));
  qpt_cmd->add_option("--random", qpt_random,
                      "also cross-check k seeded random unitary channels");
  qpt_cmd->add_option("--seed", qpt_seed, "seed for --random");
  qpt_cmd->add_option("--out", qpt_out, "write the report to a file");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "step-count sweep of one gate");
  std::string sweep_kind;
  std::string sweep_theta;
  std::string sweep_phi;
  std::string sweep_n = "1,2,4,8,16";
  std::string sweep_leakage = "trace";
  std::string sweep_format = "csv";
  std::string sweep_out;
  sweep_cmd->add_option("gate", sweep_kind, "rz, rx or cnot")->required();
  sweep_cmd->add_option("--theta", sweep_theta, "rz angle");
  sweep_cmd->add_option("--phi", sweep_phi, "rx angle");
  sweep_cmd->add_option("--n", sweep_n, "comma-separated step counts");
  sweep_cmd->add_option("--leakage", sweep_leakage, "leakage accounting")
      ->check(CLI::IsMember({"trace", "project"}));
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", sweep_out, "write the report to a file");

  // report
  auto* report_cmd =
      app.add_subcommand("report", "five-gate fidelity table at the default step counts");
  double report_lambda = 1.0;
  std::string report_format = "json";
  std::string report_out;
  report_cmd->add_option("--lambda", report_lambda, "signal attenuation in (0,1]");
  report_cmd->add_option("--format", report_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  report_cmd->add_option("--out", report_out, "write the report to a file");

  std::vector<const char*> argv;
  argv.push_back("nhqc");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gate_cmd->parsed()) {
      return cmd_gate(GateSpec::parse(gate_spec_text),
                      parse_leakage(gate_leakage), parse_inputs(gate_inputs),
                      gate_lambda, gate_out, out);
    }
    if (hol_cmd->parsed()) {
      return cmd_holonomy(hol_name, hol_phi, hol_j, hol_tau, hol_subspace,
                          hol_grid, hol_tol, hol_out, out);
    }
    if (qpt_cmd->parsed()) {
      return cmd_qpt(GateSpec::parse(qpt_spec_text), parse_leakage(qpt_leakage),
                     parse_inputs(qpt_inputs), qpt_random, qpt_seed, qpt_out,
                     out);
    }
    if (sweep_cmd->parsed()) {
      GateKind kind = GateKind::rz;
      std::string angle = "pi/2";
      if (sweep_kind == "rz") {
        kind = GateKind::rz;
        if (!sweep_phi.empty()) {
          throw std::invalid_argument("sweep: rz takes --theta, not --phi");
        }
        if (!sweep_theta.empty()) angle = sweep_theta;
      } else if (sweep_kind == "rx") {
        kind = GateKind::rx;
        if (!sweep_theta.empty()) {
          throw std::invalid_argument("sweep: rx takes --phi, not --theta");
        }
        if (!sweep_phi.empty()) angle = sweep_phi;
      } else if (sweep_kind == "cnot") {
        kind = GateKind::cnot;
        if (!sweep_theta.empty() || !sweep_phi.empty()) {
          throw std::invalid_argument("sweep: cnot takes no angle");
        }
      } else {
        throw std::invalid_argument("sweep: unknown gate \"" + sweep_kind + "\"");
      }
      std::vector<int> n_list;
      std::stringstream ss(sweep_n);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        n_list.push_back(std::stoi(item));
      }
      return cmd_sweep(kind, angle, n_list, parse_leakage(sweep_leakage),
                       sweep_format, sweep_out, out);
    }
    if (report_cmd->parsed()) {
      if (!(report_lambda > 0.0) || report_lambda > 1.0) {
        throw std::invalid_argument("report: lambda must be in (0,1]");
      }
      return cmd_report(report_lambda, report_format, report_out, out);
    }
  } catch (const ContractViolation& e) {
    err << "numeric error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace nhqc::cli
