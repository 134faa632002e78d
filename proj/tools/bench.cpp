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

// Serial-vs-OpenMP timing for the fan-out kernels. Each kernel runs the same
// computation under both policies and reports the wall-time ratio plus the
// maximum result deviation (which must be ~0: the policies share the math).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "nhqc/gates.hpp"
#include "nhqc/holonomy.hpp"
#include "nhqc/parallel.hpp"
#include "nhqc/tomography.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
  return elapsed.count();
}

void print_row(const char* name, double serial_ms, double openmp_ms,
               double deviation) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%-6.2f   max|d|=%.3g\n", name,
              serial_ms, openmp_ms, serial_ms / openmp_ms, deviation);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }

  const int grid = quick ? 501 : 20001;
  const int qpt_rounds = quick ? 2 : 24;
  const std::vector<int> sweep_steps =
      quick ? std::vector<int>{32, 64} : std::vector<int>{256, 512, 1024, 2048};

  std::printf("nhqc fan-out kernels, %d thread(s) available\n\n",
              nhqc::par::max_threads());

  // Condition-(ii) scan: per-point spectral propagation under both policies,
  // plus the incremental serial reference.
  {
    const nhqc::OperatorSum h = nhqc::build_h3();
    const nhqc::Subspace s =
        nhqc::Subspace::from_labels(3, {"100", "101", "110", "111"});
    const double tau = nhqc::kTau3J;

    double serial_result = 0.0;
    double openmp_result = 0.0;
    double reference_result = 0.0;
    const double t_serial = time_ms([&] {
      serial_result =
          nhqc::check_condition_ii(h, s, tau, grid, 1e-9, nhqc::par::Exec::serial)
              .residual;
    });
    const double t_openmp = time_ms([&] {
      openmp_result =
          nhqc::check_condition_ii(h, s, tau, grid, 1e-9, nhqc::par::Exec::openmp)
              .residual;
    });
    const double t_reference = time_ms([&] {
      reference_result = nhqc::condition_ii_scan_reference(h, s, tau, grid);
    });
    print_row("condition-ii scan (spectral)", t_serial, t_openmp,
              std::abs(serial_result - openmp_result));
    std::printf("%-34s %10.1f ms   (incremental serial reference, max|d|=%.3g)\n\n",
                "condition-ii scan (reference)", t_reference,
                std::abs(reference_result - serial_result));
  }

  // Channel assembly + chi inversion over random two-work-qubit unitaries.
  {
    const nhqc::OperatorBasis basis = nhqc::OperatorBasis::two_qubit();
    std::vector<nhqc::DenseOperator> unitaries;
    for (int i = 0; i < qpt_rounds; ++i) {
      unitaries.push_back(nhqc::random_unitary(2, 1000 + std::uint64_t(i)));
    }
    double serial_sum = 0.0;
    double openmp_sum = 0.0;
    auto run = [&](nhqc::par::Exec exec) {
      double sum = 0.0;
      for (const auto& u : unitaries) {
        nhqc::QptOptions options;
        options.exec = exec;
        const nhqc::ChiMatrix chi =
            nhqc::qpt_chi(nhqc::Channel::from_unitary(u), basis, options);
        sum += chi.entries.cwiseAbs().sum();
      }
      return sum;
    };
    const double t_serial =
        time_ms([&] { serial_sum = run(nhqc::par::Exec::serial); });
    const double t_openmp =
        time_ms([&] { openmp_sum = run(nhqc::par::Exec::openmp); });
    print_row("qpt inversion fan-out", t_serial, t_openmp,
              std::abs(serial_sum - openmp_sum));
  }

  // Trotter step sweep for the controlled gate.
  {
    const nhqc::FactorSequence seq = nhqc::build_t3_sequence();
    const nhqc::DenseOperator exact = nhqc::exact_u3();
    auto run = [&](nhqc::par::Exec exec) {
      std::vector<double> errors(sweep_steps.size());
      nhqc::par::for_index(
          exec, static_cast<std::ptrdiff_t>(sweep_steps.size()),
          [&](std::ptrdiff_t i) {
            const nhqc::TrotterSchedule sched(
                nhqc::kTau3J, sweep_steps[static_cast<std::size_t>(i)]);
            errors[static_cast<std::size_t>(i)] =
                nhqc::product_error(nhqc::trotter_product(seq, sched), exact);
          });
      double sum = 0.0;
      for (double e : errors) sum += e;
      return sum;
    };
    double serial_sum = 0.0;
    double openmp_sum = 0.0;
    const double t_serial =
        time_ms([&] { serial_sum = run(nhqc::par::Exec::serial); });
    const double t_openmp =
        time_ms([&] { openmp_sum = run(nhqc::par::Exec::openmp); });
    print_row("trotter sweep fan-out", t_serial, t_openmp,
              std::abs(serial_sum - openmp_sum));
  }

  return 0;
}
