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

#include <doctest.h>

#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "nhqc/gates.hpp"
#include "nhqc/holonomy.hpp"
#include "oracle.hpp"

using namespace nhqc;

namespace {

const std::vector<std::string> kLogicalOne = {"10", "11"};
const std::vector<std::string> kLogicalTwo = {"100", "101", "110", "111"};

}  // namespace

TEST_CASE("projector: literals and algebraic invariants") {
  const Subspace code = Subspace::from_labels(2, kLogicalOne);
  Matrix expected = Matrix::Zero(4, 4);
  expected(2, 2) = expected(3, 3) = 1.0;
  CHECK(max_abs_diff(projector(code).matrix(), expected) == 0.0);

  const Subspace full = Subspace::from_labels(1, {"0", "1"});
  CHECK(max_abs_diff(projector(full).matrix(),
                     Matrix(Matrix::Identity(2, 2))) == 0.0);

  const Subspace single = Subspace::from_labels(1, {"0"});
  Matrix diag10 = Matrix::Zero(2, 2);
  diag10(0, 0) = 1.0;
  CHECK(max_abs_diff(projector(single).matrix(), diag10) == 0.0);

  const Matrix p = projector(code).matrix();
  CHECK(frobenius_norm(p * p - p) < 1e-11);
  CHECK(std::abs(p.trace() - Complex(2, 0)) < 1e-12);
}

TEST_CASE("projector: invariant under basis rotation within the span") {
  const Subspace code = Subspace::from_labels(3, kLogicalTwo);
  const Matrix mix = random_unitary(2, 311).matrix();
  const Matrix rotated = code.basis_matrix() * mix;
  std::vector<Vector> vectors;
  for (Eigen::Index c = 0; c < rotated.cols(); ++c) {
    vectors.push_back(rotated.col(c));
  }
  const Subspace mixed(3, vectors);
  CHECK(max_abs_diff(projector(mixed), projector(code)) < 1e-11);
}

TEST_CASE("subspace: orthonormality is enforced") {
  std::vector<Vector> skewed;
  skewed.push_back(basis_ket(1, 0));
  skewed.push_back(basis_ket(1, 0) + basis_ket(1, 1));
  CHECK_THROWS_AS(Subspace(1, skewed), std::invalid_argument);
  CHECK_THROWS_AS(Subspace::from_labels(2, {"10", "21"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Subspace::from_labels(2, {"101"}), std::invalid_argument);
}

TEST_CASE("condition (i): encoded subspaces return at the gate period") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  const auto r1 =
      check_condition_i(build_h1(std::numbers::pi / 3), one, kTau1J, 1e-9);
  CHECK(r1.pass);
  CHECK(r1.residual < 1e-9);

  const Subspace two = Subspace::from_labels(3, kLogicalTwo);
  const auto r3 = check_condition_i(build_h3(), two, kTau3J, 1e-9);
  CHECK(r3.pass);
  CHECK(r3.residual < 1e-9);
}

TEST_CASE("condition (i): generic interior time leaks") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  const auto r = check_condition_i(build_h1(0.0), one, 0.37 * kTau1J, 1e-9);
  CHECK_FALSE(r.pass);
  // Frozen from a brute-force evaluation of the interior-time propagator.
  CHECK(r.residual == doctest::Approx(1.297901038573).epsilon(1e-6));
}

TEST_CASE("condition (ii): encoded subspace has no interior matrix elements") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  const auto r = check_condition_ii(build_h2(0.7), one, kTau2J, 101, 1e-9);
  CHECK(r.pass);
  CHECK(r.residual < 1e-10);
}

TEST_CASE("condition (ii): eigenvector subspace fails with |lambda|") {
  const OperatorSum h = build_h1(0.4);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.to_dense().matrix());
  const double lambda = solver.eigenvalues()(3);
  REQUIRE(std::abs(lambda) > 0.1);
  std::vector<Vector> basis{solver.eigenvectors().col(3)};
  const Subspace eigvec(2, basis);
  const auto r = check_condition_ii(h, eigvec, kTau1J, 21, 1e-9);
  CHECK_FALSE(r.pass);
  CHECK(r.residual == doctest::Approx(std::abs(lambda)).epsilon(1e-10));
}

TEST_CASE("condition (ii): residual is constant in time for static generators") {
  const OperatorSum h = build_h1(0.4);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.to_dense().matrix());
  std::vector<Vector> basis{solver.eigenvectors().col(3)};
  const Subspace eigvec(2, basis);
  const double at_zero =
      std::abs((basis[0].adjoint() * h.to_dense().matrix() * basis[0])(0, 0));
  const auto fine = check_condition_ii(h, eigvec, kTau1J, 101, 1e-9);
  const auto coarse = check_condition_ii(h, eigvec, kTau1J, 2, 1e-9);
  CHECK(fine.residual == doctest::Approx(at_zero).epsilon(1e-12));
  CHECK(coarse.residual == doctest::Approx(at_zero).epsilon(1e-12));
}

TEST_CASE("condition (ii): trivial cases for the three-qubit generator") {
  const Subspace ground = Subspace::from_labels(3, {"000"});
  const auto r0 = check_condition_ii(build_h3(), ground, kTau3J, 11, 1e-9);
  CHECK(r0.pass);

  const Subspace two = Subspace::from_labels(3, kLogicalTwo);
  const auto r = check_condition_ii(build_h3(), two, kTau3J, 101, 1e-9);
  CHECK(r.pass);
}

TEST_CASE("holonomy_check: the three gate Hamiltonians pass both conditions") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  const Subspace two = Subspace::from_labels(3, kLogicalTwo);

  const HolonomyReport a =
      holonomy_check(build_h1(-std::numbers::pi / 4), one, kTau1J);
  CHECK(a.passed());
  const HolonomyReport b =
      holonomy_check(build_h2(-std::numbers::pi / 8), one, kTau2J);
  CHECK(b.passed());
  const HolonomyReport c = holonomy_check(build_h3(), two, kTau3J);
  CHECK(c.passed());
  CHECK(c.grid_points == 101);
}

TEST_CASE("logical_action: closed-form operators act as the encoded gates") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  const double phi1 = 0.77;
  const Matrix xz = logical_action(exact_u1(phi1), one);
  CHECK(std::abs(xz(0, 0)) < 1e-12);
  CHECK(std::abs(xz(0, 1) - std::exp(Complex(0, -phi1))) < 1e-12);
  CHECK(std::abs(xz(1, 0) - std::exp(Complex(0, phi1))) < 1e-12);

  const double phi2 = -0.31;
  const Matrix zx = logical_action(exact_u2(phi2), one);
  CHECK(std::abs(zx(0, 0) - std::cos(phi2)) < 1e-12);
  CHECK(std::abs(zx(0, 1) - Complex(0, std::sin(phi2))) < 1e-12);
  CHECK(std::abs(zx(1, 0) - Complex(0, -std::sin(phi2))) < 1e-12);
  CHECK(std::abs(zx(1, 1) + std::cos(phi2)) < 1e-12);

  const Subspace two = Subspace::from_labels(3, kLogicalTwo);
  const Matrix cnot = logical_action(exact_u3(), two);
  CHECK(max_abs_diff(cnot, ideal_cnot().matrix()) < 1e-12);
}

TEST_CASE("logical_action: respects composition on preserved subspaces") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  const DenseOperator u_a = exact_u1(0.0);
  const DenseOperator u_b = exact_u1(-0.45);
  const Matrix composed = logical_action(u_a * u_b, one);
  const Matrix product = logical_action(u_a, one) * logical_action(u_b, one);
  CHECK(max_abs_diff(composed, product) < 1e-11);
}

TEST_CASE("logical_action: leaking unitaries raise a diagnostic") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  const DenseOperator leaky =
      trotter_product(build_t1_sequence(1.3), TrotterSchedule(kTau1J, 1));
  REQUIRE(subspace_leakage(leaky, one) > 1e-3);
  try {
    logical_action(leaky, one);
    FAIL("expected ContractViolation");
  } catch (const ContractViolation& e) {
    CHECK(e.magnitude() > 1e-3);
  }
  // The unchecked extraction still works.
  const Matrix block = logical_block(leaky, one);
  CHECK(block.rows() == 2);
}

TEST_CASE("condition (ii) scan: serial, openmp and incremental agree") {
  std::mt19937_64 rng(320);
  for (int trial = 0; trial < 4; ++trial) {
    OperatorSum h(2);
    for (int t = 0; t < 4; ++t) {
      h.add(oracle::uniform(rng, -1, 1),
            PauliString(oracle::random_word(rng, 2), Complex(1, 0)));
    }
    const Subspace s = Subspace::from_labels(2, {"00", "11"});
    const double serial =
        check_condition_ii(h, s, 1.7, 64, 1e-9, par::Exec::serial).residual;
    const double openmp =
        check_condition_ii(h, s, 1.7, 64, 1e-9, par::Exec::openmp).residual;
    const double incremental = condition_ii_scan_reference(h, s, 1.7, 64);
    CHECK(serial == openmp);
    CHECK(incremental == doctest::Approx(serial).epsilon(1e-10));
  }
}

TEST_CASE("dimension and grid validation") {
  const Subspace one = Subspace::from_labels(2, kLogicalOne);
  CHECK_THROWS_AS(check_condition_i(build_h3(), one, 1.0, 1e-9),
                  DimensionMismatch);
  CHECK_THROWS_AS(check_condition_ii(build_h1(0.1), one, 1.0, 1, 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(logical_block(DenseOperator::identity(3), one),
                  DimensionMismatch);
}
