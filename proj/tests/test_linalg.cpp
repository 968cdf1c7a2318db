// Copyright 2026 The untelegraph Authors
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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "linalg.hpp"
#include "oracles.hpp"
#include "weingarten.hpp"

using namespace untelegraph;

TEST_CASE("ginibre entries have unit second moment") {
  RngStream rng(11, 0);
  oracle::Stats s;
  for (int i = 0; i < 100000; ++i) s.add(std::norm(sample_ginibre(1, rng)(0, 0)));
  CHECK(std::abs(s.mean - 1.0) <= 4.0 * s.stderr_of_mean());
}

TEST_CASE("ginibre shape and determinism") {
  RngStream a(5, 9), b(5, 9), c(5, 10);
  const ComplexMatrix x = sample_ginibre(3, a);
  CHECK(x.rows() == 3);
  CHECK(x.cols() == 3);
  CHECK(x.allFinite());
  CHECK(x == sample_ginibre(3, b));
  CHECK(x != sample_ginibre(3, c));
  RngStream d(5, 9);
  const ComplexMatrix rect = sample_ginibre(4, 2, d);
  CHECK(rect.rows() == 4);
  CHECK(rect.cols() == 2);
}

TEST_CASE("haar samples are unitary") {
  for (std::size_t dim : {1, 2, 3, 8, 33, 64}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      RngStream rng(3, s);
      const auto u = sample_haar_unitary(dim, rng);
      CHECK(u.unitarity_defect() <= kUnitarityTolerancePerDim * double(dim));
    }
  }
}

TEST_CASE("haar first and second moments of one entry") {
  // Oracle values from the exact twirls: E|U00|^2 = <0|Phi_1(|0><0|)|0>,
  // E|U00|^4 = <00|Phi_2(|00><00|)|00>.
  constexpr std::size_t d = 4;
  ComplexMatrix e0 = ComplexMatrix::Zero(d, d);
  e0(0, 0) = 1.0;
  const double first = exact_twirl(1, d, e0).output(0, 0).real();
  const double second = exact_twirl(2, d, kron(e0, e0)).output(0, 0).real();
  CHECK(first == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(second == doctest::Approx(2.0 / (d * (d + 1.0))).epsilon(1e-12));

  oracle::Stats m2, m4;
  for (std::uint64_t s = 0; s < 100000; ++s) {
    RngStream rng(21, s);
    const double w = std::norm(sample_haar_unitary(d, rng).matrix()(0, 0));
    m2.add(w);
    m4.add(w * w);
  }
  CHECK(std::abs(m2.mean - first) <= 4.0 * m2.stderr_of_mean());
  CHECK(std::abs(m4.mean - second) <= 4.0 * m4.stderr_of_mean());
}

TEST_CASE("haar left invariance smoke test") {
  constexpr std::size_t d = 3;
  RngStream wr(99, 0);
  const auto w = sample_haar_unitary(d, wr);
  oracle::Stats plain, shifted;
  for (std::uint64_t s = 0; s < 20000; ++s) {
    RngStream a(1, s), b(2, s);
    plain.add(std::norm(sample_haar_unitary(d, a).matrix().trace()));
    shifted.add(std::norm((w * sample_haar_unitary(d, b)).matrix().trace()));
  }
  const double se = std::hypot(plain.stderr_of_mean(), shifted.stderr_of_mean());
  CHECK(std::abs(plain.mean - shifted.mean) <= 4.0 * se);
}

TEST_CASE("unitary and density validation") {
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(UnitaryMatrix::from_matrix(bad), ParameterError);
  CHECK_THROWS_AS(UnitaryMatrix::from_matrix(ComplexMatrix::Zero(2, 3)), ParameterError);
  CHECK_NOTHROW(UnitaryMatrix::from_matrix(ComplexMatrix::Identity(3, 3)));

  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  CHECK_NOTHROW(DensityMatrix::from_matrix(rho));
  ComplexMatrix not_herm = rho;
  not_herm(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(not_herm), ParameterError);
  ComplexMatrix wrong_trace = 2.0 * rho;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(wrong_trace), ParameterError);
  ComplexMatrix negative = rho;
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(negative), ParameterError);
}

TEST_CASE("permutation operator action") {
  const std::vector<int> swap{1, 0};
  const auto v = permutation_operator(swap, 2).matrix();
  // |01> has index 1 and |10> has index 2.
  ComplexVector ket01 = ComplexVector::Zero(4);
  ket01(1) = 1.0;
  const ComplexVector out = v * ket01;
  CHECK(out(2) == Complex(1.0, 0.0));
  CHECK(out.cwiseAbs().sum() == doctest::Approx(1.0));

  for (std::size_t d : {2, 3}) {
    const std::vector<int> id{0, 1, 2};
    CHECK(permutation_operator(id, d).matrix() ==
          ComplexMatrix::Identity(int(d * d * d), int(d * d * d)));
  }
}

TEST_CASE("trace of permutation operators counts cycles") {
  const SymmetricGroup group(3);
  for (std::size_t d : {2, 3}) {
    for (const auto& p : group.elements()) {
      const auto tr = permutation_operator(p, d).matrix().trace().real();
      CHECK(tr == doctest::Approx(std::pow(double(d), double(cycle_count(p)))));
    }
  }
  const std::vector<int> three_cycle{1, 2, 0};
  CHECK(permutation_operator(three_cycle, 3).matrix().trace().real() == doctest::Approx(3.0));
}

TEST_CASE("permutation operators form a representation") {
  for (std::size_t k : {3, 4}) {
    const SymmetricGroup group(k);
    for (const auto& a : group.elements()) {
      for (const auto& b : group.elements()) {
        const ComplexMatrix lhs =
            permutation_operator(a, 2).matrix() * permutation_operator(b, 2).matrix();
        CHECK(lhs == permutation_operator(compose(a, b), 2).matrix());
      }
    }
  }
}

TEST_CASE("conjugate") {
  RngStream rng(4, 4);
  const ComplexMatrix x = sample_ginibre(5, rng);
  CHECK((conjugate(UnitaryMatrix::identity(5), x) - x).norm() == 0.0);
  const auto u = sample_haar_unitary(5, rng);
  const ComplexMatrix y = conjugate(u, x);
  CHECK(std::abs(y.trace() - x.trace()) <= 1e-12);

  ComplexMatrix e0 = ComplexMatrix::Zero(5, 5);
  e0(0, 0) = 1.0;
  const ComplexVector col = u.matrix().col(0);
  CHECK((conjugate(u, e0) - col * col.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("diag probabilities") {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  const RealVector p = diag_probabilities(DensityMatrix::from_matrix(rho));
  CHECK(p(0) == 0.5);
  CHECK(p(1) == 0.5);
  CHECK(p(2) == 0.0);
  CHECK(p(3) == 0.0);

  const RealVector uniform = diag_probabilities(DensityMatrix::maximally_mixed(6));
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(uniform(i) == doctest::Approx(1.0 / 6.0));

  RngStream rng(8, 1);
  const auto u = sample_haar_unitary(6, rng);
  ComplexMatrix e0 = ComplexMatrix::Zero(6, 6);
  e0(0, 0) = 1.0;
  const RealVector q = diag_probabilities(DensityMatrix::from_trusted(conjugate(u, e0)));
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(q(i) == doctest::Approx(std::norm(u.matrix()(i, 0))));
  CHECK(std::abs(q.sum() - 1.0) <= 1e-10);

  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.0 + 1e-13;
  neg(1, 1) = -1e-13;
  const RealVector clamped = diag_probabilities(DensityMatrix::from_trusted(neg));
  CHECK(clamped(1) == 0.0);
  CHECK(clamped.sum() == doctest::Approx(1.0).epsilon(1e-15));
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  CHECK_THROWS_AS(diag_probabilities(DensityMatrix::from_trusted(neg)), ParameterError);
}

TEST_CASE("kron and tensor capacity") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const ComplexMatrix k = kron(a, b);
  CHECK(k(0, 1) == Complex(1, 0));
  CHECK(k(3, 2) == Complex(4, 0));
  CHECK(k(2, 1) == Complex(3, 0));
  CHECK(kron_power(a, 3).rows() == 8);
  CHECK(tensor_dim(4, 3) == 64);
  CHECK_THROWS_AS(tensor_dim(64, 3, 65536), CapacityError);
}
