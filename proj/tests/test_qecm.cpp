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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"
#include "qecm.hpp"

using namespace untelegraph;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix out = ComplexMatrix::Zero(int(values.size()), int(values.size()));
  int i = 0;
  for (double v : values) {
    out(i, i) = v;
    ++i;
  }
  return out;
}

}  // namespace

TEST_CASE("scheme parameters") {
  CHECK_THROWS_AS(HaarScheme(0, 2), ParameterError);
  CHECK_THROWS_AS(HaarScheme(2, 1), ParameterError);
  const HaarScheme s(3, 4);
  CHECK(s.dim() == 12);
  CHECK(s.block_begin(2) == 6);
  CHECK_THROWS_AS(s.require_message(4), ParameterError);
  CHECK_THROWS_AS(s.require_key(UnitaryMatrix::identity(5)), ParameterError);
}

TEST_CASE("projectors") {
  CHECK(projector(HaarScheme(2, 2), 0) == diag({1, 1, 0, 0}));
  CHECK(projector(HaarScheme(1, 4), 3) == diag({0, 0, 0, 1}));
  for (auto [r, n] : {std::pair{1, 2}, {3, 3}, {2, 5}}) {
    const HaarScheme s(r, n);
    ComplexMatrix sum = ComplexMatrix::Zero(int(s.dim()), int(s.dim()));
    for (std::size_t m = 0; m < s.messages(); ++m) sum += projector(s, m);
    CHECK(sum == ComplexMatrix::Identity(int(s.dim()), int(s.dim())));
  }
}

TEST_CASE("encryption") {
  const HaarScheme s22(2, 2);
  CHECK((encrypt(s22, 0, UnitaryMatrix::identity(4)).state.matrix() - diag({.5, .5, 0, 0}))
            .norm() == 0.0);

  const HaarScheme s32(3, 2);
  RngStream rng(17, 0);
  const auto u = sample_haar_unitary(6, rng);
  const auto ct = encrypt(s32, 1, u);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ct.state.matrix());
  auto ev = es.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size());
  for (int i = 0; i < 3; ++i) CHECK(std::abs(ev(i)) <= 1e-9);
  for (int i = 3; i < 6; ++i) CHECK(std::abs(ev(i) - 1.0 / 3.0) <= 1e-9);

  const auto other = encrypt(s32, 0, u);
  CHECK(std::abs((ct.state.matrix() * other.state.matrix()).trace()) <= 1e-12);
}

TEST_CASE("key covariance") {
  const HaarScheme s(2, 3);
  RngStream rng(5, 5);
  const auto u = sample_haar_unitary(6, rng);
  const auto w = sample_haar_unitary(6, rng);
  for (std::size_t m = 0; m < 3; ++m) {
    const ComplexMatrix lhs = encrypt(s, m, w * u).state.matrix();
    const ComplexMatrix rhs = conjugate(w, encrypt(s, m, u).state.matrix());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("decryption") {
  const HaarScheme s(2, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RngStream rng(seed, 0);
    const auto u = sample_haar_unitary(6, rng);
    for (std::size_t m = 0; m < 3; ++m) {
      const auto p = decrypt_distribution(s, encrypt(s, m, u), u);
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(p(int(j)) - (j == m ? 1.0 : 0.0)) <= 1e-10);
      }
    }
  }
  const Ciphertext mixed{DensityMatrix::maximally_mixed(6)};
  const auto p = decrypt_distribution(s, mixed, UnitaryMatrix::identity(6));
  for (int j = 0; j < 3; ++j) CHECK(p(j) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("decryption under an independent key averages to 1/n") {
  const HaarScheme s(2, 3);
  RngStream key_rng(123, 0);
  const auto u = sample_haar_unitary(6, key_rng);
  const auto ct = encrypt(s, 1, u);
  oracle::Stats st;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    RngStream rng(456, i);
    const auto p = decrypt_distribution(s, ct, sample_haar_unitary(6, rng));
    CHECK(p.minCoeff() >= 0.0);
    CHECK(p.maxCoeff() <= 1.0);
    st.add(p(1));
  }
  CHECK(std::abs(st.mean - 1.0 / 3.0) <= 4.0 * st.stderr_of_mean());
}

TEST_CASE("correctness check") {
  CHECK(correctness_check(HaarScheme(1, 2), 100, 1) <= 1e-9);
  CHECK(correctness_check(HaarScheme(8, 8), 100, 1) <= 1e-9);
  CHECK(correctness_check(HaarScheme(2, 3), 50, 9) == correctness_check(HaarScheme(2, 3), 50, 9));
  CHECK_THROWS_AS(correctness_check(HaarScheme(1, 2), 0, 1), ParameterError);
}
