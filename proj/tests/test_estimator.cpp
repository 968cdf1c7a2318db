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
#include <cstring>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "estimator.hpp"
#include "oracles.hpp"

using namespace untelegraph;

namespace {

AttackSpec bit_single(std::size_t r) {
  AttackSpec spec;
  spec.kind = AttackKind::kBitSingle;
  spec.scheme = HaarScheme(r, 2);
  return spec;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("estimate converges to the bit value") {
  for (unsigned r : {1u, 2u}) {
    const auto est = estimate(bit_single(r), 100000, 2024);
    const double exact = double(oracle::bit_value(r));
    CHECK(std::abs(est.mean - exact) <= 4.0 * est.std_error);
    CHECK(est.n_samples == 100000);
    CHECK(est.master_seed == 2024);
  }
}

TEST_CASE("estimate is reproducible and independent of thread count") {
  AttackSpec spec;
  spec.kind = AttackKind::kDistinguish;
  spec.scheme = HaarScheme(1, 3);
  spec.m0 = 0;
  spec.m1 = 2;
  EstimateOptions one;
  one.threads = 1;
  one.chunk_size = 100;
  EstimateOptions many = one;
  many.threads = 4;
  const auto a = estimate(spec, 2500, 8, one);
  const auto b = estimate(spec, 2500, 8, many);
  const auto c = estimate(spec, 2500, 8, one);
  CHECK(same_bits(a.mean, b.mean));
  CHECK(same_bits(a.std_error, b.std_error));
  CHECK(same_bits(a.mean, c.mean));
  CHECK(a.attack == b.attack);
}

TEST_CASE("standard error scales like one over root n") {
  const auto small = estimate(bit_single(1), 20000, 5);
  const auto large = estimate(bit_single(1), 40000, 6);
  const double ratio = large.std_error / small.std_error;
  CHECK(ratio >= 0.6);
  CHECK(ratio <= 0.82);
}

TEST_CASE("estimate rejects bad inputs") {
  CHECK_THROWS_AS(estimate(bit_single(1), 1, 0), ParameterError);
  EstimateOptions zero;
  zero.chunk_size = 0;
  CHECK_THROWS_AS(estimate(bit_single(1), 10, 0, zero), ParameterError);
  AttackSpec bad = bit_single(1);
  bad.scheme = HaarScheme(1, 3);
  CHECK_THROWS_AS(estimate(bad, 10, 0), UnsupportedAttackError);
}

TEST_CASE("confidence intervals") {
  ValueEstimate est;
  est.mean = 0.75;
  est.std_error = 0.0;
  auto [lo0, hi0] = confidence_interval(est, 3.0);
  CHECK(lo0 == 0.75);
  CHECK(hi0 == 0.75);
  est.std_error = 0.001;
  auto [lo, hi] = confidence_interval(est, 4.0);
  CHECK(lo == doctest::Approx(0.746));
  CHECK(hi == doctest::Approx(0.754));
  est.mean = 0.999;
  est.std_error = 0.01;
  CHECK(confidence_interval(est, 2.0).second == 1.0);
  CHECK_THROWS_AS(confidence_interval(est, 0.0), ParameterError);
}

TEST_CASE("moment accumulator merge matches a two-pass computation") {
  RngStream rng(1, 1);
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back(rng.uniform() * 10.0 - 3.0);
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= double(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double var = ss / double(xs.size() - 1);

  MomentAccumulator whole, left, right;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    whole.add(xs[i]);
    (i < 377 ? left : right).add(xs[i]);
  }
  left.merge(right);
  CHECK(left.count == xs.size());
  CHECK(left.mean == doctest::Approx(mean).epsilon(1e-13));
  CHECK(left.sample_variance() == doctest::Approx(var).epsilon(1e-12));
  CHECK(whole.sample_variance() == doctest::Approx(var).epsilon(1e-12));
  MomentAccumulator empty;
  empty.merge(whole);
  CHECK(empty.mean == whole.mean);
}
