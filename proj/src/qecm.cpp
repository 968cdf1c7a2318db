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

#include "qecm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace untelegraph {

HaarScheme::HaarScheme(std::size_t rank, std::size_t messages) : r_(rank), n_(messages) {
  if (rank < 1) throw ParameterError("HaarScheme: rank r must be >= 1");
  if (messages < 2) throw ParameterError("HaarScheme: message count n must be >= 2");
  if (rank > SIZE_MAX / messages) throw CapacityError("HaarScheme: r*n overflows");
}

void HaarScheme::require_message(std::size_t m) const {
  if (m >= n_) {
    throw ParameterError("message index " + std::to_string(m) + " out of range [0, " +
                         std::to_string(n_) + ")");
  }
}

void HaarScheme::require_key(const UnitaryMatrix& key) const {
  if (key.dim() != dim()) {
    throw ParameterError("key dimension " + std::to_string(key.dim()) +
                         " does not match scheme dimension " + std::to_string(dim()));
  }
}

ComplexMatrix projector(const HaarScheme& scheme, std::size_t m) {
  scheme.require_message(m);
  const auto d = static_cast<Eigen::Index>(scheme.dim());
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  const auto begin = static_cast<Eigen::Index>(scheme.block_begin(m));
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(scheme.rank()); ++i) {
    p(begin + i, begin + i) = 1.0;
  }
  return p;
}

Ciphertext encrypt(const HaarScheme& scheme, std::size_t m, const UnitaryMatrix& key) {
  scheme.require_key(key);
  scheme.require_message(m);
  // U (Pi_m / r) U^dagger = (1/r) sum over the block's columns u_j u_j^dagger.
  const auto& u = key.matrix();
  const auto block = u.middleCols(static_cast<Eigen::Index>(scheme.block_begin(m)),
                                  static_cast<Eigen::Index>(scheme.rank()));
  ComplexMatrix state = block * block.adjoint();
  state /= static_cast<double>(scheme.rank());
  return Ciphertext{DensityMatrix::from_trusted(std::move(state))};
}

RealVector decrypt_distribution(const HaarScheme& scheme, const Ciphertext& ct,
                                const UnitaryMatrix& key) {
  scheme.require_key(key);
  if (ct.state.dim() != scheme.dim()) {
    throw ParameterError("decrypt_distribution: ciphertext dimension mismatch");
  }
  const auto undone = DensityMatrix::from_trusted(conjugate(key.adjoint(), ct.state.matrix()));
  const RealVector basis = diag_probabilities(undone);
  RealVector out = RealVector::Zero(static_cast<Eigen::Index>(scheme.messages()));
  for (std::size_t m = 0; m < scheme.messages(); ++m) {
    out(static_cast<Eigen::Index>(m)) =
        basis.segment(static_cast<Eigen::Index>(scheme.block_begin(m)),
                      static_cast<Eigen::Index>(scheme.rank()))
            .sum();
  }
  return out;
}

double correctness_check(const HaarScheme& scheme, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ParameterError("correctness_check: samples must be >= 1");
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    RngStream rng(seed, s);
    const auto key = sample_haar_unitary(scheme.dim(), rng);
    const auto m = static_cast<std::size_t>(rng.next_u64() % scheme.messages());
    const auto dist = decrypt_distribution(scheme, encrypt(scheme, m, key), key);
    worst = std::max(worst, std::abs(1.0 - dist(static_cast<Eigen::Index>(m))));
  }
  return worst;
}

}  // namespace untelegraph
