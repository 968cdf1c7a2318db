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

// Rank-r Haar-measure encryption of n classical messages. The ciphertext space
// is C^d with d = r*n; message m owns the contiguous basis block
// [r*m, r*(m+1)), and its ciphertext under key U is U (Pi_m / r) U^dagger.

#pragma once

#include <cstddef>
#include <cstdint>

#include "linalg.hpp"

namespace untelegraph {

class HaarScheme {
 public:
  /// Throws ParameterError unless r >= 1 and n >= 2.
  HaarScheme(std::size_t rank, std::size_t messages);

  std::size_t rank() const { return r_; }
  std::size_t messages() const { return n_; }
  std::size_t dim() const { return r_ * n_; }

  /// First basis index of message m's block.
  std::size_t block_begin(std::size_t m) const { return r_ * m; }

  void require_message(std::size_t m) const;
  void require_key(const UnitaryMatrix& key) const;

  friend bool operator==(const HaarScheme&, const HaarScheme&) = default;

 private:
  std::size_t r_;
  std::size_t n_;
};

/// A ciphertext is only its state; attacks never see (m, U).
struct Ciphertext {
  DensityMatrix state;
};

/// Diagonal 0/1 projector Pi_m (trace r).
ComplexMatrix projector(const HaarScheme& scheme, std::size_t m);

Ciphertext encrypt(const HaarScheme& scheme, std::size_t m, const UnitaryMatrix& key);

/// Undo the key and measure which message block the state lies in.
RealVector decrypt_distribution(const HaarScheme& scheme, const Ciphertext& ct,
                                const UnitaryMatrix& key);

/// Round-trips `samples` random (message, key) pairs and returns the largest
/// 1 - P(correct message).
double correctness_check(const HaarScheme& scheme, std::size_t samples, std::uint64_t seed);

}  // namespace untelegraph
