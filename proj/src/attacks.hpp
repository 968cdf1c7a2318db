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

// Telegraphing attacks against the Haar-measure scheme. Every function here
// returns the success probability for ONE fixed key, computed exactly from the
// measurement distribution; the Haar average is left to the estimator.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "qecm.hpp"

namespace untelegraph {

/// Assignment of every computational-basis outcome to a message guess.
struct DecodingSets {
  /// assignment[i] is the message guessed on outcome i.
  std::vector<std::size_t> assignment;

  std::size_t dim() const { return assignment.size(); }
  /// Outcomes mapped to `message`, ascending.
  std::vector<std::size_t> members(std::size_t message) const;
};

/// Measurement operators {P_x}; completeness sum P_x = I is validated on
/// construction to within 1e-9 in Frobenius norm.
class Povm {
 public:
  static Povm from_elements(std::vector<ComplexMatrix> elements);
  static Povm computational_basis(std::size_t dim);
  /// Random full-rank POVM with `outcomes` elements: P_x = S^{-1/2} G_x G_x^dagger S^{-1/2}.
  static Povm random(std::size_t dim, std::size_t outcomes, RngStream& rng);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }

 private:
  Povm(std::size_t dim, std::vector<ComplexMatrix> elements)
      : dim_(dim), elements_(std::move(elements)) {}
  std::size_t dim_;
  std::vector<ComplexMatrix> elements_;
};

/// d x n matrix of block weights w(i, m) = <i| U Pi_m U^dagger |i>.
Eigen::MatrixXd block_weights(const HaarScheme& scheme, const UnitaryMatrix& key);

/// Outcome i goes to the candidate maximizing <i|U sigma_m U^dagger|i>, ties to the
/// smallest message index. `messages` must be non-empty and distinct.
DecodingSets build_decoding_sets(const HaarScheme& scheme, const UnitaryMatrix& key,
                                 std::span<const std::size_t> messages);

/// Measure in the computational basis, guess the most likely message.
double single_copy_success(const HaarScheme& scheme, const UnitaryMatrix& key);

/// t independent single-copy measurements followed by majority vote (uniform
/// coin on ties). Only defined for n = 2.
double majority_success(const HaarScheme& scheme, const UnitaryMatrix& key, std::size_t t);

/// Distinguish m0 from m1 (uniform bit), ties resolved toward m0.
double distinguish_success(const HaarScheme& scheme, const UnitaryMatrix& key, std::size_t m0,
                           std::size_t m1);

/// Generic measure-and-guess attack: (1/N) sum_x max_m Tr[P_x U sigma_m U^dagger]
/// over the candidate messages.
double povm_attack_success(const HaarScheme& scheme, const UnitaryMatrix& key, const Povm& povm,
                           std::span<const std::size_t> messages);

enum class AttackKind { kBitSingle, kBitMajority, kMultiArgmax, kDistinguish, kGenericPovm };

std::string to_string(AttackKind kind);
/// Parses the CLI spelling ("bit-single", "bit-majority", ...).
std::optional<AttackKind> parse_attack_kind(std::string_view name);

struct AttackSpec {
  AttackKind kind = AttackKind::kBitSingle;
  HaarScheme scheme{1, 2};
  std::size_t copies = 1;  // t, majority only
  std::size_t m0 = 0;
  std::size_t m1 = 1;
  std::optional<Povm> povm;           // generic-povm only
  std::vector<std::size_t> messages;  // generic-povm candidates; empty = all

  /// Throws ParameterError / UnsupportedAttackError on inconsistent fields.
  void validate() const;
  /// Number of candidate messages N (the guessing floor is 1/N).
  std::size_t candidate_count() const;
  std::string describe() const;
};

/// Per-key success probability of the attack described by `spec`.
double evaluate_attack(const AttackSpec& spec, const UnitaryMatrix& key);

}  // namespace untelegraph
