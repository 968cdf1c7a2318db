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

// Closed forms for the attack values and the security bounds of the Haar
// scheme. Upper bounds that exceed 1 are clamped and flagged vacuous; results
// that carry an uncomputed O(.) remainder are labelled leading-order.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace untelegraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ValueKind { kExact, kUpper, kLower, kAsymptotic };
enum class Exactness { kRationalExact, kFloat, kLeadingOrder };

std::string to_string(ValueKind kind);
std::string to_string(Exactness exactness);

struct ExactValue {
  Rational exact;
  double value = 0.0;

  /// "p/q" in lowest terms.
  std::string rational() const;
};

/// Rational -> nearest double, safe for numerators/denominators beyond the
/// double range.
double to_double(const Rational& q);

/// C(n, k) as an arbitrary-size integer.
BigInt binomial(unsigned n, unsigned k);

/// Single-copy bit attack value: 1/2 + C(2r, r) / 2^(2r+1).
ExactValue bit_exact_value(std::size_t r);

/// Distinguishing attack value; identical to the bit value and independent of n.
ExactValue distinguish_exact_value(std::size_t r);

/// I_x(a, b), continued-fraction evaluation with relative accuracy ~1e-14.
double regularized_incomplete_beta(double x, double a, double b);

struct AsymptoticBracket {
  double lower;      // 1/2 + (1 - 1/(3d)) / sqrt(2 pi d)
  double asymptote;  // 1/2 + 1/sqrt(2 pi d), the leading-order value
  double upper;      // 1/2 + 1/sqrt(2 pi d)
};

/// Stirling bracket on the bit attack value at ciphertext dimension d (even).
AsymptoticBracket bit_asymptotic_brackets(std::size_t d);

/// Majority of t independent rounds each won with probability p; ties at even t
/// are broken by a fair coin.
double majority_exact_value(double p, std::size_t t);

struct Bracket {
  double lower;
  double upper;
};

/// 1/2 + sqrt(t) delta / 3 <= value <= 1/2 + sqrt(t) delta, valid for t >= 4
/// and 0 < delta <= 1 / (2 sqrt(t - 1)). Throws PreconditionError outside.
Bracket majority_brackets(double delta, std::size_t t);

struct SeriesValue {
  double value = 0.0;
  /// Rigorous bound on the omitted tail mass.
  double tail_bound = 0.0;
  /// Number of total-weight shells summed.
  std::size_t shells = 0;
};

/// n-message argmax attack value, summed shell by shell in S = q_1 + ... + q_{n-1}
/// until the omitted tail is <= tol.
SeriesValue multimessage_series(std::size_t r, std::size_t n, double tol);
double multimessage_series_value(std::size_t r, std::size_t n, double tol);

struct ReductionLower {
  double value;       // (2/n) * distinguishing value
  double asymptotic;  // 1/n + 1/(n sqrt(pi r)), leading order
};

ReductionLower telegraphing_lower_from_distinguish(std::size_t r, std::size_t n);

/// 1/2 + 1 / (2 sqrt(d + 1)) for even d >= 2.
double ute_upper_bound_bit(std::size_t d);

struct ClampedBound {
  double value;  // min(1, raw)
  double raw;
  bool vacuous;  // raw >= 1
};

/// 1/2 + 7t / sqrt(r).
ClampedBound ute_upper_bound_tcopy(std::size_t r, std::size_t t);

/// 1/2 + 7Q / sqrt(r); n is carried for the equivalent (d, n) parameterization
/// 1/2 + 7Q sqrt(n) / sqrt(d) and does not change the value.
ClampedBound collusion_upper_bound(std::size_t r, std::size_t q, std::size_t n);

enum class LogBase { kBinary, kNatural };

/// 3 eta d (log d / (N^2 s))^(1/3).
double equivalence_gap(std::size_t d, std::size_t n_messages, std::uint64_t receivers, double eta,
                       LogBase base = LogBase::kBinary);

/// Smallest receiver count s with equivalence_gap(d, N, s, eta) <= target.
std::uint64_t min_receivers_for_gap(std::size_t d, std::size_t n_messages, double eta,
                                    double target, LogBase base = LogBase::kBinary);

struct GeneralLowerBounds {
  double telegraphing;     // c^N_{1->1}|M
  double cloning_1_to_2;   // c^N_{1->2}
  double cloning_t_to_t1;  // c^N_{t->t+1}
};

/// Leading-order lower bounds for any correct scheme with ciphertext dimension
/// d and message set size M.
GeneralLowerBounds general_lower_bounds(std::size_t d, std::size_t m, std::size_t n_messages,
                                        std::size_t t);

struct TcopyBrackets {
  double lower;  // leading order: 1/2 + sqrt(t / (pi r)) / 6
  ClampedBound upper;
};

TcopyBrackets haar_tcopy_brackets(std::size_t r, std::size_t t);

}  // namespace untelegraph
