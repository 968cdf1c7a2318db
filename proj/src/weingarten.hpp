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

// Haar moments through the Weingarten function, and numerical certification of
// the moment lemmas behind the upper bounds.
//
// Every k-fold twirl Phi_k(X) = E_U[U^{(x)k} X U^{dagger (x)k}] lies in the span
// of the tensor permutations V_d(pi), so exact and Psi-approximate twirls are
// stored as k! coefficients and only materialized as dense d^k x d^k matrices
// when that fits kMaxDenseDim.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace untelegraph {

inline constexpr std::size_t kMaxMomentOrder = 6;
/// Largest d^k for coefficient-level twirls.
inline constexpr std::size_t kMaxTensorDim = 65536;
/// Largest d^k (or Choi dimension) that is materialized as a dense matrix.
inline constexpr std::size_t kMaxDenseDim = 4096;

using Permutation = std::vector<int>;

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
std::size_t cycle_count(const Permutation& p);
/// Cycle lengths, descending.
std::vector<int> cycle_type(const Permutation& p);

/// The k! permutations of {0..k-1} in lexicographic order, with product and
/// inverse tables.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(std::size_t k);

  std::size_t degree() const { return k_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t index_of(const Permutation& p) const;
  std::size_t identity_index() const { return 0; }
  /// Index of element(a) * element(b).
  std::size_t product(std::size_t a, std::size_t b) const { return product_[a * order() + b]; }
  std::size_t inverse_index(std::size_t a) const { return inverse_[a]; }

 private:
  std::size_t k_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> product_;
  std::vector<std::size_t> inverse_;
};

/// Gram matrix G[pi][sigma] = d^{#cycles(pi^{-1} sigma)} over S_k and its inverse,
/// whose entries are Wg(pi^{-1} sigma, d).
class WeingartenTable {
 public:
  /// Requires 1 <= k <= kMaxMomentOrder and d >= k (SingularGramError otherwise).
  WeingartenTable(std::size_t k, std::size_t d);

  std::size_t k() const { return group_.degree(); }
  std::size_t d() const { return d_; }
  const SymmetricGroup& group() const { return group_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const Eigen::MatrixXd& wg() const { return wg_; }
  /// Wg(p, d).
  double weingarten(const Permutation& p) const;
  /// max |G W - I|.
  double inversion_residual() const;

 private:
  SymmetricGroup group_;
  std::size_t d_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd wg_;
};

enum class TwirlMethod { kExactWeingarten, kPsiApproximation, kMonteCarlo };
std::string to_string(TwirlMethod method);

struct TwirlResult {
  std::size_t k = 0;
  std::size_t d = 0;
  TwirlMethod method = TwirlMethod::kExactWeingarten;
  /// Coefficients over SymmetricGroup(k) elements (exact and Psi only).
  std::vector<Complex> coefficients;
  /// Dense d^k x d^k output; empty when d^k > kMaxDenseDim.
  ComplexMatrix output;
  /// Entrywise standard error (Monte Carlo only).
  Eigen::MatrixXd std_error;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  /// Tr[P * output], using the coefficients when available.
  Complex expectation(const ComplexMatrix& p) const;
};

/// Tr[V_d(perm)^{-1} X] for dense X of dimension d^k.
Complex permutation_trace(const Permutation& perm, std::size_t d, const ComplexMatrix& x);
/// Tr[V_d(perm)^{-1} (A_0 (x) ... (x) A_{k-1})]; factorizes over the cycles of perm.
Complex permutation_trace(const Permutation& perm, std::span<const ComplexMatrix> factors);
/// Tr[P V_d(perm)].
Complex trace_with_permutation(const ComplexMatrix& p, const Permutation& perm, std::size_t d);
/// sum_i c_i V_d(group.element(i)) as a dense matrix.
ComplexMatrix permutation_combination(const SymmetricGroup& group, std::size_t d,
                                      std::span<const Complex> coefficients);

TwirlResult exact_twirl(const WeingartenTable& table, const ComplexMatrix& x);
/// Twirl of a product operator A_0 (x) ... (x) A_{k-1}, never forming it densely.
TwirlResult exact_twirl(const WeingartenTable& table, std::span<const ComplexMatrix> factors);
TwirlResult exact_twirl(std::size_t k, std::size_t d, const ComplexMatrix& x);

TwirlResult psi_twirl(std::size_t k, std::size_t d, const ComplexMatrix& x);

/// Sample mean of U^{(x)k} X U^{dagger (x)k} over Haar keys RngStream(seed, i).
TwirlResult mc_twirl(std::size_t k, std::size_t d, const ComplexMatrix& x, std::size_t samples,
                     std::uint64_t seed);

/// Coefficients c_I, c_F of the second-moment twirl of (Pi_0 - Pi_1)^{(x)2} for the
/// one-bit scheme at dimension d, with the conjugate orientation E[conj(U)^{(x)2} X U^{T (x)2}].
struct SecondMomentReport {
  std::size_t d = 0;
  double c_identity = 0.0;
  double c_flip = 0.0;
  double expected_identity = 0.0;  // -1/(d^2-1)
  double expected_flip = 0.0;      // d/(d^2-1)
  double max_entry_deviation = 0.0;
  bool pass = false;
};
SecondMomentReport second_moment_check(std::size_t d, double tolerance = 1e-9);

/// Positive-input consequence of (1 - k^2/d) Psi_k <= Phi_k <= (1 + k^2/d) Psi_k,
/// plus the complete-positivity version through the group algebra of S_k x S_k.
struct BracketReport {
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Per trial: min eigenvalue of (1 + k^2/d) Psi(X) - Phi(X), Tr X = 1.
  std::vector<double> upper_gap_min;
  /// Per trial: min eigenvalue of Phi(X) - (1 - k^2/d) Psi(X), Tr X = 1.
  std::vector<double> lower_gap_min;
  double min_eigenvalue = 0.0;  // over both lists
  bool pass = false;
  /// Min eigenvalues of the Choi matrices of the two difference maps, when k <= 4.
  std::optional<double> cp_upper_min;
  std::optional<double> cp_lower_min;
  std::optional<bool> cp_pass;
};

/// Throws PreconditionError unless d > sqrt(6) k^{7/4}.
BracketReport lemma_bracket_check(std::size_t k, std::size_t d, std::size_t trials,
                                  std::uint64_t seed, double tolerance = 1e-8);

enum class ChoiRoute { kGroupAlgebra, kDense };

struct ChoiBracket {
  double upper_min;  // min eig of J((1 + k^2/d) Psi - Phi)
  double lower_min;  // min eig of J(Phi - (1 - k^2/d) Psi)
};

/// Minimum eigenvalues of the Choi matrices of the two difference maps. The
/// group-algebra route works in the regular representation of S_k x S_k (size
/// (k!)^2, k <= 4, needs d >= k); the dense route builds the d^{2k}-dimensional
/// Choi matrix (capped at kMaxDenseDim). No lemma precondition is enforced.
ChoiBracket choi_bracket(std::size_t k, std::size_t d, ChoiRoute route);

/// Choi matrix of X -> sum_{pi, sigma} a[pi][sigma] Tr[V(sigma)^{-1} X] V(pi), i.e.
/// sum a[pi][sigma] V(sigma) (x) V(pi). Dense; for tests and the dense route.
ComplexMatrix permutation_map_choi(const SymmetricGroup& group, std::size_t d,
                                   const Eigen::MatrixXd& a);

struct MomentProbe {
  std::string label;
  double trace_p = 0.0;
  double haar_value = 0.0;  // E_U Tr[P (U sigma U^dagger)^{(x)k}]
  double deviation = 0.0;   // |haar_value - Tr P / d^k|
  double ratio = 0.0;       // deviation / (Tr P / d^k)
  bool within_bound = false;
};

struct MomentReport {
  std::size_t r = 0;
  std::size_t n = 0;
  std::vector<std::size_t> parts;  // k_i per message; sum is k
  std::size_t k = 0;
  double bound_factor = 0.0;  // 7 k^2 / r
  double max_ratio = 0.0;
  std::vector<MomentProbe> probes;
  bool pass = false;
};

/// |E Tr[P (U sigma_0 U^dagger)^{(x)k}] - Tr P/d^k| <= (Tr P/d^k) 7 k^2 / r, checked
/// exactly for structured and random 0 <= P <= I. Throws PreconditionError if
/// k^2 > r.
MomentReport moment_deviation_check(std::size_t r, std::size_t n, std::size_t k,
                                    std::size_t random_trials = 8, std::uint64_t seed = 1);

/// Same bound for (U sigma_0 U^dagger)^{(x)k_0} (x) (U sigma_1 U^dagger)^{(x)k_1} (x) ...
MomentReport mixed_moment_deviation_check(std::size_t r, std::size_t n,
                                          std::span<const std::size_t> parts,
                                          std::size_t random_trials = 8,
                                          std::uint64_t seed = 1);

}  // namespace untelegraph
