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

// Dense complex linear algebra for the simulator: Haar sampling, tensor
// permutation operators and the handful of matrix utilities the attacks and
// moment checks need. Storage is Eigen's dense column-major matrix; callers that
// serialize entries (the C API) convert to row-major explicitly.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace untelegraph {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance factor for the unitarity invariant, scaled by the dimension.
inline constexpr double kUnitarityTolerancePerDim = 1e-10;

/// Deterministic random stream keyed by (master_seed, stream_index). Two streams
/// with equal keys produce identical sequences; distinct indices give
/// statistically independent sequences. Never share one stream across threads.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  /// Standard normal N(0, 1).
  double normal();
  /// Uniform on [0, 1).
  double uniform();
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Square matrix certified unitary within kUnitarityTolerancePerDim * dim.
class UnitaryMatrix {
 public:
  /// Validates unitarity and |det| = 1; throws ParameterError otherwise.
  static UnitaryMatrix from_matrix(ComplexMatrix m);
  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint()); }
  UnitaryMatrix operator*(const UnitaryMatrix& other) const;

  /// Frobenius norm of U^dagger U - I.
  double unitarity_defect() const;

 private:
  friend UnitaryMatrix sample_haar_unitary(std::size_t, RngStream&);
  friend UnitaryMatrix permutation_operator(std::span<const int>, std::size_t);
  explicit UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates the state invariants (Hermitian 1e-10, trace 1e-10, min eigenvalue
  /// >= -1e-9); throws ParameterError otherwise.
  static DensityMatrix from_matrix(ComplexMatrix m);
  /// Skips the eigenvalue check; for states built by unitary conjugation of a
  /// known valid state.
  static DensityMatrix from_trusted(ComplexMatrix m);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// dim x dim matrix of i.i.d. standard complex Gaussians (re, im ~ N(0, 1/2)).
ComplexMatrix sample_ginibre(std::size_t dim, RngStream& rng);
ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, RngStream& rng);

/// Haar-distributed unitary: QR of a Ginibre sample, with the columns of Q
/// rephased by R_ii / |R_ii| so the factorization is unique.
UnitaryMatrix sample_haar_unitary(std::size_t dim, RngStream& rng);

/// d^k, throwing CapacityError if it does not fit in `limit`.
std::size_t tensor_dim(std::size_t d, std::size_t k, std::size_t limit = SIZE_MAX);

/// Basis map of the tensor permutation V_d(perm) on (C^d)^{(x)k}: V|i> = |map[i]>,
/// where output factor j carries input factor perm^{-1}(j). Factor 0 is the most
/// significant digit of the basis index.
std::vector<std::size_t> permutation_index_map(std::span<const int> perm, std::size_t d);

/// Dense d^k x d^k 0/1 matrix of V_d(perm). perm[j] is the image of j.
UnitaryMatrix permutation_operator(std::span<const int> perm, std::size_t d);

/// U X U^dagger.
ComplexMatrix conjugate(const UnitaryMatrix& u, const ComplexMatrix& x);

/// p_i = <i|rho|i>. Entries below -1e-12 are rejected; smaller negatives are
/// clamped to zero and the vector renormalized.
RealVector diag_probabilities(const DensityMatrix& rho);

/// Kronecker product A (x) B.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// X^{(x)k}.
ComplexMatrix kron_power(const ComplexMatrix& x, std::size_t k);

/// Largest |X - X^dagger| entry.
double hermiticity_defect(const ComplexMatrix& x);
/// Smallest eigenvalue of the Hermitian part of X.
double min_hermitian_eigenvalue(const ComplexMatrix& x);
/// Largest eigenvalue of the Hermitian part of X.
double max_hermitian_eigenvalue(const ComplexMatrix& x);

}  // namespace untelegraph
