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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace untelegraph {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(stream_index),
                    static_cast<std::uint32_t>(stream_index >> 32)};
  return std::mt19937_64(seq);
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ParameterError(std::string(what) + ": expected a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw ParameterError(std::string(what) + ": matrix has non-finite entries");
  }
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(seeded_engine(master_seed, stream_index)) {}

double RngStream::normal() { return normal_(engine_); }

double RngStream::uniform() { return std::generate_canonical<double, 64>(engine_); }

UnitaryMatrix UnitaryMatrix::from_matrix(ComplexMatrix m) {
  require_square(m, "UnitaryMatrix");
  const auto dim = static_cast<double>(m.rows());
  const double defect =
      (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
  if (defect > kUnitarityTolerancePerDim * dim) {
    throw ParameterError("UnitaryMatrix: ||U^dagger U - I||_F = " + std::to_string(defect) +
                         " exceeds tolerance");
  }
  const double det_modulus = std::abs(m.determinant());
  if (std::abs(det_modulus - 1.0) > 1e-8) {
    throw ParameterError("UnitaryMatrix: |det U| differs from 1");
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  if (dim == 0) throw ParameterError("UnitaryMatrix::identity: dim must be >= 1");
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryMatrix(ComplexMatrix::Identity(n, n));
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& other) const {
  if (dim() != other.dim()) throw ParameterError("UnitaryMatrix product: dimension mismatch");
  return UnitaryMatrix(m_ * other.m_);
}

double UnitaryMatrix::unitarity_defect() const {
  return (m_.adjoint() * m_ - ComplexMatrix::Identity(m_.rows(), m_.cols())).norm();
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
  require_square(m, "DensityMatrix");
  if (hermiticity_defect(m) > 1e-10) throw ParameterError("DensityMatrix: not Hermitian");
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw ParameterError("DensityMatrix: trace differs from 1");
  }
  if (min_hermitian_eigenvalue(m) < -1e-9) {
    throw ParameterError("DensityMatrix: negative eigenvalue");
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_trusted(ComplexMatrix m) {
  require_square(m, "DensityMatrix");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw ParameterError("DensityMatrix::maximally_mixed: dim must be >= 1");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, RngStream& rng) {
  if (rows == 0 || cols == 0) throw ParameterError("sample_ginibre: dimension must be >= 1");
  const double scale = std::sqrt(0.5);
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Row-major fill order so the sample does not depend on the storage layout.
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(scale * re, scale * im);
    }
  }
  return g;
}

ComplexMatrix sample_ginibre(std::size_t dim, RngStream& rng) {
  return sample_ginibre(dim, dim, rng);
}

UnitaryMatrix sample_haar_unitary(std::size_t dim, RngStream& rng) {
  if (dim == 0) throw ParameterError("sample_haar_unitary: dim must be >= 1");
  const ComplexMatrix g = sample_ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex rjj = r(j, j);
    const double mod = std::abs(rjj);
    // R_jj = 0 has probability zero for Gaussian input.
    if (mod > 0.0) q.col(j) *= rjj / mod;
  }
  return UnitaryMatrix(std::move(q));
}

std::size_t tensor_dim(std::size_t d, std::size_t k, std::size_t limit) {
  if (d == 0) throw ParameterError("tensor_dim: d must be >= 1");
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > limit / d) {
      throw CapacityError("tensor dimension " + std::to_string(d) + "^" + std::to_string(k) +
                          " exceeds capacity " + std::to_string(limit));
    }
    out *= d;
  }
  return out;
}

std::vector<std::size_t> permutation_index_map(std::span<const int> perm, std::size_t d) {
  const std::size_t k = perm.size();
  if (k == 0) throw ParameterError("permutation_index_map: empty permutation");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= k || seen[static_cast<std::size_t>(p)]) {
      throw ParameterError("permutation_index_map: not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  const std::size_t dim = tensor_dim(d, k);

  // place[j] = d^(k-1-j): weight of factor j in the basis index.
  std::vector<std::size_t> place(k);
  place[k - 1] = 1;
  for (std::size_t j = k - 1; j > 0; --j) place[j - 1] = place[j] * d;

  std::vector<std::size_t> map(dim);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t target = 0;
    for (std::size_t j = 0; j < k; ++j) {
      target += digits[j] * place[static_cast<std::size_t>(perm[j])];
    }
    map[i] = target;
    // Increment the mixed-radix counter; last factor is least significant.
    for (std::size_t j = k; j-- > 0;) {
      if (++digits[j] < d) break;
      digits[j] = 0;
    }
  }
  return map;
}

UnitaryMatrix permutation_operator(std::span<const int> perm, std::size_t d) {
  const auto map = permutation_index_map(perm, d);
  const auto n = static_cast<Eigen::Index>(map.size());
  ComplexMatrix v = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < map.size(); ++i) {
    v(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return UnitaryMatrix(std::move(v));
}

ComplexMatrix conjugate(const UnitaryMatrix& u, const ComplexMatrix& x) {
  if (x.rows() != x.cols() || static_cast<std::size_t>(x.rows()) != u.dim()) {
    throw ParameterError("conjugate: dimension mismatch");
  }
  return u.matrix() * x * u.matrix().adjoint();
}

RealVector diag_probabilities(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  RealVector p(m.rows());
  double total = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double v = m(i, i).real();
    if (v < -1e-12) throw ParameterError("diag_probabilities: negative diagonal entry");
    v = std::max(v, 0.0);
    p(i) = v;
    total += v;
  }
  if (!(total > 0.0)) throw ParameterError("diag_probabilities: zero trace");
  p /= total;
  return p;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& x, std::size_t k) {
  if (k == 0) return ComplexMatrix::Identity(1, 1);
  ComplexMatrix out = x;
  for (std::size_t i = 1; i < k; ++i) out = kron(out, x);
  return out;
}

double hermiticity_defect(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) return INFINITY;
  return (x - x.adjoint()).cwiseAbs().maxCoeff();
}

double min_hermitian_eigenvalue(const ComplexMatrix& x) {
  const ComplexMatrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_hermitian_eigenvalue(const ComplexMatrix& x) {
  const ComplexMatrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace untelegraph
