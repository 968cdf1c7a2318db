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

#include "weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "errors.hpp"

namespace untelegraph {

namespace {

void require_order(std::size_t k) {
  if (k < 1 || k > kMaxMomentOrder) {
    throw CapacityError("moment order k must lie in [1, " + std::to_string(kMaxMomentOrder) + "]");
  }
}

std::size_t lehmer_rank(const Permutation& p) {
  const std::size_t k = p.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < k; ++j) smaller += p[j] < p[i] ? 1 : 0;
    rank = rank * (k - i) + smaller;
  }
  return rank;
}

int sign(const Permutation& p) { return (p.size() - cycle_count(p)) % 2 == 0 ? 1 : -1; }

std::vector<Complex> permutation_traces(const SymmetricGroup& group, std::size_t d,
                                        const ComplexMatrix& x) {
  std::vector<Complex> traces(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    traces[i] = permutation_trace(group.element(i), d, x);
  }
  return traces;
}

std::vector<Complex> weingarten_contract(const WeingartenTable& table,
                                         const std::vector<Complex>& traces) {
  const auto& wg = table.wg();
  std::vector<Complex> coefficients(traces.size(), Complex(0.0, 0.0));
  for (std::size_t pi = 0; pi < traces.size(); ++pi) {
    for (std::size_t sigma = 0; sigma < traces.size(); ++sigma) {
      coefficients[pi] +=
          wg(static_cast<Eigen::Index>(pi), static_cast<Eigen::Index>(sigma)) * traces[sigma];
    }
  }
  return coefficients;
}

TwirlResult coefficient_result(const SymmetricGroup& group, std::size_t d, TwirlMethod method,
                               std::vector<Complex> coefficients) {
  TwirlResult out;
  out.k = group.degree();
  out.d = d;
  out.method = method;
  out.coefficients = std::move(coefficients);
  if (tensor_dim(d, group.degree()) <= kMaxDenseDim) {
    out.output = permutation_combination(group, d, out.coefficients);
  }
  return out;
}

std::size_t require_dense_input(std::size_t k, std::size_t d, const ComplexMatrix& x,
                                std::size_t limit) {
  const std::size_t dim = tensor_dim(d, k, limit);
  if (static_cast<std::size_t>(x.rows()) != dim || static_cast<std::size_t>(x.cols()) != dim) {
    throw ParameterError("twirl input must be d^k x d^k");
  }
  return dim;
}

double lemma_threshold(std::size_t k) {
  return std::sqrt(6.0) * std::pow(static_cast<double>(k), 1.75);
}

// Coefficients A[pi][sigma] of the two difference maps, in the convention of
// permutation_map_choi: map(X) = sum A[pi][sigma] Tr[V(sigma)^{-1} X] V(pi).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> difference_map_coefficients(
    const WeingartenTable& table) {
  const auto k = static_cast<double>(table.k());
  const auto d = static_cast<double>(table.d());
  const double dim = std::pow(d, k);
  const auto order = static_cast<Eigen::Index>(table.group().order());
  const Eigen::MatrixXd psi = Eigen::MatrixXd::Identity(order, order) / dim;
  const Eigen::MatrixXd upper = (1.0 + k * k / d) * psi - table.wg();
  const Eigen::MatrixXd lower = table.wg() - (1.0 - k * k / d) * psi;
  return {upper, lower};
}

double group_algebra_min_eigenvalue(const SymmetricGroup& group, const Eigen::MatrixXd& a) {
  // Element sum a[pi][sigma] (sigma, pi) of C[S_k x S_k] in its left-regular
  // representation: L[x][g] = coefficient of x g^{-1}.
  const std::size_t order = group.order();
  const std::size_t size = order * order;
  Eigen::MatrixXd left(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t sx = 0; sx < order; ++sx) {
    for (std::size_t px = 0; px < order; ++px) {
      for (std::size_t sg = 0; sg < order; ++sg) {
        for (std::size_t pg = 0; pg < order; ++pg) {
          const std::size_t sigma = group.product(sx, group.inverse_index(sg));
          const std::size_t pi = group.product(px, group.inverse_index(pg));
          left(static_cast<Eigen::Index>(sx * order + px),
               static_cast<Eigen::Index>(sg * order + pg)) =
              a(static_cast<Eigen::Index>(pi), static_cast<Eigen::Index>(sigma));
        }
      }
    }
  }
  const Eigen::MatrixXd sym = 0.5 * (left + left.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

ComplexMatrix random_psd_unit_trace(std::size_t dim, RngStream& rng) {
  const std::size_t rank = 1 + static_cast<std::size_t>(rng.next_u64() % dim);
  const ComplexMatrix g = sample_ginibre(dim, rank, rng);
  ComplexMatrix x = g * g.adjoint();
  x /= x.trace().real();
  return x;
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ParameterError("compose: degree mismatch");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t cycle_count(const Permutation& p) { return cycle_type(p).size(); }

SymmetricGroup::SymmetricGroup(std::size_t k) : k_(k) {
  require_order(k);
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    elements_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = elements_.size();
  product_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = index_of(untelegraph::inverse(elements_[a]));
    for (std::size_t b = 0; b < n; ++b) {
      product_[a * n + b] = index_of(compose(elements_[a], elements_[b]));
    }
  }
}

std::size_t SymmetricGroup::index_of(const Permutation& p) const {
  if (p.size() != k_) throw ParameterError("SymmetricGroup: degree mismatch");
  return lehmer_rank(p);
}

WeingartenTable::WeingartenTable(std::size_t k, std::size_t d) : group_(k), d_(d) {
  if (d < k) {
    throw SingularGramError("Gram matrix over S_" + std::to_string(k) +
                            " is singular for d = " + std::to_string(d) + " < k");
  }
  const auto n = static_cast<Eigen::Index>(group_.order());
  gram_.resize(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto inv_a = group_.inverse_index(static_cast<std::size_t>(a));
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto& rel = group_.element(group_.product(inv_a, static_cast<std::size_t>(b)));
      gram_(a, b) = std::pow(static_cast<double>(d), static_cast<double>(cycle_count(rel)));
    }
  }
  wg_ = gram_.partialPivLu().inverse();
}

double WeingartenTable::weingarten(const Permutation& p) const {
  return wg_(0, static_cast<Eigen::Index>(group_.index_of(p)));
}

double WeingartenTable::inversion_residual() const {
  const auto n = gram_.rows();
  return (gram_ * wg_ - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

std::string to_string(TwirlMethod method) {
  switch (method) {
    case TwirlMethod::kExactWeingarten: return "exact-weingarten";
    case TwirlMethod::kPsiApproximation: return "psi-approximation";
    case TwirlMethod::kMonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

Complex TwirlResult::expectation(const ComplexMatrix& p) const {
  if (!coefficients.empty()) {
    const SymmetricGroup group(k);
    Complex total(0.0, 0.0);
    for (std::size_t i = 0; i < group.order(); ++i) {
      if (coefficients[i] == Complex(0.0, 0.0)) continue;
      total += coefficients[i] * trace_with_permutation(p, group.element(i), d);
    }
    return total;
  }
  if (p.rows() != output.rows() || p.cols() != output.cols()) {
    throw ParameterError("expectation: dimension mismatch");
  }
  return p.transpose().cwiseProduct(output).sum();
}

Complex permutation_trace(const Permutation& perm, std::size_t d, const ComplexMatrix& x) {
  const auto map = permutation_index_map(perm, d);
  if (static_cast<std::size_t>(x.rows()) != map.size() || x.rows() != x.cols()) {
    throw ParameterError("permutation_trace: dimension mismatch");
  }
  Complex total(0.0, 0.0);
  for (std::size_t i = 0; i < map.size(); ++i) {
    total += x(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(i));
  }
  return total;
}

Complex permutation_trace(const Permutation& perm, std::span<const ComplexMatrix> factors) {
  if (factors.size() != perm.size()) throw ParameterError("permutation_trace: factor count");
  const auto d = factors.front().rows();
  for (const auto& f : factors) {
    if (f.rows() != d || f.cols() != d) throw ParameterError("permutation_trace: factor shape");
  }
  std::vector<bool> seen(perm.size(), false);
  Complex total(1.0, 0.0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    // Along a cycle j -> perm[j] -> ... the contraction is Tr(A_j A_perm[j] ...).
    ComplexMatrix chain = factors[start];
    seen[start] = true;
    for (auto j = static_cast<std::size_t>(perm[start]); j != start;
         j = static_cast<std::size_t>(perm[j])) {
      chain = chain * factors[j];
      seen[j] = true;
    }
    total *= chain.trace();
  }
  return total;
}

Complex trace_with_permutation(const ComplexMatrix& p, const Permutation& perm, std::size_t d) {
  const auto map = permutation_index_map(perm, d);
  if (static_cast<std::size_t>(p.rows()) != map.size() || p.rows() != p.cols()) {
    throw ParameterError("trace_with_permutation: dimension mismatch");
  }
  Complex total(0.0, 0.0);
  for (std::size_t i = 0; i < map.size(); ++i) {
    total += p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(map[i]));
  }
  return total;
}

ComplexMatrix permutation_combination(const SymmetricGroup& group, std::size_t d,
                                      std::span<const Complex> coefficients) {
  if (coefficients.size() != group.order()) {
    throw ParameterError("permutation_combination: coefficient count");
  }
  const auto dim = static_cast<Eigen::Index>(tensor_dim(d, group.degree(), kMaxDenseDim));
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (coefficients[i] == Complex(0.0, 0.0)) continue;
    const auto map = permutation_index_map(group.element(i), d);
    for (std::size_t col = 0; col < map.size(); ++col) {
      out(static_cast<Eigen::Index>(map[col]), static_cast<Eigen::Index>(col)) += coefficients[i];
    }
  }
  return out;
}

TwirlResult exact_twirl(const WeingartenTable& table, const ComplexMatrix& x) {
  require_dense_input(table.k(), table.d(), x, kMaxTensorDim);
  return coefficient_result(table.group(), table.d(), TwirlMethod::kExactWeingarten,
                            weingarten_contract(table, permutation_traces(table.group(),
                                                                          table.d(), x)));
}

TwirlResult exact_twirl(const WeingartenTable& table, std::span<const ComplexMatrix> factors) {
  if (factors.size() != table.k()) throw ParameterError("exact_twirl: need k factors");
  for (const auto& f : factors) {
    if (static_cast<std::size_t>(f.rows()) != table.d() || f.rows() != f.cols()) {
      throw ParameterError("exact_twirl: factors must be d x d");
    }
  }
  tensor_dim(table.d(), table.k(), kMaxTensorDim);
  std::vector<Complex> traces(table.group().order());
  for (std::size_t i = 0; i < traces.size(); ++i) {
    traces[i] = permutation_trace(table.group().element(i), factors);
  }
  return coefficient_result(table.group(), table.d(), TwirlMethod::kExactWeingarten,
                            weingarten_contract(table, traces));
}

TwirlResult exact_twirl(std::size_t k, std::size_t d, const ComplexMatrix& x) {
  return exact_twirl(WeingartenTable(k, d), x);
}

TwirlResult psi_twirl(std::size_t k, std::size_t d, const ComplexMatrix& x) {
  const SymmetricGroup group(k);
  const std::size_t dim = require_dense_input(k, d, x, kMaxTensorDim);
  auto coefficients = permutation_traces(group, d, x);
  for (auto& c : coefficients) c /= static_cast<double>(dim);
  return coefficient_result(group, d, TwirlMethod::kPsiApproximation, std::move(coefficients));
}

TwirlResult mc_twirl(std::size_t k, std::size_t d, const ComplexMatrix& x, std::size_t samples,
                     std::uint64_t seed) {
  require_order(k);
  if (samples < 2) throw ParameterError("mc_twirl: samples must be >= 2");
  const auto dim = static_cast<Eigen::Index>(require_dense_input(k, d, x, kMaxDenseDim));

  Eigen::MatrixXd mean_re = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd mean_im = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd m2_re = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd m2_im = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t s = 0; s < samples; ++s) {
    RngStream rng(seed, s);
    const ComplexMatrix w = kron_power(sample_haar_unitary(d, rng).matrix(), k);
    const ComplexMatrix y = w * x * w.adjoint();
    const double count = static_cast<double>(s + 1);
    const Eigen::MatrixXd dre = y.real() - mean_re;
    const Eigen::MatrixXd dim_ = y.imag() - mean_im;
    mean_re += dre / count;
    mean_im += dim_ / count;
    m2_re += dre.cwiseProduct(y.real() - mean_re);
    m2_im += dim_.cwiseProduct(y.imag() - mean_im);
  }
  const auto n = static_cast<double>(samples);
  TwirlResult out;
  out.k = k;
  out.d = d;
  out.method = TwirlMethod::kMonteCarlo;
  out.output = mean_re.cast<Complex>() + Complex(0.0, 1.0) * mean_im.cast<Complex>();
  out.std_error = ((m2_re + m2_im) / (n - 1.0) / n).cwiseSqrt();
  out.samples = samples;
  out.seed = seed;
  return out;
}

SecondMomentReport second_moment_check(std::size_t d, double tolerance) {
  if (d < 2 || d % 2 != 0) throw ParameterError("second_moment_check: d must be even and >= 2");
  const auto dim = static_cast<Eigen::Index>(d);
  ComplexMatrix z = ComplexMatrix::Identity(dim, dim);
  for (Eigen::Index i = dim / 2; i < dim; ++i) z(i, i) = -1.0;
  const ComplexMatrix x = kron(z, z);

  // E[conj(U)^{(x)2} X U^{T (x)2}] = conj(Phi_2(conj(X))).
  const WeingartenTable table(2, d);
  TwirlResult twirl = exact_twirl(table, ComplexMatrix(x.conjugate()));
  for (auto& c : twirl.coefficients) c = std::conj(c);
  twirl.output = twirl.output.conjugate();

  SecondMomentReport report;
  report.d = d;
  const SymmetricGroup& group = table.group();
  report.c_identity = twirl.coefficients[group.index_of({0, 1})].real();
  report.c_flip = twirl.coefficients[group.index_of({1, 0})].real();
  const auto dd = static_cast<double>(d);
  report.expected_identity = -1.0 / (dd * dd - 1.0);
  report.expected_flip = dd / (dd * dd - 1.0);

  const std::vector<Complex> expected_coefficients = {report.expected_identity,
                                                      report.expected_flip};
  const ComplexMatrix expected = permutation_combination(group, d, expected_coefficients);
  report.max_entry_deviation = (twirl.output - expected).cwiseAbs().maxCoeff();
  report.pass = report.max_entry_deviation <= tolerance &&
                std::abs(report.c_identity - report.expected_identity) <= tolerance &&
                std::abs(report.c_flip - report.expected_flip) <= tolerance;
  return report;
}

ComplexMatrix permutation_map_choi(const SymmetricGroup& group, std::size_t d,
                                   const Eigen::MatrixXd& a) {
  const std::size_t dim = tensor_dim(d, group.degree());
  tensor_dim(dim, 2, kMaxDenseDim);
  const auto order = group.order();
  std::vector<std::vector<std::size_t>> maps;
  maps.reserve(order);
  for (const auto& p : group.elements()) maps.push_back(permutation_index_map(p, d));

  const auto big = static_cast<Eigen::Index>(dim * dim);
  ComplexMatrix choi = ComplexMatrix::Zero(big, big);
  for (std::size_t pi = 0; pi < order; ++pi) {
    for (std::size_t sigma = 0; sigma < order; ++sigma) {
      const double coeff = a(static_cast<Eigen::Index>(pi), static_cast<Eigen::Index>(sigma));
      if (coeff == 0.0) continue;
      // V(sigma) (x) V(pi) sends |i>|j> to |map_sigma(i)>|map_pi(j)>.
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          choi(static_cast<Eigen::Index>(maps[sigma][i] * dim + maps[pi][j]),
               static_cast<Eigen::Index>(i * dim + j)) += coeff;
        }
      }
    }
  }
  return choi;
}

ChoiBracket choi_bracket(std::size_t k, std::size_t d, ChoiRoute route) {
  const WeingartenTable table(k, d);
  const auto [upper, lower] = difference_map_coefficients(table);
  if (route == ChoiRoute::kGroupAlgebra) {
    if (k > 4) throw CapacityError("group-algebra Choi route supports k <= 4");
    return {group_algebra_min_eigenvalue(table.group(), upper),
            group_algebra_min_eigenvalue(table.group(), lower)};
  }
  return {min_hermitian_eigenvalue(permutation_map_choi(table.group(), d, upper)),
          min_hermitian_eigenvalue(permutation_map_choi(table.group(), d, lower))};
}

BracketReport lemma_bracket_check(std::size_t k, std::size_t d, std::size_t trials,
                                  std::uint64_t seed, double tolerance) {
  require_order(k);
  if (!(static_cast<double>(d) > lemma_threshold(k))) {
    throw PreconditionError("lemma bracket requires d > sqrt(6) k^(7/4) = " +
                            std::to_string(lemma_threshold(k)));
  }
  if (trials < 1) throw ParameterError("lemma_bracket_check: trials must be >= 1");
  const std::size_t dim = tensor_dim(d, k, kMaxDenseDim);
  const WeingartenTable table(k, d);
  const auto& group = table.group();
  const double kk = static_cast<double>(k * k) / static_cast<double>(d);

  BracketReport report;
  report.k = k;
  report.d = d;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    RngStream rng(seed, trial);
    const ComplexMatrix x = random_psd_unit_trace(dim, rng);
    const auto traces = permutation_traces(group, d, x);
    const auto phi = weingarten_contract(table, traces);
    std::vector<Complex> upper(group.order());
    std::vector<Complex> lower(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) {
      const Complex psi = traces[i] / static_cast<double>(dim);
      upper[i] = (1.0 + kk) * psi - phi[i];
      lower[i] = phi[i] - (1.0 - kk) * psi;
    }
    report.upper_gap_min.push_back(
        min_hermitian_eigenvalue(permutation_combination(group, d, upper)));
    report.lower_gap_min.push_back(
        min_hermitian_eigenvalue(permutation_combination(group, d, lower)));
  }
  report.min_eigenvalue =
      std::min(*std::min_element(report.upper_gap_min.begin(), report.upper_gap_min.end()),
               *std::min_element(report.lower_gap_min.begin(), report.lower_gap_min.end()));
  report.pass = report.min_eigenvalue >= -tolerance;

  if (k <= 4) {
    const auto cp = choi_bracket(k, d, ChoiRoute::kGroupAlgebra);
    report.cp_upper_min = cp.upper_min;
    report.cp_lower_min = cp.lower_min;
    report.cp_pass = cp.upper_min >= -tolerance && cp.lower_min >= -tolerance;
  }
  return report;
}

MomentReport moment_deviation_check(std::size_t r, std::size_t n, std::size_t k,
                                    std::size_t random_trials, std::uint64_t seed) {
  const std::vector<std::size_t> parts{k};
  return mixed_moment_deviation_check(r, n, parts, random_trials, seed);
}

MomentReport mixed_moment_deviation_check(std::size_t r, std::size_t n,
                                          std::span<const std::size_t> parts,
                                          std::size_t random_trials, std::uint64_t seed) {
  if (r < 1 || n < 2) throw ParameterError("moment check: requires r >= 1 and n >= 2");
  if (parts.empty() || parts.size() > n) {
    throw ParameterError("moment check: need between 1 and n parts");
  }
  std::size_t k = 0;
  for (auto p : parts) {
    if (p < 1) throw ParameterError("moment check: every part must be >= 1");
    k += p;
  }
  require_order(k);
  if (k * k > r) {
    throw PreconditionError("moment lemma requires k^2 <= r (k = " + std::to_string(k) +
                            ", r = " + std::to_string(r) + ")");
  }
  const std::size_t d = r * n;
  const std::size_t dim = tensor_dim(d, k, kMaxDenseDim);
  const WeingartenTable table(k, d);
  const auto& group = table.group();
  const auto big = static_cast<Eigen::Index>(dim);

  // sigma_m = Pi_m / r for the first parts.size() messages.
  std::vector<ComplexMatrix> factors;
  std::vector<ComplexMatrix> supports;
  for (std::size_t m = 0; m < parts.size(); ++m) {
    ComplexMatrix pi = ComplexMatrix::Zero(static_cast<Eigen::Index>(d),
                                           static_cast<Eigen::Index>(d));
    for (std::size_t i = r * m; i < r * (m + 1); ++i) {
      pi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    }
    for (std::size_t c = 0; c < parts[m]; ++c) {
      factors.push_back(pi / static_cast<double>(r));
      supports.push_back(pi);
    }
  }
  const TwirlResult twirl = exact_twirl(table, factors);

  MomentReport report;
  report.r = r;
  report.n = n;
  report.parts.assign(parts.begin(), parts.end());
  report.k = k;
  report.bound_factor = 7.0 * static_cast<double>(k * k) / static_cast<double>(r);

  auto probe = [&](std::string label, const ComplexMatrix& p) {
    MomentProbe out;
    out.label = std::move(label);
    out.trace_p = p.trace().real();
    out.haar_value = twirl.expectation(p).real();
    const double baseline = out.trace_p / static_cast<double>(dim);
    out.deviation = std::abs(out.haar_value - baseline);
    out.ratio = baseline > 0.0 ? out.deviation / baseline : 0.0;
    out.within_bound = out.deviation <= baseline * report.bound_factor + 1e-9;
    report.max_ratio = std::max(report.max_ratio, out.ratio);
    report.probes.push_back(std::move(out));
  };

  probe("identity", ComplexMatrix::Identity(big, big));
  ComplexMatrix support = supports.front();
  for (std::size_t i = 1; i < supports.size(); ++i) support = kron(support, supports[i]);
  probe("support", support);
  if (k >= 2) {
    std::vector<Complex> sym(group.order());
    std::vector<Complex> antisym(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) {
      sym[i] = 1.0 / static_cast<double>(group.order());
      antisym[i] = sign(group.element(i)) / static_cast<double>(group.order());
    }
    probe("symmetric", permutation_combination(group, d, sym));
    probe("antisymmetric", permutation_combination(group, d, antisym));
  }
  for (std::size_t trial = 0; trial < random_trials; ++trial) {
    RngStream rng(seed, trial);
    const std::size_t rank = 1 + static_cast<std::size_t>(rng.next_u64() % 8);
    const ComplexMatrix g = sample_ginibre(dim, std::min(rank, dim), rng);
    // Scale so the largest eigenvalue is 1, giving 0 <= P <= I.
    const double top = max_hermitian_eigenvalue(g.adjoint() * g);
    probe("random-" + std::to_string(trial), ComplexMatrix(g * g.adjoint() / top));
  }
  report.pass = std::all_of(report.probes.begin(), report.probes.end(),
                            [](const MomentProbe& p) { return p.within_bound; });
  return report;
}

}  // namespace untelegraph
