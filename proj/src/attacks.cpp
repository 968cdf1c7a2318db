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

#include "attacks.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"
#include "formulas.hpp"

namespace untelegraph {

namespace {

void require_distinct(const HaarScheme& scheme, std::span<const std::size_t> messages) {
  if (messages.empty()) throw ParameterError("candidate message list is empty");
  std::vector<std::size_t> sorted(messages.begin(), messages.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("candidate messages must be distinct");
  }
  for (auto m : sorted) scheme.require_message(m);
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

}  // namespace

std::vector<std::size_t> DecodingSets::members(std::size_t message) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == message) out.push_back(i);
  }
  return out;
}

Povm Povm::from_elements(std::vector<ComplexMatrix> elements) {
  if (elements.empty()) throw ParameterError("POVM: no elements");
  const auto d = elements.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (const auto& p : elements) {
    if (p.rows() != d || p.cols() != d) throw ParameterError("POVM: element dimension mismatch");
    if (hermiticity_defect(p) > 1e-9) throw ParameterError("POVM: element not Hermitian");
    if (min_hermitian_eigenvalue(p) < -1e-9) throw ParameterError("POVM: element not PSD");
    total += p;
  }
  if ((total - ComplexMatrix::Identity(d, d)).norm() > 1e-9) {
    throw ParameterError("POVM: elements do not sum to the identity");
  }
  return Povm(static_cast<std::size_t>(d), std::move(elements));
}

Povm Povm::computational_basis(std::size_t dim) {
  if (dim == 0) throw ParameterError("POVM: dim must be >= 1");
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<ComplexMatrix> elements;
  elements.reserve(dim);
  for (Eigen::Index i = 0; i < d; ++i) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(i, i) = 1.0;
    elements.push_back(std::move(p));
  }
  return Povm(dim, std::move(elements));
}

Povm Povm::random(std::size_t dim, std::size_t outcomes, RngStream& rng) {
  if (dim == 0 || outcomes == 0) throw ParameterError("POVM::random: empty shape");
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<ComplexMatrix> raw;
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (std::size_t x = 0; x < outcomes; ++x) {
    const ComplexMatrix g = sample_ginibre(dim, rng);
    raw.push_back(g * g.adjoint());
    total += raw.back();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(total);
  const ComplexMatrix inv_sqrt = es.operatorInverseSqrt();
  std::vector<ComplexMatrix> elements;
  for (auto& p : raw) {
    ComplexMatrix e = inv_sqrt * p * inv_sqrt;
    elements.push_back(0.5 * (e + e.adjoint()));
  }
  return from_elements(std::move(elements));
}

Eigen::MatrixXd block_weights(const HaarScheme& scheme, const UnitaryMatrix& key) {
  scheme.require_key(key);
  const Eigen::MatrixXd modulus = key.matrix().cwiseAbs2();
  const auto d = static_cast<Eigen::Index>(scheme.dim());
  const auto r = static_cast<Eigen::Index>(scheme.rank());
  Eigen::MatrixXd w(d, static_cast<Eigen::Index>(scheme.messages()));
  for (Eigen::Index m = 0; m < w.cols(); ++m) {
    w.col(m) = modulus.middleCols(m * r, r).rowwise().sum();
  }
  return w;
}

DecodingSets build_decoding_sets(const HaarScheme& scheme, const UnitaryMatrix& key,
                                 std::span<const std::size_t> messages) {
  require_distinct(scheme, messages);
  const auto w = block_weights(scheme, key);
  std::vector<std::size_t> order(messages.begin(), messages.end());
  std::sort(order.begin(), order.end());

  DecodingSets sets;
  sets.assignment.resize(scheme.dim());
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    // Strict comparison while scanning in ascending order keeps the smallest
    // index among the maximizers.
    std::size_t best = order.front();
    for (auto m : order) {
      if (w(i, static_cast<Eigen::Index>(m)) > w(i, static_cast<Eigen::Index>(best))) best = m;
    }
    sets.assignment[static_cast<std::size_t>(i)] = best;
  }
  return sets;
}

double single_copy_success(const HaarScheme& scheme, const UnitaryMatrix& key) {
  const auto w = block_weights(scheme, key);
  return w.rowwise().maxCoeff().sum() / static_cast<double>(scheme.dim());
}

double majority_success(const HaarScheme& scheme, const UnitaryMatrix& key, std::size_t t) {
  if (scheme.messages() != 2) {
    throw UnsupportedAttackError("majority vote attack requires n = 2");
  }
  if (t < 1) throw ParameterError("majority vote attack requires t >= 1");
  const auto w = block_weights(scheme, key);
  const auto r = static_cast<double>(scheme.rank());
  double p[2] = {0.0, 0.0};
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    const Eigen::Index guess = w(i, 1) > w(i, 0) ? 1 : 0;
    p[guess] += w(i, guess) / r;
  }
  return 0.5 * (majority_exact_value(p[0], t) + majority_exact_value(p[1], t));
}

double distinguish_success(const HaarScheme& scheme, const UnitaryMatrix& key, std::size_t m0,
                           std::size_t m1) {
  scheme.require_message(m0);
  scheme.require_message(m1);
  if (m0 == m1) throw ParameterError("distinguishing attack requires m0 != m1");
  const auto w = block_weights(scheme, key);
  const auto c0 = static_cast<Eigen::Index>(m0);
  const auto c1 = static_cast<Eigen::Index>(m1);
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.rows(); ++i) total += std::max(w(i, c0), w(i, c1));
  return 0.5 * total / static_cast<double>(scheme.rank());
}

double povm_attack_success(const HaarScheme& scheme, const UnitaryMatrix& key, const Povm& povm,
                           std::span<const std::size_t> messages) {
  require_distinct(scheme, messages);
  if (povm.dim() != scheme.dim()) throw ParameterError("POVM dimension does not match scheme");
  std::vector<ComplexMatrix> states;
  states.reserve(messages.size());
  for (auto m : messages) states.push_back(encrypt(scheme, m, key).state.matrix());

  double total = 0.0;
  for (const auto& element : povm.elements()) {
    double best = -INFINITY;
    for (const auto& rho : states) best = std::max(best, trace_product(element, rho).real());
    total += best;
  }
  return total / static_cast<double>(messages.size());
}

std::string to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::kBitSingle: return "bit-single";
    case AttackKind::kBitMajority: return "bit-majority";
    case AttackKind::kMultiArgmax: return "multi-argmax";
    case AttackKind::kDistinguish: return "distinguish";
    case AttackKind::kGenericPovm: return "generic-povm";
  }
  return "unknown";
}

std::optional<AttackKind> parse_attack_kind(std::string_view name) {
  for (auto kind : {AttackKind::kBitSingle, AttackKind::kBitMajority, AttackKind::kMultiArgmax,
                    AttackKind::kDistinguish, AttackKind::kGenericPovm}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

void AttackSpec::validate() const {
  switch (kind) {
    case AttackKind::kBitSingle:
      if (scheme.messages() != 2) throw UnsupportedAttackError("bit-single requires n = 2");
      break;
    case AttackKind::kBitMajority:
      if (scheme.messages() != 2) throw UnsupportedAttackError("bit-majority requires n = 2");
      if (copies < 1) throw ParameterError("bit-majority requires t >= 1");
      break;
    case AttackKind::kMultiArgmax:
      break;
    case AttackKind::kDistinguish:
      scheme.require_message(m0);
      scheme.require_message(m1);
      if (m0 == m1) throw ParameterError("distinguish requires m0 != m1");
      break;
    case AttackKind::kGenericPovm:
      if (!povm) throw ParameterError("generic-povm requires a POVM");
      if (povm->dim() != scheme.dim()) throw ParameterError("POVM dimension does not match scheme");
      if (!messages.empty()) require_distinct(scheme, messages);
      break;
  }
}

std::size_t AttackSpec::candidate_count() const {
  switch (kind) {
    case AttackKind::kBitSingle:
    case AttackKind::kBitMajority:
    case AttackKind::kDistinguish:
      return 2;
    case AttackKind::kMultiArgmax:
      return scheme.messages();
    case AttackKind::kGenericPovm:
      return messages.empty() ? scheme.messages() : messages.size();
  }
  return scheme.messages();
}

std::string AttackSpec::describe() const {
  std::string out = to_string(kind) + "(r=" + std::to_string(scheme.rank()) +
                    ",n=" + std::to_string(scheme.messages());
  if (kind == AttackKind::kBitMajority) out += ",t=" + std::to_string(copies);
  if (kind == AttackKind::kDistinguish) {
    out += ",m0=" + std::to_string(m0) + ",m1=" + std::to_string(m1);
  }
  if (kind == AttackKind::kGenericPovm && povm) {
    out += ",outcomes=" + std::to_string(povm->elements().size());
  }
  return out + ")";
}

double evaluate_attack(const AttackSpec& spec, const UnitaryMatrix& key) {
  switch (spec.kind) {
    case AttackKind::kBitSingle:
    case AttackKind::kMultiArgmax:
      return single_copy_success(spec.scheme, key);
    case AttackKind::kBitMajority:
      return majority_success(spec.scheme, key, spec.copies);
    case AttackKind::kDistinguish:
      return distinguish_success(spec.scheme, key, spec.m0, spec.m1);
    case AttackKind::kGenericPovm: {
      if (!spec.povm) throw ParameterError("generic-povm requires a POVM");
      if (spec.messages.empty()) {
        std::vector<std::size_t> all(spec.scheme.messages());
        std::iota(all.begin(), all.end(), std::size_t{0});
        return povm_attack_success(spec.scheme, key, *spec.povm, all);
      }
      return povm_attack_success(spec.scheme, key, *spec.povm, spec.messages);
    }
  }
  throw ParameterError("unknown attack kind");
}

}  // namespace untelegraph
