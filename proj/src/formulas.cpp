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

#include "formulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "errors.hpp"

namespace untelegraph {

namespace {

constexpr double kPi = std::numbers::pi;

// Continued fraction for I_x(a, b) (modified Lentz), valid for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 20000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  // FIXME: switch to a power series near x ~ (a+1)/(a+b+2) for a, b > 1e8 where the
  // fraction converges too slowly for this iteration cap.
  return h;
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void require_even_dim(std::size_t d, const char* what) {
  if (d < 2 || d % 2 != 0) {
    throw ParameterError(std::string(what) + ": d must be even and >= 2");
  }
}

ClampedBound clamp_bound(double raw) { return {std::min(1.0, raw), raw, raw >= 1.0}; }

}  // namespace

std::string to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::kExact: return "exact";
    case ValueKind::kUpper: return "upper";
    case ValueKind::kLower: return "lower";
    case ValueKind::kAsymptotic: return "asymptotic";
  }
  return "unknown";
}

std::string to_string(Exactness exactness) {
  switch (exactness) {
    case Exactness::kRationalExact: return "rational-exact";
    case Exactness::kFloat: return "float";
    case Exactness::kLeadingOrder: return "leading-order";
  }
  return "unknown";
}

std::string ExactValue::rational() const {
  return boost::multiprecision::numerator(exact).str() + "/" +
         boost::multiprecision::denominator(exact).str();
}

double to_double(const Rational& q) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float num(boost::multiprecision::numerator(q));
  const Float den(boost::multiprecision::denominator(q));
  return static_cast<double>(num / den);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  // Exact at every step: out = C(n - k + i, i).
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

ExactValue bit_exact_value(std::size_t r) {
  if (r < 1) throw ParameterError("bit_exact_value: r must be >= 1");
  if (r > (1u << 20)) throw CapacityError("bit_exact_value: r too large");
  const auto rr = static_cast<unsigned>(r);
  BigInt denom = 1;
  denom <<= 2 * rr + 1;
  Rational q = Rational(1, 2) + Rational(binomial(2 * rr, rr), denom);
  return {q, to_double(q)};
}

ExactValue distinguish_exact_value(std::size_t r) {
  // The n-message distinguishing game reduces to the one-bit game at rank r.
  return bit_exact_value(r);
}

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("incomplete beta: x must lie in [0, 1]");
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("incomplete beta: a and b must be positive and finite");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

AsymptoticBracket bit_asymptotic_brackets(std::size_t d) {
  require_even_dim(d, "bit_asymptotic_brackets");
  const auto dd = static_cast<double>(d);
  const double lead = 1.0 / std::sqrt(2.0 * kPi * dd);
  return {0.5 + lead * (1.0 - 1.0 / (3.0 * dd)), 0.5 + lead, 0.5 + lead};
}

double majority_exact_value(double p, std::size_t t) {
  if (t < 1) throw ParameterError("majority_exact_value: t must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("majority_exact_value: p must lie in [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  const auto tt = static_cast<double>(t);
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  auto pmf = [&](std::size_t l) {
    const auto ll = static_cast<double>(l);
    return std::exp(log_binomial(tt, ll) + ll * lp + (tt - ll) * lq);
  };
  double total = 0.0;
  // Ascending order adds the small tail terms first.
  for (std::size_t l = t / 2 + 1; l <= t; ++l) total += pmf(l);
  if (t % 2 == 0) total += 0.5 * pmf(t / 2);
  return total;
}

Bracket majority_brackets(double delta, std::size_t t) {
  if (t < 4) throw PreconditionError("majority_brackets: requires t >= 4");
  const double limit = 1.0 / (2.0 * std::sqrt(static_cast<double>(t - 1)));
  if (!(delta > 0.0) || delta > limit) {
    throw PreconditionError("majority_brackets: requires 0 < delta <= 1/(2 sqrt(t-1))");
  }
  const double root = std::sqrt(static_cast<double>(t));
  return {0.5 + root * delta / 3.0, 0.5 + root * delta};
}

SeriesValue multimessage_series(std::size_t r, std::size_t n, double tol) {
  if (r < 1) throw ParameterError("multimessage_series: r must be >= 1");
  if (n < 2) throw ParameterError("multimessage_series: n must be >= 2");
  if (!(tol > 0.0)) throw ParameterError("multimessage_series: tol must be positive");

  // Shell S contributes NB(S; r+1, 1/n) * h_S, where NB is the negative binomial
  // pmf (S failures before r+1 successes) and h_S is the probability that S balls
  // thrown uniformly into n-1 cells leave every cell with at least r balls.
  const std::size_t cells = n - 1;
  const auto rr = static_cast<double>(r);
  const double p = 1.0 / static_cast<double>(n);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  constexpr std::size_t kMaxShells = 2'000'000;

  // h[j][S]: probability that S balls in j+1 uniform cells leave each >= r.
  std::vector<std::vector<double>> h(cells);
  SeriesValue out;
  for (std::size_t s = 0; s < kMaxShells; ++s) {
    const auto ss = static_cast<double>(s);
    h[0].push_back(s >= r ? 1.0 : 0.0);
    for (std::size_t j = 1; j < cells; ++j) {
      // Cell j+1 receives q of the S balls, each with probability 1/(j+1).
      const double lp = -std::log(static_cast<double>(j + 1));
      const double lq = std::log1p(-1.0 / static_cast<double>(j + 1));
      double v = 0.0;
      for (std::size_t q = r; q <= s; ++q) {
        const double rest = h[j - 1][s - q];
        if (rest == 0.0) continue;
        const auto qq = static_cast<double>(q);
        v += std::exp(log_binomial(ss, qq) + qq * lp + (ss - qq) * lq) * rest;
      }
      h[j].push_back(v);
    }
    const double hs = h[cells - 1][s];
    if (hs > 0.0) {
      out.value += std::exp(log_binomial(ss + rr, ss) + (rr + 1.0) * log_p + ss * log_q) * hs;
    }
    out.shells = s + 1;
    if (s >= cells * r) {
      // P(NB > S) = 1 - I_p(r+1, S+1) = I_{1-p}(S+1, r+1); bounds the omitted mass
      // since every h_S <= 1.
      out.tail_bound = regularized_incomplete_beta(1.0 - p, ss + 1.0, rr + 1.0);
      if (out.tail_bound <= tol) return out;
    }
  }
  throw CapacityError("multimessage_series: tolerance not reached within shell limit");
}

double multimessage_series_value(std::size_t r, std::size_t n, double tol) {
  return multimessage_series(r, n, tol).value;
}

ReductionLower telegraphing_lower_from_distinguish(std::size_t r, std::size_t n) {
  if (n < 2) throw ParameterError("telegraphing_lower_from_distinguish: n must be >= 2");
  const auto nn = static_cast<double>(n);
  const double dist = distinguish_exact_value(r).value;
  return {2.0 / nn * dist,
          1.0 / nn + 1.0 / (nn * std::sqrt(kPi * static_cast<double>(r)))};
}

double ute_upper_bound_bit(std::size_t d) {
  require_even_dim(d, "ute_upper_bound_bit");
  return 0.5 + 1.0 / (2.0 * std::sqrt(static_cast<double>(d) + 1.0));
}

ClampedBound ute_upper_bound_tcopy(std::size_t r, std::size_t t) {
  if (r < 1 || t < 1) throw ParameterError("ute_upper_bound_tcopy: r and t must be >= 1");
  return clamp_bound(0.5 + 7.0 * static_cast<double>(t) / std::sqrt(static_cast<double>(r)));
}

ClampedBound collusion_upper_bound(std::size_t r, std::size_t q, std::size_t n) {
  if (r < 1 || q < 1) throw ParameterError("collusion_upper_bound: r and Q must be >= 1");
  if (n < 2) throw ParameterError("collusion_upper_bound: n must be >= 2");
  return clamp_bound(0.5 + 7.0 * static_cast<double>(q) / std::sqrt(static_cast<double>(r)));
}

double equivalence_gap(std::size_t d, std::size_t n_messages, std::uint64_t receivers, double eta,
                       LogBase base) {
  if (d < 1 || n_messages < 1 || receivers < 1) {
    throw ParameterError("equivalence_gap: d, N and s must be >= 1");
  }
  if (!(eta > 0.0 && eta <= 1.0)) throw ParameterError("equivalence_gap: eta must lie in (0, 1]");
  const auto dd = static_cast<double>(d);
  const double log_d = base == LogBase::kBinary ? std::log2(dd) : std::log(dd);
  const auto nn = static_cast<double>(n_messages);
  return 3.0 * eta * dd * std::cbrt(log_d / (nn * nn * static_cast<double>(receivers)));
}

std::uint64_t min_receivers_for_gap(std::size_t d, std::size_t n_messages, double eta,
                                    double target, LogBase base) {
  if (!(target > 0.0)) throw ParameterError("min_receivers_for_gap: target must be positive");
  if (equivalence_gap(d, n_messages, 1, eta, base) <= target) return 1;
  const auto dd = static_cast<double>(d);
  const double log_d = base == LogBase::kBinary ? std::log2(dd) : std::log(dd);
  const auto nn = static_cast<double>(n_messages);
  const double scale = 3.0 * eta * dd / target;
  const double estimate = log_d * scale * scale * scale / (nn * nn);
  if (!(estimate < 1e18)) throw CapacityError("min_receivers_for_gap: receiver count overflows");
  auto s = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(estimate)));
  while (equivalence_gap(d, n_messages, s, eta, base) > target) ++s;
  while (s > 1 && equivalence_gap(d, n_messages, s - 1, eta, base) <= target) --s;
  return s;
}

GeneralLowerBounds general_lower_bounds(std::size_t d, std::size_t m, std::size_t n_messages,
                                        std::size_t t) {
  if (m < 2) throw ParameterError("general_lower_bounds: |M| must be >= 2");
  if (d < m) throw ParameterError("general_lower_bounds: requires d >= |M|");
  if (n_messages < 1 || n_messages > m) {
    throw ParameterError("general_lower_bounds: requires 1 <= N <= |M|");
  }
  if (t < 1) throw ParameterError("general_lower_bounds: t must be >= 1");
  const auto excess = static_cast<double>(d - m + 1);
  const auto nn = static_cast<double>(n_messages);
  const auto tt = static_cast<double>(t);
  const double single = 1.0 / nn + 1.0 / (nn * std::sqrt(kPi * excess));
  const double multi = 1.0 / nn + 1.0 / (57.0 * nn * nn * std::sqrt(kPi * tt * tt * tt * excess));
  return {single, single, multi};
}

TcopyBrackets haar_tcopy_brackets(std::size_t r, std::size_t t) {
  if (r < 1 || t < 1) throw ParameterError("haar_tcopy_brackets: r and t must be >= 1");
  const double lower =
      0.5 + std::sqrt(static_cast<double>(t) / (kPi * static_cast<double>(r))) / 6.0;
  return {lower, ute_upper_bound_tcopy(r, t)};
}

}  // namespace untelegraph
