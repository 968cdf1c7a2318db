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

#include "estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace untelegraph {

void MomentAccumulator::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(count);
  const auto nb = static_cast<double>(other.count);
  const double n = na + nb;
  const double delta = other.mean - mean;
  mean += delta * nb / n;
  m2 += other.m2 + delta * delta * na * nb / n;
  count += other.count;
}

double MomentAccumulator::sample_variance() const {
  return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
}

ValueEstimate estimate(const AttackSpec& spec, std::size_t samples, std::uint64_t master_seed,
                       const EstimateOptions& options) {
  if (samples < 2) throw ParameterError("estimate: samples must be >= 2");
  if (options.chunk_size < 1) throw ParameterError("estimate: chunk_size must be >= 1");
  spec.validate();

  const std::size_t chunk = options.chunk_size;
  const std::size_t n_chunks = (samples + chunk - 1) / chunk;
  std::vector<MomentAccumulator> partial(n_chunks);

  unsigned workers = options.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_chunks));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::size_t dim = spec.scheme.dim();

  auto work = [&] {
    try {
      for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
        MomentAccumulator acc;
        const std::size_t end = std::min(samples, (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
          RngStream rng(master_seed, i);
          acc.add(evaluate_attack(spec, sample_haar_unitary(dim, rng)));
        }
        partial[c] = acc;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_chunks;
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  MomentAccumulator total;
  for (const auto& p : partial) total.merge(p);

  ValueEstimate est;
  est.mean = std::clamp(total.mean, 0.0, 1.0);
  est.std_error = std::sqrt(total.sample_variance() / static_cast<double>(total.count));
  est.n_samples = total.count;
  est.master_seed = master_seed;
  est.attack = spec.describe();
  return est;
}

std::pair<double, double> confidence_interval(const ValueEstimate& est, double z) {
  if (!(z > 0.0)) throw ParameterError("confidence_interval: z must be positive");
  return {std::clamp(est.mean - z * est.std_error, 0.0, 1.0),
          std::clamp(est.mean + z * est.std_error, 0.0, 1.0)};
}

}  // namespace untelegraph
