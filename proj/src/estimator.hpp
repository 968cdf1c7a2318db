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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "attacks.hpp"

namespace untelegraph {

inline constexpr std::size_t kDefaultChunkSize = 1024;

struct ValueEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n_samples)
  std::size_t n_samples = 0;
  std::uint64_t master_seed = 0;
  std::string attack;
};

struct EstimateOptions {
  std::size_t chunk_size = kDefaultChunkSize;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Haar average of the per-key attack value. Sample i uses the key drawn from
/// RngStream(master_seed, i). Per-chunk statistics are merged in chunk order, so
/// the result is bit-identical for any thread count.
ValueEstimate estimate(const AttackSpec& spec, std::size_t samples, std::uint64_t master_seed,
                       const EstimateOptions& options = {});

/// (mean - z*stderr, mean + z*stderr) clamped to [0, 1].
std::pair<double, double> confidence_interval(const ValueEstimate& est, double z);

/// Running mean / second central moment, merged with Chan's pairwise update.
struct MomentAccumulator {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const MomentAccumulator& other);
  double sample_variance() const;
};

}  // namespace untelegraph
