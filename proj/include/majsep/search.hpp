// Copyright 2026 The majsep Authors
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
#include <vector>

namespace majsep {

inline constexpr double kCandidatePptTol = 1e-9;
inline constexpr double kCandidateGapTol = 1e-7;
inline constexpr std::size_t kMaxSearchDim = 64;

struct SearchConfig {
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;
  /// Fixed rank, or 0 to cycle ranks 1..dim_a*dim_b by sample index.
  std::size_t rank = 0;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SearchRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t rank = 0;
  double ppt_min_eig = 0.0;
  double majorization_a_gap = 0.0;  // most negative prefix gap
  double majorization_b_gap = 0.0;
  bool is_candidate = false;
  /// PPT passes and the worst gap lies in [-1e-7, -1e-9): fails the verdict
  /// tolerance but is too small to count as a candidate.
  bool is_near_miss = false;
};

/// Seed of sample `index` derived from the master seed (splitmix64 of
/// master + (index+1) * golden gamma, distinct for distinct indices).
std::uint64_t derive_sample_seed(std::uint64_t master, std::size_t index);

std::size_t sample_rank(const SearchConfig& config, std::size_t index);

/// Draws and scores one state; used by run_search and for re-verification.
SearchRecord evaluate_sample(std::size_t dim_a, std::size_t dim_b,
                             std::size_t rank, std::uint64_t seed);

/// Records in sample order regardless of thread count.
std::vector<SearchRecord> run_search(const SearchConfig& config);

}  // namespace majsep
