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

#include "majsep/search.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "majsep/criteria.hpp"
#include "majsep/error.hpp"
#include "majsep/qstate.hpp"

namespace majsep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void validate(const SearchConfig& c) {
  if (c.dim_a < 2 || c.dim_b < 2) {
    throw Error(ErrorCode::BadParameter, "search dimensions must both be >= 2");
  }
  if (c.dim_a * c.dim_b > kMaxSearchDim) {
    throw Error(ErrorCode::BadParameter,
                "search needs dim_a * dim_b <= " + std::to_string(kMaxSearchDim));
  }
  if (c.samples < 1) {
    throw Error(ErrorCode::BadParameter, "search needs at least one sample");
  }
  if (c.rank > c.dim_a * c.dim_b) {
    throw Error(ErrorCode::BadParameter, "search rank exceeds dim_a * dim_b");
  }
}

}  // namespace

std::uint64_t derive_sample_seed(std::uint64_t master, std::size_t index) {
  // splitmix64 is a bijection and the additive offsets differ per index.
  return splitmix64(master + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1));
}

std::size_t sample_rank(const SearchConfig& config, std::size_t index) {
  if (config.rank != 0) return config.rank;
  return index % (config.dim_a * config.dim_b) + 1;
}

SearchRecord evaluate_sample(std::size_t dim_a, std::size_t dim_b,
                             std::size_t rank, std::uint64_t seed) {
  const DensityMatrix rho = random_density_matrix({dim_a, dim_b}, 1, rank, seed);
  const MajorizationPair maj = majorization_criterion(rho);
  const PptResult ppt = ppt_criterion(rho, kCandidatePptTol);

  SearchRecord rec;
  rec.seed = seed;
  rec.dim_a = dim_a;
  rec.dim_b = dim_b;
  rec.rank = rank;
  rec.ppt_min_eig = ppt.min_eigenvalue;
  rec.majorization_a_gap = maj.a.worst_gap();
  rec.majorization_b_gap = maj.b.worst_gap();
  const double worst = std::min(rec.majorization_a_gap, rec.majorization_b_gap);
  rec.is_candidate = ppt.ok && worst < -kCandidateGapTol;
  rec.is_near_miss = ppt.ok && !rec.is_candidate && worst < -kDefaultCriteriaTol;
  return rec;
}

std::vector<SearchRecord> run_search(const SearchConfig& config) {
  validate(config);
  std::vector<SearchRecord> records(config.samples);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SearchRecord rec = evaluate_sample(config.dim_a, config.dim_b,
                                         sample_rank(config, i),
                                         derive_sample_seed(config.seed, i));
      rec.index = i;
      records[i] = rec;
    }
  };

  unsigned threads = config.threads != 0 ? config.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, config.samples));
  if (threads <= 1) {
    work(0, config.samples);
    return records;
  }

  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (config.samples + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(config.samples, t * chunk);
      const std::size_t end = std::min(config.samples, begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

}  // namespace majsep
