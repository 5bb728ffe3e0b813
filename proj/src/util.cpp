// src/util.cpp

// Copyright 2026  amalgam-lab authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "amalgam/util.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace amalgam {

namespace {

template <typename T>
T pairwise_impl(std::span<const T> xs) {
  if (xs.size() <= 8) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_impl(xs.subspan(0, half)) + pairwise_impl(xs.subspan(half));
}

std::atomic<int> g_jobs{1};

// Nested parallel regions run inline; thread counts never exceed the top
// level and slot writes keep every schedule bit-identical.
thread_local bool t_in_parallel = false;

}  // namespace

double pairwise_sum(std::span<const double> xs) { return pairwise_impl(xs); }
cplx pairwise_sum(std::span<const cplx> xs) { return pairwise_impl(xs); }

int default_jobs() { return g_jobs.load(); }
void set_default_jobs(int jobs) { g_jobs.store(std::max(1, jobs)); }

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n < 2 || t_in_parallel) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(jobs)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      t_in_parallel = true;
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace amalgam
