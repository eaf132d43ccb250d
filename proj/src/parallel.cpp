// Copyright 2026 The tubal-spectra Authors.
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

#include "tubal/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tubal {

namespace {

constexpr std::size_t kMinParallelWork = 1 << 14;

std::atomic<std::size_t> g_override{0};

std::size_t env_threads() {
  static const std::size_t value = [] {
    std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const char* env = std::getenv("TUBAL_SPECTRA_THREADS");
    if (env == nullptr) return hw;
    std::size_t parsed = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), parsed);
    if (ec != std::errc() || parsed == 0) return hw;
    return parsed;
  }();
  return value;
}

}  // namespace

std::size_t max_threads() {
  std::size_t forced = g_override.load(std::memory_order_relaxed);
  return forced != 0 ? forced : env_threads();
}

void set_max_threads(std::size_t threads) {
  g_override.store(threads, std::memory_order_relaxed);
}

void parallel_for(std::size_t count, std::size_t cost_per_item,
                  const std::function<void(std::size_t)>& body) {
  std::size_t threads = std::min(max_threads(), count);
  if (threads <= 1 || count * cost_per_item < kMinParallelWork) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tubal
