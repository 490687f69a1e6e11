/*
 * Copyright 2026 The lms Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lms/parallel.hpp"

#include <atomic>

namespace lms {

namespace {

std::atomic<std::size_t> g_max_threads{1};

}  // namespace

void set_max_threads(std::size_t n) {
  if (n == 0) {
    n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  g_max_threads.store(n, std::memory_order_relaxed);
}

std::size_t max_threads() noexcept { return g_max_threads.load(std::memory_order_relaxed); }

}  // namespace lms
