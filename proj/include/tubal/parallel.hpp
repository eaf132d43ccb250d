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

#ifndef TUBAL_PARALLEL_HPP_
#define TUBAL_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace tubal {

// Thread cap for per-slice work. Defaults to TUBAL_SPECTRA_THREADS when set,
// otherwise std::thread::hardware_concurrency().
std::size_t max_threads();

// Overrides the cap for this process; 0 restores the environment default.
void set_max_threads(std::size_t threads);

// Runs body(i) for i in [0, count). Each index must write only its own
// output, so results never depend on scheduling. Small jobs, judged by
// count * cost_per_item, run inline on the calling thread.
void parallel_for(std::size_t count, std::size_t cost_per_item,
                  const std::function<void(std::size_t)>& body);

}  // namespace tubal

#endif  // TUBAL_PARALLEL_HPP_
