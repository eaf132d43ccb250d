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

#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "tubal/parallel.hpp"

namespace tubal {
namespace {

class ParallelTest : public ::testing::Test {
 protected:
  void SetUp() override { saved_ = max_threads(); }
  void TearDown() override { set_max_threads(saved_); }
  std::size_t saved_ = 1;
};

TEST_F(ParallelTest, VisitsEveryIndexOnce) {
  for (std::size_t threads : {1u, 3u, 8u}) {
    set_max_threads(threads);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 1 << 10, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST_F(ParallelTest, SmallWorkRunsInline) {
  set_max_threads(8);
  std::vector<std::size_t> order;
  parallel_for(5, 1, [&](std::size_t i) { order.push_back(i); });
  EXPECT_EQ(order, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST_F(ParallelTest, PropagatesExceptions) {
  set_max_threads(4);
  EXPECT_THROW(parallel_for(100, 1 << 10,
                            [](std::size_t i) {
                              if (i == 57) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST_F(ParallelTest, OverrideWins) {
  set_max_threads(3);
  EXPECT_EQ(max_threads(), 3u);
}

}  // namespace
}  // namespace tubal
