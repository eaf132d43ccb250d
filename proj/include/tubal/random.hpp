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

#ifndef TUBAL_RANDOM_HPP_
#define TUBAL_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "tubal/tensor3.hpp"
#include "tubal/types.hpp"

namespace tubal {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Reproducible uniform draws on [-1, 1). Only the mt19937_64 bit stream is
// used, so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform();
  double uniform(double lo, double hi);
  // Integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
};

enum class RandomKind { kGeneral, kTSymmetric, kPsd, kFDiagonal };

std::optional<RandomKind> parse_random_kind(std::string_view name);

Tube random_tube(std::size_t p, Rng& rng);
MatSlice random_mat(std::size_t n, std::size_t p, Rng& rng);
Tensor3 random_general(std::size_t m, std::size_t n, std::size_t p, Rng& rng);
// (B + B^T) / 2 for a general n x n x p B.
Tensor3 random_tsym(std::size_t n, std::size_t p, Rng& rng);
// B^T * B for a general m x n x p B; the result is n x n x p.
Tensor3 random_gram(std::size_t m, std::size_t n, std::size_t p, Rng& rng);
Tensor3 random_fdiag(std::size_t m, std::size_t n, std::size_t p, Rng& rng);
// U factor of the TED of a random T-symmetric tensor.
Tensor3 random_orthogonal(std::size_t n, std::size_t p, Rng& rng);

}  // namespace tubal

#endif  // TUBAL_RANDOM_HPP_
