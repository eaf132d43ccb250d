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

#include "tubal/random.hpp"

#include "tubal/spectral.hpp"
#include "tubal/tproduct.hpp"

namespace tubal {

double Rng::uniform() {
  // 53 random mantissa bits mapped to [0, 1), then to [-1, 1).
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

std::optional<RandomKind> parse_random_kind(std::string_view name) {
  if (name == "general") return RandomKind::kGeneral;
  if (name == "tsym") return RandomKind::kTSymmetric;
  if (name == "psd") return RandomKind::kPsd;
  if (name == "fdiag") return RandomKind::kFDiagonal;
  return std::nullopt;
}

Tube random_tube(std::size_t p, Rng& rng) {
  Tube t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = rng.uniform();
  return t;
}

MatSlice random_mat(std::size_t n, std::size_t p, Rng& rng) {
  MatSlice x(n, p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < n; ++i) x(i, k) = rng.uniform();
  }
  return x;
}

Tensor3 random_general(std::size_t m, std::size_t n, std::size_t p, Rng& rng) {
  Tensor3 a(m, n, p);
  for (double& v : a.data()) v = rng.uniform();
  return a;
}

Tensor3 random_tsym(std::size_t n, std::size_t p, Rng& rng) {
  return 0.5 * symmetrize(random_general(n, n, p, rng));
}

Tensor3 random_gram(std::size_t m, std::size_t n, std::size_t p, Rng& rng) {
  const Tensor3 b = random_general(m, n, p, rng);
  return tprod(transpose(b), b);
}

Tensor3 random_fdiag(std::size_t m, std::size_t n, std::size_t p, Rng& rng) {
  Tensor3 s(m, n, p);
  for (std::size_t j = 0; j < std::min(m, n); ++j) s.set_tube(j, j, random_tube(p, rng));
  return s;
}

Tensor3 random_orthogonal(std::size_t n, std::size_t p, Rng& rng) {
  return ted(random_tsym(n, p, rng)).u;
}

}  // namespace tubal
