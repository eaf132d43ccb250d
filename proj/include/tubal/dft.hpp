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

#ifndef TUBAL_DFT_HPP_
#define TUBAL_DFT_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "tubal/types.hpp"

namespace tubal {

// Length-p discrete Fourier transform shared by every module.
//
//   forward:  X_k = sum_t x_t * w^(k t),          w = exp(-2 pi i / p)
//   inverse:  x_t = (1/p) * sum_k X_k * w^(-k t)
//
// Mixed-radix Cooley-Tukey over the prime factors of p, with a direct sum for
// prime lengths, so any p >= 1 is supported.
class DftPlan {
 public:
  explicit DftPlan(std::size_t p);

  std::size_t size() const { return p_; }

  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void inverse(std::span<const Complex> in, std::span<Complex> out) const;

  // w^t for 0 <= t < p.
  Complex twiddle(std::size_t t) const { return twiddle_[t % p_]; }

 private:
  void transform(const Complex* in, std::size_t stride, Complex* out,
                 std::size_t len, bool inverse) const;

  std::size_t p_;
  std::vector<Complex> twiddle_;
};

}  // namespace tubal

#endif  // TUBAL_DFT_HPP_
