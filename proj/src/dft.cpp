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

#include "tubal/dft.hpp"

#include <cmath>
#include <numbers>

#include "tubal/error.hpp"

namespace tubal {

namespace {

std::size_t smallest_factor(std::size_t n) {
  if (n % 2 == 0) return 2;
  for (std::size_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return f;
  }
  return n;
}

}  // namespace

DftPlan::DftPlan(std::size_t p) : p_(p), twiddle_(p) {
  if (p == 0) throw Error(ErrorKind::kShapeError, "DFT length must be >= 1");
  for (std::size_t t = 0; t < p; ++t) {
    // Points on the axes are set exactly so real slices stay real.
    if (t == 0) {
      twiddle_[t] = {1.0, 0.0};
    } else if (2 * t == p) {
      twiddle_[t] = {-1.0, 0.0};
    } else if (4 * t == p) {
      twiddle_[t] = {0.0, -1.0};
    } else if (4 * t == 3 * p) {
      twiddle_[t] = {0.0, 1.0};
    } else {
      double angle = -2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p);
      twiddle_[t] = {std::cos(angle), std::sin(angle)};
    }
  }
}

void DftPlan::forward(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != p_ || out.size() != p_) {
    throw Error(ErrorKind::kDimensionMismatch, "DFT buffer length mismatch");
  }
  transform(in.data(), 1, out.data(), p_, false);
}

void DftPlan::inverse(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != p_ || out.size() != p_) {
    throw Error(ErrorKind::kDimensionMismatch, "DFT buffer length mismatch");
  }
  transform(in.data(), 1, out.data(), p_, true);
  const double scale = 1.0 / static_cast<double>(p_);
  for (auto& v : out) v *= scale;
}

void DftPlan::transform(const Complex* in, std::size_t stride, Complex* out,
                        std::size_t len, bool inverse) const {
  if (len == 1) {
    out[0] = in[0];
    return;
  }
  // w_len^q == w_p^(q * p / len)
  const std::size_t step = p_ / len;
  auto root = [&](std::size_t q) {
    Complex w = twiddle_[(q % len) * step];
    return inverse ? std::conj(w) : w;
  };

  const std::size_t radix = smallest_factor(len);
  if (radix == len) {
    for (std::size_t k = 0; k < len; ++k) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < len; ++t) acc += in[t * stride] * root(k * t);
      out[k] = acc;
    }
    return;
  }

  const std::size_t sub = len / radix;
  std::vector<Complex> parts(len);
  for (std::size_t q = 0; q < radix; ++q) {
    transform(in + q * stride, stride * radix, parts.data() + q * sub, sub, inverse);
  }
  for (std::size_t s = 0; s < radix; ++s) {
    for (std::size_t k = 0; k < sub; ++k) {
      const std::size_t index = k + s * sub;
      Complex acc = parts[k];
      for (std::size_t q = 1; q < radix; ++q) acc += parts[q * sub + k] * root(q * index);
      out[index] = acc;
    }
  }
}

}  // namespace tubal
