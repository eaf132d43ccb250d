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

#ifndef TUBAL_TESTS_SUPPORT_HPP_
#define TUBAL_TESTS_SUPPORT_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <vector>

#include "tubal/tensor3.hpp"
#include "tubal/types.hpp"

namespace tubal {

// Readable gtest output for tubes and matrices.
inline void PrintTo(const Tube& t, std::ostream* os) { *os << "(" << t.vector().transpose() << ")"; }
inline void PrintTo(const MatSlice& x, std::ostream* os) { *os << "\n" << x.matrix(); }

}  // namespace tubal

namespace tubal::testing {

inline double rel_err(const Vector& got, const Vector& want) {
  const double scale = want.norm();
  return scale > 0.0 ? (got - want).norm() / scale : (got - want).norm();
}

inline double rel_err(const Tube& got, const Tube& want) {
  return rel_err(got.vector(), want.vector());
}

inline double rel_err(const Matrix& got, const Matrix& want) {
  const double scale = want.norm();
  return scale > 0.0 ? (got - want).norm() / scale : (got - want).norm();
}

inline double rel_err(const Tensor3& got, const Tensor3& want) {
  const double scale = want.norm();
  const double diff = (got - want).norm();
  return scale > 0.0 ? diff / scale : diff;
}

// Circular convolution straight from the index formula.
inline Tube naive_conv(const Tube& a, const Tube& b) {
  const std::size_t p = a.size();
  Tube c(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t t = 0; t < p; ++t) c[i] += a[(i + p - t) % p] * b[t];
  }
  return c;
}

// Textbook O(p^2) DFT with w = exp(-2 pi i / p).
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x) {
  const std::size_t p = x.size();
  std::vector<std::complex<double>> y(p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t t = 0; t < p; ++t) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * t % p) /
                           static_cast<double>(p);
      y[k] += x[t] * std::polar(1.0, angle);
    }
  }
  return y;
}

// Dense T-product by explicit triple sum over slices.
inline Tensor3 naive_tprod(const Tensor3& a, const Tensor3& b) {
  const std::size_t m = a.rows(), s = a.cols(), n = b.cols(), p = a.depth();
  Tensor3 c(m, n, p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t t = 0; t < p; ++t) {
      const std::size_t q = (k + p - t) % p;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < s; ++l) {
          for (std::size_t i = 0; i < m; ++i) c(i, j, k) += a(i, l, q) * b(l, j, t);
        }
      }
    }
  }
  return c;
}

inline Tensor3 naive_transpose(const Tensor3& a) {
  const std::size_t p = a.depth();
  Tensor3 t(a.cols(), a.rows(), p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) t(j, i, k) = a(i, j, (p - k) % p);
    }
  }
  return t;
}

}  // namespace tubal::testing

#endif  // TUBAL_TESTS_SUPPORT_HPP_
