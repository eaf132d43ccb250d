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

#ifndef TUBAL_TRANSFORM_HPP_
#define TUBAL_TRANSFORM_HPP_

#include <cstddef>
#include <vector>

#include "tubal/tensor3.hpp"
#include "tubal/types.hpp"

namespace tubal {

// Third-mode DFT of a real m x n x p tensor: p complex m x n slices with
// F_k = sum_t A^(t+1) w^(k t), w = exp(-2 pi i / p). For real input
// F_{(p-k) mod p} = conj(F_k); slices k = 0 and k = p/2 are real.
class FreqSlices {
 public:
  FreqSlices() = default;
  FreqSlices(std::size_t m, std::size_t n, std::size_t p);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t depth() const { return slices_.size(); }
  Shape shape() const { return {m_, n_, depth()}; }

  const CMatrix& slice(std::size_t k) const { return slices_[k]; }
  CMatrix& slice(std::size_t k) { return slices_[k]; }

  // Writes slice k and its conjugate partner p - k. For self-conjugate k the
  // imaginary part is dropped.
  void set_mirrored(std::size_t k, const CMatrix& value);

  // Number of slices that determine the rest: floor(p/2) + 1.
  static std::size_t independent(std::size_t p) { return p / 2 + 1; }
  static bool self_conjugate(std::size_t k, std::size_t p) { return k == 0 || 2 * k == p; }

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<CMatrix> slices_;
};

FreqSlices to_freq(const Tensor3& a);

// max_k ||F_{(p-k) mod p} - conj(F_k)||_max, plus the imaginary part of the
// self-conjugate slices.
double conjugate_symmetry_error(const FreqSlices& f);

struct InverseTransform {
  Tensor3 tensor;
  double symmetry_error = 0.0;
  double imaginary_residual = 0.0;
};

// Inverse third-mode DFT. Both checks are relative to max|F|: conjugate
// symmetry before the inverse (SymmetryViolation) and the imaginary part of
// the result (ImaginaryResidual). Entries below the transform's roundoff
// floor, 4 p eps max|F|, are flushed to zero.
InverseTransform from_freq_checked(const FreqSlices& f, double tol = kDefaultTol);
Tensor3 from_freq(const FreqSlices& f, double tol = kDefaultTol);

// True iff every slice is Hermitian to within tol (absolute, max entry).
// Throws ShapeError unless m == n.
bool hermitize_check(const FreqSlices& f, double tol = kDefaultTol);

// Slice-wise product F_k G_k computed on the independent half and mirrored.
FreqSlices slice_product(const FreqSlices& f, const FreqSlices& g);

}  // namespace tubal

#endif  // TUBAL_TRANSFORM_HPP_
