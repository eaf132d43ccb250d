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

#ifndef TUBAL_TENSOR3_HPP_
#define TUBAL_TENSOR3_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "tubal/types.hpp"

namespace tubal {

struct Shape {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t p = 0;

  friend bool operator==(const Shape&, const Shape&) = default;
};

// Dense real m x n x p tensor. Storage is slice-major: frontal slice k
// occupies data()[k*m*n, (k+1)*m*n) in column-major order.
class Tensor3 {
 public:
  using SliceMap = Eigen::Map<Matrix>;
  using ConstSliceMap = Eigen::Map<const Matrix>;

  Tensor3() = default;
  Tensor3(std::size_t m, std::size_t n, std::size_t p);

  static Tensor3 from_slices(std::span<const Matrix> slices);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t depth() const { return p_; }
  Shape shape() const { return {m_, n_, p_}; }
  std::size_t size() const { return data_.size(); }

  // Frontal slice k (0-based), i.e. A^(k+1).
  SliceMap slice(std::size_t k);
  ConstSliceMap slice(std::size_t k) const;

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[index(i, j, k)];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }

  Tube tube(std::size_t i, std::size_t j) const;
  void set_tube(std::size_t i, std::size_t j, const Tube& t);

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  double norm() const;
  double max_abs() const;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  Tensor3& operator*=(double scale);

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(Tensor3 a, double s) { return a *= s; }
  friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
  // Bit-identical comparison.
  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return k * m_ * n_ + j * m_ + i;
  }

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<double> data_;
};

// mp x np block-circulant matrix; block (r, c) is A^(((r - c) mod p) + 1).
Matrix bcirc(const Tensor3& a);
// Inverse of bcirc for block size m x n. Throws NotBlockCirculant when some
// block deviates from the circulant pattern by more than tol.
Tensor3 bcirc_inv(const Matrix& blocks, std::size_t p, double tol = kDefaultTol);

// Frontal slices stacked vertically: mp x n.
Matrix unfold(const Tensor3& a);
Tensor3 fold(const Matrix& stacked, std::size_t p);

// Columns of X stacked into a vector of length np.
Vector unfold_mat(const MatSlice& x);
MatSlice fold_mat(const Vector& stacked, std::size_t p);

// X as an n x 1 x p tensor and back.
Tensor3 to_tensor(const MatSlice& x);
MatSlice to_mat(const Tensor3& lateral);

// Lateral slice j of A as an m x p matrix (column k is A^(k+1)(:, j)).
MatSlice lateral_slice(const Tensor3& a, std::size_t j);

// n x m x p tensor with slice 1 = (A^(1))^T and slice k = (A^(p+2-k))^T.
Tensor3 transpose(const Tensor3& a);

Tensor3 identity(std::size_t n, std::size_t p);

// ||A - A^T||_max <= tol. Throws ShapeError unless m == n.
bool is_t_symmetric(const Tensor3& a, double tol = kDefaultTol);
// Every frontal slice has off-diagonal entries of magnitude <= tol.
bool is_f_diagonal(const Tensor3& s, double tol = kDefaultTol);
// Checks s_1 >= s_2 >= ... on the diagonal tubes. kNo when S is not
// f-diagonal or some adjacent pair is strictly out of order; kIncomparable
// when some adjacent pair cannot be ordered elementwise.
Tri is_standard_form(const Tensor3& s, double tol = kDefaultTol);

// X^[k]: cyclic right shift of the columns by k, so X^[1] = (x_p, x_1, ...).
MatSlice shift_columns(const MatSlice& x, std::size_t k);

// The tube t as a 1 x 1 x p tensor, and back.
Tensor3 tube_tensor(const Tube& t);
Tube to_tube(const Tensor3& scalar);

}  // namespace tubal

#endif  // TUBAL_TENSOR3_HPP_
