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

#include "tubal/tensor3.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tubal/error.hpp"
#include "tubal/tube.hpp"

namespace tubal {

namespace {

using Index = Eigen::Index;

Index ix(std::size_t v) { return static_cast<Index>(v); }

[[noreturn]] void shape_error(const std::string& what) {
  throw Error(ErrorKind::kShapeError, what);
}

void require_same_shape(const Tensor3& a, const Tensor3& b, const char* op) {
  if (a.shape() != b.shape()) {
    std::ostringstream os;
    os << op << ": shapes " << a.rows() << "x" << a.cols() << "x" << a.depth() << " and "
       << b.rows() << "x" << b.cols() << "x" << b.depth() << " differ";
    shape_error(os.str());
  }
}

}  // namespace

Tensor3::Tensor3(std::size_t m, std::size_t n, std::size_t p)
    : m_(m), n_(n), p_(p), data_(m * n * p, 0.0) {
  if (m == 0 || n == 0 || p == 0) shape_error("tensor dimensions must be >= 1");
}

Tensor3 Tensor3::from_slices(std::span<const Matrix> slices) {
  if (slices.empty()) shape_error("tensor needs at least one frontal slice");
  const auto m = static_cast<std::size_t>(slices.front().rows());
  const auto n = static_cast<std::size_t>(slices.front().cols());
  Tensor3 t(m, n, slices.size());
  for (std::size_t k = 0; k < slices.size(); ++k) {
    if (slices[k].rows() != ix(m) || slices[k].cols() != ix(n)) {
      shape_error("frontal slices must all have the same shape");
    }
    t.slice(k) = slices[k];
  }
  return t;
}

Tensor3::SliceMap Tensor3::slice(std::size_t k) {
  return SliceMap(data_.data() + k * m_ * n_, ix(m_), ix(n_));
}

Tensor3::ConstSliceMap Tensor3::slice(std::size_t k) const {
  return ConstSliceMap(data_.data() + k * m_ * n_, ix(m_), ix(n_));
}

Tube Tensor3::tube(std::size_t i, std::size_t j) const {
  Tube t(p_);
  for (std::size_t k = 0; k < p_; ++k) t[k] = (*this)(i, j, k);
  return t;
}

void Tensor3::set_tube(std::size_t i, std::size_t j, const Tube& t) {
  if (t.size() != p_) shape_error("tube length does not match tensor depth");
  for (std::size_t k = 0; k < p_; ++k) (*this)(i, j, k) = t[k];
}

double Tensor3::norm() const {
  double acc = 0.0;
  for (double v : data_) acc += v * v;
  return std::sqrt(acc);
}

double Tensor3::max_abs() const {
  double acc = 0.0;
  for (double v : data_) acc = std::max(acc, std::abs(v));
  return acc;
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  require_same_shape(*this, other, "tensor addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  require_same_shape(*this, other, "tensor subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(double scale) {
  for (double& v : data_) v *= scale;
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  return a.shape() == b.shape() && a.data_ == b.data_;
}

Matrix bcirc(const Tensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  Matrix out(ix(m * p), ix(n * p));
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      out.block(ix(r * m), ix(c * n), ix(m), ix(n)) = a.slice((r + p - c) % p);
    }
  }
  return out;
}

Tensor3 bcirc_inv(const Matrix& blocks, std::size_t p, double tol) {
  if (p == 0 || blocks.rows() % ix(p) != 0 || blocks.cols() % ix(p) != 0 || blocks.size() == 0) {
    throw Error(ErrorKind::kNotBlockCirculant, "matrix dimensions are not multiples of p");
  }
  const auto m = static_cast<std::size_t>(blocks.rows()) / p;
  const auto n = static_cast<std::size_t>(blocks.cols()) / p;
  Tensor3 a(m, n, p);
  for (std::size_t k = 0; k < p; ++k) a.slice(k) = blocks.block(ix(k * m), 0, ix(m), ix(n));

  double deviation = 0.0;
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      auto block = blocks.block(ix(r * m), ix(c * n), ix(m), ix(n));
      deviation = std::max(deviation, (block - a.slice((r + p - c) % p)).cwiseAbs().maxCoeff());
    }
  }
  if (deviation > tol) {
    std::ostringstream os;
    os << "matrix deviates from block-circulant structure by " << deviation << " > " << tol;
    throw Error(ErrorKind::kNotBlockCirculant, os.str());
  }
  return a;
}

Matrix unfold(const Tensor3& a) {
  const std::size_t m = a.rows();
  Matrix out(ix(m * a.depth()), ix(a.cols()));
  for (std::size_t k = 0; k < a.depth(); ++k) out.middleRows(ix(k * m), ix(m)) = a.slice(k);
  return out;
}

Tensor3 fold(const Matrix& stacked, std::size_t p) {
  if (p == 0 || stacked.rows() % ix(p) != 0 || stacked.size() == 0) {
    std::ostringstream os;
    os << "fold: " << stacked.rows() << " rows is not a positive multiple of p = " << p;
    shape_error(os.str());
  }
  const auto m = static_cast<std::size_t>(stacked.rows()) / p;
  Tensor3 a(m, static_cast<std::size_t>(stacked.cols()), p);
  for (std::size_t k = 0; k < p; ++k) a.slice(k) = stacked.middleRows(ix(k * m), ix(m));
  return a;
}

Vector unfold_mat(const MatSlice& x) {
  return Eigen::Map<const Vector>(x.matrix().data(), x.matrix().size());
}

MatSlice fold_mat(const Vector& stacked, std::size_t p) {
  if (p == 0 || stacked.size() % ix(p) != 0 || stacked.size() == 0) {
    std::ostringstream os;
    os << "fold_mat: length " << stacked.size() << " is not a positive multiple of p = " << p;
    shape_error(os.str());
  }
  const Index n = stacked.size() / ix(p);
  return MatSlice(Matrix(Eigen::Map<const Matrix>(stacked.data(), n, ix(p))));
}

Tensor3 to_tensor(const MatSlice& x) {
  Tensor3 t(x.rows(), 1, x.cols());
  for (std::size_t k = 0; k < x.cols(); ++k) t.slice(k) = x.matrix().col(ix(k));
  return t;
}

MatSlice to_mat(const Tensor3& lateral) {
  if (lateral.cols() != 1) shape_error("to_mat expects an n x 1 x p tensor");
  return lateral_slice(lateral, 0);
}

MatSlice lateral_slice(const Tensor3& a, std::size_t j) {
  if (j >= a.cols()) {
    throw Error(ErrorKind::kIndexError, "lateral slice index out of range");
  }
  MatSlice x(a.rows(), a.depth());
  for (std::size_t k = 0; k < a.depth(); ++k) x.matrix().col(ix(k)) = a.slice(k).col(ix(j));
  return x;
}

Tensor3 transpose(const Tensor3& a) {
  const std::size_t p = a.depth();
  Tensor3 t(a.cols(), a.rows(), p);
  t.slice(0) = a.slice(0).transpose();
  for (std::size_t k = 1; k < p; ++k) t.slice(k) = a.slice(p - k).transpose();
  return t;
}

Tensor3 identity(std::size_t n, std::size_t p) {
  Tensor3 t(n, n, p);
  t.slice(0).setIdentity();
  return t;
}

bool is_t_symmetric(const Tensor3& a, double tol) {
  if (a.rows() != a.cols()) shape_error("T-symmetry requires an n x n x p tensor");
  const std::size_t p = a.depth();
  double deviation = (a.slice(0) - a.slice(0).transpose()).cwiseAbs().maxCoeff();
  for (std::size_t k = 1; k < p; ++k) {
    deviation = std::max(deviation, (a.slice(k) - a.slice(p - k).transpose()).cwiseAbs().maxCoeff());
  }
  return deviation <= tol;
}

bool is_f_diagonal(const Tensor3& s, double tol) {
  for (std::size_t k = 0; k < s.depth(); ++k) {
    auto slice = s.slice(k);
    for (Index j = 0; j < slice.cols(); ++j) {
      for (Index i = 0; i < slice.rows(); ++i) {
        if (i != j && std::abs(slice(i, j)) > tol) return false;
      }
    }
  }
  return true;
}

Tri is_standard_form(const Tensor3& s, double tol) {
  if (!is_f_diagonal(s, tol)) return Tri::kNo;
  const std::size_t r = std::min(s.rows(), s.cols());
  bool incomparable = false;
  for (std::size_t j = 0; j + 1 < r; ++j) {
    // Want s_{j+1} <= s_j.
    switch (tube_le(s.tube(j + 1, j + 1), s.tube(j, j), tol)) {
      case Tri::kYes: break;
      case Tri::kNo: return Tri::kNo;
      case Tri::kIncomparable: incomparable = true; break;
    }
  }
  return incomparable ? Tri::kIncomparable : Tri::kYes;
}

MatSlice shift_columns(const MatSlice& x, std::size_t k) {
  const std::size_t p = x.cols();
  MatSlice out(x.rows(), p);
  for (std::size_t c = 0; c < p; ++c) {
    out.matrix().col(ix((c + k) % p)) = x.matrix().col(ix(c));
  }
  return out;
}

Tensor3 tube_tensor(const Tube& t) {
  Tensor3 a(1, 1, t.size());
  a.set_tube(0, 0, t);
  return a;
}

Tube to_tube(const Tensor3& scalar) {
  if (scalar.rows() != 1 || scalar.cols() != 1) shape_error("to_tube expects a 1 x 1 x p tensor");
  return scalar.tube(0, 0);
}

}  // namespace tubal
