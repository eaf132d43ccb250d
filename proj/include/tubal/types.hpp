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

#ifndef TUBAL_TYPES_HPP_
#define TUBAL_TYPES_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>

#include <Eigen/Dense>

namespace tubal {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Absolute structure-check tolerance used when a caller does not supply one.
inline constexpr double kDefaultTol = 1e-10;

// Three-valued answer for questions posed under the elementwise partial order
// on R^p, where two tubes may be incomparable.
enum class Tri { kYes, kNo, kIncomparable };

const char* to_string(Tri value);

// A tubal scalar: a real vector of length p >= 1.
class Tube {
 public:
  Tube() = default;
  explicit Tube(std::size_t p);
  explicit Tube(Vector values);
  Tube(std::initializer_list<double> values);

  // e = (1, 0, ..., 0), the unity of the tube ring.
  static Tube unity(std::size_t p);
  static Tube zero(std::size_t p) { return Tube(p); }

  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }
  double& operator[](std::size_t i) { return values_[static_cast<Eigen::Index>(i)]; }

  const Vector& vector() const { return values_; }
  Vector& vector() { return values_; }

  bool is_nonnegative(double tol = 0.0) const;
  bool is_positive(double tol = 0.0) const;

  Tube& operator+=(const Tube& other);
  Tube& operator-=(const Tube& other);
  Tube& operator*=(double scale);

  friend Tube operator+(Tube a, const Tube& b) { return a += b; }
  friend Tube operator-(Tube a, const Tube& b) { return a -= b; }
  friend Tube operator*(Tube a, double s) { return a *= s; }
  friend Tube operator*(double s, Tube a) { return a *= s; }
  friend bool operator==(const Tube& a, const Tube& b);

 private:
  Vector values_;
};

// A real n x p matrix; column k is frontal slice k of the n x 1 x p tensor
// it stands for.
class MatSlice {
 public:
  MatSlice() = default;
  MatSlice(std::size_t n, std::size_t p);
  explicit MatSlice(Matrix values);

  std::size_t rows() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values_.cols()); }

  double operator()(std::size_t i, std::size_t k) const {
    return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  }
  double& operator()(std::size_t i, std::size_t k) {
    return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  }

  const Matrix& matrix() const { return values_; }
  Matrix& matrix() { return values_; }

  double norm() const { return values_.norm(); }

  MatSlice& operator+=(const MatSlice& other);
  MatSlice& operator-=(const MatSlice& other);
  MatSlice& operator*=(double scale);

  friend MatSlice operator+(MatSlice a, const MatSlice& b) { return a += b; }
  friend MatSlice operator-(MatSlice a, const MatSlice& b) { return a -= b; }
  friend MatSlice operator*(MatSlice a, double s) { return a *= s; }
  friend MatSlice operator*(double s, MatSlice a) { return a *= s; }
  friend bool operator==(const MatSlice& a, const MatSlice& b);

 private:
  Matrix values_;
};

}  // namespace tubal

#endif  // TUBAL_TYPES_HPP_
