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

#include "tubal/types.hpp"

#include <sstream>
#include <utility>

#include "tubal/error.hpp"

namespace tubal {

const char* to_string(Tri value) {
  switch (value) {
    case Tri::kYes: return "true";
    case Tri::kNo: return "false";
    case Tri::kIncomparable: return "incomparable";
  }
  return "incomparable";
}

namespace {

void require_same_length(const Tube& a, const Tube& b) {
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << "tube lengths differ: " << a.size() << " vs " << b.size();
    throw Error(ErrorKind::kDimensionMismatch, os.str());
  }
}

void require_same_shape(const MatSlice& a, const MatSlice& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "matrix shapes differ: " << a.rows() << "x" << a.cols() << " vs "
       << b.rows() << "x" << b.cols();
    throw Error(ErrorKind::kDimensionMismatch, os.str());
  }
}

}  // namespace

Tube::Tube(std::size_t p) : values_(Vector::Zero(static_cast<Eigen::Index>(p))) {
  if (p == 0) throw Error(ErrorKind::kShapeError, "tube length must be >= 1");
}

Tube::Tube(Vector values) : values_(std::move(values)) {
  if (values_.size() == 0) throw Error(ErrorKind::kShapeError, "tube length must be >= 1");
}

Tube::Tube(std::initializer_list<double> values)
    : values_(static_cast<Eigen::Index>(values.size())) {
  if (values.size() == 0) throw Error(ErrorKind::kShapeError, "tube length must be >= 1");
  Eigen::Index i = 0;
  for (double v : values) values_[i++] = v;
}

Tube Tube::unity(std::size_t p) {
  Tube e(p);
  e[0] = 1.0;
  return e;
}

bool Tube::is_nonnegative(double tol) const {
  return (values_.array() >= -tol).all();
}

bool Tube::is_positive(double tol) const {
  return (values_.array() > tol).all();
}

Tube& Tube::operator+=(const Tube& other) {
  require_same_length(*this, other);
  values_ += other.values_;
  return *this;
}

Tube& Tube::operator-=(const Tube& other) {
  require_same_length(*this, other);
  values_ -= other.values_;
  return *this;
}

Tube& Tube::operator*=(double scale) {
  values_ *= scale;
  return *this;
}

bool operator==(const Tube& a, const Tube& b) {
  return a.size() == b.size() && a.values_ == b.values_;
}

MatSlice::MatSlice(std::size_t n, std::size_t p)
    : values_(Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p))) {
  if (n == 0 || p == 0) throw Error(ErrorKind::kShapeError, "matrix dimensions must be >= 1");
}

MatSlice::MatSlice(Matrix values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0) {
    throw Error(ErrorKind::kShapeError, "matrix dimensions must be >= 1");
  }
}

MatSlice& MatSlice::operator+=(const MatSlice& other) {
  require_same_shape(*this, other);
  values_ += other.values_;
  return *this;
}

MatSlice& MatSlice::operator-=(const MatSlice& other) {
  require_same_shape(*this, other);
  values_ -= other.values_;
  return *this;
}

MatSlice& MatSlice::operator*=(double scale) {
  values_ *= scale;
  return *this;
}

bool operator==(const MatSlice& a, const MatSlice& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.values_ == b.values_;
}

}  // namespace tubal
