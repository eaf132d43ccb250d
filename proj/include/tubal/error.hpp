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

#ifndef TUBAL_ERROR_HPP_
#define TUBAL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tubal {

enum class ErrorKind {
  kDimensionMismatch,
  kShapeError,
  kNotCirculant,
  kNotBlockCirculant,
  kSymmetryViolation,
  kImaginaryResidual,
  kSingular,
  kNotTSymmetric,
  kIndexError,
  kZeroMatrix,
  kTooLarge,
  kFormatError,
};

// Stable identifier used in CLI messages and JSON reports, e.g. "ShapeError".
std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

// Raised by t_inverse when a frequency slice is numerically singular.
class SingularError : public Error {
 public:
  SingularError(std::size_t slice, double ratio, double cutoff);

  // Index of the first offending frequency slice.
  std::size_t slice() const { return slice_; }
  // sigma_min / sigma_max of that slice.
  double ratio() const { return ratio_; }
  double cutoff() const { return cutoff_; }

 private:
  std::size_t slice_;
  double ratio_;
  double cutoff_;
};

}  // namespace tubal

#endif  // TUBAL_ERROR_HPP_
