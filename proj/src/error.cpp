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

#include "tubal/error.hpp"

#include <sstream>

namespace tubal {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kShapeError: return "ShapeError";
    case ErrorKind::kNotCirculant: return "NotCirculant";
    case ErrorKind::kNotBlockCirculant: return "NotBlockCirculant";
    case ErrorKind::kSymmetryViolation: return "SymmetryViolation";
    case ErrorKind::kImaginaryResidual: return "ImaginaryResidual";
    case ErrorKind::kSingular: return "Singular";
    case ErrorKind::kNotTSymmetric: return "NotTSymmetric";
    case ErrorKind::kIndexError: return "IndexError";
    case ErrorKind::kZeroMatrix: return "ZeroMatrix";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kFormatError: return "FormatError";
  }
  return "Unknown";
}

namespace {

std::string singular_message(std::size_t slice, double ratio, double cutoff) {
  std::ostringstream os;
  os << "frequency slice " << slice << " is singular: sigma_min/sigma_max = "
     << ratio << " <= " << cutoff;
  return os.str();
}

}  // namespace

SingularError::SingularError(std::size_t slice, double ratio, double cutoff)
    : Error(ErrorKind::kSingular, singular_message(slice, ratio, cutoff)),
      slice_(slice),
      ratio_(ratio),
      cutoff_(cutoff) {}

}  // namespace tubal
