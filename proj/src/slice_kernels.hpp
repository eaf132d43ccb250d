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

#ifndef TUBAL_SRC_SLICE_KERNELS_HPP_
#define TUBAL_SRC_SLICE_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tubal/types.hpp"

namespace tubal::detail {

// Index of the first entry whose magnitude is within a relative 1e-10 of
// the column maximum.
Eigen::Index pivot_index(const CVector& column);

// Complex unit that makes column(pivot_index(column)) real positive.
Complex canonical_phase(const CVector& column);

struct SliceEigen {
  Vector values;    // length n
  CMatrix vectors;  // n x n, columns match values
};

// Hermitian eigendecomposition of (h + h^*) / 2, eigenvalues descending
// with ties kept in solver order. Uses the real solver when `real_slice`.
SliceEigen hermitian_eigen(const CMatrix& h, bool real_slice);

// Reorders eigenpairs by `order` (new column c is old column order[c]).
void reorder(SliceEigen& e, const std::vector<std::size_t>& order);

// Stable descending order of values.
std::vector<std::size_t> descending_order(const Vector& values);

// Seeded permutation of 0..n-1, stable across platforms.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

// Multiplies each column by canonical_phase of itself.
void canonicalize_phases(CMatrix& vectors);

}  // namespace tubal::detail

#endif  // TUBAL_SRC_SLICE_KERNELS_HPP_
