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

#ifndef TUBAL_TPRODUCT_HPP_
#define TUBAL_TPRODUCT_HPP_

#include <cstddef>

#include "tubal/tensor3.hpp"
#include "tubal/types.hpp"

namespace tubal {

// kFrequency multiplies frequency slices; kReference forms
// fold(bcirc(A) unfold(B)) with dense matrices (see oracle.hpp).
enum class ProductPath { kFrequency, kReference };

// A * B for A: m x s x p, B: s x n x p. Throws ShapeError on mismatch.
Tensor3 tprod(const Tensor3& a, const Tensor3& b, ProductPath path = ProductPath::kFrequency);

// A * X with X viewed as an n x 1 x p tensor; returns an m x p matrix.
MatSlice tprod_mat(const Tensor3& a, const MatSlice& x,
                   ProductPath path = ProductPath::kFrequency);

inline constexpr double kSingularCutoff = 1e-12;

// Inverts every frequency slice. Throws SingularError when some slice has
// sigma_min <= cutoff * sigma_max.
Tensor3 t_inverse(const Tensor3& a, double cutoff = kSingularCutoff);

// Worst sigma_max / sigma_min over the frequency slices (infinity when some
// slice is singular).
double t_condition_number(const Tensor3& a);

// A^{*k} = A^{*(k-1)} * A for k >= 1.
Tensor3 t_power(const Tensor3& a, std::size_t k);

// ||U^T * U - I||_F <= tol * sqrt(n p).
bool is_orthogonal(const Tensor3& u, double tol = kDefaultTol);

}  // namespace tubal

#endif  // TUBAL_TPRODUCT_HPP_
