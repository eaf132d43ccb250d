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

#ifndef TUBAL_TSVD_HPP_
#define TUBAL_TSVD_HPP_

#include <cstddef>
#include <vector>

#include "tubal/report.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/types.hpp"

namespace tubal {

struct TsvdResiduals {
  double reconstruction = 0.0;   // ||A - U*S*V^T||_F / ||A||_F
  double u_orthogonality = 0.0;  // ||U^T*U - I||_F
  double v_orthogonality = 0.0;
  double f_diagonal = 0.0;       // largest off-diagonal |S|
  // Per singular tuple, worst over the p column shifts:
  //   forward  ||A * X - s o Y||_F / ||X||_F
  //   adjoint  ||A^T * Y - s o X||_F / ||Y||_F
  std::vector<double> forward;
  std::vector<double> adjoint;

  double max_pair() const;
};

// A = U * S * V^T with U: m x m x p, S: m x n x p f-diagonal, V: n x n x p.
struct TsvdResult {
  Tensor3 u;
  Tensor3 s;
  Tensor3 v;
  // min(m, n) tubes, same index convention as TedResult::eigentuples.
  std::vector<Tube> singular_tuples;
  // Column k: singular values of frequency slice k, descending.
  Matrix frequency_singular_values;
  TsvdResiduals residuals;
};

TsvdResult tsvd(const Tensor3& a);

struct SingularPairs {
  Tube s;
  std::vector<MatSlice> right;  // X_j^[k] = shift of lateral slice j of V
  std::vector<MatSlice> left;   // Y_j^[k] = shift of lateral slice j of U
};

// 0-based j < min(m, n); throws IndexError otherwise.
SingularPairs singular_pairs(const TsvdResult& t, std::size_t j);

struct PairResidual {
  double forward = 0.0;
  double adjoint = 0.0;
};

PairResidual singular_pair_residual(const Tensor3& a, const Tube& s, const MatSlice& x,
                                    const MatSlice& y);

// Compares TED of A^T*A (n x n) and A*A^T (m x m) with s_j^(.)2, padded with
// zero tubes to each Gram size, by greedy nearest-tube matching. Also checks
// the Gram factorizations built from the TSVD factors. The spectral PSD
// verdicts of both Grams are recorded as CheckKind::kClaim.
Report gram_consistency(const Tensor3& a, double tol = 1e-8);

}  // namespace tubal

#endif  // TUBAL_TSVD_HPP_
