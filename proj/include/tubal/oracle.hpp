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

#ifndef TUBAL_ORACLE_HPP_
#define TUBAL_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "tubal/report.hpp"
#include "tubal/spectral.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/tsvd.hpp"
#include "tubal/types.hpp"

// Brute-force reference paths built only from bcirc, unfold and dense
// matrix algebra. Nothing here goes through the frequency transform, so
// agreement with the fast paths is an independent check. All of it is
// deliberately naive; intended for n p up to a few dozen.
namespace tubal::oracle {

inline constexpr std::size_t kDefaultMaxSize = 64;

Tensor3 oracle_tprod(const Tensor3& a, const Tensor3& b);
MatSlice oracle_tprod_mat(const Tensor3& a, const MatSlice& x);
// bcirc^{-1}(bcirc(A)^T).
Tensor3 oracle_transpose(const Tensor3& a);
// bcirc^{-1}(bcirc(A)^{-1}); throws Singular for a rank-deficient bcirc(A).
Tensor3 oracle_inverse(const Tensor3& a);
// fold(bcirc(X^T) bcirc(A) unfold(X)) as a tube.
Tube oracle_quadform(const Tensor3& a, const MatSlice& x);

// Explicit p x p DFT matrix F(r, c) = w^(r c), w = exp(-2 pi i / p).
CMatrix dft_matrix(std::size_t p);
// Diagonal blocks of (F_p kron I_m) bcirc(A) (F_p^* kron I_n) / p.
std::vector<CMatrix> frequency_blocks(const Tensor3& a);

// M_r with F_A(X)[r] = x^T M_r x for x = unfold_mat(X), by polarization
// over the n p standard basis matrices.
std::vector<Matrix> oracle_quadform_matrices(const Tensor3& a);

struct ExactPsd {
  ExactClass verdict = ExactClass::kElementwisePsd;
  double min_eigenvalue = 0.0;  // over all M_r
  std::size_t component = 0;    // r attaining it
  std::optional<MatSlice> witness;
  // F_A(witness) recomputed through the fast path.
  std::optional<Tube> witness_value;
  bool witness_verified = false;
};

// ELEMENTWISE_PSD iff every M_r has min eigenvalue >= -tol. Otherwise the
// unit eigenvector of the most negative eigenvalue, folded to n x p, is
// returned as the witness. Throws TooLarge when n p > max_size.
ExactPsd oracle_psd_exact(const Tensor3& a, double tol = kDefaultTol,
                          std::size_t max_size = kDefaultMaxSize);

// psd_spectral plus the exact verdict and witness.
PsdVerdict certify(const Tensor3& a, const PsdOptions& options = {},
                   std::size_t max_size = kDefaultMaxSize);

struct Thresholds {
  double reconstruction = 1e-10;  // relative
  double orthogonality = 1e-10;
  double structure = 1e-10;
  double eigenpair = 1e-9;
};

// Recomputes every TedResult invariant with dense bcirc arithmetic.
Report oracle_ted_check(const Tensor3& a, const TedResult& t, const Thresholds& th = {});
// Same for a TsvdResult, including both singular-pair equations.
Report oracle_tsvd_check(const Tensor3& a, const TsvdResult& t, const Thresholds& th = {});

}  // namespace tubal::oracle

#endif  // TUBAL_ORACLE_HPP_
