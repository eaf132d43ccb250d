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

#ifndef TUBAL_SPECTRAL_HPP_
#define TUBAL_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tubal/tensor3.hpp"
#include "tubal/types.hpp"

namespace tubal {

struct TedResiduals {
  double reconstruction = 0.0;  // ||A - U*D*U^T||_F / ||A||_F
  double orthogonality = 0.0;   // ||U^T*U - I||_F
  double f_diagonal = 0.0;      // largest off-diagonal |D|
  double d_symmetry = 0.0;      // ||D - D^T||_max
  // verify_eigenpair(A, d_j, U_j) for each j.
  std::vector<double> eigenpair;

  double max_eigenpair() const;
};

// T-eigen-decomposition A = U * D * U^T of a T-symmetric tensor.
struct TedResult {
  Tensor3 u;
  Tensor3 d;
  // d_j = tube of D(j, j, :) with the transpose index order
  // (d_jj1, d_jjp, ..., d_jj2); D is T-symmetric, so the two coincide.
  std::vector<Tube> eigentuples;
  // Column k holds the eigenvalues of frequency slice k in the order used
  // for U and D (descending in canonical form).
  Matrix frequency_eigenvalues;
  TedResiduals residuals;
};

struct TedOptions {
  // A must satisfy ||A - A^T||_max <= tol * ||A||_max.
  double tol = kDefaultTol;
  // When set, each frequency slice uses a seeded random eigenvalue order
  // instead of the canonical descending one. The result is still a valid
  // decomposition; canonicalize() maps it back.
  std::optional<std::uint64_t> permute_seed;
};

// Canonical form: eigenvalues descending within each frequency slice,
// eigenvector phase chosen so the largest-magnitude entry is real positive,
// slices k > p/2 mirrored by conjugation. Throws NotTSymmetric.
TedResult ted(const Tensor3& a, const TedOptions& options = {});

// Re-sorts an existing decomposition of `a` into canonical form.
TedResult canonicalize(const Tensor3& a, const TedResult& decomposition);

// U_j^[0..p-1]: lateral slice j of U and its column shifts. j is 0-based;
// throws IndexError when j >= n.
std::vector<MatSlice> eigenmatrices(const TedResult& t, std::size_t j);

// ||A * X - d o X||_F / ||X||_F. Throws ZeroMatrix for X = 0.
double verify_eigenpair(const Tensor3& a, const Tube& d, const MatSlice& x);

struct ExtremalEigentuples {
  Tube largest;
  Tube smallest;
};

ExtremalEigentuples extremal_eigentuples(const TedResult& t);

// F_A(X) = X^T * A * X with X as an n x 1 x p tensor.
Tube quadform(const Tensor3& a, const MatSlice& x);

// A + A^T.
Tensor3 symmetrize(const Tensor3& a);

enum class SpectralClass { kPD, kPSD, kNotPsdByCriterion };
enum class ExactClass { kElementwisePsd, kNotElementwisePsd };

const char* to_string(SpectralClass c);
const char* to_string(ExactClass c);

struct PsdVerdict {
  SpectralClass spectral_class = SpectralClass::kNotPsdByCriterion;
  Tube smallest_eigentuple;
  // Most negative entry over all eigentuples.
  double min_entry = 0.0;
  // Filled only by oracle::certify.
  std::optional<ExactClass> exact_class;
  std::optional<MatSlice> witness;
  std::optional<std::size_t> witness_component;
  std::optional<Tube> witness_value;
};

struct PsdOptions {
  double tol = kDefaultTol;           // margin on eigentuple entries
  double symmetry_tol = kDefaultTol;  // forwarded to ted
  bool auto_symmetrize = false;       // classify A + A^T instead of A
};

// The eigentuple criterion: PD when every entry of every principal
// eigentuple exceeds tol, PSD when every entry is >= -tol. This says nothing
// about F_A(X) >= 0 elementwise; see oracle::certify for that.
PsdVerdict psd_spectral(const Tensor3& a, const PsdOptions& options = {});

// alpha(j, k) = <X, U_j^[k]>_F, so that X = sum alpha(j, k) U_j^[k].
Matrix expand_in_eigenbasis(const TedResult& t, const MatSlice& x);
MatSlice reconstruct_from_eigenbasis(const TedResult& t, const Matrix& coefficients);

}  // namespace tubal

#endif  // TUBAL_SPECTRAL_HPP_
