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

#ifndef TUBAL_TUBE_HPP_
#define TUBAL_TUBE_HPP_

#include <cstddef>
#include <vector>

#include "tubal/types.hpp"

namespace tubal {

// circ(a): the p x p circulant matrix with first column a, so that
// circ(a)(i, j) = a[(i - j) mod p].
Matrix circ(const Tube& a);

// First column of a circulant matrix. Throws NotCirculant when some entry
// deviates from the circulant pattern by more than tol.
Tube circ_inv(const Matrix& m, double tol = kDefaultTol);

// a (.) b := circ(a) b, the cyclic convolution of two tubes. Commutative with
// unity Tube::unity(p).
Tube tube_mul(const Tube& a, const Tube& b);

// a o X := X circ(a).
MatSlice tube_action(const Tube& a, const MatSlice& x);

Tube tube_abs(const Tube& a);

// kYes when a <= b elementwise (within tol), kNo when b <= a but not a <= b,
// kIncomparable otherwise.
Tri tube_le(const Tube& a, const Tube& b, double tol = 0.0);

// Tube of the 1 x 1 x p transpose: (a_1, a_p, a_{p-1}, ..., a_2).
Tube tube_transpose(const Tube& a);

// Unnormalized DFT of a tube; its entries are the eigenvalues of circ(a).
CVector tube_dft(const Tube& a);
// Inverse of tube_dft without dropping the imaginary part.
CVector tube_idft_complex(const CVector& spectrum);
// Inverse of tube_dft. Throws ImaginaryResidual when the result is not real
// to within tol relative to its magnitude.
Tube tube_idft(const CVector& spectrum, double tol = kDefaultTol);

struct TubalRoot {
  Tube root;
  bool nonnegative = false;
  double residual = 0.0;  // ||root^(.)2 - b||_2
};

// Every real a with ||a (.) a - b|| <= tol * max(1, ||b||). Enumerates the
// 2^(floor(p/2)+1) sign choices a_hat_k = +-sqrt(b_hat_k) over the
// independent half of the spectrum and mirrors the rest by conjugation, which
// covers all real square roots. Duplicates are removed; the result is empty
// when b has no real square root.
std::vector<TubalRoot> tubal_sqrt_all(const Tube& b, double tol = kDefaultTol);

}  // namespace tubal

#endif  // TUBAL_TUBE_HPP_
