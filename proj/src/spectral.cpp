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

#include "tubal/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slice_kernels.hpp"
#include "tubal/error.hpp"
#include "tubal/parallel.hpp"
#include "tubal/tproduct.hpp"
#include "tubal/transform.hpp"
#include "tubal/tube.hpp"

namespace tubal {

namespace {

using Index = Eigen::Index;

Index ix(std::size_t v) { return static_cast<Index>(v); }

void require_square(const Tensor3& a, const char* op) {
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << op << " requires an n x n x p tensor, got " << a.rows() << "x" << a.cols() << "x"
       << a.depth();
    throw Error(ErrorKind::kShapeError, os.str());
  }
}

double relative(double err, double scale) { return scale > 0.0 ? err / scale : err; }

// Builds U, D and the eigentuples from per-slice eigenpairs k = 0..p/2.
TedResult assemble(const Tensor3& a, const std::vector<detail::SliceEigen>& half) {
  const std::size_t n = a.rows(), p = a.depth();
  FreqSlices fu(n, n, p), fd(n, n, p);
  TedResult result;
  result.frequency_eigenvalues.resize(ix(n), ix(p));
  for (std::size_t k = 0; k < half.size(); ++k) {
    fu.set_mirrored(k, half[k].vectors);
    fd.set_mirrored(k, half[k].values.cast<Complex>().asDiagonal().toDenseMatrix());
    result.frequency_eigenvalues.col(ix(k)) = half[k].values;
    if (!FreqSlices::self_conjugate(k, p)) {
      result.frequency_eigenvalues.col(ix(p - k)) = half[k].values;
    }
  }
  result.u = from_freq(fu);
  result.d = from_freq(fd);
  result.eigentuples.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    result.eigentuples.push_back(tube_transpose(result.d.tube(j, j)));
  }

  TedResiduals& r = result.residuals;
  const Tensor3 ut = transpose(result.u);
  const Tensor3 rebuilt = tprod(tprod(result.u, result.d), ut);
  r.reconstruction = relative((a - rebuilt).norm(), a.norm());
  r.orthogonality = (tprod(ut, result.u) - identity(n, p)).norm();
  double off = 0.0;
  for (std::size_t k = 0; k < p; ++k) {
    Matrix slice = result.d.slice(k);
    slice.diagonal().setZero();
    off = std::max(off, slice.cwiseAbs().maxCoeff());
  }
  r.f_diagonal = off;
  r.d_symmetry = (result.d - transpose(result.d)).max_abs();
  r.eigenpair.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    r.eigenpair.push_back(
        verify_eigenpair(a, result.eigentuples[j], lateral_slice(result.u, j)));
  }
  return result;
}

}  // namespace

double TedResiduals::max_eigenpair() const {
  return eigenpair.empty() ? 0.0 : *std::max_element(eigenpair.begin(), eigenpair.end());
}

TedResult ted(const Tensor3& a, const TedOptions& options) {
  require_square(a, "ted");
  const double scale = a.max_abs();
  if (!is_t_symmetric(a, options.tol * scale)) {
    std::ostringstream os;
    os << "tensor is not T-symmetric: ||A - A^T||_max = " << (a - transpose(a)).max_abs()
       << " > " << options.tol * scale;
    throw Error(ErrorKind::kNotTSymmetric, os.str());
  }

  const std::size_t n = a.rows(), p = a.depth();
  const FreqSlices f = to_freq(a);
  if (!hermitize_check(f, options.tol * scale * static_cast<double>(p))) {
    throw Error(ErrorKind::kNotTSymmetric, "frequency slices are not Hermitian");
  }

  const std::size_t count = FreqSlices::independent(p);
  std::vector<detail::SliceEigen> half(count);
  parallel_for(count, n * n * n, [&](std::size_t k) {
    half[k] = detail::hermitian_eigen(f.slice(k), FreqSlices::self_conjugate(k, p));
    if (options.permute_seed) {
      detail::reorder(half[k], detail::seeded_permutation(n, *options.permute_seed + 7919 * k));
    }
    detail::canonicalize_phases(half[k].vectors);
  });
  return assemble(a, half);
}

TedResult canonicalize(const Tensor3& a, const TedResult& decomposition) {
  require_square(a, "canonicalize");
  const std::size_t n = a.rows(), p = a.depth();
  const FreqSlices fu = to_freq(decomposition.u);
  const FreqSlices fd = to_freq(decomposition.d);
  const std::size_t count = FreqSlices::independent(p);
  std::vector<detail::SliceEigen> half(count);
  parallel_for(count, n * n, [&](std::size_t k) {
    half[k].values = fd.slice(k).diagonal().real();
    half[k].vectors = fu.slice(k);
    detail::reorder(half[k], detail::descending_order(half[k].values));
    detail::canonicalize_phases(half[k].vectors);
  });
  return assemble(a, half);
}

std::vector<MatSlice> eigenmatrices(const TedResult& t, std::size_t j) {
  if (j >= t.u.cols()) {
    std::ostringstream os;
    os << "eigenmatrix index " << j << " out of range for n = " << t.u.cols();
    throw Error(ErrorKind::kIndexError, os.str());
  }
  const MatSlice base = lateral_slice(t.u, j);
  std::vector<MatSlice> shifts;
  shifts.reserve(t.u.depth());
  for (std::size_t k = 0; k < t.u.depth(); ++k) shifts.push_back(shift_columns(base, k));
  return shifts;
}

double verify_eigenpair(const Tensor3& a, const Tube& d, const MatSlice& x) {
  const double norm = x.norm();
  if (norm == 0.0) throw Error(ErrorKind::kZeroMatrix, "eigenmatrix must be nonzero");
  return (tprod_mat(a, x) - tube_action(d, x)).norm() / norm;
}

ExtremalEigentuples extremal_eigentuples(const TedResult& t) {
  return {t.eigentuples.front(), t.eigentuples.back()};
}

Tube quadform(const Tensor3& a, const MatSlice& x) {
  require_square(a, "quadform");
  if (x.rows() != a.rows() || x.cols() != a.depth()) {
    std::ostringstream os;
    os << "quadform: matrix " << x.rows() << "x" << x.cols() << " does not match tensor "
       << a.rows() << "x" << a.cols() << "x" << a.depth();
    throw Error(ErrorKind::kShapeError, os.str());
  }
  const Tensor3 xt = to_tensor(x);
  return to_tube(tprod(tprod(transpose(xt), a), xt));
}

Tensor3 symmetrize(const Tensor3& a) {
  require_square(a, "symmetrize");
  return a + transpose(a);
}

const char* to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::kPD: return "PD";
    case SpectralClass::kPSD: return "PSD";
    case SpectralClass::kNotPsdByCriterion: return "NOT_PSD_BY_CRITERION";
  }
  return "NOT_PSD_BY_CRITERION";
}

const char* to_string(ExactClass c) {
  switch (c) {
    case ExactClass::kElementwisePsd: return "ELEMENTWISE_PSD";
    case ExactClass::kNotElementwisePsd: return "NOT_ELEMENTWISE_PSD";
  }
  return "NOT_ELEMENTWISE_PSD";
}

PsdVerdict psd_spectral(const Tensor3& a, const PsdOptions& options) {
  const Tensor3 target = options.auto_symmetrize ? symmetrize(a) : a;
  TedOptions ted_options;
  ted_options.tol = options.symmetry_tol;
  const TedResult t = ted(target, ted_options);

  PsdVerdict verdict;
  verdict.smallest_eigentuple = t.eigentuples.back();
  double min_entry = t.eigentuples.front().vector().minCoeff();
  for (const Tube& d : t.eigentuples) min_entry = std::min(min_entry, d.vector().minCoeff());
  verdict.min_entry = min_entry;
  if (min_entry > options.tol) {
    verdict.spectral_class = SpectralClass::kPD;
  } else if (min_entry >= -options.tol) {
    verdict.spectral_class = SpectralClass::kPSD;
  } else {
    verdict.spectral_class = SpectralClass::kNotPsdByCriterion;
  }
  return verdict;
}

Matrix expand_in_eigenbasis(const TedResult& t, const MatSlice& x) {
  const std::size_t n = t.u.rows(), p = t.u.depth();
  if (x.rows() != n || x.cols() != p) {
    throw Error(ErrorKind::kShapeError, "expand_in_eigenbasis: matrix shape does not match U");
  }
  Matrix coefficients(ix(n), ix(p));
  for (std::size_t j = 0; j < n; ++j) {
    const auto basis = eigenmatrices(t, j);
    for (std::size_t k = 0; k < p; ++k) {
      coefficients(ix(j), ix(k)) = x.matrix().cwiseProduct(basis[k].matrix()).sum();
    }
  }
  return coefficients;
}

MatSlice reconstruct_from_eigenbasis(const TedResult& t, const Matrix& coefficients) {
  const std::size_t n = t.u.rows(), p = t.u.depth();
  if (coefficients.rows() != ix(n) || coefficients.cols() != ix(p)) {
    throw Error(ErrorKind::kShapeError, "coefficient matrix must be n x p");
  }
  MatSlice x(n, p);
  for (std::size_t j = 0; j < n; ++j) {
    const auto basis = eigenmatrices(t, j);
    for (std::size_t k = 0; k < p; ++k) x += coefficients(ix(j), ix(k)) * basis[k];
  }
  return x;
}

}  // namespace tubal
