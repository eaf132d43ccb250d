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

#include "tubal/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tubal/dft.hpp"
#include "tubal/error.hpp"
#include "tubal/parallel.hpp"

namespace tubal {

namespace {

using Index = Eigen::Index;

Index ix(std::size_t v) { return static_cast<Index>(v); }

double max_magnitude(const FreqSlices& f) {
  double scale = 0.0;
  for (std::size_t k = 0; k < f.depth(); ++k) {
    if (f.slice(k).size() > 0) scale = std::max(scale, f.slice(k).cwiseAbs().maxCoeff());
  }
  return scale;
}

}  // namespace

FreqSlices::FreqSlices(std::size_t m, std::size_t n, std::size_t p)
    : m_(m), n_(n), slices_(p, CMatrix::Zero(ix(m), ix(n))) {
  if (m == 0 || n == 0 || p == 0) {
    throw Error(ErrorKind::kShapeError, "frequency slice dimensions must be >= 1");
  }
}

void FreqSlices::set_mirrored(std::size_t k, const CMatrix& value) {
  const std::size_t p = depth();
  if (self_conjugate(k, p)) {
    slices_[k] = value.real().cast<Complex>();
  } else {
    slices_[k] = value;
    slices_[p - k] = value.conjugate();
  }
}

FreqSlices to_freq(const Tensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  FreqSlices f(m, n, p);
  if (p == 1) {
    f.slice(0) = a.slice(0).cast<Complex>();
    return f;
  }
  const DftPlan plan(p);
  std::vector<Complex> in(p), out(p);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < p; ++t) in[t] = a(i, j, t);
      plan.forward(in, out);
      for (std::size_t k = 0; k < FreqSlices::independent(p); ++k) f.slice(k)(ix(i), ix(j)) = out[k];
    }
  }
  for (std::size_t k = 0; k < FreqSlices::independent(p); ++k) {
    CMatrix half = f.slice(k);
    f.set_mirrored(k, half);
  }
  return f;
}

double conjugate_symmetry_error(const FreqSlices& f) {
  const std::size_t p = f.depth();
  double err = 0.0;
  for (std::size_t k = 0; k < p; ++k) {
    const std::size_t partner = (p - k) % p;
    err = std::max(err, (f.slice(partner) - f.slice(k).conjugate()).cwiseAbs().maxCoeff());
  }
  return err;
}

InverseTransform from_freq_checked(const FreqSlices& f, double tol) {
  const std::size_t m = f.rows(), n = f.cols(), p = f.depth();
  const double scale = max_magnitude(f);
  InverseTransform result;
  result.symmetry_error = conjugate_symmetry_error(f);
  if (result.symmetry_error > tol * scale) {
    std::ostringstream os;
    os << "frequency slices violate conjugate symmetry by " << result.symmetry_error
       << " (scale " << scale << ")";
    throw Error(ErrorKind::kSymmetryViolation, os.str());
  }

  Tensor3 a(m, n, p);
  if (p == 1) {
    result.imaginary_residual = f.slice(0).imag().cwiseAbs().maxCoeff();
    if (result.imaginary_residual > tol * scale) {
      throw Error(ErrorKind::kImaginaryResidual, "inverse transform is not real");
    }
    a.slice(0) = f.slice(0).real();
    result.tensor = std::move(a);
    return result;
  }

  const DftPlan plan(p);
  std::vector<Complex> in(p), out(p);
  double imag = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < p; ++k) in[k] = f.slice(k)(ix(i), ix(j));
      plan.inverse(in, out);
      for (std::size_t t = 0; t < p; ++t) {
        imag = std::max(imag, std::abs(out[t].imag()));
        a(i, j, t) = out[t].real();
      }
    }
  }
  result.imaginary_residual = imag;
  if (imag > tol * scale) {
    std::ostringstream os;
    os << "inverse transform has imaginary residual " << imag << " (scale " << scale << ")";
    throw Error(ErrorKind::kImaginaryResidual, os.str());
  }

  const double floor =
      4.0 * static_cast<double>(p) * std::numeric_limits<double>::epsilon() * scale;
  for (double& v : a.data()) {
    if (std::abs(v) <= floor) v = 0.0;
  }
  result.tensor = std::move(a);
  return result;
}

Tensor3 from_freq(const FreqSlices& f, double tol) { return from_freq_checked(f, tol).tensor; }

bool hermitize_check(const FreqSlices& f, double tol) {
  if (f.rows() != f.cols()) {
    throw Error(ErrorKind::kShapeError, "Hermitian check requires square slices");
  }
  for (std::size_t k = 0; k < f.depth(); ++k) {
    if ((f.slice(k) - f.slice(k).adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

FreqSlices slice_product(const FreqSlices& f, const FreqSlices& g) {
  if (f.cols() != g.rows() || f.depth() != g.depth()) {
    std::ostringstream os;
    os << "slice product: " << f.rows() << "x" << f.cols() << "x" << f.depth() << " times "
       << g.rows() << "x" << g.cols() << "x" << g.depth();
    throw Error(ErrorKind::kShapeError, os.str());
  }
  const std::size_t p = f.depth();
  FreqSlices out(f.rows(), g.cols(), p);
  const std::size_t count = FreqSlices::independent(p);
  std::vector<CMatrix> half(count);
  parallel_for(count, f.rows() * f.cols() * g.cols(),
               [&](std::size_t k) { half[k] = f.slice(k) * g.slice(k); });
  for (std::size_t k = 0; k < count; ++k) out.set_mirrored(k, half[k]);
  return out;
}

}  // namespace tubal
