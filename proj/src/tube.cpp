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

#include "tubal/tube.hpp"

#include <cmath>
#include <sstream>

#include "tubal/dft.hpp"
#include "tubal/error.hpp"

namespace tubal {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": lengths " << a << " and " << b << " differ";
    throw Error(ErrorKind::kDimensionMismatch, os.str());
  }
}

}  // namespace

Matrix circ(const Tube& a) {
  const auto p = static_cast<Eigen::Index>(a.size());
  Matrix m(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index i = 0; i < p; ++i) m(i, j) = a.vector()[(i - j + p) % p];
  }
  return m;
}

Tube circ_inv(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::kNotCirculant, "circulant matrix must be square and non-empty");
  }
  const Eigen::Index p = m.rows();
  double deviation = 0.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index i = 0; i < p; ++i) {
      deviation = std::max(deviation, std::abs(m(i, j) - m((i - j + p) % p, 0)));
    }
  }
  if (deviation > tol) {
    std::ostringstream os;
    os << "matrix deviates from circulant structure by " << deviation << " > " << tol;
    throw Error(ErrorKind::kNotCirculant, os.str());
  }
  return Tube(Vector(m.col(0)));
}

Tube tube_mul(const Tube& a, const Tube& b) {
  require_same_length(a.size(), b.size(), "tube_mul");
  const auto p = static_cast<Eigen::Index>(a.size());
  Tube out(a.size());
  for (Eigen::Index i = 0; i < p; ++i) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) acc += a.vector()[(i - j + p) % p] * b.vector()[j];
    out.vector()[i] = acc;
  }
  return out;
}

MatSlice tube_action(const Tube& a, const MatSlice& x) {
  require_same_length(a.size(), x.cols(), "tube_action");
  return MatSlice(Matrix(x.matrix() * circ(a)));
}

Tube tube_abs(const Tube& a) { return Tube(Vector(a.vector().cwiseAbs())); }

Tri tube_le(const Tube& a, const Tube& b, double tol) {
  require_same_length(a.size(), b.size(), "tube_le");
  const bool le = ((a.vector() - b.vector()).array() <= tol).all();
  if (le) return Tri::kYes;
  const bool ge = ((b.vector() - a.vector()).array() <= tol).all();
  return ge ? Tri::kNo : Tri::kIncomparable;
}

Tube tube_transpose(const Tube& a) {
  const std::size_t p = a.size();
  Tube out(p);
  out[0] = a[0];
  for (std::size_t k = 1; k < p; ++k) out[k] = a[p - k];
  return out;
}

CVector tube_dft(const Tube& a) {
  const std::size_t p = a.size();
  DftPlan plan(p);
  std::vector<Complex> in(p), out(p);
  for (std::size_t t = 0; t < p; ++t) in[t] = a[t];
  plan.forward(in, out);
  CVector spectrum(static_cast<Eigen::Index>(p));
  for (std::size_t k = 0; k < p; ++k) spectrum[static_cast<Eigen::Index>(k)] = out[k];
  return spectrum;
}

CVector tube_idft_complex(const CVector& spectrum) {
  const auto p = static_cast<std::size_t>(spectrum.size());
  DftPlan plan(p);
  std::vector<Complex> in(spectrum.data(), spectrum.data() + spectrum.size()), out(p);
  plan.inverse(in, out);
  CVector values(spectrum.size());
  for (std::size_t t = 0; t < p; ++t) values[static_cast<Eigen::Index>(t)] = out[t];
  return values;
}

Tube tube_idft(const CVector& spectrum, double tol) {
  CVector values = tube_idft_complex(spectrum);
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  const double imag = values.imag().cwiseAbs().maxCoeff();
  if (imag > tol * scale) {
    std::ostringstream os;
    os << "inverse DFT has imaginary residual " << imag;
    throw Error(ErrorKind::kImaginaryResidual, os.str());
  }
  return Tube(Vector(values.real()));
}

std::vector<TubalRoot> tubal_sqrt_all(const Tube& b, double tol) {
  const std::size_t p = b.size();
  const CVector spectrum = tube_dft(b);
  const std::size_t half = p / 2 + 1;  // independent indices 0..floor(p/2)
  CVector principal(static_cast<Eigen::Index>(p));
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(p); ++k) {
    principal[k] = std::sqrt(spectrum[k]);
  }

  const double bound = tol * std::max(1.0, b.vector().norm());
  std::vector<TubalRoot> roots;
  const std::size_t patterns = std::size_t{1} << half;
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    CVector candidate(static_cast<Eigen::Index>(p));
    for (std::size_t k = 0; k < half; ++k) {
      Complex v = principal[static_cast<Eigen::Index>(k)];
      if ((mask >> k) & 1U) v = -v;
      candidate[static_cast<Eigen::Index>(k)] = v;
      if (k != 0 && 2 * k != p) candidate[static_cast<Eigen::Index>(p - k)] = std::conj(v);
    }
    // Self-conjugate bins must be real for a real root to exist.
    CVector values = tube_idft_complex(candidate);
    if (values.imag().cwiseAbs().maxCoeff() > bound) continue;
    Tube root(Vector(values.real()));
    double residual = (tube_mul(root, root).vector() - b.vector()).norm();
    if (residual > bound) continue;

    bool duplicate = false;
    for (const auto& r : roots) {
      if ((r.root.vector() - root.vector()).norm() <= bound) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    roots.push_back({root, root.is_nonnegative(bound), residual});
  }
  return roots;
}

}  // namespace tubal
