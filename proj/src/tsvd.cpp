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

#include "tubal/tsvd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "slice_kernels.hpp"
#include "tubal/error.hpp"
#include "tubal/parallel.hpp"
#include "tubal/spectral.hpp"
#include "tubal/tproduct.hpp"
#include "tubal/transform.hpp"
#include "tubal/tube.hpp"

namespace tubal {

namespace {

using Index = Eigen::Index;

Index ix(std::size_t v) { return static_cast<Index>(v); }

struct SliceSvd {
  CMatrix u;       // m x m
  Vector values;   // min(m, n), descending
  CMatrix v;       // n x n
};

SliceSvd slice_svd(const CMatrix& a, bool real_slice) {
  SliceSvd out;
  if (real_slice) {
    Eigen::JacobiSVD<Matrix> svd(a.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.u = svd.matrixU().cast<Complex>();
    out.v = svd.matrixV().cast<Complex>();
    out.values = svd.singularValues();
  } else {
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.u = svd.matrixU();
    out.v = svd.matrixV();
    out.values = svd.singularValues();
  }
  // Paired columns share one phase so that U S V^* is unchanged.
  const Index r = out.values.size();
  for (Index c = 0; c < r; ++c) {
    const CVector column = out.v.col(c);
    const Complex phase = detail::canonical_phase(column);
    out.v.col(c) *= phase;
    out.u.col(c) *= phase;
  }
  for (Index c = r; c < out.u.cols(); ++c) {
    const CVector column = out.u.col(c);
    out.u.col(c) *= detail::canonical_phase(column);
  }
  for (Index c = r; c < out.v.cols(); ++c) {
    const CVector column = out.v.col(c);
    out.v.col(c) *= detail::canonical_phase(column);
  }
  return out;
}

double relative(double err, double scale) { return scale > 0.0 ? err / scale : err; }

// Greedy nearest-tube assignment; returns max distance relative to the
// largest target norm (at least 1).
double match_tubes(const std::vector<Tube>& targets, const std::vector<Tube>& candidates) {
  if (targets.size() != candidates.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(candidates.size(), false);
  double worst = 0.0;
  double scale = 1.0;
  for (const Tube& t : targets) scale = std::max(scale, t.vector().norm());
  for (const Tube& t : targets) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      const double dist = (candidates[c].vector() - t.vector()).norm();
      if (dist < best) {
        best = dist;
        best_index = c;
      }
    }
    used[best_index] = true;
    worst = std::max(worst, best);
  }
  return worst / scale;
}

}  // namespace

double TsvdResiduals::max_pair() const {
  double worst = 0.0;
  for (double v : forward) worst = std::max(worst, v);
  for (double v : adjoint) worst = std::max(worst, v);
  return worst;
}

TsvdResult tsvd(const Tensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  const std::size_t r = std::min(m, n);
  const FreqSlices f = to_freq(a);
  const std::size_t count = FreqSlices::independent(p);
  std::vector<SliceSvd> half(count);
  parallel_for(count, m * n * std::max(m, n), [&](std::size_t k) {
    half[k] = slice_svd(f.slice(k), FreqSlices::self_conjugate(k, p));
  });

  FreqSlices fu(m, m, p), fs(m, n, p), fv(n, n, p);
  TsvdResult result;
  result.frequency_singular_values.resize(ix(r), ix(p));
  for (std::size_t k = 0; k < count; ++k) {
    CMatrix sigma = CMatrix::Zero(ix(m), ix(n));
    for (std::size_t j = 0; j < r; ++j) sigma(ix(j), ix(j)) = half[k].values[ix(j)];
    fu.set_mirrored(k, half[k].u);
    fs.set_mirrored(k, sigma);
    fv.set_mirrored(k, half[k].v);
    result.frequency_singular_values.col(ix(k)) = half[k].values;
    if (!FreqSlices::self_conjugate(k, p)) {
      result.frequency_singular_values.col(ix(p - k)) = half[k].values;
    }
  }
  result.u = from_freq(fu);
  result.s = from_freq(fs);
  result.v = from_freq(fv);
  for (std::size_t j = 0; j < r; ++j) {
    result.singular_tuples.push_back(tube_transpose(result.s.tube(j, j)));
  }

  TsvdResiduals& res = result.residuals;
  res.reconstruction =
      relative((a - tprod(tprod(result.u, result.s), transpose(result.v))).norm(), a.norm());
  res.u_orthogonality = (tprod(transpose(result.u), result.u) - identity(m, p)).norm();
  res.v_orthogonality = (tprod(transpose(result.v), result.v) - identity(n, p)).norm();
  double off = 0.0;
  for (std::size_t k = 0; k < p; ++k) {
    Matrix slice = result.s.slice(k);
    for (std::size_t j = 0; j < r; ++j) slice(ix(j), ix(j)) = 0.0;
    off = std::max(off, slice.cwiseAbs().maxCoeff());
  }
  res.f_diagonal = off;
  for (std::size_t j = 0; j < r; ++j) {
    const SingularPairs pairs = singular_pairs(result, j);
    double forward = 0.0, adjoint = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
      const PairResidual pr = singular_pair_residual(a, pairs.s, pairs.right[k], pairs.left[k]);
      forward = std::max(forward, pr.forward);
      adjoint = std::max(adjoint, pr.adjoint);
    }
    res.forward.push_back(forward);
    res.adjoint.push_back(adjoint);
  }
  return result;
}

SingularPairs singular_pairs(const TsvdResult& t, std::size_t j) {
  if (j >= t.singular_tuples.size()) {
    std::ostringstream os;
    os << "singular tuple index " << j << " out of range for min(m, n) = "
       << t.singular_tuples.size();
    throw Error(ErrorKind::kIndexError, os.str());
  }
  SingularPairs pairs;
  pairs.s = t.singular_tuples[j];
  const MatSlice x = lateral_slice(t.v, j);
  const MatSlice y = lateral_slice(t.u, j);
  for (std::size_t k = 0; k < t.u.depth(); ++k) {
    pairs.right.push_back(shift_columns(x, k));
    pairs.left.push_back(shift_columns(y, k));
  }
  return pairs;
}

PairResidual singular_pair_residual(const Tensor3& a, const Tube& s, const MatSlice& x,
                                    const MatSlice& y) {
  if (x.norm() == 0.0 || y.norm() == 0.0) {
    throw Error(ErrorKind::kZeroMatrix, "singular matrices must be nonzero");
  }
  PairResidual r;
  r.forward = (tprod_mat(a, x) - tube_action(s, y)).norm() / x.norm();
  r.adjoint = (tprod_mat(transpose(a), y) - tube_action(s, x)).norm() / y.norm();
  return r;
}

Report gram_consistency(const Tensor3& a, double tol) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  const TsvdResult t = tsvd(a);
  const Tensor3 at = transpose(a);
  const Tensor3 right_gram = tprod(at, a);  // n x n
  const Tensor3 left_gram = tprod(a, at);   // m x m

  std::vector<Tube> squares;
  for (const Tube& s : t.singular_tuples) squares.push_back(tube_mul(s, s));
  auto padded = [&](std::size_t size) {
    std::vector<Tube> out = squares;
    while (out.size() < size) out.push_back(Tube::zero(p));
    return out;
  };

  Report report;
  const TedResult right = ted(right_gram);
  const TedResult left = ted(left_gram);
  report.add("right_gram_eigentuples_match", match_tubes(padded(n), right.eigentuples), tol);
  report.add("left_gram_eigentuples_match", match_tubes(padded(m), left.eigentuples), tol);

  const Tensor3 st = transpose(t.s);
  const Tensor3 right_rebuilt = tprod(tprod(t.v, tprod(st, t.s)), transpose(t.v));
  const Tensor3 left_rebuilt = tprod(tprod(t.u, tprod(t.s, st)), transpose(t.u));
  report.add("right_gram_from_tsvd", relative((right_gram - right_rebuilt).norm(), right_gram.norm()),
             tol);
  report.add("left_gram_from_tsvd", relative((left_gram - left_rebuilt).norm(), left_gram.norm()),
             tol);

  const PsdVerdict right_psd = psd_spectral(right_gram);
  const PsdVerdict left_psd = psd_spectral(left_gram);
  report.add("right_gram_psd_spectral", std::max(0.0, -right_psd.min_entry), kDefaultTol,
             CheckKind::kClaim);
  report.add("left_gram_psd_spectral", std::max(0.0, -left_psd.min_entry), kDefaultTol,
             CheckKind::kClaim);
  return report;
}

}  // namespace tubal
