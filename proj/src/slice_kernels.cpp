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

#include "slice_kernels.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tubal::detail {

Eigen::Index pivot_index(const CVector& column) {
  const double largest = column.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < column.size(); ++i) {
    if (std::abs(column[i]) >= largest * (1.0 - 1e-10)) return i;
  }
  return 0;
}

Complex canonical_phase(const CVector& column) {
  if (column.size() == 0) return 1.0;
  const Complex pivot = column[pivot_index(column)];
  const double magnitude = std::abs(pivot);
  return magnitude > 0.0 ? std::conj(pivot) / magnitude : Complex(1.0);
}

SliceEigen hermitian_eigen(const CMatrix& h, bool real_slice) {
  SliceEigen out;
  if (real_slice) {
    const Matrix sym = 0.5 * (h.real() + h.real().transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors().cast<Complex>();
  } else {
    const CMatrix herm = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  }
  reorder(out, descending_order(out.values));
  return out;
}

void reorder(SliceEigen& e, const std::vector<std::size_t>& order) {
  Vector values(e.values.size());
  CMatrix vectors(e.vectors.rows(), e.vectors.cols());
  for (std::size_t c = 0; c < order.size(); ++c) {
    const auto src = static_cast<Eigen::Index>(order[c]);
    const auto dst = static_cast<Eigen::Index>(c);
    values[dst] = e.values[src];
    vectors.col(dst) = e.vectors.col(src);
  }
  e.values = std::move(values);
  e.vectors = std::move(vectors);
}

std::vector<std::size_t> descending_order(const Vector& values) {
  std::vector<std::size_t> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[static_cast<Eigen::Index>(a)] > values[static_cast<Eigen::Index>(b)];
  });
  return order;
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  // Fisher-Yates with modulo draws: only the mt19937_64 stream is
  // standardized, std::shuffle is not.
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  return order;
}

void canonicalize_phases(CMatrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const CVector column = vectors.col(c);
    vectors.col(c) *= canonical_phase(column);
  }
}

}  // namespace tubal::detail
