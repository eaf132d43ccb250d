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

#include "tubal/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "tubal/error.hpp"

namespace tubal::oracle {

namespace {

using Index = Eigen::Index;

Index ix(std::size_t v) { return static_cast<Index>(v); }

// Independent circulant builder: column c is a cyclically shifted down by c.
Matrix circulant(const Tube& a) {
  const Index p = ix(a.size());
  Matrix c = Matrix::Zero(p, p);
  for (Index col = 0; col < p; ++col) {
    for (Index row = 0; row < p; ++row) c((row + col) % p, col) = a[static_cast<std::size_t>(row)];
  }
  return c;
}

void require_product_shapes(const Tensor3& a, const Tensor3& b) {
  if (a.cols() != b.rows() || a.depth() != b.depth()) {
    std::ostringstream os;
    os << "oracle T-product shape mismatch: " << a.rows() << "x" << a.cols() << "x"
       << a.depth() << " * " << b.rows() << "x" << b.cols() << "x" << b.depth();
    throw Error(ErrorKind::kShapeError, os.str());
  }
}

void require_square(const Tensor3& a, const char* op) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::kShapeError, std::string(op) + " requires an n x n x p tensor");
  }
}

// bcirc(X^T) bcirc(A) unfold(X) with the bcirc of A precomputed.
Vector quadform_dense(const Matrix& blocks_a, const MatSlice& x) {
  const Matrix blocks_x = bcirc(to_tensor(x));  // np x p
  return blocks_x.transpose() * (blocks_a * unfold_mat(x));
}

double relative(double err, double scale) { return scale > 0.0 ? err / scale : err; }

double off_diagonal_max(const Tensor3& s) {
  double off = 0.0;
  for (std::size_t k = 0; k < s.depth(); ++k) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      for (std::size_t i = 0; i < s.rows(); ++i) {
        if (i != j) off = std::max(off, std::abs(s(i, j, k)));
      }
    }
  }
  return off;
}

// Columns of bcirc(X) are the unfolded column shifts X^[0..p-1].
Matrix shift_basis(const Tensor3& u, std::size_t count) {
  const std::size_t n = u.rows(), p = u.depth();
  Matrix basis(ix(n * p), ix(count * p));
  for (std::size_t j = 0; j < count; ++j) {
    const Matrix blocks = bcirc(to_tensor(lateral_slice(u, j)));  // np x p
    for (std::size_t k = 0; k < p; ++k) basis.col(ix(k * count + j)) = blocks.col(ix(k));
  }
  return basis;
}

}  // namespace

Tensor3 oracle_tprod(const Tensor3& a, const Tensor3& b) {
  require_product_shapes(a, b);
  return fold(bcirc(a) * unfold(b), a.depth());
}

MatSlice oracle_tprod_mat(const Tensor3& a, const MatSlice& x) {
  if (a.cols() != x.rows() || a.depth() != x.cols()) {
    throw Error(ErrorKind::kShapeError, "oracle T-product: matrix shape mismatch");
  }
  return fold_mat(bcirc(a) * unfold_mat(x), a.depth());
}

Tensor3 oracle_transpose(const Tensor3& a) {
  return bcirc_inv(bcirc(a).transpose(), a.depth(), 0.0);
}

Tensor3 oracle_inverse(const Tensor3& a) {
  require_square(a, "oracle_inverse");
  const Matrix blocks = bcirc(a);
  Eigen::FullPivLU<Matrix> lu(blocks);
  if (!lu.isInvertible()) throw Error(ErrorKind::kSingular, "bcirc(A) is singular");
  const Matrix inv = lu.inverse();
  return bcirc_inv(inv, a.depth(), 1e-8 * std::max(1.0, inv.cwiseAbs().maxCoeff()));
}

Tube oracle_quadform(const Tensor3& a, const MatSlice& x) {
  require_square(a, "oracle_quadform");
  if (x.rows() != a.rows() || x.cols() != a.depth()) {
    throw Error(ErrorKind::kShapeError, "oracle_quadform: matrix shape mismatch");
  }
  return Tube(quadform_dense(bcirc(a), x));
}

CMatrix dft_matrix(std::size_t p) {
  CMatrix f(ix(p), ix(p));
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((r * c) % p) /
                           static_cast<double>(p);
      f(ix(r), ix(c)) = std::polar(1.0, angle);
    }
  }
  return f;
}

std::vector<CMatrix> frequency_blocks(const Tensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  const CMatrix f = dft_matrix(p);
  const CMatrix left = Eigen::kroneckerProduct(f, CMatrix::Identity(ix(m), ix(m)));
  const CMatrix right = Eigen::kroneckerProduct(f.adjoint(), CMatrix::Identity(ix(n), ix(n)));
  const CMatrix full = left * bcirc(a).cast<Complex>() * right / static_cast<double>(p);
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < p; ++k) blocks.push_back(full.block(ix(k * m), ix(k * n), ix(m), ix(n)));
  return blocks;
}

std::vector<Matrix> oracle_quadform_matrices(const Tensor3& a) {
  require_square(a, "oracle_quadform_matrices");
  const std::size_t n = a.rows(), p = a.depth(), dim = n * p;
  const Matrix blocks = bcirc(a);
  auto basis = [&](std::size_t i) {
    Vector e = Vector::Zero(ix(dim));
    e[ix(i)] = 1.0;
    return e;
  };
  std::vector<Vector> single(dim);
  for (std::size_t i = 0; i < dim; ++i) single[i] = quadform_dense(blocks, fold_mat(basis(i), p));

  std::vector<Matrix> forms(p, Matrix::Zero(ix(dim), ix(dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const Vector both = quadform_dense(blocks, fold_mat(basis(i) + basis(j), p));
      const Vector value = 0.5 * (both - single[i] - single[j]);
      for (std::size_t r = 0; r < p; ++r) {
        forms[r](ix(i), ix(j)) = value[ix(r)];
        forms[r](ix(j), ix(i)) = value[ix(r)];
      }
    }
  }
  return forms;
}

ExactPsd oracle_psd_exact(const Tensor3& a, double tol, std::size_t max_size) {
  require_square(a, "oracle_psd_exact");
  const std::size_t n = a.rows(), p = a.depth();
  if (n * p > max_size) {
    std::ostringstream os;
    os << "exact PSD test needs n*p <= " << max_size << ", got " << n * p;
    throw Error(ErrorKind::kTooLarge, os.str());
  }
  const std::vector<Matrix> forms = oracle_quadform_matrices(a);
  ExactPsd result;
  Vector witness_vector;
  bool first = true;
  for (std::size_t r = 0; r < p; ++r) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(forms[r]);
    const double lowest = solver.eigenvalues()[0];
    if (first || lowest < result.min_eigenvalue) {
      result.min_eigenvalue = lowest;
      result.component = r;
      witness_vector = solver.eigenvectors().col(0);
      first = false;
    }
  }
  if (result.min_eigenvalue >= -tol) {
    result.verdict = ExactClass::kElementwisePsd;
    return result;
  }

  result.verdict = ExactClass::kNotElementwisePsd;
  // Scaled so the first entry of (near) maximal magnitude is exactly 1.
  const double largest = witness_vector.cwiseAbs().maxCoeff();
  for (Index i = 0; i < witness_vector.size(); ++i) {
    if (std::abs(witness_vector[i]) >= largest * (1.0 - 1e-10)) {
      witness_vector /= witness_vector[i];
      break;
    }
  }
  result.witness = fold_mat(witness_vector, p);
  result.witness_value = quadform(a, *result.witness);
  result.witness_verified = (*result.witness_value)[result.component] < -tol;
  return result;
}

PsdVerdict certify(const Tensor3& a, const PsdOptions& options, std::size_t max_size) {
  PsdVerdict verdict = psd_spectral(a, options);
  const Tensor3 target = options.auto_symmetrize ? symmetrize(a) : a;
  const ExactPsd exact = oracle_psd_exact(target, options.tol, max_size);
  verdict.exact_class = exact.verdict;
  if (exact.witness) {
    verdict.witness = exact.witness;
    verdict.witness_component = exact.component;
    verdict.witness_value = exact.witness_value;
  }
  return verdict;
}

Report oracle_ted_check(const Tensor3& a, const TedResult& t, const Thresholds& th) {
  const std::size_t n = a.rows(), p = a.depth();
  const Matrix ba = bcirc(a), bu = bcirc(t.u), bd = bcirc(t.d);
  const Matrix eye = Matrix::Identity(ix(n * p), ix(n * p));
  Report report;
  report.add("dense_reconstruction",
             relative((ba - bu * bd * bu.transpose()).norm(), ba.norm()), th.reconstruction);
  report.add("dense_orthogonality", (bu.transpose() * bu - eye).norm(), th.orthogonality);
  report.add("d_f_diagonal", off_diagonal_max(t.d), th.structure);
  report.add("d_t_symmetric", (bd - bd.transpose()).cwiseAbs().maxCoeff(), th.structure);

  double eigenpair = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const MatSlice base = lateral_slice(t.u, j);
    const Matrix action = circulant(t.eigentuples[j]);
    const Matrix shifts = bcirc(to_tensor(base));  // np x p, column k = vec(U_j^[k])
    for (std::size_t k = 0; k < p; ++k) {
      const MatSlice xk = fold_mat(shifts.col(ix(k)), p);
      const Vector lhs = ba * unfold_mat(xk);
      const Vector rhs = unfold_mat(MatSlice(Matrix(xk.matrix() * action)));
      eigenpair = std::max(eigenpair, (lhs - rhs).norm() / xk.norm());
    }
  }
  report.add("dense_eigenpairs", eigenpair, th.eigenpair);

  const Matrix basis = shift_basis(t.u, n);
  report.add("eigenmatrix_gram", (basis.transpose() * basis - eye).cwiseAbs().maxCoeff(),
             th.orthogonality);

  double reversal = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < p; ++k) {
      reversal = std::max(reversal, std::abs(t.eigentuples[j][k] - t.d(j, j, (p - k) % p)));
    }
  }
  report.add("eigentuple_index_reversal", reversal, 0.0);

  const std::vector<CMatrix> blocks = frequency_blocks(t.d);
  const double scale = std::max(1.0, ba.cwiseAbs().maxCoeff());
  double disorder = 0.0;
  for (const CMatrix& block : blocks) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      disorder = std::max(disorder, block(ix(j + 1), ix(j + 1)).real() - block(ix(j), ix(j)).real());
    }
  }
  report.add("frequency_descending", std::max(0.0, disorder), th.structure * scale * static_cast<double>(p));

  double first_component = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    first_component = std::max(first_component, t.eigentuples[j + 1][0] - t.eigentuples[j][0]);
  }
  report.add("first_component_descending", std::max(0.0, first_component), th.structure * scale);
  return report;
}

Report oracle_tsvd_check(const Tensor3& a, const TsvdResult& t, const Thresholds& th) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  const Matrix ba = bcirc(a), bu = bcirc(t.u), bs = bcirc(t.s), bv = bcirc(t.v);
  Report report;
  report.add("dense_reconstruction", relative((ba - bu * bs * bv.transpose()).norm(), ba.norm()),
             th.reconstruction);
  report.add("dense_u_orthogonality",
             (bu.transpose() * bu - Matrix::Identity(ix(m * p), ix(m * p))).norm(),
             th.orthogonality);
  report.add("dense_v_orthogonality",
             (bv.transpose() * bv - Matrix::Identity(ix(n * p), ix(n * p))).norm(),
             th.orthogonality);
  report.add("s_f_diagonal", off_diagonal_max(t.s), th.structure);

  double forward = 0.0, adjoint = 0.0;
  for (std::size_t j = 0; j < t.singular_tuples.size(); ++j) {
    const Matrix action = circulant(t.singular_tuples[j]);
    const Matrix xs = bcirc(to_tensor(lateral_slice(t.v, j)));
    const Matrix ys = bcirc(to_tensor(lateral_slice(t.u, j)));
    for (std::size_t k = 0; k < p; ++k) {
      const MatSlice x = fold_mat(xs.col(ix(k)), p);
      const MatSlice y = fold_mat(ys.col(ix(k)), p);
      const Vector ax = ba * unfold_mat(x);
      const Vector aty = ba.transpose() * unfold_mat(y);
      forward = std::max(
          forward, (ax - unfold_mat(MatSlice(Matrix(y.matrix() * action)))).norm() / x.norm());
      adjoint = std::max(
          adjoint, (aty - unfold_mat(MatSlice(Matrix(x.matrix() * action)))).norm() / y.norm());
    }
  }
  report.add("dense_forward_pairs", forward, th.eigenpair);
  report.add("dense_adjoint_pairs", adjoint, th.eigenpair);

  const std::size_t r = std::min(m, n);
  const Matrix right = shift_basis(t.v, r);
  const Matrix left = shift_basis(t.u, r);
  const Matrix eye = Matrix::Identity(ix(r * p), ix(r * p));
  report.add("right_matrices_orthonormal", (right.transpose() * right - eye).cwiseAbs().maxCoeff(),
             th.orthogonality);
  report.add("left_matrices_orthonormal", (left.transpose() * left - eye).cwiseAbs().maxCoeff(),
             th.orthogonality);
  return report;
}

}  // namespace tubal::oracle
