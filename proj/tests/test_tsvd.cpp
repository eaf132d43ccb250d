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

#include <gtest/gtest.h>

#include <iostream>

#include <Eigen/SVD>

#include "support.hpp"
#include "tubal/error.hpp"
#include "tubal/random.hpp"
#include "tubal/spectral.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/tproduct.hpp"
#include "tubal/tsvd.hpp"
#include "tubal/tube.hpp"

namespace tubal {
namespace {

using Eigen::Index;
using testing::rel_err;

Tensor3 reconstruct(const TsvdResult& t) { return tprod(tprod(t.u, t.s), transpose(t.v)); }

TEST(Tsvd, Identity) {
  const TsvdResult t = tsvd(identity(3, 4));
  EXPECT_LE(rel_err(t.s, identity(3, 4)), 1e-15);
  for (const Tube& s : t.singular_tuples) EXPECT_LE(rel_err(s, Tube::unity(4)), 1e-15);
}

TEST(Tsvd, DepthOneIsMatrixSvd) {
  Rng rng(1);
  const Tensor3 a = random_general(5, 3, 1, rng);
  const TsvdResult t = tsvd(a);
  Eigen::JacobiSVD<Matrix> svd(Matrix(a.slice(0)));
  ASSERT_EQ(t.singular_tuples.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(t.singular_tuples[j][0], svd.singularValues()[static_cast<Index>(j)], 1e-12);
  }
}

TEST(Tsvd, RandomInvariants) {
  Rng rng(2);
  for (const Shape& shape : {Shape{5, 4, 3}, Shape{2, 6, 4}, Shape{4, 4, 5}, Shape{1, 3, 2}}) {
    const Tensor3 a = random_general(shape.m, shape.n, shape.p, rng);
    const TsvdResult t = tsvd(a);
    EXPECT_LE(rel_err(reconstruct(t), a), 1e-10);
    EXPECT_LE(t.residuals.reconstruction, 1e-10);
    EXPECT_TRUE(is_orthogonal(t.u));
    EXPECT_TRUE(is_orthogonal(t.v));
    EXPECT_TRUE(is_f_diagonal(t.s, 1e-12));
    EXPECT_EQ(t.u.shape(), (Shape{shape.m, shape.m, shape.p}));
    EXPECT_EQ(t.v.shape(), (Shape{shape.n, shape.n, shape.p}));
    const Matrix& sv = t.frequency_singular_values;
    EXPECT_GE(sv.minCoeff(), 0.0);
    for (Index k = 0; k < sv.cols(); ++k) {
      for (Index j = 0; j + 1 < sv.rows(); ++j) EXPECT_GE(sv(j, k), sv(j + 1, k));
    }
  }
}

TEST(SingularPairs, Identity) {
  const TsvdResult t = tsvd(identity(2, 3));
  for (std::size_t j = 0; j < 2; ++j) {
    const SingularPairs pairs = singular_pairs(t, j);
    EXPECT_LE(rel_err(pairs.s, Tube::unity(3)), 1e-15);
    for (std::size_t k = 0; k < 3; ++k) {
      MatSlice want(2, 3);
      want(j, k) = 1.0;
      EXPECT_LE((pairs.right[k] - want).norm(), 1e-15);
      EXPECT_LE((pairs.left[k] - want).norm(), 1e-15);
    }
  }
  EXPECT_THROW(singular_pairs(t, 2), Error);
}

TEST(SingularPairs, ResidualsAndBases) {
  Rng rng(3);
  const std::size_t m = 5, n = 3, p = 4;
  const Tensor3 a = random_general(m, n, p, rng);
  const TsvdResult t = tsvd(a);
  Matrix right(static_cast<Index>(n * p), static_cast<Index>(n * p));
  Matrix left(static_cast<Index>(m * p), static_cast<Index>(n * p));
  Index col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const SingularPairs pairs = singular_pairs(t, j);
    for (std::size_t k = 0; k < p; ++k) {
      const PairResidual r = singular_pair_residual(a, pairs.s, pairs.right[k], pairs.left[k]);
      EXPECT_LE(r.forward, 1e-9);
      EXPECT_LE(r.adjoint, 1e-9);
      // Direct check of A * X = s o Y.
      const MatSlice lhs = tprod_mat(a, pairs.right[k]);
      EXPECT_LE((lhs - tube_action(pairs.s, pairs.left[k])).norm(), 1e-9);
      right.col(col) = unfold_mat(pairs.right[k]);
      left.col(col) = unfold_mat(pairs.left[k]);
      ++col;
    }
  }
  const Matrix id = Matrix::Identity(right.cols(), right.cols());
  EXPECT_LE((right.transpose() * right - id).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE((left.transpose() * left - id).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(SingularPairs, ZeroTensor) {
  const Tensor3 zero(3, 2, 4);
  const TsvdResult t = tsvd(zero);
  for (std::size_t j = 0; j < 2; ++j) {
    const SingularPairs pairs = singular_pairs(t, j);
    EXPECT_EQ(pairs.s.vector().cwiseAbs().maxCoeff(), 0.0);
    for (std::size_t k = 0; k < 4; ++k) {
      const PairResidual r = singular_pair_residual(zero, pairs.s, pairs.right[k], pairs.left[k]);
      EXPECT_EQ(r.forward, 0.0);
      EXPECT_EQ(r.adjoint, 0.0);
    }
  }
  EXPECT_EQ(t.residuals.reconstruction, 0.0);
}

TEST(GramConsistency, Identity) {
  const Report r = gram_consistency(identity(3, 4));
  EXPECT_TRUE(r.all_pass());
  const TedResult g = ted(tprod(transpose(identity(3, 4)), identity(3, 4)));
  for (const Tube& d : g.eigentuples) EXPECT_EQ(d, tube_mul(Tube::unity(4), Tube::unity(4)));
}

TEST(GramConsistency, RandomAndTall) {
  Rng rng(4);
  const Report square = gram_consistency(random_general(4, 3, 2, rng));
  EXPECT_TRUE(square.invariants_hold());
  EXPECT_LE(square.find("right_gram_eigentuples_match")->residual, 1e-8);

  const Tensor3 tall = random_general(6, 2, 3, rng);
  const Report r = gram_consistency(tall);
  EXPECT_TRUE(r.invariants_hold());
  const TedResult left = ted(tprod(tall, transpose(tall)), {.tol = 1e-9, .permute_seed = std::nullopt});
  int zero_tuples = 0;
  for (const Tube& d : left.eigentuples) {
    if (d.vector().cwiseAbs().maxCoeff() <= 1e-12) ++zero_tuples;
  }
  EXPECT_EQ(zero_tuples, 4);
}

TEST(TsvdProperties, TransposeSwapsFactors) {
  Rng rng(5);
  const Tensor3 a = random_general(4, 3, 5, rng);
  const TsvdResult t = tsvd(a), tt = tsvd(transpose(a));
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_LE(rel_err(tt.singular_tuples[j], t.singular_tuples[j]), 1e-10);
  }
  // A^T = V * S^T * U^T.
  EXPECT_LE(rel_err(tprod(tprod(t.v, transpose(t.s)), transpose(t.u)), transpose(a)), 1e-10);
  EXPECT_LE((tt.frequency_singular_values - t.frequency_singular_values).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TsvdProperties, OrthogonalInvariance) {
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = rng.index(1, 6), n = rng.index(1, 6), p = rng.index(1, 5);
    const Tensor3 a = random_general(m, n, p, rng);
    const Tensor3 q = random_orthogonal(m, p, rng);
    const TsvdResult t = tsvd(a), tq = tsvd(tprod(q, a));
    for (std::size_t j = 0; j < t.singular_tuples.size(); ++j) {
      EXPECT_LE((tq.singular_tuples[j] - t.singular_tuples[j]).vector().cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

// s^{(.)2} is claimed nonnegative; s = (1,-1) for B = (1,-1) already fails.
TEST(TsvdProperties, SquaredSingularTuplesProbe) {
  Tensor3 b(1, 1, 2);
  b.set_tube(0, 0, {1, -1});
  const Tube s = tsvd(b).singular_tuples[0];
  EXPECT_LE(rel_err(tube_mul(s, s), Tube({2, -2})), 1e-15);

  Rng rng(7);
  int nonneg = 0, total = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const TsvdResult t = tsvd(random_general(rng.index(1, 6), rng.index(1, 6), rng.index(1, 4), rng));
    for (const Tube& tuple : t.singular_tuples) {
      ++total;
      if (tube_mul(tuple, tuple).is_nonnegative(1e-12)) ++nonneg;
    }
  }
  std::cout << "[tsvd] " << nonneg << "/" << total << " squared singular tuples nonnegative\n";
}

}  // namespace
}  // namespace tubal
